#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lcsurf {

enum class ErrorKind {
  BadParameters,
  NotApplicable,
  SingularSystem,
  GlueMismatch,
  NoneFound,
  ParseError,
  ValidationError,
};

std::string_view to_string(ErrorKind kind);

/// Base of every error the library raises. The kind is what the CLI
/// serializes; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct BadParameters : Error {
  explicit BadParameters(const std::string& what)
      : Error(ErrorKind::BadParameters, what) {}
};

struct NotApplicable : Error {
  explicit NotApplicable(const std::string& what)
      : Error(ErrorKind::NotApplicable, what) {}
};

struct SingularSystem : Error {
  explicit SingularSystem(const std::string& what)
      : Error(ErrorKind::SingularSystem, what) {}
};

struct GlueMismatch : Error {
  explicit GlueMismatch(const std::string& what)
      : Error(ErrorKind::GlueMismatch, what) {}
};

struct NoneFound : Error {
  explicit NoneFound(const std::string& what)
      : Error(ErrorKind::NoneFound, what) {}
};

struct ValidationError : Error {
  explicit ValidationError(const std::string& what)
      : Error(ErrorKind::ValidationError, what) {}
};

/// Malformed germ-file text. Position is 1-based and present only for
/// syntax errors; schema errors (wrong key, wrong type) carry none.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::optional<std::size_t> line = {},
             std::optional<std::size_t> column = {}, std::string expected = {})
      : Error(ErrorKind::ParseError, what),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  std::optional<std::size_t> line() const noexcept { return line_; }
  std::optional<std::size_t> column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::optional<std::size_t> line_;
  std::optional<std::size_t> column_;
  std::string expected_;
};

}  // namespace lcsurf
