#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace lcsurf {

using BigInt = boost::multiprecision::cpp_int;

BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt ceil_div(const BigInt& a, const BigInt& b);

/// Exact rational number, always in lowest terms with positive denominator.
///
/// Every coefficient, discrepancy and different in the library is a Rat;
/// there is no floating point path anywhere.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(std::int64_t value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rat(BigInt value) : num_(std::move(value)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rat(BigInt num, BigInt den);

  /// Parses the canonical text form "a/b" or "a" (optional leading '-').
  /// Non-reduced input such as "2/4" is accepted and normalized.
  static Rat parse(std::string_view text);

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  BigInt floor() const { return floor_div(num_, den_); }
  BigInt ceil() const { return ceil_div(num_, den_); }

  /// "a/b", with "/b" omitted when b == 1.
  std::string to_string() const;

  Rat& operator+=(const Rat& rhs);
  Rat& operator-=(const Rat& rhs);
  Rat& operator*=(const Rat& rhs);
  Rat& operator/=(const Rat& rhs);

  friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
  friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
  friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
  friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }
  Rat operator-() const;

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// floor(m * q). Requires m >= 1.
BigInt floor_scale(std::int64_t m, const Rat& q);

/// ceil(m * q). Requires m >= 1.
BigInt ceil_scale(std::int64_t m, const Rat& q);

BigInt lcm(const BigInt& a, const BigInt& b);

}  // namespace lcsurf
