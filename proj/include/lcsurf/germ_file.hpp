#pragma once

#include "lcsurf/dual_graph.hpp"
#include "lcsurf/germs.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace lcsurf {

/// Graph literal as written in germ files. Vertex indices are 1-based:
/// the chain occupies 1..k and fork j becomes vertex k + j. Index 0 names
/// the ambient smooth point and is only valid for branches of an empty
/// graph.
struct GraphLiteral {
  std::vector<std::int64_t> chain;
  std::vector<std::pair<std::size_t, std::int64_t>> forks;  // (attach, selfint)
  std::vector<std::pair<std::size_t, Rat>> branches;        // (attach, coeff)

  /// Throws ValidationError on a dangling index or bad coefficient.
  ResolutionGraph to_graph() const;

  friend bool operator==(const GraphLiteral&, const GraphLiteral&) = default;
};

struct GluedLiteral {
  std::vector<CyclicQuotientGerm> components;
  bool glue_ok = true;

  friend bool operator==(const GluedLiteral&, const GluedLiteral&) = default;
};

struct GermFile {
  std::variant<CyclicQuotientGerm, GraphLiteral, GluedLiteral> payload;

  std::string_view kind() const;

  friend bool operator==(const GermFile&, const GermFile&) = default;
};

/// Parses and validates a germ file.
///
///   {"kind": "cyclic_quotient", "n": 5, "q": 2, "conductor": "1", "side": "1/2"}
///   {"kind": "dual_graph", "chain": [3, 2], "forks": [[2, 2]],
///    "branches": [[1, "1"], [2, "2/3"]]}
///   {"kind": "glued", "components": [<cyclic_quotient>, ...], "glue_ok": true}
///
/// Throws ParseError for malformed JSON or schema violations and
/// ValidationError for well-formed input with invalid values.
GermFile parse_germ_file(std::string_view text);

nlohmann::json to_json(const GermFile& file);
nlohmann::json to_json(const CyclicQuotientGerm& germ);

/// Canonical compact text; parse_germ_file(print_germ_file(f)) == f.
std::string print_germ_file(const GermFile& file);

}  // namespace lcsurf
