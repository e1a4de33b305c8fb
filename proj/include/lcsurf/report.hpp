#pragma once

#include "lcsurf/germ_file.hpp"
#include "lcsurf/residue.hpp"
#include "lcsurf/stdcoeff.hpp"

#include <json.hpp>

#include <cstdint>
#include <span>

namespace lcsurf::report {

using nlohmann::json;

inline constexpr std::int64_t kDefaultMaxM = 24;

/// Integers that fit in 64 bits are emitted as numbers, larger ones as
/// decimal strings. Rationals are always strings.
json to_json(const BigInt& v);
json to_json(const GermClass& c);
json to_json(const NonNormalGerm& g);
json to_json(const ResidueReport& r);
json to_json(const CoeffCheck& c);

/// The plt germ a classified chain graph came from, if it is one: the
/// chain contracts to (n, q) and the far branch is the side coefficient.
std::optional<CyclicQuotientGerm> as_cyclic_germ(const ResolutionGraph& g,
                                                 const GermClass& cls);

// One builder per CLI command. Each returns the full JSON report including
// the echoed input; library errors propagate as exceptions.
json classify(const GermFile& file);
json discrepancy(const GermFile& file);
json residue(const GermFile& file, std::int64_t m_max);
json glue(const GermFile& file, std::int64_t m_max);
json failure_m(std::span<const Rat> coeffs);
json stdcoeff(const Rat& c, std::int64_t m);
json full(const GermFile& file, std::int64_t m_max);

}  // namespace lcsurf::report
