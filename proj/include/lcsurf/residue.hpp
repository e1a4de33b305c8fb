#pragma once

#include "lcsurf/germs.hpp"
#include "lcsurf/rat.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>

namespace lcsurf {

/// Degree bookkeeping for the m-th Poincare residue map of a plt germ
/// along its conductor, modulo torsion at the origin.
///
/// The invariant generator restricts to z^source (dz/z)^m on the conductor;
/// the target sheaf is generated by z^(m - target) (dz/z)^m. Signs are not
/// tracked.
struct ResidueReport {
  std::int64_t m = 1;
  BigInt source_exponent;  // ceil(m * gamma)
  BigInt target_exponent;  // floor(m * different)
  bool surjective = true;
  BigInt deficit;  // target_exponent - (m - source_exponent), clamped at 0

  friend bool operator==(const ResidueReport&, const ResidueReport&) = default;
};

/// Both exponents are computed independently and compared. Requires
/// conductor_coeff = 1 (NotApplicable otherwise) and m >= 1.
ResidueReport single_branch_report(std::int64_t m, const CyclicQuotientGerm& germ);

/// floor(m * sum c_i) - sum floor(m * c_i): how far the residue map for
/// several branches through a smooth point falls short of surjective.
BigInt multibranch_deficit(std::int64_t m, std::span<const Rat> coeffs);

/// Least m >= 1 with a positive multibranch deficit. Needs at least two
/// coefficients, all in (0, 1) (BadParameters otherwise). Such an m exists
/// and is at most the denominator of sum c_i; NoneFound is raised if the
/// search passes that bound.
std::int64_t find_failure_m(std::span<const Rat> coeffs);

/// Coefficient of the origin in the image of the m-th residue map of the
/// dihedral pair with empty boundary besides its conductor: m for even m,
/// m - 1 for odd m.
std::int64_t dihedral_image_twist(std::int64_t m);

/// Coefficient of the origin in (mK + mD + floor(m(1-c)) C)|_D on the
/// 1/n(1,1) model, taking C|_D = (1/n)[s]:
///
///   m (1 - 1/n) + floor(m (1 - c)) / n.
///
/// Only m = 2 with c < 1/2 is classical; other values are extrapolated.
/// Throws BadParameters unless c is in (0, 1) and m, n >= 1.
Rat glued_restriction_coeff(std::int64_t m, std::int64_t n, const Rat& c);

/// Whether mK + floor(m * boundary) restricts to the same divisor from both
/// sides of a glued pair of 1/n(1,1) germs. Throws GlueMismatch unless
/// check_slc_glue holds and BadParameters unless both q = 1.
bool glued_mcartier(std::int64_t m, const CyclicQuotientGerm& g1, const CyclicQuotientGerm& g2);

/// Two dihedral pairs glued to the two axes of a smooth plane: the
/// canonical sheaf restricts to each dihedral component with twist 0 but
/// to the plane with twist -1 at the origin, so that restriction is not S2.
inline constexpr std::array<std::int64_t, 3> kDihedralChainGlueTwists{0, -1, 0};

}  // namespace lcsurf
