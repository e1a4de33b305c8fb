#include "lcsurf/residue.hpp"

#include "lcsurf/error.hpp"

namespace lcsurf {

ResidueReport single_branch_report(std::int64_t m, const CyclicQuotientGerm& germ) {
  if (m < 1) throw BadParameters("m must be >= 1");
  germ.validate();
  if (germ.conductor_coeff != Rat(1))
    throw NotApplicable("residue map is along a conductor with coefficient 1, got " +
                        germ.conductor_coeff.to_string());
  const Rat gamma = germ.gamma();
  ResidueReport r;
  r.m = m;
  r.source_exponent = ceil_scale(m, gamma);
  r.target_exponent = floor_scale(m, different_coeff(germ));
  BigInt image = BigInt(m) - r.source_exponent;
  r.surjective = image == r.target_exponent;
  r.deficit = r.target_exponent > image ? BigInt(r.target_exponent - image) : BigInt(0);
  return r;
}

BigInt multibranch_deficit(std::int64_t m, std::span<const Rat> coeffs) {
  Rat total;
  BigInt floors = 0;
  for (const auto& c : coeffs) {
    total += c;
    floors += floor_scale(m, c);
  }
  return floor_scale(m, total) - floors;
}

std::int64_t find_failure_m(std::span<const Rat> coeffs) {
  if (coeffs.size() < 2)
    throw BadParameters("failure search needs at least 2 branches, got " +
                        std::to_string(coeffs.size()));
  Rat total;
  for (const auto& c : coeffs) {
    if (c <= Rat(0) || c >= Rat(1))
      throw BadParameters("branch coefficient " + c.to_string() + " outside (0, 1)");
    total += c;
  }
  const BigInt& bound = total.denominator();
  for (std::int64_t m = 1; m <= bound; ++m)
    if (multibranch_deficit(m, coeffs) > 0) return m;
  throw NoneFound("no failing m up to the denominator " + bound.str() + " of the sum");
}

std::int64_t dihedral_image_twist(std::int64_t m) {
  if (m < 1) throw BadParameters("m must be >= 1");
  return m % 2 == 0 ? m : m - 1;
}

Rat glued_restriction_coeff(std::int64_t m, std::int64_t n, const Rat& c) {
  if (m < 1 || n < 1) throw BadParameters("m and n must be >= 1");
  if (c <= Rat(0) || c >= Rat(1))
    throw BadParameters("c = " + c.to_string() + " outside (0, 1)");
  const Rat inv_n(BigInt(1), BigInt(n));
  return Rat(m) * (Rat(1) - inv_n) + Rat(floor_scale(m, Rat(1) - c)) * inv_n;
}

bool glued_mcartier(std::int64_t m, const CyclicQuotientGerm& g1, const CyclicQuotientGerm& g2) {
  if (g1.q != 1 || g2.q != 1)
    throw BadParameters("glued restriction is defined for 1/n(1,1) germs only");
  if (!check_slc_glue(g1, g2))
    throw GlueMismatch("c1/n1 = " + g1.gamma().to_string() + " differs from c2/n2 = " +
                       g2.gamma().to_string());
  const Rat one(1);
  return glued_restriction_coeff(m, g1.n, one - g1.side_coeff) ==
         glued_restriction_coeff(m, g2.n, one - g2.side_coeff);
}

}  // namespace lcsurf
