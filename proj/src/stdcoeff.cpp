#include "lcsurf/stdcoeff.hpp"

#include "lcsurf/error.hpp"

namespace lcsurf {

bool is_standard(const Rat& c) {
  if (c == Rat(1)) return true;
  // (k-1)/k is already in lowest terms.
  return c.denominator() >= 2 && c.numerator() + 1 == c.denominator();
}

bool vanishing_hypothesis(const Rat& c, std::int64_t m) {
  if (m < 2) throw BadParameters("m must be >= 2, got " + std::to_string(m));
  if (c <= Rat(0) || c > Rat(1))
    throw BadParameters("coefficient " + c.to_string() + " outside (0, 1]");
  return is_standard(c) || c >= Rat(1) - Rat(BigInt(1), BigInt(m));
}

bool bracket_bound_holds(const Rat& c, std::int64_t m) {
  Rat gap = Rat(floor_scale(m, c)) - Rat(m - 1) * c;
  return gap >= Rat(0) && gap <= c;
}

CoeffCheck check_coefficient(const Rat& c, std::int64_t m) {
  CoeffCheck out;
  out.c = c;
  out.m = m;
  out.hypothesis_ok = vanishing_hypothesis(c, m);
  out.standard = is_standard(c);
  out.bracket_ok = bracket_bound_holds(c, m);
  return out;
}

PltModification plt_modification(std::int64_t n, const Rat& d) {
  if (n < 1) throw BadParameters("n must be >= 1");
  if (d <= Rat(0) || d > Rat(1)) throw BadParameters("d = " + d.to_string() + " outside (0, 1]");
  Rat gamma = d / Rat(n);
  return {gamma - Rat(1), Rat(1) - gamma};
}

}  // namespace lcsurf
