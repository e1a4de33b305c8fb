#pragma once

#include "lcsurf/rat.hpp"

#include <cstdint>

namespace lcsurf {

/// c in {1/2, 2/3, 3/4, ...} or c = 1.
bool is_standard(const Rat& c);

/// Coefficient hypothesis of pluricanonical vanishing at level m:
/// c is standard or c >= 1 - 1/m. Requires m >= 2 and c in (0, 1];
/// throws BadParameters otherwise.
bool vanishing_hypothesis(const Rat& c, std::int64_t m);

/// 0 <= floor(m c) - (m - 1) c <= c, exactly.
bool bracket_bound_holds(const Rat& c, std::int64_t m);

struct CoeffCheck {
  Rat c;
  std::int64_t m = 2;
  bool standard = false;
  bool hypothesis_ok = false;
  bool bracket_ok = false;
};

CoeffCheck check_coefficient(const Rat& c, std::int64_t m);

struct PltModification {
  Rat discrepancy;     // -1 + d/n
  Rat assigned_coeff;  // 1 - d/n, the coefficient given to the extracted curve
};

/// Extracting only the first curve of a plt chain with invariants n and
/// side coefficient 1 - d. Requires n >= 1 and d in (0, 1].
PltModification plt_modification(std::int64_t n, const Rat& d);

}  // namespace lcsurf
