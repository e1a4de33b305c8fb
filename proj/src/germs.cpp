#include "lcsurf/germs.hpp"

#include "lcsurf/error.hpp"

#include <algorithm>
#include <numeric>

namespace lcsurf {

void CyclicQuotientGerm::validate() const {
  if (n < 1) throw ValidationError("n must be >= 1, got " + std::to_string(n));
  if (q < 1 || q > n)
    throw ValidationError("q must lie in [1, n], got q = " + std::to_string(q) +
                          " for n = " + std::to_string(n));
  if (std::gcd(n, q) != 1)
    throw ValidationError("gcd(n, q) = " + std::to_string(std::gcd(n, q)) +
                          " for (n, q) = (" + std::to_string(n) + ", " +
                          std::to_string(q) + ")");
  if (conductor_coeff <= Rat(0) || conductor_coeff > Rat(1))
    throw ValidationError("conductor coefficient " + conductor_coeff.to_string() +
                          " outside (0, 1]");
  if (side_coeff < Rat(0) || side_coeff > Rat(1))
    throw ValidationError("side coefficient " + side_coeff.to_string() +
                          " outside [0, 1]");
}

Rat CyclicQuotientGerm::gamma() const { return (Rat(1) - side_coeff) / Rat(n); }

std::vector<std::int64_t> hj_expand(std::int64_t n, std::int64_t q) {
  if (n == 1 && q == 1) return {};
  if (n < 2 || q < 1 || q >= n || std::gcd(n, q) != 1)
    throw BadParameters("hj_expand needs 1 <= q < n with gcd(n, q) = 1, got (" +
                        std::to_string(n) + ", " + std::to_string(q) + ")");
  std::vector<std::int64_t> out;
  while (q != 0) {
    std::int64_t c = (n + q - 1) / q;
    out.push_back(c);
    std::int64_t r = c * q - n;
    n = q;
    q = r;
  }
  return out;
}

HjPair hj_contract(std::span<const std::int64_t> chain) {
  // Evaluate from the right: p/r <- c - r/p.
  std::int64_t p = 1, r = 0;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    if (*it < 2)
      throw BadParameters("Hirzebruch-Jung entries must be >= 2, got " + std::to_string(*it));
    std::int64_t cp = 0, next = 0;
    if (__builtin_mul_overflow(*it, p, &cp) || __builtin_sub_overflow(cp, r, &next))
      throw BadParameters("Hirzebruch-Jung string too long for 64-bit (n, q)");
    r = p;
    p = next;
  }
  return {p, chain.empty() ? 1 : r};
}

std::int64_t hj_dual(std::int64_t n, std::int64_t q) {
  if (n == 1) return 1;
  // Extended Euclid on (q, n).
  std::int64_t old_r = q, r = n, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t t = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - t * r};
    std::tie(old_s, s) = std::pair{s, old_s - t * s};
  }
  if (old_r != 1) throw BadParameters("q is not invertible mod n");
  return ((old_s % n) + n) % n;
}

ResolutionGraph resolution_graph(const CyclicQuotientGerm& germ) {
  germ.validate();
  auto chain = hj_expand(germ.n, germ.q);
  std::vector<BoundaryBranch> branches;
  std::optional<VertexId> first, last;
  if (!chain.empty()) {
    first = 0;
    last = chain.size() - 1;
  }
  if (germ.conductor_coeff > Rat(0)) branches.push_back({first, germ.conductor_coeff});
  if (germ.side_coeff > Rat(0)) branches.push_back({last, germ.side_coeff});
  return ResolutionGraph::chain(std::move(chain), std::move(branches));
}

std::string_view to_string(GermTag tag) {
  switch (tag) {
    case GermTag::PLT_CHAIN: return "PLT_CHAIN";
    case GermTag::CYCLIC_NONPLT: return "CYCLIC_NONPLT";
    case GermTag::DIHEDRAL_31: return "DIHEDRAL_31";
    case GermTag::DIHEDRAL_32: return "DIHEDRAL_32";
    case GermTag::DIHEDRAL_33: return "DIHEDRAL_33";
    case GermTag::UNCLASSIFIED: return "UNCLASSIFIED";
  }
  return "UNCLASSIFIED";
}

std::string_view taxonomy_case(GermTag tag) {
  switch (tag) {
    case GermTag::PLT_CHAIN: return "1";
    case GermTag::CYCLIC_NONPLT: return "2";
    case GermTag::DIHEDRAL_31: return "3.1";
    case GermTag::DIHEDRAL_32: return "3.2";
    case GermTag::DIHEDRAL_33: return "3.3";
    case GermTag::UNCLASSIFIED: return "";
  }
  return "";
}

namespace {

const Rat kHalf{1, 2};

GermTag dihedral_tag(std::size_t leaves) {
  return leaves == 2 ? GermTag::DIHEDRAL_31
                     : leaves == 1 ? GermTag::DIHEDRAL_32 : GermTag::DIHEDRAL_33;
}

GermTag match_smooth_point(const ResolutionGraph& g, std::vector<std::string>& violations) {
  std::vector<Rat> coeffs;
  for (const auto& br : g.branches()) coeffs.push_back(br.coeff);
  std::sort(coeffs.begin(), coeffs.end(), std::greater<>());
  const Rat one(1);
  if (coeffs.size() == 1) return GermTag::PLT_CHAIN;
  if (coeffs.size() == 2) return coeffs[1] == one ? GermTag::CYCLIC_NONPLT : GermTag::PLT_CHAIN;
  if (coeffs.size() == 3 && coeffs[1] == kHalf && coeffs[2] == kHalf)
    return GermTag::DIHEDRAL_33;
  violations.push_back("branches through a smooth point match no case: expected one reduced "
                       "branch plus at most one other, or a reduced branch and two 1/2 branches");
  return GermTag::UNCLASSIFIED;
}

struct Walk {
  GermTag tag = GermTag::UNCLASSIFIED;
  std::vector<VertexId> spine;
  std::vector<VertexId> leaves;
};

// Follows the graph away from the reduced branch at root until the chain
// ends or splits into a fork.
Walk walk_from(const ResolutionGraph& g, std::size_t root_branch,
               std::vector<std::string>& violations) {
  Walk w;
  const Rat one(1);
  VertexId v = *g.branches()[root_branch].attach;
  std::optional<VertexId> prev;
  while (true) {
    w.spine.push_back(v);
    std::vector<VertexId> children;
    for (VertexId u : g.neighbors(v))
      if (u != prev) children.push_back(u);
    std::vector<std::size_t> extra;
    for (std::size_t i = 0; i < g.branches().size(); ++i)
      if (i != root_branch && g.branches()[i].attach == v) extra.push_back(i);

    const std::size_t prongs = children.size() + extra.size();
    if (prongs == 0) {
      w.tag = GermTag::PLT_CHAIN;
      return w;
    }
    if (prongs == 1 && children.size() == 1) {
      prev = v;
      v = children.front();
      continue;
    }
    if (prongs == 1) {
      w.tag = g.branches()[extra.front()].coeff == one ? GermTag::CYCLIC_NONPLT
                                                       : GermTag::PLT_CHAIN;
      return w;
    }
    if (prongs > 2) {
      violations.push_back("vertex " + std::to_string(v) + " has " + std::to_string(prongs) +
                           " prongs beyond the chain (a fork has exactly 2)");
      return w;
    }
    for (VertexId u : children) {
      if (g.neighbors(u).size() != 1 || g.selfint(u) != 2 || g.branch_sum(u) != Rat(0)) {
        violations.push_back("fork prong vertex " + std::to_string(u) +
                             " is not a (-2)-curve leaf without branches");
        return w;
      }
      w.leaves.push_back(u);
    }
    for (std::size_t i : extra) {
      if (g.branches()[i].coeff != kHalf) {
        violations.push_back("fork prong branch has coefficient " +
                             g.branches()[i].coeff.to_string() + " (must be 1/2)");
        return w;
      }
    }
    w.tag = dihedral_tag(w.leaves.size());
    return w;
  }
}

}  // namespace

GermClass classify_lc_germ(const ResolutionGraph& g) {
  const LcClass lc = log_canonical_class(g);
  if (lc != LcClass::PLT && lc != LcClass::LC_CENTER)
    throw NotApplicable("classification needs a plt or lc-centre pair, got " +
                        std::string(to_string(lc)));
  const Rat one(1);
  const auto& branches = g.branches();
  std::optional<std::size_t> root;
  for (std::size_t i = 0; i < branches.size(); ++i) {
    if (branches[i].coeff != one) continue;
    // Prefer a reduced branch on an end of the graph.
    if (!root || (branches[i].attach && g.neighbors(*branches[i].attach).size() <= 1 &&
                  g.neighbors(*branches[*root].attach).size() > 1))
      root = i;
  }
  if (!root) throw NotApplicable("classification needs a coefficient-1 branch");

  GermClass out;
  out.cartier_index = cartier_index(g);
  if (g.empty()) {
    out.tag = match_smooth_point(g, out.violations);
  } else {
    Walk w = walk_from(g, *root, out.violations);
    out.tag = w.tag;
    out.spine = std::move(w.spine);
    out.prong_leaves = std::move(w.leaves);
    const bool dihedral_end = out.tag == GermTag::DIHEDRAL_32 || out.tag == GermTag::DIHEDRAL_33;
    for (std::size_t i = 0; i < out.spine.size() && out.tag != GermTag::UNCLASSIFIED; ++i) {
      VertexId v = out.spine[i];
      bool exempt = dihedral_end && i + 1 == out.spine.size();
      if (g.selfint(v) < 2 && !exempt) {
        out.violations.push_back("chain vertex " + std::to_string(v) + " has selfint " +
                                 std::to_string(g.selfint(v)) + " (must be >= 2)");
        out.tag = GermTag::UNCLASSIFIED;
      }
    }
  }

  if (out.tag == GermTag::PLT_CHAIN && lc != LcClass::PLT) {
    out.violations.push_back("chain shape of the plt case but the point is an lc centre");
    out.tag = GermTag::UNCLASSIFIED;
  } else if (out.tag != GermTag::PLT_CHAIN && out.tag != GermTag::UNCLASSIFIED &&
             lc != LcClass::LC_CENTER) {
    out.violations.push_back("shape of an lc-centre case but the pair is plt");
    out.tag = GermTag::UNCLASSIFIED;
  }

  if (out.tag == GermTag::PLT_CHAIN) {
    // gamma = 1 - (different along the reduced branch), and the different
    // is the solved coefficient of the curve that branch meets.
    Rat different = g.empty() ? g.branch_sum(std::nullopt) - one
                              : boundary_coefficients(g).coeffs[out.spine.front()];
    out.gamma = one - different;
  }
  if (out.tag == GermTag::UNCLASSIFIED) {
    out.spine.clear();
    out.prong_leaves.clear();
  }
  return out;
}

Rat different_coeff(const CyclicQuotientGerm& germ) {
  germ.validate();
  if (germ.conductor_coeff != Rat(1))
    throw NotApplicable("the different is taken along a conductor with coefficient 1, got " +
                        germ.conductor_coeff.to_string());
  return Rat(1) - germ.gamma();
}

bool check_slc_glue(const CyclicQuotientGerm& g1, const CyclicQuotientGerm& g2) {
  return different_coeff(g1) == different_coeff(g2);
}

std::string_view to_string(Trichotomy t) {
  switch (t) {
    case Trichotomy::LC_CENTER_CASE: return "LC_CENTER_CASE";
    case Trichotomy::TWO_COMPONENT_PLT: return "TWO_COMPONENT_PLT";
    case Trichotomy::ONE_COMPONENT_PLT: return "ONE_COMPONENT_PLT";
  }
  return "";
}

std::string_view to_string(ClassGroup c) {
  return c == ClassGroup::RANK_ONE ? "RANK_ONE" : "TORSION";
}

NonNormalGerm classify_nonnormal(std::vector<CyclicQuotientGerm> components, bool glue_ok) {
  if (components.empty() || components.size() > 2)
    throw BadParameters("a non-normal germ has 1 or 2 components, got " +
                        std::to_string(components.size()));
  NonNormalGerm out;
  std::size_t centers = 0;
  for (const auto& c : components) {
    c.validate();
    if (c.conductor_coeff != Rat(1))
      throw NotApplicable("conductor coefficient must be 1, got " + c.conductor_coeff.to_string());
    auto graph = resolution_graph(c);
    if (log_canonical_class(graph) == LcClass::LC_CENTER) ++centers;
    out.component_classes.push_back(classify_lc_germ(graph));
  }
  if (centers != 0 && centers != components.size())
    throw GlueMismatch("components disagree on whether the origin is an lc centre");

  const bool two = components.size() == 2;
  if (two && !check_slc_glue(components[0], components[1]))
    throw GlueMismatch("differents along the conductors differ: " +
                       different_coeff(components[0]).to_string() + " vs " +
                       different_coeff(components[1]).to_string());
  if (!glue_ok)
    throw GlueMismatch(two ? "no isomorphism of the conductors was supplied"
                           : "no involution of the conductor was supplied");

  if (centers != 0) {
    out.trichotomy = Trichotomy::LC_CENTER_CASE;
    out.cartier_index = BigInt(2);
  } else if (two) {
    out.trichotomy = Trichotomy::TWO_COMPONENT_PLT;
    out.class_group = ClassGroup::RANK_ONE;
    out.delta_generator = Rat(BigInt(1), lcm(components[0].n, components[1].n));
    if (components[0].q != components[1].q) out.flags.push_back("q-mismatch");
  } else {
    out.trichotomy = Trichotomy::ONE_COMPONENT_PLT;
    out.class_group = ClassGroup::TORSION;
  }
  out.components = std::move(components);
  return out;
}

}  // namespace lcsurf
