#pragma once

#include "lcsurf/dual_graph.hpp"
#include "lcsurf/rat.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lcsurf {

/// (A^2, conductor*(y=0) + side*(x=0)) / (1/n)(1, q).
///
/// With conductor = 1 and side = 1 - c this is the plt model whose
/// different along the conductor is 1 - c/n. side = 1 gives the cyclic
/// non-plt pair.
struct CyclicQuotientGerm {
  std::int64_t n = 1;
  std::int64_t q = 1;
  Rat conductor_coeff{1};
  Rat side_coeff{0};

  /// Throws ValidationError if gcd(n, q) != 1, q is outside [1, n], the
  /// conductor coefficient is outside (0, 1] or the side coefficient is
  /// outside [0, 1].
  void validate() const;

  /// c/n with c = 1 - side.
  Rat gamma() const;

  friend bool operator==(const CyclicQuotientGerm&, const CyclicQuotientGerm&) = default;
};

/// Hirzebruch-Jung string of 1/n(1, q): n/q = c_1 - 1/(c_2 - ...), c_i >= 2.
/// (1, 1) gives the empty string. Throws BadParameters on invalid (n, q).
std::vector<std::int64_t> hj_expand(std::int64_t n, std::int64_t q);

struct HjPair {
  std::int64_t n;
  std::int64_t q;
  friend bool operator==(const HjPair&, const HjPair&) = default;
};

/// Inverse of hj_expand. Throws BadParameters on an entry < 2 or overflow.
HjPair hj_contract(std::span<const std::int64_t> chain);

/// q^{-1} mod n (1 when n == 1). The string of the result is the reverse.
std::int64_t hj_dual(std::int64_t n, std::int64_t q);

/// The extended dual graph: the string hj_expand(n, q) with the conductor
/// branch on its first vertex and the side branch on its last vertex.
/// Zero-coefficient branches are omitted.
ResolutionGraph resolution_graph(const CyclicQuotientGerm& germ);

enum class GermTag {
  PLT_CHAIN,
  CYCLIC_NONPLT,
  DIHEDRAL_31,
  DIHEDRAL_32,
  DIHEDRAL_33,
  UNCLASSIFIED,
};

std::string_view to_string(GermTag tag);

/// Case number in the standard taxonomy of lc pairs with a reduced branch:
/// "1" plt chain, "2" cyclic, "3.1"-"3.3" dihedral; empty if unclassified.
std::string_view taxonomy_case(GermTag tag);

struct GermClass {
  GermTag tag = GermTag::UNCLASSIFIED;
  std::optional<Rat> gamma;  // PLT_CHAIN only
  BigInt cartier_index = 1;
  /// Vertices from the one carrying the reduced branch to the chain end or
  /// fork centre, in order.
  std::vector<VertexId> spine;
  /// (-2)-curves forming fork prongs.
  std::vector<VertexId> prong_leaves;
  /// Why the graph matched no case; empty unless UNCLASSIFIED.
  std::vector<std::string> violations;
};

/// Matches g against the five shapes of lc pairs with a coefficient-1
/// branch. Requires log_canonical_class(g) in {PLT, LC_CENTER} and at least
/// one coefficient-1 branch; throws NotApplicable otherwise.
GermClass classify_lc_germ(const ResolutionGraph& g);

/// Coefficient of the origin in the different of the side branch on the
/// conductor: 1 - c/n. Requires conductor_coeff = 1.
Rat different_coeff(const CyclicQuotientGerm& germ);

/// Whether two plt germs glued along their conductors give an slc pair:
/// their differents, equivalently c/n, agree.
bool check_slc_glue(const CyclicQuotientGerm& g1, const CyclicQuotientGerm& g2);

enum class Trichotomy { LC_CENTER_CASE, TWO_COMPONENT_PLT, ONE_COMPONENT_PLT };
enum class ClassGroup { RANK_ONE, TORSION };

std::string_view to_string(Trichotomy t);
std::string_view to_string(ClassGroup c);

struct NonNormalGerm {
  std::vector<CyclicQuotientGerm> components;
  std::vector<GermClass> component_classes;
  Trichotomy trichotomy = Trichotomy::ONE_COMPONENT_PLT;
  /// Not determined in the lc-centre case.
  std::optional<ClassGroup> class_group;
  /// 2 in the lc-centre case: 2(K + boundary) is Cartier there.
  std::optional<BigInt> cartier_index;
  /// Two-component plt case: the image of delta(C1, C2) = C1.D1 - C2.D2 on
  /// the local class group is generated by this rational, 1/lcm(n1, n2).
  std::optional<Rat> delta_generator;
  /// e.g. "q-mismatch" when the glued plt components have different q.
  std::vector<std::string> flags;
};

/// Non-normal germ trichotomy. glue_ok says whether the isomorphism of the
/// two conductors (or the involution of the single one) fixing the origin
/// exists; it is modeling input, not computed.
///
/// Throws GlueMismatch when the differents of two plt components differ,
/// when the components disagree on being an lc centre, or when glue_ok is
/// false. Throws NotApplicable if a conductor coefficient is not 1.
NonNormalGerm classify_nonnormal(std::vector<CyclicQuotientGerm> components,
                                 bool glue_ok);

}  // namespace lcsurf
