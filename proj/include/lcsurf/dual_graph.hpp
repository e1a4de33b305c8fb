#pragma once

#include "lcsurf/rat.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace lcsurf {

using VertexId = std::size_t;

/// A local branch of the boundary meeting the resolution. An empty attach
/// means the branch passes through the ambient smooth point, which is only
/// meaningful when the graph has no vertices.
struct BoundaryBranch {
  std::optional<VertexId> attach;
  Rat coeff;

  friend bool operator==(const BoundaryBranch&, const BoundaryBranch&) = default;
};

/// Extended dual graph of a minimal embedded resolution: a tree of smooth
/// rational exceptional curves plus the boundary branches meeting them.
///
/// Vertex i stores the positive integer c_i; the curve itself has
/// self-intersection -c_i. Branches are assumed to meet their curve
/// transversally in one point. Instances are immutable once built and
/// always satisfy the tree and coefficient invariants.
class ResolutionGraph {
 public:
  using Edge = std::pair<VertexId, VertexId>;

  /// Smooth ambient point: no exceptional curves.
  ResolutionGraph() = default;

  /// Throws ValidationError unless the edges form a tree on the vertices,
  /// every selfint is >= 1, and every branch coefficient lies in (0, 1].
  ResolutionGraph(std::vector<std::int64_t> selfints, std::vector<Edge> edges,
                  std::vector<BoundaryBranch> branches);

  /// Linear chain c_1 - c_2 - ... - c_k.
  static ResolutionGraph chain(std::vector<std::int64_t> selfints,
                               std::vector<BoundaryBranch> branches = {});

  std::size_t size() const noexcept { return selfints_.size(); }
  bool empty() const noexcept { return selfints_.empty(); }

  std::int64_t selfint(VertexId v) const { return selfints_.at(v); }
  const std::vector<std::int64_t>& selfints() const noexcept { return selfints_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<BoundaryBranch>& branches() const noexcept { return branches_; }
  const std::vector<VertexId>& neighbors(VertexId v) const { return adjacency_.at(v); }

  /// Sum of coefficients of the branches attached at v (or at the smooth
  /// point when v is empty).
  Rat branch_sum(std::optional<VertexId> v) const;

  friend bool operator==(const ResolutionGraph& a, const ResolutionGraph& b) {
    return a.selfints_ == b.selfints_ && a.edges_ == b.edges_ &&
           a.branches_ == b.branches_;
  }

 private:
  std::vector<std::int64_t> selfints_;
  std::vector<Edge> edges_;
  std::vector<BoundaryBranch> branches_;
  std::vector<std::vector<VertexId>> adjacency_;
};

/// Rational coefficients indexed by vertex.
struct GraphDivisor {
  std::vector<Rat> coeffs;

  /// a(E_j) = -b_j.
  std::vector<Rat> discrepancies() const;

  friend bool operator==(const GraphDivisor&, const GraphDivisor&) = default;
};

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// M[i][i] = -selfint(i), M[i][j] = 1 for adjacent i, j, 0 otherwise.
IntMatrix intersection_matrix(const ResolutionGraph& g);

/// Leading principal minors det(M_1), ..., det(M_k) in vertex order,
/// computed exactly by fraction-free elimination.
std::vector<BigInt> leading_principal_minors(const IntMatrix& m);

/// True iff the intersection matrix is negative definite, i.e. the leading
/// principal minors alternate in sign starting negative. The empty graph
/// is contractible.
bool is_contractible(const ResolutionGraph& g);

/// Solves for the b_j making K + sum b_j E_j + (branches) numerically
/// trivial on every exceptional curve:
///
///   (c_j - 2) + sum_{i ~ j} b_i - c_j b_j + (branch coefficients at j) = 0.
///
/// Uses leaf-first elimination on the tree, which has no fill-in. Throws
/// SingularSystem on a zero pivot; this cannot happen on contractible graphs.
GraphDivisor boundary_coefficients(const ResolutionGraph& g);

enum class LcClass { KLT, PLT, LC_CENTER, NOT_LC };

std::string_view to_string(LcClass c);

/// Reads the class off the solved coefficients. On the empty graph the
/// point is tested on its blow-up, whose single coefficient is
/// (sum of branch coefficients) - 1.
LcClass log_canonical_class(const ResolutionGraph& g);

/// Least m >= 1 making every m*b_j and every m*coeff integral.
/// Throws NotApplicable when the pair is not lc.
BigInt cartier_index(const ResolutionGraph& g);

}  // namespace lcsurf
