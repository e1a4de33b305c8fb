#include "lcsurf/dual_graph.hpp"

#include "lcsurf/error.hpp"

#include <algorithm>
#include <string>

namespace lcsurf {

ResolutionGraph::ResolutionGraph(std::vector<std::int64_t> selfints,
                                 std::vector<Edge> edges,
                                 std::vector<BoundaryBranch> branches)
    : selfints_(std::move(selfints)),
      edges_(std::move(edges)),
      branches_(std::move(branches)),
      adjacency_(selfints_.size()) {
  const std::size_t n = selfints_.size();
  for (std::size_t v = 0; v < n; ++v) {
    if (selfints_[v] < 1)
      throw ValidationError("vertex " + std::to_string(v) +
                            " has selfint " + std::to_string(selfints_[v]) +
                            " (must be >= 1)");
  }
  if (n == 0 ? !edges_.empty() : edges_.size() != n - 1)
    throw ValidationError("edge set is not a tree: " + std::to_string(edges_.size()) +
                          " edges on " + std::to_string(n) + " vertices");

  // Union-find: n-1 edges without a cycle span the vertex set.
  std::vector<std::size_t> parent(n);
  for (std::size_t v = 0; v < n; ++v) parent[v] = v;
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [a, b] : edges_) {
    if (a >= n || b >= n || a == b)
      throw ValidationError("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                            ") is not between two distinct vertices");
    auto ra = find(a), rb = find(b);
    if (ra == rb) throw ValidationError("edge set contains a cycle");
    parent[ra] = rb;
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }

  for (const auto& br : branches_) {
    if (br.attach) {
      if (*br.attach >= n)
        throw ValidationError("branch attached to missing vertex " +
                              std::to_string(*br.attach));
    } else if (n != 0) {
      throw ValidationError("branch at the ambient smooth point of a non-empty graph");
    }
    if (br.coeff <= Rat(0) || br.coeff > Rat(1))
      throw ValidationError("branch coefficient " + br.coeff.to_string() +
                            " outside (0, 1]");
  }
}

ResolutionGraph ResolutionGraph::chain(std::vector<std::int64_t> selfints,
                                       std::vector<BoundaryBranch> branches) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < selfints.size(); ++i) edges.emplace_back(i - 1, i);
  return ResolutionGraph(std::move(selfints), std::move(edges), std::move(branches));
}

Rat ResolutionGraph::branch_sum(std::optional<VertexId> v) const {
  Rat sum;
  for (const auto& br : branches_)
    if (br.attach == v) sum += br.coeff;
  return sum;
}

std::vector<Rat> GraphDivisor::discrepancies() const {
  std::vector<Rat> out;
  out.reserve(coeffs.size());
  for (const auto& b : coeffs) out.push_back(-b);
  return out;
}

IntMatrix intersection_matrix(const ResolutionGraph& g) {
  const std::size_t n = g.size();
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = -g.selfint(i);
  for (auto [a, b] : g.edges()) m[a][b] = m[b][a] = 1;
  return m;
}

namespace {

using BigMatrix = std::vector<std::vector<BigInt>>;

BigMatrix to_big(const IntMatrix& m, std::size_t k) {
  BigMatrix a(k, std::vector<BigInt>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) a[i][j] = m[i][j];
  return a;
}

// Bareiss with row pivoting.
BigInt determinant(BigMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

std::vector<BigInt> leading_principal_minors(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<BigInt> minors;
  minors.reserve(n);
  BigMatrix a = to_big(m, n);
  BigInt prev = 1;
  // Without pivoting, the k-th Bareiss pivot is the k-th leading minor.
  for (std::size_t k = 0; k < n; ++k) {
    minors.push_back(a[k][k]);
    if (a[k][k] == 0) {
      for (std::size_t r = k + 2; r <= n; ++r) minors.push_back(determinant(to_big(m, r)));
      break;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return minors;
}

bool is_contractible(const ResolutionGraph& g) {
  auto minors = leading_principal_minors(intersection_matrix(g));
  for (std::size_t k = 0; k < minors.size(); ++k) {
    // det(M_{k+1}) must have sign (-1)^{k+1}.
    int want = (k % 2 == 0) ? -1 : 1;
    if (minors[k].sign() != want) return false;
  }
  return true;
}

GraphDivisor boundary_coefficients(const ResolutionGraph& g) {
  const std::size_t n = g.size();
  GraphDivisor out;
  if (n == 0) return out;

  // BFS order from vertex 0; eliminating in reverse order removes leaves first.
  std::vector<VertexId> order{0};
  std::vector<std::optional<VertexId>> parent(n);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (VertexId u : g.neighbors(order[i])) {
      if (seen[u]) continue;
      seen[u] = true;
      parent[u] = order[i];
      order.push_back(u);
    }
  }

  std::vector<Rat> pivot(n), rhs(n);
  for (VertexId v = 0; v < n; ++v) {
    pivot[v] = Rat(-g.selfint(v));
    rhs[v] = Rat(2 - g.selfint(v)) - g.branch_sum(v);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    VertexId v = *it;
    if (pivot[v] == Rat(0))
      throw SingularSystem("intersection matrix is singular (zero pivot at vertex " +
                           std::to_string(v) + ")");
    if (parent[v]) {
      pivot[*parent[v]] -= Rat(1) / pivot[v];
      rhs[*parent[v]] -= rhs[v] / pivot[v];
    }
  }

  out.coeffs.resize(n);
  for (VertexId v : order) {
    Rat r = rhs[v];
    if (parent[v]) r -= out.coeffs[*parent[v]];
    out.coeffs[v] = r / pivot[v];
  }
  return out;
}

std::string_view to_string(LcClass c) {
  switch (c) {
    case LcClass::KLT: return "KLT";
    case LcClass::PLT: return "PLT";
    case LcClass::LC_CENTER: return "LC_CENTER";
    case LcClass::NOT_LC: return "NOT_LC";
  }
  return "NOT_LC";
}

LcClass log_canonical_class(const ResolutionGraph& g) {
  std::vector<Rat> b = g.empty() ? std::vector<Rat>{g.branch_sum(std::nullopt) - Rat(1)}
                                 : boundary_coefficients(g).coeffs;
  const Rat one(1);
  bool center = false;
  for (const auto& x : b) {
    if (x > one) return LcClass::NOT_LC;
    if (x == one) center = true;
  }
  if (center) return LcClass::LC_CENTER;
  bool reduced = std::any_of(g.branches().begin(), g.branches().end(),
                             [&](const BoundaryBranch& br) { return br.coeff == one; });
  return reduced ? LcClass::PLT : LcClass::KLT;
}

BigInt cartier_index(const ResolutionGraph& g) {
  if (log_canonical_class(g) == LcClass::NOT_LC)
    throw NotApplicable("Cartier index requested for a pair that is not lc");
  BigInt index = 1;
  for (const auto& b : boundary_coefficients(g).coeffs) index = lcm(index, b.denominator());
  for (const auto& br : g.branches()) index = lcm(index, br.coeff.denominator());
  return index;
}

}  // namespace lcsurf
