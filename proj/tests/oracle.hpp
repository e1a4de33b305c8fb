#pragma once

// Independent reference computations for the tests. Everything here runs on
// GMP rationals and dense elimination, sharing no code with the library.

#include "lcsurf/dual_graph.hpp"
#include "lcsurf/rat.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

inline mpz_class to_mpz(const lcsurf::BigInt& v) { return mpz_class(v.str()); }

inline mpq_class to_mpq(const lcsurf::Rat& r) {
  mpq_class q(to_mpz(r.numerator()), to_mpz(r.denominator()));
  q.canonicalize();
  return q;
}

inline lcsurf::Rat from_mpq(const mpq_class& q) {
  return {lcsurf::BigInt(q.get_num().get_str()), lcsurf::BigInt(q.get_den().get_str())};
}

using Matrix = std::vector<std::vector<mpq_class>>;

inline Matrix intersection_form(const lcsurf::ResolutionGraph& g) {
  Matrix m(g.size(), std::vector<mpq_class>(g.size(), 0));
  for (std::size_t i = 0; i < g.size(); ++i) m[i][i] = -g.selfint(i);
  for (auto [a, b] : g.edges()) m[a][b] = m[b][a] = 1;
  return m;
}

// Gaussian elimination with row pivoting; nullopt when singular.
inline std::optional<std::vector<mpq_class>> solve(Matrix a, std::vector<mpq_class> rhs) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      mpq_class f = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
      rhs[row] -= f * rhs[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= a[i][i];
  return rhs;
}

inline mpq_class branch_total(const lcsurf::ResolutionGraph& g, std::size_t v) {
  mpq_class s = 0;
  for (const auto& br : g.branches())
    if (br.attach == v) s += to_mpq(br.coeff);
  return s;
}

// b solving (c_j - 2) + sum_{i~j} b_i - c_j b_j + branches_j = 0.
inline std::optional<std::vector<mpq_class>> boundary_coefficients(
    const lcsurf::ResolutionGraph& g) {
  std::vector<mpq_class> rhs(g.size());
  for (std::size_t j = 0; j < g.size(); ++j)
    rhs[j] = mpq_class(2 - g.selfint(j)) - branch_total(g, j);
  return solve(intersection_form(g), rhs);
}

// Residual of the defining equation at every vertex for a candidate b.
inline std::vector<mpq_class> residuals(const lcsurf::ResolutionGraph& g,
                                        const std::vector<lcsurf::Rat>& b) {
  std::vector<mpq_class> out;
  for (std::size_t j = 0; j < g.size(); ++j) {
    mpq_class r = mpq_class(g.selfint(j) - 2) - g.selfint(j) * to_mpq(b[j]) + branch_total(g, j);
    for (auto i : g.neighbors(j)) r += to_mpq(b[i]);
    out.push_back(r);
  }
  return out;
}

// -M positive definite, tested by symmetric elimination (LDL^T): every pivot
// must be positive.
inline bool negative_definite(const lcsurf::ResolutionGraph& g) {
  Matrix a = intersection_form(g);
  const std::size_t n = a.size();
  for (auto& row : a)
    for (auto& x : row) x = -x;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      mpq_class f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return true;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix out(n, std::vector<mpq_class>(n));
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<mpq_class> e(n, 0);
    e[col] = 1;
    auto x = solve(m, e);
    if (!x) return std::nullopt;
    for (std::size_t row = 0; row < n; ++row) out[row][col] = (*x)[row];
  }
  return out;
}

inline mpz_class floor_q(const mpq_class& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline mpz_class ceil_q(const mpq_class& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Random trees for the solver corpus: a chain, optionally with one extra
// vertex hanging off an interior chain vertex, plus random branches.
struct GraphGen {
  std::mt19937_64 rng{0x5eed'1a7e'bead'c0deULL};
  int max_vertices = 6;
  std::int64_t max_selfint = 6;
  std::int64_t max_den = 6;

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  }

  lcsurf::Rat coeff() {
    std::int64_t den = uniform(1, max_den);
    return {lcsurf::BigInt(uniform(1, den)), lcsurf::BigInt(den)};
  }

  lcsurf::ResolutionGraph operator()() {
    const int total = static_cast<int>(uniform(1, max_vertices));
    const bool fork = total >= 4 && uniform(0, 1) == 1;
    const int chain_len = fork ? total - 1 : total;
    std::vector<std::int64_t> selfints;
    std::vector<lcsurf::ResolutionGraph::Edge> edges;
    for (int i = 0; i < total; ++i) selfints.push_back(uniform(1, max_selfint));
    for (int i = 1; i < chain_len; ++i) edges.emplace_back(i - 1, i);
    if (fork) edges.emplace_back(uniform(1, chain_len - 2), chain_len);
    std::vector<lcsurf::BoundaryBranch> branches;
    const auto count = uniform(0, 3);
    for (std::int64_t k = 0; k < count; ++k)
      branches.push_back({static_cast<std::size_t>(uniform(0, total - 1)), coeff()});
    return {std::move(selfints), std::move(edges), std::move(branches)};
  }
};

}  // namespace oracle
