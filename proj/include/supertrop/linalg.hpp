#pragma once

// Supertropical determinant, cofactors, adjoint, characteristic-polynomial
// coefficients and pseudoinverse, plus the adjoint/characteristic-polynomial
// surpassing check
//
//   chi^k(adj A) |= det(A)^(k-1) (.) chi^(n-k)(A),   k = 0..n,
//
// for non-singular A, together with its pseudoinverse form
//
//   det(A) (.) chi^k(A^nabla) |= chi^(n-k)(A).
//
// Determinants of row/column index subsets are computed in place, so
// cofactors and principal minors never copy the matrix.

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "supertrop/assignment.hpp"
#include "supertrop/matrix.hpp"
#include "supertrop/scalar.hpp"

namespace supertrop {

enum class DetEngine { Auto, Brute, Assignment };

struct DetOptions {
  DetEngine engine = DetEngine::Auto;
  /// Largest order the brute-force engine accepts. Auto uses brute force up
  /// to this order and the assignment engine above it.
  std::size_t brute_cap = 8;
};

namespace detail {

using Index = std::vector<std::size_t>;

inline Index iota_index(std::size_t n) {
  Index idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return idx;
}

inline Index without(std::size_t n, std::size_t skip) {
  Index idx;
  idx.reserve(n - 1);
  for (std::size_t i = 0; i < n; ++i)
    if (i != skip)
      idx.push_back(i);
  return idx;
}

// Depth-first expansion over partial permutations; eps prefixes are pruned.
inline void brute_expand(const Matrix &a, std::span<const std::size_t> rows,
                         std::span<const std::size_t> cols, std::size_t depth,
                         std::vector<char> &taken, const Scalar &prefix,
                         Scalar &sum) {
  if (depth == rows.size()) {
    sum = add(sum, prefix);
    return;
  }
  for (std::size_t t = 0; t < cols.size(); ++t) {
    if (taken[t])
      continue;
    const Scalar &entry = a(rows[depth], cols[t]);
    if (entry.is_eps())
      continue;
    taken[t] = 1;
    brute_expand(a, rows, cols, depth + 1, taken, mul(prefix, entry), sum);
    taken[t] = 0;
  }
}

inline Scalar det_brute(const Matrix &a, std::span<const std::size_t> rows,
                        std::span<const std::size_t> cols,
                        std::size_t cap) {
  if (rows.size() > cap)
    throw OrderTooLarge("det_brute: order " + std::to_string(rows.size()) +
                        " exceeds cap " + std::to_string(cap));
  Scalar sum = Scalar::eps();
  std::vector<char> taken(cols.size(), 0);
  brute_expand(a, rows, cols, 0, taken, Scalar::one(), sum);
  return sum;
}

inline std::optional<Assignment<GroupValue>>
solve_assignment(const Matrix &a, std::span<const std::size_t> rows,
                 std::span<const std::size_t> cols, std::size_t ban_row,
                 std::size_t ban_col) {
  return max_weight_assignment<GroupValue>(
      rows.size(),
      [&](std::size_t i, std::size_t j) -> std::optional<GroupValue> {
        if (i == ban_row && j == ban_col)
          return std::nullopt;
        return nu(a(rows[i], cols[j]));
      });
}

// The optimum is attained by a unique permutation iff forbidding any single
// edge of one optimal matching strictly lowers the optimum: every other
// permutation misses at least one of those edges.
inline Scalar det_assignment(const Matrix &a, std::span<const std::size_t> rows,
                             std::span<const std::size_t> cols) {
  const std::size_t m = rows.size();
  if (m == 0)
    return Scalar::one();
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  auto best = solve_assignment(a, rows, cols, none, none);
  if (!best)
    return Scalar::eps();

  bool unique = true;
  for (std::size_t i = 0; i < m && unique; ++i) {
    auto alt = solve_assignment(a, rows, cols, i, best->col_of_row[i]);
    if (alt && alt->value == best->value)
      unique = false;
  }
  if (!unique)
    return Scalar::ghost(best->value);
  for (std::size_t i = 0; i < m; ++i)
    if (!a(rows[i], cols[best->col_of_row[i]]).is_tangible())
      return Scalar::ghost(best->value);
  return Scalar::tangible(best->value);
}

inline Scalar det(const Matrix &a, std::span<const std::size_t> rows,
                  std::span<const std::size_t> cols, const DetOptions &opt) {
  switch (opt.engine) {
  case DetEngine::Brute:
    return det_brute(a, rows, cols, opt.brute_cap);
  case DetEngine::Assignment:
    return det_assignment(a, rows, cols);
  case DetEngine::Auto:
    break;
  }
  if (rows.size() <= opt.brute_cap)
    return det_brute(a, rows, cols, opt.brute_cap);
  return det_assignment(a, rows, cols);
}

/// Calls f(subset) for each k-subset of {0..n-1} in lexicographic order.
template <class F> void for_each_subset(std::size_t n, std::size_t k, F &&f) {
  if (k > n)
    return;
  Index subset = iota_index(k);
  while (true) {
    f(std::span<const std::size_t>(subset));
    std::size_t pos = k;
    while (pos > 0 && subset[pos - 1] == n - k + pos - 1)
      --pos;
    if (pos == 0)
      return;
    ++subset[pos - 1];
    for (std::size_t t = pos; t < k; ++t)
      subset[t] = subset[t - 1] + 1;
  }
}

} // namespace detail

/// Sum over all n! permutation products. Reference engine.
inline Scalar det_brute(const Matrix &a, std::size_t cap = 8) {
  auto idx = detail::iota_index(a.order());
  return detail::det_brute(a, idx, idx, cap);
}

/// Same result as det_brute, via an assignment solve plus n re-solves that
/// certify uniqueness of the optimal permutation.
inline Scalar det_assignment(const Matrix &a) {
  auto idx = detail::iota_index(a.order());
  return detail::det_assignment(a, idx, idx);
}

inline Scalar det(const Matrix &a, const DetOptions &opt = {}) {
  auto idx = detail::iota_index(a.order());
  return detail::det(a, idx, idx, opt);
}

/// Unsigned (i, j) cofactor, 0-based. The 1x1 case is the empty
/// determinant 0t.
inline Scalar cofactor(const Matrix &a, std::size_t i, std::size_t j,
                       const DetOptions &opt = {}) {
  const std::size_t n = a.order();
  if (i >= n || j >= n)
    throw std::out_of_range("cofactor: index out of range");
  auto rows = detail::without(n, i);
  auto cols = detail::without(n, j);
  return detail::det(a, rows, cols, opt);
}

inline Matrix adjoint(const Matrix &a, const DetOptions &opt = {}) {
  const std::size_t n = a.order();
  Matrix adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      adj(i, j) = cofactor(a, j, i, opt);
  return adj;
}

/// coeffs[k] is the sum of all principal k x k minors, i.e. the coefficient
/// of lambda^(n-k) in det(A (+) lambda I).
struct CharPoly {
  std::vector<Scalar> coeffs;

  std::size_t order() const { return coeffs.size() - 1; }
  const Scalar &operator[](std::size_t k) const { return coeffs[k]; }
  friend bool operator==(const CharPoly &, const CharPoly &) = default;
};

inline Scalar principal_minor_sum(const Matrix &a, std::size_t k,
                                  const DetOptions &opt = {}) {
  Scalar sum = Scalar::eps();
  detail::for_each_subset(a.order(), k, [&](std::span<const std::size_t> j) {
    sum = add(sum, detail::det(a, j, j, opt));
  });
  return sum;
}

inline CharPoly char_poly(const Matrix &a, const DetOptions &opt = {}) {
  CharPoly cp;
  cp.coeffs.reserve(a.order() + 1);
  for (std::size_t k = 0; k <= a.order(); ++k)
    cp.coeffs.push_back(principal_minor_sum(a, k, opt));
  return cp;
}

inline bool is_nonsingular(const Matrix &a, const DetOptions &opt = {}) {
  return det(a, opt).is_tangible();
}

/// det(A)^(-1) (.) adj(A). Throws Singular unless det(A) is tangible.
inline Matrix pseudoinverse(const Matrix &a, const DetOptions &opt = {}) {
  Scalar d = det(a, opt);
  if (!d.is_tangible())
    throw Singular("pseudoinverse: determinant " + d.to_string() +
                   " is not tangible");
  return scaled(adjoint(a, opt), pow(d, -1));
}

struct ConjectureTerm {
  std::size_t k;
  Scalar lhs; // chi^k(adj A)
  Scalar rhs; // det^(k-1) (.) chi^(n-k)(A)
  bool holds;
  // Pseudoinverse form; absent for singular A.
  std::optional<Scalar> nabla_lhs; // det (.) chi^k(A^nabla)
  std::optional<bool> nabla_holds;

  bool forms_agree() const { return !nabla_holds || *nabla_holds == holds; }
};

struct ConjectureReport {
  Scalar det;
  std::vector<ConjectureTerm> terms;

  bool ok() const {
    for (const auto &t : terms)
      if (!t.holds || !t.forms_agree())
        return false;
    return true;
  }
};

struct ConjectureOptions {
  DetOptions det;
  /// Exploratory: accept singular A and check k >= 1 only.
  bool allow_singular = false;
};

inline ConjectureReport conjecture_check(const Matrix &a,
                                         const ConjectureOptions &opt = {}) {
  const std::size_t n = a.order();
  ConjectureReport report{det(a, opt.det), {}};
  const Scalar &d = report.det;
  const bool nonsingular = d.is_tangible();
  if (!nonsingular && !opt.allow_singular)
    throw Singular("conjecture_check: determinant " + d.to_string() +
                   " is not tangible");

  const Matrix adj = adjoint(a, opt.det);
  const CharPoly chi_a = char_poly(a, opt.det);
  const CharPoly chi_adj = char_poly(adj, opt.det);
  std::optional<CharPoly> chi_nabla;
  if (nonsingular)
    chi_nabla = char_poly(scaled(adj, pow(d, -1)), opt.det);

  for (std::size_t k = nonsingular ? 0 : 1; k <= n; ++k) {
    const auto e = static_cast<std::int64_t>(k) - 1;
    // det^0 is the empty product, also when det is eps.
    Scalar power = e == 0 ? Scalar::one() : pow(d, e);
    ConjectureTerm t{k, chi_adj[k], mul(power, chi_a[n - k]), false, {}, {}};
    t.holds = ghost_surpasses(t.lhs, t.rhs);
    if (chi_nabla) {
      t.nabla_lhs = mul(d, (*chi_nabla)[k]);
      t.nabla_holds = ghost_surpasses(*t.nabla_lhs, chi_a[n - k]);
    }
    report.terms.push_back(std::move(t));
  }
  return report;
}

} // namespace supertrop
