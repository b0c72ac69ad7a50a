#pragma once

// Sparse polynomials over S in the n^2 variables v_ij of a variable matrix V,
// and the three polynomials compared by the adjoint characteristic-polynomial
// argument:
//
//   alpha = chi^k(adj V)
//   beta  = det(V)^(k-1) (.) chi^(n-k)(V)
//   gamma = the terms of beta whose coefficient is tangible
//
// Expansion is formal: equal monomials produced twice collapse to a ghost
// coefficient, so every coefficient of alpha and beta is 0t or 0g.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "supertrop/linalg.hpp"
#include "supertrop/matrix.hpp"
#include "supertrop/scalar.hpp"

namespace supertrop {

/// Exponents k_ij of v_ij, row-major.
struct ExponentMatrix {
  std::size_t n = 0;
  std::vector<std::uint16_t> exps;

  static ExponentMatrix zero(std::size_t n) {
    return {n, std::vector<std::uint16_t>(n * n, 0)};
  }
  static ExponentMatrix variable(std::size_t n, std::size_t i, std::size_t j) {
    auto e = zero(n);
    e.exps[i * n + j] = 1;
    return e;
  }

  std::uint16_t operator()(std::size_t i, std::size_t j) const {
    return exps[i * n + j];
  }

  unsigned degree() const {
    return std::accumulate(exps.begin(), exps.end(), 0u);
  }

  friend ExponentMatrix operator+(const ExponentMatrix &a,
                                  const ExponentMatrix &b) {
    ExponentMatrix r = a;
    for (std::size_t t = 0; t < r.exps.size(); ++t)
      r.exps[t] = static_cast<std::uint16_t>(r.exps[t] + b.exps[t]);
    return r;
  }

  friend bool operator==(const ExponentMatrix &,
                         const ExponentMatrix &) = default;
};

/// Graded order: lower total degree first; within a degree, the
/// lexicographically larger flattened exponent vector first (v11 before v12).
struct GradedLexOrder {
  bool operator()(const ExponentMatrix &a, const ExponentMatrix &b) const {
    unsigned da = a.degree(), db = b.degree();
    if (da != db)
      return da < db;
    return std::lexicographical_compare(b.exps.begin(), b.exps.end(),
                                        a.exps.begin(), a.exps.end());
  }
};

class Poly {
public:
  using Terms = std::map<ExponentMatrix, Scalar, GradedLexOrder>;

  explicit Poly(std::size_t n) : n_(n) {}

  static Poly monomial(ExponentMatrix e, Scalar coeff = Scalar::one()) {
    Poly p(e.n);
    p.add_term(std::move(e), coeff);
    return p;
  }
  static Poly unit(std::size_t n) {
    return monomial(ExponentMatrix::zero(n));
  }
  static Poly variable(std::size_t n, std::size_t i, std::size_t j) {
    return monomial(ExponentMatrix::variable(n, i, j));
  }

  std::size_t order() const { return n_; }
  const Terms &terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Coefficient of `e`; eps when absent.
  Scalar coeff(const ExponentMatrix &e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar::eps() : it->second;
  }

  /// this += coeff * e, combining with any existing term via (+).
  void add_term(ExponentMatrix e, const Scalar &coeff) {
    if (coeff.is_eps())
      return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), coeff);
    if (!inserted)
      it->second = add(it->second, coeff);
  }

  friend bool operator==(const Poly &, const Poly &) = default;

  /// One term per line: "coeff * v11^a v12^b ..." listing nonzero exponents
  /// only, or "coeff * 1" for the constant monomial.
  std::string to_debug_string() const {
    std::string out;
    for (const auto &[e, c] : terms_) {
      out += c.to_string();
      out += " *";
      bool any = false;
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
          if (auto x = e(i, j)) {
            out += " v" + std::to_string(i + 1);
            if (n_ > 9)
              out += '_';
            out += std::to_string(j + 1) + '^' + std::to_string(x);
            any = true;
          }
      if (!any)
        out += " 1";
      out += '\n';
    }
    return out;
  }

private:
  std::size_t n_;
  Terms terms_;
};

inline void check_same_order(const Poly &p, const Poly &q) {
  if (p.order() != q.order())
    throw OrderMismatch("poly: order mismatch");
}

inline Poly poly_add(const Poly &p, const Poly &q) {
  check_same_order(p, q);
  Poly r = p;
  for (const auto &[e, c] : q.terms())
    r.add_term(e, c);
  return r;
}

inline Poly poly_mul(const Poly &p, const Poly &q) {
  check_same_order(p, q);
  Poly r(p.order());
  for (const auto &[ep, cp] : p.terms())
    for (const auto &[eq, cq] : q.terms())
      r.add_term(ep + eq, mul(cp, cq));
  return r;
}

inline Poly operator+(const Poly &p, const Poly &q) { return poly_add(p, q); }
inline Poly operator*(const Poly &p, const Poly &q) { return poly_mul(p, q); }

/// Substitutes v_ij := A(i, j). The empty polynomial evaluates to eps.
inline Scalar evaluate(const Poly &p, const Matrix &a) {
  if (p.order() != a.order())
    throw OrderMismatch("evaluate: polynomial and matrix orders differ");
  const std::size_t n = a.order();
  Scalar sum = Scalar::eps();
  for (const auto &[e, c] : p.terms()) {
    Scalar term = c;
    for (std::size_t i = 0; i < n && !term.is_eps(); ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (auto x = e(i, j))
          term = mul(term, pow(a(i, j), x));
    sum = add(sum, term);
  }
  return sum;
}

struct SymbolicOptions {
  /// Largest order the symbolic constructions accept.
  std::size_t cap = 4;
};

namespace detail {

inline void check_symbolic(std::size_t n, std::size_t k,
                           const SymbolicOptions &opt) {
  if (n == 0)
    throw std::invalid_argument("symbolic: order must be positive");
  if (n > opt.cap)
    throw OrderTooLarge("symbolic: order " + std::to_string(n) +
                        " exceeds cap " + std::to_string(opt.cap));
  if (k > n)
    throw std::invalid_argument("symbolic: k exceeds n");
}

/// Square matrix of polynomials, row-major.
struct PolyMatrix {
  std::size_t n;
  std::vector<Poly> entries;

  const Poly &operator()(std::size_t i, std::size_t j) const {
    return entries[i * n + j];
  }
};

inline PolyMatrix variable_matrix(std::size_t n) {
  PolyMatrix v{n, {}};
  v.entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      v.entries.push_back(Poly::variable(n, i, j));
  return v;
}

inline void poly_det_expand(const PolyMatrix &m,
                            std::span<const std::size_t> rows,
                            std::span<const std::size_t> cols,
                            std::size_t depth, std::vector<char> &taken,
                            const Poly &prefix, Poly &sum) {
  if (depth == rows.size()) {
    for (const auto &[e, c] : prefix.terms())
      sum.add_term(e, c);
    return;
  }
  for (std::size_t t = 0; t < cols.size(); ++t) {
    if (taken[t])
      continue;
    const Poly &entry = m(rows[depth], cols[t]);
    if (entry.empty())
      continue;
    taken[t] = 1;
    poly_det_expand(m, rows, cols, depth + 1, taken, poly_mul(prefix, entry),
                    sum);
    taken[t] = 0;
  }
}

/// Formal determinant of the (rows, cols) submatrix, `poly_order` variables.
inline Poly poly_det(const PolyMatrix &m, std::span<const std::size_t> rows,
                     std::span<const std::size_t> cols,
                     std::size_t poly_order) {
  Poly sum(poly_order);
  std::vector<char> taken(cols.size(), 0);
  poly_det_expand(m, rows, cols, 0, taken, Poly::unit(poly_order), sum);
  return sum;
}

inline Poly poly_principal_sum(const PolyMatrix &m, std::size_t k,
                               std::size_t poly_order) {
  Poly sum(poly_order);
  for_each_subset(m.n, k, [&](std::span<const std::size_t> j) {
    sum = poly_add(sum, poly_det(m, j, j, poly_order));
  });
  return sum;
}

inline PolyMatrix poly_adjoint(const PolyMatrix &m) {
  const std::size_t n = m.n;
  PolyMatrix adj{n, std::vector<Poly>(n * n, Poly(n))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto rows = without(n, j);
      auto cols = without(n, i);
      adj.entries[i * n + j] = poly_det(m, rows, cols, n);
    }
  return adj;
}

inline Poly poly_power(const Poly &p, std::size_t e) {
  Poly r = Poly::unit(p.order());
  for (std::size_t t = 0; t < e; ++t)
    r = poly_mul(r, p);
  return r;
}

} // namespace detail

/// alpha = chi^k(adj V).
inline Poly build_alpha(std::size_t n, std::size_t k,
                        const SymbolicOptions &opt = {}) {
  detail::check_symbolic(n, k, opt);
  auto adj = detail::poly_adjoint(detail::variable_matrix(n));
  return detail::poly_principal_sum(adj, k, n);
}

/// beta by formal products: det(V)^(k-1) (.) chi^(n-k)(V). Requires k >= 1.
inline Poly build_beta_by_products(std::size_t n, std::size_t k,
                                   const SymbolicOptions &opt = {}) {
  detail::check_symbolic(n, k, opt);
  if (k == 0)
    throw std::invalid_argument("build_beta: k = 0 is not a polynomial");
  auto v = detail::variable_matrix(n);
  auto all = detail::iota_index(n);
  Poly det_v = detail::poly_det(v, all, all, n);
  return poly_mul(detail::poly_power(det_v, k - 1),
                  detail::poly_principal_sum(v, n - k, n));
}

/// One index tuple (sigma_1..sigma_{k-1}, J, tau) of the expansion of beta.
struct MuTuple {
  std::vector<std::vector<std::size_t>> sigmas; // permutations of 0..n-1
  std::vector<std::size_t> subset;              // J, sorted, |J| = n - k
  std::vector<std::size_t> tau;                 // tau[t] = image of subset[t]

  /// Exponent matrix of the monomial prod_s prod_i v_{i sigma_s(i)} (.)
  /// prod_{j in J} v_{j tau(j)}.
  ExponentMatrix to_exponent_matrix(std::size_t n) const {
    auto e = ExponentMatrix::zero(n);
    for (const auto &sigma : sigmas)
      for (std::size_t i = 0; i < n; ++i)
        ++e.exps[i * n + sigma[i]];
    for (std::size_t t = 0; t < subset.size(); ++t)
      ++e.exps[subset[t] * n + tau[t]];
    return e;
  }
};

/// Calls f(mu) for every MuTuple with the given (n, k), k >= 1.
template <class F> void for_each_mu_tuple(std::size_t n, std::size_t k, F &&f) {
  std::vector<std::vector<std::size_t>> perms;
  {
    auto p = detail::iota_index(n);
    do
      perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  }
  MuTuple mu;
  mu.sigmas.resize(k - 1);
  auto recurse = [&](auto &self, std::size_t s) -> void {
    if (s < k - 1) {
      for (const auto &p : perms) {
        mu.sigmas[s] = p;
        self(self, s + 1);
      }
      return;
    }
    detail::for_each_subset(n, n - k, [&](std::span<const std::size_t> j) {
      mu.subset.assign(j.begin(), j.end());
      mu.tau = mu.subset;
      do
        f(static_cast<const MuTuple &>(mu));
      while (std::next_permutation(mu.tau.begin(), mu.tau.end()));
    });
  };
  recurse(recurse, 0);
}

/// beta as the (+)-sum of the monomials m_mu over all MuTuples.
inline Poly build_beta_by_tuples(std::size_t n, std::size_t k,
                                 const SymbolicOptions &opt = {}) {
  detail::check_symbolic(n, k, opt);
  if (k == 0)
    throw std::invalid_argument("build_beta: k = 0 is not a polynomial");
  Poly beta(n);
  for_each_mu_tuple(n, k, [&](const MuTuple &mu) {
    beta.add_term(mu.to_exponent_matrix(n), Scalar::one());
  });
  return beta;
}

/// beta, built by products and checked term-for-term against the tuple
/// enumeration.
inline Poly build_beta(std::size_t n, std::size_t k,
                       const SymbolicOptions &opt = {}) {
  Poly beta = build_beta_by_products(n, k, opt);
  if (beta != build_beta_by_tuples(n, k, opt))
    throw std::logic_error("build_beta: product and tuple expansions differ");
  return beta;
}

/// Terms of beta with a tangible coefficient.
inline Poly tangible_part(const Poly &p) {
  Poly r(p.order());
  for (const auto &[e, c] : p.terms())
    if (c.is_tangible())
      r.add_term(e, c);
  return r;
}

inline Poly build_gamma(std::size_t n, std::size_t k,
                        const SymbolicOptions &opt = {}) {
  return tangible_part(build_beta(n, k, opt));
}

} // namespace supertrop
