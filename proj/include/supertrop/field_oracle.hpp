#pragma once

// Classical linear algebra over Q with exact rationals, used as an
// independent oracle for the field-side identities
//
//   E_k(adj X) = det(X)^(k-1) E_(n-k)(X)             (Jacobi, all X, k >= 1)
//   chi^n(X) chi^k(X^-1) = chi^(n-k)(X)              (reciprocal polynomial)
//   chi^k(adj X) = (-1)^n det(X)^(k-1) chi^(n-k)(X)  (signed form)
//
// where E_k is the sum of principal k x k minors and chi^k is the
// coefficient of lambda^(n-k) in det(lambda I - X), i.e. (-1)^k E_k.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "supertrop/errors.hpp"
#include "supertrop/linalg.hpp"

namespace supertrop::field {

using Rat = boost::multiprecision::cpp_rational;

class RatMatrix {
public:
  explicit RatMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  RatMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
      : RatMatrix(rows.size()) {
    std::size_t i = 0;
    for (const auto &row : rows) {
      if (row.size() != n_)
        throw std::invalid_argument("RatMatrix: ragged initializer");
      std::size_t j = 0;
      for (auto v : row)
        (*this)(i, j++) = v;
      ++i;
    }
  }

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }

  std::size_t order() const { return n_; }
  Rat &operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const Rat &operator()(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }

  friend bool operator==(const RatMatrix &, const RatMatrix &) = default;

  RatMatrix submatrix(std::span<const std::size_t> rows,
                      std::span<const std::size_t> cols) const {
    RatMatrix s(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j)
        s(i, j) = (*this)(rows[i], cols[j]);
    return s;
  }

  std::string to_compact() const {
    std::string out;
    for (std::size_t i = 0; i < n_; ++i) {
      if (i)
        out += ';';
      for (std::size_t j = 0; j < n_; ++j) {
        if (j)
          out += ' ';
        out += (*this)(i, j).str();
      }
    }
    return out;
  }

  /// Same layout as the supertropical matrix file; tokens are "p" or "p/q".
  static RatMatrix read(std::istream &in) {
    std::size_t n = 0;
    if (!(in >> n) || n == 0)
      throw ParseError("rational matrix: bad order");
    RatMatrix m(n);
    std::string tok;
    for (std::size_t t = 0; t < n * n; ++t) {
      if (!(in >> tok))
        throw ParseError("rational matrix: expected " +
                         std::to_string(n * n) + " entries");
      try {
        m.entries_[t] = Rat(tok);
      } catch (const std::exception &) {
        throw ParseError("rational matrix: bad token '" + tok + "'");
      }
    }
    if (in >> tok)
      throw ParseError("rational matrix: trailing token '" + tok + "'");
    return m;
  }

private:
  std::size_t n_;
  std::vector<Rat> entries_;
};

inline RatMatrix operator*(const RatMatrix &a, const RatMatrix &b) {
  const std::size_t n = a.order();
  RatMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a(i, k) != 0)
        for (std::size_t j = 0; j < n; ++j)
          c(i, j) += a(i, k) * b(k, j);
  return c;
}

inline RatMatrix scaled(const RatMatrix &a, const Rat &c) {
  RatMatrix r = a;
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j)
      r(i, j) *= c;
  return r;
}

/// Fraction-free (Bareiss) elimination with row pivoting.
inline Rat rat_det(RatMatrix m) {
  const std::size_t n = m.order();
  if (n == 0)
    return 1;
  int sign = 1;
  Rat prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0)
        ++p;
      if (p == n)
        return 0;
      for (std::size_t j = 0; j < n; ++j)
        std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Gauss-Jordan inverse. Throws Singular when det = 0.
inline RatMatrix rat_inverse(RatMatrix m) {
  const std::size_t n = m.order();
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0)
      ++p;
    if (p == n)
      throw Singular("rat_inverse: matrix is singular");
    if (p != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(k, j), m(p, j));
        std::swap(inv(k, j), inv(p, j));
      }
    const Rat pivot = m(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      m(k, j) /= pivot;
      inv(k, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m(i, k) == 0)
        continue;
      const Rat f = m(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

/// Signed classical adjugate by cofactor expansion:
/// adj(i, j) = (-1)^(i+j) det(X without row j, column i).
inline RatMatrix rat_adjugate_cofactor(const RatMatrix &x) {
  const std::size_t n = x.order();
  RatMatrix adj(n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto rows = detail::without(n, j);
      auto cols = detail::without(n, i);
      Rat minor = rat_det(x.submatrix(rows, cols));
      adj(i, j) = (i + j) % 2 ? Rat(-minor) : minor;
    }
  return adj;
}

/// det(X) X^-1. Requires invertible X.
inline RatMatrix rat_adjugate_via_inverse(const RatMatrix &x) {
  return scaled(rat_inverse(x), rat_det(x));
}

/// Cofactor expansion up to order 5; above that det * inverse when X is
/// invertible.
inline RatMatrix rat_adjugate(const RatMatrix &x) {
  if (x.order() <= 5)
    return rat_adjugate_cofactor(x);
  Rat d = rat_det(x);
  if (d == 0)
    return rat_adjugate_cofactor(x);
  return scaled(rat_inverse(x), d);
}

/// E_0..E_n: sums of principal k x k minors (E_0 = 1, E_n = det).
inline std::vector<Rat> minor_sums(const RatMatrix &x) {
  const std::size_t n = x.order();
  std::vector<Rat> e(n + 1);
  for (std::size_t k = 0; k <= n; ++k)
    detail::for_each_subset(n, k, [&](std::span<const std::size_t> j) {
      e[k] += rat_det(x.submatrix(j, j));
    });
  return e;
}

/// chi^k = (-1)^k E_k, the coefficient of lambda^(n-k) in det(lambda I - X).
inline std::vector<Rat> char_coeffs(const RatMatrix &x) {
  auto e = minor_sums(x);
  for (std::size_t k = 1; k < e.size(); k += 2)
    e[k] = -e[k];
  return e;
}

/// Coefficients of det(lambda I - X) by Leibniz expansion over polynomial
/// entries; result[i] is the coefficient of lambda^(n-i). Costs n! * n^2.
inline std::vector<Rat> char_coeffs_by_expansion(const RatMatrix &x) {
  using LambdaPoly = std::vector<Rat>; // ascending powers of lambda
  const std::size_t n = x.order();
  LambdaPoly total(n + 1);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    // Parity by counting inversions.
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b])
          ++inversions;
    LambdaPoly prod{Rat(inversions % 2 ? -1 : 1)};
    for (std::size_t i = 0; i < n; ++i) {
      // entry = [i == perm[i]] lambda - x(i, perm[i])
      LambdaPoly next(prod.size() + 1);
      for (std::size_t d = 0; d < prod.size(); ++d) {
        next[d] -= prod[d] * x(i, perm[i]);
        if (i == perm[i])
          next[d + 1] += prod[d];
      }
      prod = std::move(next);
    }
    for (std::size_t d = 0; d < prod.size() && d <= n; ++d)
      total[d] += prod[d];
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::reverse(total.begin(), total.end());
  return total;
}

inline Rat rat_pow(const Rat &base, std::int64_t e) {
  if (e < 0) {
    if (base == 0)
      throw Singular("rat_pow: zero to a negative power");
    return rat_pow(Rat(1) / base, -e);
  }
  Rat r = 1;
  for (std::int64_t t = 0; t < e; ++t)
    r *= base;
  return r;
}

inline void check_k(const RatMatrix &x, std::size_t k) {
  if (k > x.order())
    throw std::invalid_argument("k exceeds matrix order");
}

/// E_k(adj X) == det(X)^(k-1) E_(n-k)(X). k = 0 needs invertible X.
inline bool jacobi_check(const RatMatrix &x, std::size_t k) {
  check_k(x, k);
  const std::size_t n = x.order();
  Rat d = rat_det(x);
  if (k == 0 && d == 0)
    throw Singular("jacobi_check: k = 0 requires an invertible matrix");
  Rat lhs = minor_sums(rat_adjugate(x))[k];
  Rat rhs = rat_pow(d, static_cast<std::int64_t>(k) - 1) * minor_sums(x)[n - k];
  return lhs == rhs;
}

/// chi^n(X) chi^k(X^-1) == chi^(n-k)(X). Throws Singular when det = 0.
inline bool reciprocal_check(const RatMatrix &x, std::size_t k) {
  check_k(x, k);
  const std::size_t n = x.order();
  if (rat_det(x) == 0)
    throw Singular("reciprocal_check: matrix is singular");
  auto chi = char_coeffs(x);
  auto chi_inv = char_coeffs(rat_inverse(x));
  return chi[n] * chi_inv[k] == chi[n - k];
}

/// chi^k(adj X) == (-1)^n det(X)^(k-1) chi^(n-k)(X), with every
/// characteristic coefficient taken from the Leibniz expansion rather than
/// from minor sums. k = 0 needs invertible X.
inline bool sign_relation_check(const RatMatrix &x, std::size_t k) {
  check_k(x, k);
  const std::size_t n = x.order();
  Rat d = rat_det(x);
  if (k == 0 && d == 0)
    throw Singular("sign_relation_check: k = 0 requires an invertible matrix");
  Rat phi = char_coeffs_by_expansion(rat_adjugate(x))[k];
  Rat psi = rat_pow(d, static_cast<std::int64_t>(k) - 1) *
            char_coeffs_by_expansion(x)[n - k];
  return phi == (n % 2 ? Rat(-psi) : psi);
}

} // namespace supertrop::field
