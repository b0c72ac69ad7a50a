#pragma once

// Mechanical checks of the four intermediate statements behind the
// adjoint/characteristic-polynomial surpassing theorem:
//
//   support parity  - a monomial with a tangible coefficient in alpha or beta
//                     occurs in both;
//   gamma inclusion - alpha = gamma (+) rho for some polynomial rho;
//   ghost removal   - beta(A) = gamma(A) for non-singular A;
//   decomposition   - alpha(A) = beta(A) (+) u, and beta(A) = alpha(A) (+) s
//                     whenever alpha(A) is tangible.
//
// The witnesses rho, s, u are never built; existence is decided from the
// closed-form conditions below.

#include <cstddef>
#include <optional>
#include <vector>

#include "supertrop/linalg.hpp"
#include "supertrop/poly.hpp"

namespace supertrop {

/// Whether some u in S satisfies target = base (+) u.
inline bool exists_summand(const Scalar &target, const Scalar &base) {
  if (target == base || base.is_eps())
    return true;
  if (target.is_eps())
    return false;
  auto c = target.value() <=> base.value();
  return c > 0 || (c == 0 && target.is_ghost());
}

struct ClaimPolys {
  std::size_t n, k;
  Poly alpha, beta, gamma;
};

inline ClaimPolys build_claim_polys(std::size_t n, std::size_t k,
                                    const SymbolicOptions &opt = {}) {
  Poly beta = build_beta(n, k, opt);
  Poly gamma = tangible_part(beta);
  return {n, k, build_alpha(n, k, opt), std::move(beta), std::move(gamma)};
}

struct SupportStats {
  std::size_t alpha_terms = 0, alpha_tangible = 0;
  std::size_t beta_terms = 0, beta_tangible = 0;
  std::size_t common_terms = 0;
};

struct Claim1Report {
  std::size_t n, k;
  /// Monomials tangible in one polynomial but missing from the other.
  std::vector<ExponentMatrix> violations;
  SupportStats stats;

  bool ok() const { return violations.empty(); }
};

inline Claim1Report claim1_check(const ClaimPolys &p) {
  Claim1Report r{p.n, p.k, {}, {}};
  for (const auto &[e, c] : p.alpha.terms()) {
    ++r.stats.alpha_terms;
    if (!p.beta.coeff(e).is_eps())
      ++r.stats.common_terms;
    if (c.is_tangible()) {
      ++r.stats.alpha_tangible;
      if (p.beta.coeff(e).is_eps())
        r.violations.push_back(e);
    }
  }
  for (const auto &[e, c] : p.beta.terms()) {
    ++r.stats.beta_terms;
    if (c.is_tangible()) {
      ++r.stats.beta_tangible;
      if (p.alpha.coeff(e).is_eps())
        r.violations.push_back(e);
    }
  }
  return r;
}

inline Claim1Report claim1_check(std::size_t n, std::size_t k,
                                 const SymbolicOptions &opt = {}) {
  return claim1_check(build_claim_polys(n, k, opt));
}

struct Claim2Report {
  std::size_t n, k;
  /// alpha and beta coefficients all in {0t, 0g}, gamma's all 0t. The
  /// inclusion test below is equivalent to existence of rho only then.
  bool coefficients_in_range = true;
  /// Terms of gamma with no coefficient in alpha.
  std::vector<ExponentMatrix> missing;

  bool ok() const { return coefficients_in_range && missing.empty(); }
};

inline Claim2Report claim2_check(const ClaimPolys &p) {
  Claim2Report r{p.n, p.k, true, {}};
  const Scalar one = Scalar::one(), ghost_one = Scalar::ghost(0);
  for (const Poly *q : {&p.alpha, &p.beta})
    for (const auto &[e, c] : q->terms())
      if (c != one && c != ghost_one)
        r.coefficients_in_range = false;
  for (const auto &[e, c] : p.gamma.terms()) {
    if (c != one)
      r.coefficients_in_range = false;
    if (p.alpha.coeff(e).is_eps())
      r.missing.push_back(e);
  }
  return r;
}

inline Claim2Report claim2_check(std::size_t n, std::size_t k,
                                 const SymbolicOptions &opt = {}) {
  return claim2_check(build_claim_polys(n, k, opt));
}

inline void require_nonsingular(const Matrix &a, const DetOptions &opt,
                                const char *what) {
  Scalar d = det(a, opt);
  if (!d.is_tangible())
    throw Singular(std::string(what) + ": determinant " + d.to_string() +
                   " is not tangible");
}

struct Claim3Report {
  Scalar beta_value, gamma_value;
  bool ok() const { return beta_value == gamma_value; }
};

inline Claim3Report claim3_check(const ClaimPolys &p, const Matrix &a,
                                 const DetOptions &opt = {}) {
  require_nonsingular(a, opt, "claim3_check");
  return {evaluate(p.beta, a), evaluate(p.gamma, a)};
}

inline Claim3Report claim3_check(const Matrix &a, std::size_t k,
                                 const SymbolicOptions &sym = {},
                                 const DetOptions &opt = {}) {
  require_nonsingular(a, opt, "claim3_check");
  return claim3_check(build_claim_polys(a.order(), k, sym), a, opt);
}

struct DecompositionReport {
  Scalar alpha_value, beta_value;
  bool u_exists;                 // alpha(A) = beta(A) (+) u
  std::optional<bool> s_exists;  // beta(A) = alpha(A) (+) s, alpha(A) tangible
  bool surpasses;                // alpha(A) |= beta(A)

  bool ok() const { return u_exists && s_exists.value_or(true) && surpasses; }
};

inline DecompositionReport decomposition_checks(const ClaimPolys &p,
                                                const Matrix &a,
                                                const DetOptions &opt = {}) {
  require_nonsingular(a, opt, "decomposition_checks");
  DecompositionReport r{evaluate(p.alpha, a), evaluate(p.beta, a), false, {},
                        false};
  r.u_exists = exists_summand(r.alpha_value, r.beta_value);
  if (r.alpha_value.is_tangible())
    r.s_exists = exists_summand(r.beta_value, r.alpha_value);
  r.surpasses = ghost_surpasses(r.alpha_value, r.beta_value);
  return r;
}

inline DecompositionReport decomposition_checks(const Matrix &a, std::size_t k,
                                                const SymbolicOptions &sym = {},
                                                const DetOptions &opt = {}) {
  require_nonsingular(a, opt, "decomposition_checks");
  return decomposition_checks(build_claim_polys(a.order(), k, sym), a, opt);
}

} // namespace supertrop
