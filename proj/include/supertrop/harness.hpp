#pragma once

// Batch verification harness behind the `supertrop` CLI.
//
// A run enumerates n over [n_min, n_max] and, for each n, `trials` trials.
// Trial t (0-based across the whole run) draws from its own generator seeded
// with trial_seed(seed, t), so trials are independent and may run on any
// number of threads; records are written in trial order. Output is JSON
// Lines: one object per record, then one summary object.

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "supertrop/claims.hpp"
#include "supertrop/field_oracle.hpp"
#include "supertrop/linalg.hpp"
#include "supertrop/poly.hpp"
#include "supertrop/random.hpp"

namespace supertrop::harness {

using json = nlohmann::ordered_json;

enum class Mode { Conjecture, Claims, DetCross, Oracle, Bench };
enum class Engine { Auto, Brute, Assignment, Both };
enum class Format { Jsonl, Pretty };

inline const char *to_string(Mode m) {
  switch (m) {
  case Mode::Conjecture:
    return "conjecture";
  case Mode::Claims:
    return "claims";
  case Mode::DetCross:
    return "detcross";
  case Mode::Oracle:
    return "oracle";
  case Mode::Bench:
    return "bench";
  }
  return "";
}

inline const char *to_string(Engine e) {
  switch (e) {
  case Engine::Auto:
    return "auto";
  case Engine::Brute:
    return "brute";
  case Engine::Assignment:
    return "assignment";
  case Engine::Both:
    return "both";
  }
  return "";
}

struct TrialConfig {
  Mode mode = Mode::Conjecture;
  std::size_t n_min = 1, n_max = 4;
  std::optional<std::size_t> k;
  std::size_t trials = 100;
  std::uint64_t seed = 42;
  ScalarDistribution dist{};
  Engine engine = Engine::Auto;
  bool allow_singular = false;
  std::optional<std::string> input;
  Format format = Format::Jsonl;
  /// Adds wall-clock time to the summary (breaks byte reproducibility).
  bool timing = false;
  std::size_t threads = 1;
  std::size_t brute_cap = 8;
  std::size_t symbolic_cap = 4;
};

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline void validate(const TrialConfig &c) {
  const auto &d = c.dist;
  if (d.p_tangible < 0 || d.p_ghost < 0 || d.p_eps < 0)
    throw ConfigError("probabilities must be non-negative");
  if (std::abs(d.p_tangible + d.p_ghost + d.p_eps - 1.0) > 1e-9)
    throw ConfigError("probabilities must sum to 1");
  if (c.trials < 1)
    throw ConfigError("trials must be at least 1");
  if (d.bound < 1)
    throw ConfigError("bound must be at least 1");
  if (c.n_min < 1 || c.n_min > c.n_max)
    throw ConfigError("n range must satisfy 1 <= a <= b");
  if (c.threads < 1)
    throw ConfigError("threads must be at least 1");
  if (c.k && *c.k > c.n_min && !c.input)
    throw ConfigError("k must not exceed the smallest n");
  if (c.k && *c.k == 0 && c.mode == Mode::Claims)
    throw ConfigError("claims mode needs k >= 1");
  const bool uses_brute = c.engine == Engine::Brute || c.engine == Engine::Both;
  if (!c.input && uses_brute && c.n_max > c.brute_cap &&
      c.mode != Mode::Bench)
    throw ConfigError("brute-force engine limited to n <= " +
                      std::to_string(c.brute_cap));
  if (!c.input && c.mode == Mode::Claims && c.n_max > c.symbolic_cap)
    throw ConfigError("claims mode limited to n <= " +
                      std::to_string(c.symbolic_cap));
  if (!c.input && c.mode == Mode::DetCross && c.n_max > c.brute_cap)
    throw ConfigError("detcross limited to n <= " +
                      std::to_string(c.brute_cap));
}

/// One output line's worth of results.
struct Record {
  json body;
  bool ok = true;
  std::size_t rejections = 0;
};

namespace detail {

inline DetOptions det_options(const TrialConfig &c, Engine e) {
  DetOptions o;
  o.brute_cap = c.brute_cap;
  o.engine = e == Engine::Brute        ? DetEngine::Brute
             : e == Engine::Assignment ? DetEngine::Assignment
                                       : DetEngine::Auto;
  return o;
}

inline std::vector<std::size_t> k_values(const TrialConfig &c, std::size_t n,
                                         std::size_t from) {
  if (c.k)
    return *c.k >= from && *c.k <= n ? std::vector<std::size_t>{*c.k}
                                     : std::vector<std::size_t>{};
  std::vector<std::size_t> ks;
  for (std::size_t k = from; k <= n; ++k)
    ks.push_back(k);
  return ks;
}

inline json header(Mode mode, std::size_t index, std::optional<std::uint64_t> seed,
                   std::size_t n) {
  json j;
  j["mode"] = to_string(mode);
  j["trial"] = index;
  j["seed"] = seed ? json(*seed) : json(nullptr);
  j["n"] = n;
  return j;
}

inline bool same_report(const ConjectureReport &a, const ConjectureReport &b) {
  if (!(a.det == b.det) || a.terms.size() != b.terms.size())
    return false;
  for (std::size_t t = 0; t < a.terms.size(); ++t)
    if (!(a.terms[t].lhs == b.terms[t].lhs) ||
        !(a.terms[t].rhs == b.terms[t].rhs))
      return false;
  return true;
}

// ---- conjecture ------------------------------------------------------------

inline Record conjecture_record(const TrialConfig &c, json j, const Matrix &a,
                                std::size_t rejections) {
  Record r;
  r.rejections = rejections;
  j["matrix"] = a.to_compact();
  j["rejections"] = rejections;

  ConjectureOptions opt;
  opt.allow_singular = c.allow_singular;
  opt.det = det_options(c, c.engine == Engine::Both ? Engine::Brute : c.engine);
  ConjectureReport rep = conjecture_check(a, opt);
  bool engines_agree = true;
  if (c.engine == Engine::Both) {
    opt.det = det_options(c, Engine::Assignment);
    engines_agree = same_report(rep, conjecture_check(a, opt));
  }

  j["det"] = rep.det.to_string();
  json results = json::array();
  const bool k0_available = rep.det.is_tangible();
  for (std::size_t k : k_values(c, a.order(), k0_available ? 0 : 1)) {
    const ConjectureTerm &t = rep.terms[k0_available ? k : k - 1];
    json row;
    row["k"] = t.k;
    row["lhs"] = t.lhs.to_string();
    row["rhs"] = t.rhs.to_string();
    row["holds"] = t.holds;
    if (t.nabla_holds)
      row["pseudoinverse_holds"] = *t.nabla_holds;
    r.ok = r.ok && t.holds && t.forms_agree();
    results.push_back(std::move(row));
  }
  j["results"] = std::move(results);
  if (c.engine == Engine::Both)
    j["engines_agree"] = engines_agree;
  if (!k0_available)
    j["exploratory"] = true;
  r.ok = r.ok && engines_agree;
  j["ok"] = r.ok;
  r.body = std::move(j);
  return r;
}

inline Record conjecture_trial(const TrialConfig &c, std::size_t index,
                               std::uint64_t seed, std::size_t n) {
  Xoshiro256 rng(seed);
  const DetOptions gen = det_options(c, Engine::Auto);
  if (c.allow_singular)
    return conjecture_record(c, header(c.mode, index, seed, n),
                             generate_matrix(rng, n, c.dist), 0);
  Drawn d = generate_nonsingular(rng, n, c.dist, gen);
  return conjecture_record(c, header(c.mode, index, seed, n), d.matrix,
                           d.rejections);
}

// ---- claims ----------------------------------------------------------------

using ClaimCache = std::map<std::pair<std::size_t, std::size_t>, ClaimPolys>;

inline json exps_json(const std::vector<ExponentMatrix> &v) {
  json out = json::array();
  for (const auto &e : v)
    out.push_back(e.exps);
  return out;
}

inline Record symbolic_record(const ClaimPolys &p) {
  Record r;
  Claim1Report c1 = claim1_check(p);
  Claim2Report c2 = claim2_check(p);
  json j;
  j["mode"] = "claims";
  j["symbolic"] = true;
  j["n"] = p.n;
  j["k"] = p.k;
  j["claim1"] = {{"ok", c1.ok()},
                 {"violations", exps_json(c1.violations)},
                 {"alpha_terms", c1.stats.alpha_terms},
                 {"alpha_tangible", c1.stats.alpha_tangible},
                 {"beta_terms", c1.stats.beta_terms},
                 {"beta_tangible", c1.stats.beta_tangible},
                 {"common_terms", c1.stats.common_terms}};
  j["claim2"] = {{"ok", c2.ok()},
                 {"coefficients_in_range", c2.coefficients_in_range},
                 {"missing", exps_json(c2.missing)},
                 {"gamma_terms", p.gamma.size()}};
  r.ok = c1.ok() && c2.ok();
  j["ok"] = r.ok;
  r.body = std::move(j);
  return r;
}

inline Scalar det_power(const Scalar &d, std::size_t e) {
  return e == 0 ? Scalar::one() : pow(d, static_cast<std::int64_t>(e));
}

inline Record claims_record(const TrialConfig &c, const ClaimCache &cache,
                            json j, const Matrix &a, std::size_t rejections) {
  Record r;
  r.rejections = rejections;
  j["matrix"] = a.to_compact();
  j["rejections"] = rejections;
  const DetOptions opt = det_options(c, c.engine == Engine::Both ? Engine::Auto
                                                                 : c.engine);
  const std::size_t n = a.order();
  const Scalar d = det(a, opt);
  const CharPoly chi_a = char_poly(a, opt);
  const CharPoly chi_adj = char_poly(adjoint(a, opt), opt);
  json results = json::array();
  for (std::size_t k : k_values(c, n, 1)) {
    const ClaimPolys &p = cache.at({n, k});
    Claim3Report c3 = claim3_check(p, a, opt);
    DecompositionReport dec = decomposition_checks(p, a, opt);
    const bool alpha_consistent = dec.alpha_value == chi_adj[k];
    const bool beta_consistent =
        dec.beta_value == mul(det_power(d, k - 1), chi_a[n - k]);
    json row;
    row["k"] = k;
    row["alpha"] = dec.alpha_value.to_string();
    row["beta"] = dec.beta_value.to_string();
    row["gamma"] = c3.gamma_value.to_string();
    row["claim3"] = c3.ok();
    row["u_exists"] = dec.u_exists;
    row["s_exists"] = dec.s_exists ? json(*dec.s_exists) : json(nullptr);
    row["surpasses"] = dec.surpasses;
    row["consistent"] = alpha_consistent && beta_consistent;
    r.ok = r.ok && c3.ok() && dec.ok() && alpha_consistent && beta_consistent;
    results.push_back(std::move(row));
  }
  j["results"] = std::move(results);
  j["ok"] = r.ok;
  r.body = std::move(j);
  return r;
}

inline Record claims_trial(const TrialConfig &c, const ClaimCache &cache,
                           std::size_t index, std::uint64_t seed,
                           std::size_t n) {
  Xoshiro256 rng(seed);
  Drawn d = generate_nonsingular(rng, n, c.dist, det_options(c, Engine::Auto));
  return claims_record(c, cache, header(c.mode, index, seed, n), d.matrix,
                       d.rejections);
}

// ---- detcross --------------------------------------------------------------

inline Record detcross_record(const TrialConfig &c, json j, const Matrix &a) {
  Record r;
  j["matrix"] = a.to_compact();
  Scalar brute = det_brute(a, std::max(c.brute_cap, a.order()));
  Scalar assign = det_assignment(a);
  j["brute"] = brute.to_string();
  j["assignment"] = assign.to_string();
  r.ok = brute == assign;
  j["ok"] = r.ok;
  r.body = std::move(j);
  return r;
}

inline Record detcross_trial(const TrialConfig &c, std::size_t index,
                             std::uint64_t seed, std::size_t n) {
  Xoshiro256 rng(seed);
  return detcross_record(c, header(c.mode, index, seed, n),
                         generate_matrix(rng, n, c.dist));
}

// ---- oracle ----------------------------------------------------------------

// Row n-1 replaced by a combination of earlier rows (zero matrix for n = 1).
inline field::RatMatrix make_singular(field::RatMatrix x) {
  const std::size_t n = x.order();
  for (std::size_t j = 0; j < n; ++j)
    x(n - 1, j) = n == 1   ? field::Rat(0)
                  : n == 2 ? x(0, j)
                           : field::Rat(x(0, j) + x(1, j));
  return x;
}

inline Record oracle_record(const TrialConfig &c, json j,
                            const field::RatMatrix &x,
                            std::optional<field::RatMatrix> invertible,
                            std::size_t rejections) {
  using namespace field;
  Record r;
  r.rejections = rejections;
  const std::size_t n = x.order();
  j["matrix"] = x.to_compact();
  j["rejections"] = rejections;

  bool jacobi = true, jacobi_singular = true;
  const RatMatrix singular = make_singular(x);
  for (std::size_t k : k_values(c, n, 1)) {
    jacobi = jacobi && jacobi_check(x, k);
    jacobi_singular = jacobi_singular && jacobi_check(singular, k);
  }
  j["jacobi"] = jacobi;
  j["jacobi_singular"] = jacobi_singular;
  r.ok = jacobi && jacobi_singular;

  const bool adjugate_identity =
      rat_adjugate(x) * x == scaled(RatMatrix::identity(n), rat_det(x));
  j["adjugate_identity"] = adjugate_identity;
  r.ok = r.ok && adjugate_identity;

  if (invertible) {
    if (!(*invertible == x))
      j["invertible_matrix"] = invertible->to_compact();
    bool reciprocal = true, sign = true;
    for (std::size_t k : k_values(c, n, 0)) {
      reciprocal = reciprocal && reciprocal_check(*invertible, k);
      if (n <= 4)
        sign = sign && sign_relation_check(*invertible, k);
    }
    j["reciprocal"] = reciprocal;
    j["sign_relation"] = n <= 4 ? json(sign) : json(nullptr);
    r.ok = r.ok && reciprocal && sign;
  } else {
    j["reciprocal"] = nullptr;
  }
  if (n <= 4) {
    const bool expansion = char_coeffs_by_expansion(x) == char_coeffs(x);
    j["expansion_matches"] = expansion;
    r.ok = r.ok && expansion;
  }
  j["ok"] = r.ok;
  r.body = std::move(j);
  return r;
}

inline Record oracle_trial(const TrialConfig &c, std::size_t index,
                           std::uint64_t seed, std::size_t n) {
  Xoshiro256 rng(seed);
  const std::int64_t b = c.dist.bound;
  field::RatMatrix x = generate_int_matrix(rng, n, b);
  std::optional<field::RatMatrix> inv;
  std::size_t rejections = 0;
  field::RatMatrix y = x;
  while (field::rat_det(y) == 0) {
    if (++rejections >= kRejectionLimit)
      throw RejectionLimit("no invertible integer matrix after " +
                           std::to_string(kRejectionLimit) + " draws");
    y = generate_int_matrix(rng, n, b);
  }
  inv = y;
  return oracle_record(c, header(c.mode, index, seed, n), x, inv, rejections);
}

// ---- output ----------------------------------------------------------------

inline void write_pretty(std::ostream &out, const json &j) {
  bool first = true;
  for (const auto &[key, value] : j.items()) {
    if (key == "results")
      continue;
    if (!first)
      out << ' ';
    first = false;
    out << key << '=' << (value.is_string() ? value.get<std::string>()
                                            : value.dump());
  }
  out << '\n';
  if (j.contains("results"))
    for (const auto &row : j["results"]) {
      out << "   ";
      for (const auto &[key, value] : row.items())
        out << ' ' << key << '='
            << (value.is_string() ? value.get<std::string>() : value.dump());
      out << '\n';
    }
}

inline void write_record(std::ostream &out, const json &j, Format f) {
  if (f == Format::Jsonl)
    out << j.dump() << '\n';
  else
    write_pretty(out, j);
}

} // namespace detail

struct Summary {
  std::size_t trials = 0, failures = 0, rejections = 0;
};

/// Runs every trial on up to `threads` workers and writes records in trial
/// order.
template <class TrialFn>
Summary run_trials(const TrialConfig &c, std::ostream &out, TrialFn &&trial) {
  struct Job {
    std::size_t index, n;
  };
  std::vector<Job> jobs;
  for (std::size_t n = c.n_min; n <= c.n_max; ++n)
    for (std::size_t t = 0; t < c.trials; ++t)
      jobs.push_back({jobs.size(), n});

  std::vector<std::optional<Record>> slots(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};

  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
      std::optional<Record> rec;
      std::exception_ptr err;
      if (!abort) {
        try {
          rec = trial(jobs[i].index, trial_seed(c.seed, jobs[i].index),
                      jobs[i].n);
        } catch (...) {
          err = std::current_exception();
          abort = true;
        }
      }
      std::lock_guard lock(mu);
      slots[i] = std::move(rec);
      errors[i] = err;
      if (!slots[i] && !errors[i])
        errors[i] = std::make_exception_ptr(std::runtime_error("aborted"));
      ready.notify_all();
    }
  };

  const std::size_t workers = std::min(c.threads, jobs.size());
  std::vector<std::jthread> pool;
  if (workers > 1)
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back(worker);

  Summary s;
  std::exception_ptr first_error;
  auto drain = [&](std::size_t i) {
    if (errors[i]) {
      if (!first_error)
        first_error = errors[i];
      return;
    }
    Record &r = *slots[i];
    detail::write_record(out, r.body, c.format);
    ++s.trials;
    s.rejections += r.rejections;
    if (!r.ok)
      ++s.failures;
  };

  if (workers <= 1) {
    worker();
    for (std::size_t i = 0; i < jobs.size(); ++i)
      drain(i);
  } else {
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      {
        std::unique_lock lock(mu);
        ready.wait(lock, [&] { return slots[i] || errors[i]; });
      }
      drain(i);
    }
  }
  pool.clear();
  if (first_error)
    std::rethrow_exception(first_error);
  return s;
}

inline void write_summary(std::ostream &out, const TrialConfig &c,
                          const Summary &s, double elapsed_s) {
  json j;
  j["summary"] = true;
  j["mode"] = to_string(c.mode);
  j["trials"] = s.trials;
  j["failures"] = s.failures;
  j["rejections"] = s.rejections;
  if (c.timing)
    j["elapsed"] = elapsed_s;
  detail::write_record(out, j, c.format);
}

// ---- bench -----------------------------------------------------------------

struct BenchRow {
  std::size_t n;
  Engine engine;
  std::size_t trials;
  double total_ms;
};

inline std::vector<BenchRow> bench(const TrialConfig &c, std::ostream &out) {
  std::vector<BenchRow> rows;
  const ScalarDistribution dense{c.dist.bound, 1.0, 0.0, 0.0};
  std::vector<Engine> engines;
  if (c.engine == Engine::Brute || c.engine == Engine::Assignment)
    engines = {c.engine};
  else
    engines = {Engine::Brute, Engine::Assignment};
  for (std::size_t n = c.n_min; n <= c.n_max; ++n) {
    std::vector<Matrix> mats;
    Xoshiro256 rng(trial_seed(c.seed, n));
    for (std::size_t t = 0; t < c.trials; ++t)
      mats.push_back(generate_matrix(rng, n, dense));
    for (Engine e : engines) {
      std::size_t sink = 0;
      auto start = std::chrono::steady_clock::now();
      for (const auto &m : mats) {
        Scalar d = e == Engine::Brute ? det_brute(m, std::max<std::size_t>(n, 1))
                                      : det_assignment(m);
        sink += d.is_tangible();
      }
      std::chrono::duration<double, std::milli> ms =
          std::chrono::steady_clock::now() - start;
      BenchRow row{n, e, c.trials, ms.count()};
      rows.push_back(row);
      json j;
      j["mode"] = "bench";
      j["n"] = n;
      j["engine"] = to_string(e);
      j["trials"] = c.trials;
      j["total_ms"] = row.total_ms;
      j["per_det_us"] = 1000.0 * row.total_ms / static_cast<double>(c.trials);
      j["tangible"] = sink;
      detail::write_record(out, j, c.format);
    }
  }
  // Crossover: smallest n from which assignment is faster at every larger n.
  std::optional<std::size_t> crossover;
  if (engines.size() == 2) {
    for (std::size_t n = c.n_max + 1; n-- > c.n_min;) {
      const BenchRow &b = rows[2 * (n - c.n_min)];
      const BenchRow &a = rows[2 * (n - c.n_min) + 1];
      if (a.total_ms < b.total_ms)
        crossover = n;
      else
        break;
    }
  }
  json j;
  j["summary"] = true;
  j["mode"] = "bench";
  j["crossover_n"] = crossover ? json(*crossover) : json(nullptr);
  detail::write_record(out, j, c.format);
  return rows;
}

// ---- entry point -------------------------------------------------------------

/// Exit codes: 0 all records ok, 1 verification failure, 2 bad configuration
/// or input. Diagnostics go to `err`.
inline int run(const TrialConfig &c, std::ostream &out, std::ostream &err) {
  auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  };
  try {
    validate(c);
    if (c.mode == Mode::Bench) {
      bench(c, out);
      return 0;
    }

    Summary s;
    if (c.input) {
      std::ifstream in(*c.input);
      if (!in)
        throw ConfigError("cannot open input file '" + *c.input + "'");
      json head = detail::header(c.mode, 0, std::nullopt, 0);
      Record r;
      if (c.mode == Mode::Oracle) {
        field::RatMatrix x = field::RatMatrix::read(in);
        head["n"] = x.order();
        std::optional<field::RatMatrix> inv;
        if (field::rat_det(x) != 0)
          inv = x;
        r = detail::oracle_record(c, head, x, inv, 0);
      } else {
        Matrix a = Matrix::read(in);
        head["n"] = a.order();
        if (c.mode == Mode::Conjecture) {
          r = detail::conjecture_record(c, head, a, 0);
        } else if (c.mode == Mode::DetCross) {
          r = detail::detcross_record(c, head, a);
        } else {
          if (a.order() > c.symbolic_cap)
            throw ConfigError("claims mode limited to n <= " +
                              std::to_string(c.symbolic_cap));
          detail::ClaimCache cache;
          SymbolicOptions sym{c.symbolic_cap};
          for (std::size_t k : detail::k_values(c, a.order(), 1))
            cache.emplace(std::pair{a.order(), k},
                          build_claim_polys(a.order(), k, sym));
          r = detail::claims_record(c, cache, head, a, 0);
        }
      }
      detail::write_record(out, r.body, c.format);
      s.trials = 1;
      s.failures = r.ok ? 0 : 1;
    } else if (c.mode == Mode::Claims) {
      detail::ClaimCache cache;
      SymbolicOptions sym{c.symbolic_cap};
      for (std::size_t n = c.n_min; n <= c.n_max; ++n)
        for (std::size_t k : detail::k_values(c, n, 1)) {
          auto &p = cache.emplace(std::pair{n, k}, build_claim_polys(n, k, sym))
                        .first->second;
          Record r = detail::symbolic_record(p);
          detail::write_record(out, r.body, c.format);
          s.failures += r.ok ? 0 : 1;
        }
      Summary t = run_trials(c, out, [&](std::size_t i, std::uint64_t seed,
                                         std::size_t n) {
        return detail::claims_trial(c, cache, i, seed, n);
      });
      s.trials = t.trials;
      s.rejections = t.rejections;
      s.failures += t.failures;
    } else {
      Summary t = run_trials(
          c, out, [&](std::size_t i, std::uint64_t seed, std::size_t n) {
            switch (c.mode) {
            case Mode::Conjecture:
              return detail::conjecture_trial(c, i, seed, n);
            case Mode::DetCross:
              return detail::detcross_trial(c, i, seed, n);
            default:
              return detail::oracle_trial(c, i, seed, n);
            }
          });
      s = t;
    }
    write_summary(out, c, s, elapsed());
    return s.failures == 0 ? 0 : 1;
  } catch (const ConfigError &e) {
    err << "supertrop: " << e.what() << '\n';
    return 2;
  } catch (const ParseError &e) {
    err << "supertrop: " << e.what() << '\n';
    return 2;
  } catch (const RejectionLimit &e) {
    err << "supertrop: " << e.what() << '\n';
    return 2;
  } catch (const Singular &e) {
    err << "supertrop: " << e.what()
        << " (use --allow-singular to explore singular inputs)\n";
    return 2;
  } catch (const std::exception &e) {
    err << "supertrop: error: " << e.what() << '\n';
    return 1;
  }
}

} // namespace supertrop::harness
