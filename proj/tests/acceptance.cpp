// Acceptance suite: one PASS/FAIL line per criterion. Criteria 1-7 gate the
// exit status; criterion 8 (performance) is reported only.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "supertrop/claims.hpp"
#include "supertrop/field_oracle.hpp"
#include "supertrop/harness.hpp"
#include "supertrop/random.hpp"

using namespace supertrop;
using namespace supertrop::harness;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Run {
  int code;
  std::string out;
  json summary;
};

Run run_mode(const TrialConfig &c) {
  std::ostringstream out, err;
  int code = run(c, out, err);
  std::string text = out.str();
  json summary;
  auto last = text.rfind('\n', text.size() - 2);
  if (!text.empty())
    summary = json::parse(text.substr(last == std::string::npos ? 0 : last + 1));
  if (!err.str().empty())
    std::cerr << err.str();
  return {code, std::move(text), std::move(summary)};
}

TrialConfig config(Mode mode, std::size_t lo, std::size_t hi,
                   std::size_t trials) {
  TrialConfig c;
  c.mode = mode;
  c.n_min = lo;
  c.n_max = hi;
  c.trials = trials;
  return c;
}

std::string counts(const json &s) {
  return "trials=" + s["trials"].dump() + " failures=" + s["failures"].dump();
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t)
      .count();
}

// Conjecture output is kept for the reproducibility check.
std::string g_conjecture_jsonl;

Outcome main_theorem() {
  auto c = config(Mode::Conjecture, 1, 6, 1000);
  auto start = std::chrono::steady_clock::now();
  Run r = run_mode(c);
  double secs = seconds_since(start);
  g_conjecture_jsonl = r.out;
  char buf[64];
  std::snprintf(buf, sizeof buf, " single-threaded %.1fs", secs);
  bool fast = secs < 120.0;
  return {r.code == 0 && r.summary["failures"] == 0 && fast,
          counts(r.summary) + buf + (fast ? "" : " (over 120s)")};
}

Outcome engine_equivalence() {
  auto c = config(Mode::DetCross, 1, 7, 500);
  c.engine = Engine::Both;
  c.threads = std::max(1u, std::thread::hardware_concurrency());
  Run r = run_mode(c);
  return {r.code == 0 && r.summary["failures"] == 0, counts(r.summary)};
}

Outcome claims_suite() {
  std::size_t symbolic = 0, numeric = 0, bad = 0;
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t k = 1; k <= n; ++k) {
      ClaimPolys p = build_claim_polys(n, k);
      bad += !claim1_check(p).ok();
      bad += !claim2_check(p).ok();
      symbolic += 2;
    }
  Xoshiro256 rng(trial_seed(42, 3));
  for (std::size_t n = 2; n <= 3; ++n)
    for (std::size_t k = 1; k <= n; ++k) {
      ClaimPolys p = build_claim_polys(n, k);
      for (int t = 0; t < 200; ++t) {
        Matrix a = generate_nonsingular(rng, n, {}).matrix;
        bad += !claim3_check(p, a).ok();
        bad += !decomposition_checks(p, a).ok();
        numeric += 2;
      }
    }
  return {bad == 0, "symbolic=" + std::to_string(symbolic) +
                        " numeric=" + std::to_string(numeric) +
                        " violations=" + std::to_string(bad)};
}

Outcome symbolic_numeric() {
  Xoshiro256 rng(trial_seed(42, 4));
  std::size_t checks = 0, bad = 0;
  for (std::size_t n = 2; n <= 3; ++n) {
    std::vector<ClaimPolys> polys;
    for (std::size_t k = 1; k <= n; ++k)
      polys.push_back(build_claim_polys(n, k));
    for (int t = 0; t < 100; ++t) {
      Matrix a = generate_matrix(rng, n, {});
      Scalar d = det(a);
      CharPoly chi_a = char_poly(a), chi_adj = char_poly(adjoint(a));
      for (std::size_t k = 1; k <= n; ++k) {
        Scalar power = k == 1 ? Scalar::one()
                              : pow(d, static_cast<std::int64_t>(k - 1));
        bad += evaluate(polys[k - 1].alpha, a) != chi_adj[k];
        bad += evaluate(polys[k - 1].beta, a) != mul(power, chi_a[n - k]);
        checks += 2;
      }
    }
  }
  return {bad == 0, "checks=" + std::to_string(checks) +
                        " mismatches=" + std::to_string(bad)};
}

Outcome field_oracle() {
  auto c = config(Mode::Oracle, 2, 6, 200);
  c.threads = std::max(1u, std::thread::hardware_concurrency());
  Run r = run_mode(c);

  // Fixed adversarial singular inputs on top of the random ones.
  using field::RatMatrix;
  const std::vector<RatMatrix> singular{
      RatMatrix(4),
      RatMatrix{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}},
      RatMatrix{{1, 1, 1, 1}, {1, 1, 1, 1}, {2, 0, 1, 3}, {0, 0, 0, 5}},
      RatMatrix{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}},
  };
  std::size_t bad = 0;
  for (const auto &x : singular)
    for (std::size_t k = 1; k <= x.order(); ++k)
      bad += !field::jacobi_check(x, k);
  return {r.code == 0 && r.summary["failures"] == 0 && bad == 0,
          counts(r.summary) + " adversarial_failures=" + std::to_string(bad)};
}

std::vector<Scalar> grid() {
  std::vector<Scalar> g{Scalar::eps()};
  for (int v = -2; v <= 2; ++v) {
    g.push_back(Scalar::tangible(v));
    g.push_back(Scalar::ghost(v));
  }
  return g;
}

Outcome semiring_laws() {
  Xoshiro256 rng(trial_seed(42, 6));
  const ScalarDistribution dist{5, 0.45, 0.45, 0.1};
  const Scalar zero = Scalar::eps(), one = Scalar::one();
  std::size_t bad = 0;
  for (int t = 0; t < 10000; ++t) {
    Scalar a = generate_scalar(rng, dist), b = generate_scalar(rng, dist),
           c = generate_scalar(rng, dist);
    bool ok = add(a, b) == add(b, a) && mul(a, b) == mul(b, a) &&
              add(add(a, b), c) == add(a, add(b, c)) &&
              mul(mul(a, b), c) == mul(a, mul(b, c)) &&
              mul(a, add(b, c)) == add(mul(a, b), mul(a, c)) &&
              add(a, zero) == a && mul(a, zero) == zero && mul(a, one) == a;
    if (!a.is_eps()) {
      ok = ok && add(a, a) == Scalar::ghost(a.value());
      if (!b.is_eps())
        ok = ok && nu(mul(a, b)) == a.value() + b.value() &&
             nu(add(a, b)) == std::max(a.value(), b.value());
    }
    bad += !ok;
  }

  std::size_t grid_bad = 0;
  auto g = grid();
  for (const auto &c : g)
    for (const auto &d : g) {
      bool exists = false;
      for (const auto &w : g)
        exists = exists || (!w.is_tangible() && add(d, w) == c);
      grid_bad += ghost_surpasses(c, d) != exists;
    }
  return {bad == 0 && grid_bad == 0,
          "triples=10000 law_failures=" + std::to_string(bad) +
              " grid_pairs=" + std::to_string(g.size() * g.size()) +
              " grid_mismatches=" + std::to_string(grid_bad)};
}

Outcome reproducibility() {
  auto c = config(Mode::Conjecture, 1, 6, 1000);
  c.threads = std::max(2u, std::thread::hardware_concurrency());
  Run again = run_mode(c);
  bool same = !g_conjecture_jsonl.empty() && again.out == g_conjecture_jsonl;
  return {same, std::to_string(again.out.size()) + " bytes, threads 1 vs " +
                    std::to_string(c.threads) +
                    (same ? ", identical" : ", DIFFERENT")};
}

Outcome performance() {
  auto c = config(Mode::Bench, 4, 10, 20);
  c.engine = Engine::Both;
  std::ostringstream out;
  auto rows = bench(c, out);
  bool faster = true;
  std::ostringstream table;
  for (std::size_t i = 0; i + 1 < rows.size(); i += 2) {
    const auto &b = rows[i], &a = rows[i + 1];
    char buf[96];
    std::snprintf(buf, sizeof buf, "    n=%zu brute %.2fms assignment %.2fms\n",
                  b.n, b.total_ms, a.total_ms);
    table << buf;
    if (b.n >= 8 && a.total_ms >= b.total_ms)
      faster = false;
  }
  std::string text = out.str();
  json summary = json::parse(text.substr(text.rfind('\n', text.size() - 2) + 1));
  std::cout << table.str();
  return {faster, "crossover_n=" + summary["crossover_n"].dump() +
                      " (non-gating)"};
}

} // namespace

int main() {
  struct Criterion {
    int id;
    const char *name;
    bool gating;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria{
      {1, "main theorem suite", true, main_theorem},
      {2, "determinant engine equivalence", true, engine_equivalence},
      {3, "claims suite", true, claims_suite},
      {4, "symbolic/numeric consistency", true, symbolic_numeric},
      {5, "field oracle", true, field_oracle},
      {6, "semiring laws and surpassing grid", true, semiring_laws},
      {7, "reproducibility", true, reproducibility},
      {8, "performance", false, performance},
  };

  bool all = true;
  for (const auto &c : criteria) {
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name
              << ": " << o.detail << std::endl;
    if (c.gating && !o.pass)
      all = false;
  }
  std::cout << (all ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << std::endl;
  return all ? 0 : 1;
}
