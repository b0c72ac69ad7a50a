// supertrop: batch verification of supertropical adjoint/characteristic
// polynomial identities. See README.md for modes and output format.

#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "supertrop/harness.hpp"

namespace {

using namespace supertrop::harness;

bool parse_range(const std::string &text, std::size_t &lo, std::size_t &hi) {
  auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      lo = hi = std::stoul(text, &used);
      return used == text.size();
    }
    std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    lo = std::stoul(a, &used);
    if (used != a.size())
      return false;
    hi = std::stoul(b, &used);
    return used == b.size();
  } catch (const std::exception &) {
    return false;
  }
}

bool parse_probs(const std::string &text, supertrop::ScalarDistribution &d) {
  std::vector<double> p;
  std::stringstream ss(text);
  std::string item;
  try {
    while (std::getline(ss, item, ',')) {
      std::size_t used = 0;
      p.push_back(std::stod(item, &used));
      if (used != item.size())
        return false;
    }
  } catch (const std::exception &) {
    return false;
  }
  if (p.size() != 3)
    return false;
  d.p_tangible = p[0];
  d.p_ghost = p[1];
  d.p_eps = p[2];
  return true;
}

std::size_t thread_budget() {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char *env = std::getenv("SUPERTROP_THREADS")) {
    try {
      n = std::min<std::size_t>(n, std::max(1ul, std::stoul(env)));
    } catch (const std::exception &) {
      std::cerr << "supertrop: ignoring invalid SUPERTROP_THREADS='" << env
                << "'\n";
    }
  }
  return n;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Supertropical adjoint characteristic-polynomial verifier"};

  TrialConfig cfg;
  std::string n_text = "1..4", probs_text, format_text = "jsonl";
  std::size_t k = 0;
  std::string input, mode_text, engine_text;

  const std::map<std::string, Mode> modes{{"conjecture", Mode::Conjecture},
                                          {"claims", Mode::Claims},
                                          {"detcross", Mode::DetCross},
                                          {"oracle", Mode::Oracle},
                                          {"bench", Mode::Bench}};
  const std::map<std::string, Engine> engines{
      {"auto", Engine::Auto},
      {"brute", Engine::Brute},
      {"assignment", Engine::Assignment},
      {"both", Engine::Both}};

  app.add_option("--mode", mode_text,
                 "conjecture | claims | detcross | oracle | bench")
      ->check(CLI::IsMember(modes))
      ->required();
  app.add_option("--n", n_text, "matrix order, single value or range a..b")
      ->capture_default_str();
  auto *k_opt = app.add_option("--k", k, "restrict checks to one k");
  app.add_option("--trials", cfg.trials, "trials per order")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "master seed")->capture_default_str();
  app.add_option("--bound", cfg.dist.bound,
                 "group values drawn from integers in [-B, B]")
      ->capture_default_str();
  app.add_option("--probs", probs_text,
                 "entry probabilities tangible,ghost,eps (default 0.8,0.15,0.05)");
  auto *engine_opt =
      app.add_option("--engine", engine_text, "auto | brute | assignment | both")
          ->check(CLI::IsMember(engines));
  app.add_flag("--allow-singular", cfg.allow_singular,
               "exploratory: accept singular matrices in conjecture mode");
  app.add_option("--input", input,
                 "run the suite on one matrix file instead of random draws");
  app.add_option("--format", format_text, "jsonl | pretty")
      ->check(CLI::IsMember({"jsonl", "pretty"}))
      ->capture_default_str();
  app.add_flag("--timing", cfg.timing, "include elapsed seconds in the summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e, std::cerr, std::cerr);
    return 2;
  }

  if (!parse_range(n_text, cfg.n_min, cfg.n_max)) {
    std::cerr << "supertrop: bad --n '" << n_text << "'\n";
    return 2;
  }
  if (!probs_text.empty() && !parse_probs(probs_text, cfg.dist)) {
    std::cerr << "supertrop: bad --probs '" << probs_text << "'\n";
    return 2;
  }
  cfg.mode = modes.at(mode_text);
  if (engine_opt->count())
    cfg.engine = engines.at(engine_text);
  if (k_opt->count())
    cfg.k = k;
  if (!input.empty())
    cfg.input = input;
  if (engine_opt->count() == 0 &&
      (cfg.mode == Mode::DetCross || cfg.mode == Mode::Bench))
    cfg.engine = Engine::Both;
  cfg.format = format_text == "pretty" ? Format::Pretty : Format::Jsonl;
  cfg.threads = thread_budget();

  std::ios::sync_with_stdio(false);
  int code = run(cfg, std::cout, std::cerr);
  std::cout.flush();
  return code;
}
