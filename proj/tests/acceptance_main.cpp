// Acceptance suite: one line per criterion, nonzero exit if any fail.
// Frozen constants are stated inline; the CLI reproducibility check drives
// the real binary (path injected by the build as NLG_CLI_PATH).

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "nlgames/analysis.hpp"
#include "nlgames/games.hpp"
#include "nlgames/harness.hpp"
#include "nlgames/quantum.hpp"

namespace {

using namespace nlgames;
using Clock = std::chrono::steady_clock;

constexpr std::int64_t kTrials = 100000;
constexpr std::uint64_t kSeed = 20240131;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double band(double p, std::int64_t samples) {
  return 4.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
}

std::string run_cli(const std::string& args, int& exit_code) {
  const std::string cmd = std::string(NLG_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    exit_code = -1;
    return {};
  }
  std::string output;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof(buf), pipe)) > 0) output.append(buf, got);
  const int status = pclose(pipe);
  exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return output;
}

// 1. Closed-form uniform values equal exhaustive enumeration, n = 1..10.
bool exact_values(std::string& detail) {
  const auto start = Clock::now();
  bool ok = uniform_win_prob(game1_spec(1)) == ExactProb(BigInt(1), BigInt(2)) &&
            uniform_win_prob(game1_spec(2)) == ExactProb(BigInt(6), BigInt(16));
  for (int n = 1; n <= 10 && ok; ++n) {
    ok = uniform_win_prob(game1_spec(n)) == brute_force_uniform_win_prob(game1_spec(n));
  }
  const double elapsed = seconds_since(start);
  char buf[128];
  std::snprintf(buf, sizeof(buf), "n = 1..10 enumerated in %.2f s, limit 60", elapsed);
  detail = buf;
  return ok && elapsed < 60.0;
}

// 2. Strict decay with ratio (2n+1)/(2n+2); frozen value at n = 10.
bool decay(std::string& detail) {
  bool ok = true;
  for (int n = 1; n <= 20 && ok; ++n) {
    const ExactProb here = uniform_win_prob(game1_spec(n));
    const ExactProb next = uniform_win_prob(game1_spec(n + 1));
    ok = next < here && decay_ratio(n) == ExactProb(BigInt(2 * n + 1), BigInt(2 * n + 2)) &&
         next == here * decay_ratio(n);
  }
  const ExactProb at10 = uniform_win_prob(game1_spec(10));
  ok = ok && at10 == ExactProb(BigInt(184756), BigInt(1048576));
  detail = "ratio (2n+1)/(2n+2) for n = 1..20; value at n = 10 is " + at10.fraction_string();
  return ok;
}

// 3. The three eigenvalue relations, residual < 1e-12.
bool eigen_relations(std::string& detail) {
  const auto checks = verify_eigen_relations();
  bool ok = checks.size() == 3;
  double worst = 0.0;
  for (const EigenCheck& check : checks) {
    ok = ok && check.pass && check.residual < 1e-12;
    worst = std::max(worst, check.residual);
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf), "3 relations, worst residual %.3g", worst);
  detail = buf;
  return ok;
}

// 4. Quantum strategies win every one of 1e5 trials, under 10 s per game.
bool perfect_quantum(std::string& detail) {
  const auto [s_a, s_b] = quantum_players(EntangledStateKind::Singlet);
  auto start = Clock::now();
  const RunReport g1 = run_game(game1_spec(10), StrategyPair(s_a, s_b), kTrials, kSeed);
  const double t1 = seconds_since(start);

  const auto [p_a, p_b] = quantum_players(EntangledStateKind::PhiPlus);
  start = Clock::now();
  const RunReport g2 = run_game(game2_spec(5), StrategyPair(p_a, p_b), kTrials, kSeed);
  const double t2 = seconds_since(start);

  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "game 1: %lld/%lld in %.2f s; game 2: %lld/%lld in %.2f s, limit 10 each",
                static_cast<long long>(g1.wins), static_cast<long long>(g1.trials), t1,
                static_cast<long long>(g2.wins), static_cast<long long>(g2.trials), t2);
  detail = buf;
  return g1.win_frequency == 1.0 && g2.win_frequency == 1.0 && t1 < 10.0 && t2 < 10.0;
}

// 5. Uniform players land inside the 4-sigma band of the exact value.
bool classical_monte_carlo(std::string& detail) {
  const StrategyPair players(uniform_random_player(), uniform_random_player());
  struct Case {
    GameSpec spec;
    double p;
  };
  const std::vector<Case> cases = {
      {game1_spec(1), 0.5},       {game1_spec(2), 6.0 / 16.0}, {game1_spec(3), 5.0 / 16.0},
      {game2_spec(1), 0.5},       {game2_spec(5), 0.5},
  };
  bool ok = true;
  double worst_sigmas = 0.0;
  for (const Case& c : cases) {
    const RunReport report = run_game(c.spec, players, kTrials, kSeed);
    const double dev = std::abs(report.win_frequency - c.p);
    ok = ok && dev < band(c.p, kTrials);
    worst_sigmas = std::max(worst_sigmas, 4.0 * dev / band(c.p, kTrials));
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf), "5 cases, worst deviation %.2f sigma, limit 4", worst_sigmas);
  detail = buf;
  return ok;
}

// 6. Game 3: zero classical value both ways; dual report splits the clauses.
bool game3(std::string& detail) {
  const ExactProb zero(BigInt(0), BigInt(1));
  bool ok = uniform_win_prob(game3_spec()) == zero &&
            coordinated_deterministic_max(game3_spec()) == zero &&
            enumerate_deterministic_strategies(game3_spec()).size() == 16;

  const Game3DualReport dual = game3_dual_report(10000, kSeed);
  ok = ok && dual.product_condition_rate == 1.0 && dual.inverse_condition_rate == 0.0 &&
       dual.report.wins == 0 && !dual.report.eigen_checks.empty();
  for (const EigenCheck& check : dual.report.eigen_checks) ok = ok && check.pass;

  char buf[128];
  std::snprintf(buf, sizeof(buf),
                "16 pairs at 0; clause rates %.1f / %.1f over 10000 quantum trials",
                dual.product_condition_rate, dual.inverse_condition_rate);
  detail = buf;
  return ok;
}

// 7. x-basis measurement statistics over 1e5 samples per state.
bool measurement_statistics(std::string& detail) {
  Rng rng(kSeed);
  int same_sign = 0, opposite_sign = 0;
  int counts[2][2] = {{0, 0}, {0, 0}};
  for (int i = 0; i < kTrials; ++i) {
    const OutcomePair s = measure_x_pair(singlet_state(), rng).outcome;
    if (s.a == s.b) ++same_sign;
    const OutcomePair p = measure_x_pair(phi_plus_state(), rng).outcome;
    if (p.a != p.b) ++opposite_sign;
    const OutcomePair z = measure_x_pair(computational_basis_state(0), rng).outcome;
    ++counts[z.a > 0][z.b > 0];
  }
  bool ok = same_sign == 0 && opposite_sign == 0;
  double worst = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double dev = std::abs(counts[i][j] / double(kTrials) - 0.25);
      worst = std::max(worst, dev);
      ok = ok && dev < band(0.25, kTrials);
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "singlet same-sign %d, phi_plus opposite-sign %d, |00> worst |f-1/4| = %.4f",
                same_sign, opposite_sign, worst);
  detail = buf;
  return ok;
}

// 8. Identical seeded CLI invocations emit byte-identical JSON.
bool reproducibility(std::string& detail) {
  const std::string run_args = "run --game 1 --rounds 3 --trials 1000 --seed 77 --format json";
  const std::string dual_args = "game3-report --trials 1000 --seed 77 --format json";
  int code1 = -1, code2 = -1, code3 = -1, code4 = -1;
  const std::string a = run_cli(run_args, code1);
  const std::string b = run_cli(run_args, code2);
  const std::string c = run_cli(dual_args, code3);
  const std::string d = run_cli(dual_args, code4);
  const bool ok = code1 == 0 && code2 == 0 && code3 == 0 && code4 == 0 && !a.empty() &&
                  a == b && !c.empty() && c == d;
  detail = "2 invocation pairs, " + std::to_string(a.size() + c.size()) + " bytes compared";
  return ok;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<bool(std::string&)> check;
  };
  const std::vector<Criterion> criteria = {
      {"exact classical values equal exhaustive enumeration", exact_values},
      {"game 1 uniform value decays with the exact ratio", decay},
      {"eigenvalue relations hold to 1e-12", eigen_relations},
      {"quantum strategies win every trial", perfect_quantum},
      {"uniform play stays inside the 4-sigma bands", classical_monte_carlo},
      {"game 3 is classically worthless and the dual report splits it", game3},
      {"x-measurement statistics match the Born probabilities", measurement_statistics},
      {"identical seeded CLI invocations are byte-identical", reproducibility},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].check(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::printf("[%zu/%zu] %s  %s (%s)\n", i + 1, criteria.size(), ok ? "PASS" : "FAIL",
                criteria[i].name, detail.c_str());
  }
  std::printf("acceptance: %zu/%zu criteria pass\n", criteria.size() - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
