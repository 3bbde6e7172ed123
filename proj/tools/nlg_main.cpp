// nlg: two-party nonlocal game lab.
//
// Subcommands:
//   exact         exact classical value tables with brute-force cross-checks
//   run           seeded Monte-Carlo runs against a chosen strategy
//   enumerate     exhaustive deterministic strategy table
//   verify        the eigenvalue relations behind the quantum strategies
//   game3-report  Game 3 dual report (outcome-level vs operator-level)
//
// Exit codes: 0 success, 1 usage error, 2 contract/verification failure.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "nlgames/analysis.hpp"
#include "nlgames/games.hpp"
#include "nlgames/harness.hpp"
#include "nlgames/serialize.hpp"

namespace {

using namespace nlgames;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitContract = 2;

struct CliConfig {
  int game = 1;
  int rounds = 1;
  std::int64_t trials = 10000;
  std::string strategy = "uniform";
  std::uint64_t seed = 0;  // fixed default, never taken from the environment
  std::string format = "text";
  std::string output;      // empty = stdout
  std::string transcripts; // run only: optional transcript CSV path
  bool rounds_given = false;
};

GameSpec spec_for(const CliConfig& cfg) {
  switch (cfg.game) {
    case 1: return game1_spec(cfg.rounds);
    case 2: return game2_spec(cfg.rounds);
    case 3: return game3_spec();
  }
  throw CLI::ValidationError("--game", "game must be 1, 2, or 3");
}

// game=3 pins rounds to 1; an explicit conflicting --rounds is a usage error.
void resolve_rounds(CliConfig& cfg) {
  if (cfg.game == 3) {
    if (cfg.rounds_given && cfg.rounds != 1) {
      throw CLI::ValidationError("--rounds", "game 3 is single-round");
    }
    cfg.rounds = 1;
  }
}

StrategyPair resolve_players(const CliConfig& cfg, const GameSpec& spec) {
  if (cfg.strategy == "uniform") {
    return StrategyPair(uniform_random_player(), uniform_random_player());
  }
  if (cfg.strategy == "quantum") {
    // Singlet for Game 1, phi_plus for Games 2 and 3.
    const EntangledStateKind state =
        cfg.game == 1 ? EntangledStateKind::Singlet : EntangledStateKind::PhiPlus;
    const auto [alice, bob] = quantum_players(state);
    return StrategyPair(alice, bob);
  }
  if (cfg.strategy == "best-deterministic") {
    const auto table = enumerate_deterministic_strategies(spec);
    const StrategyEvaluation* best = &table.front();
    for (const StrategyEvaluation& eval : table) {
      if (eval.win_prob > best->win_prob) best = &eval;
    }
    return StrategyPair(fixed_deterministic_player(best->pair.alice),
                        fixed_deterministic_player(best->pair.bob));
  }
  throw CLI::ValidationError("--strategy", "unknown strategy: " + cfg.strategy);
}

void emit(const CliConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + cfg.output);
  out << text;
}

// ---------------------------------------------------------------- exact ---

struct ExactRow {
  int n;
  ExactProb closed_form;
  std::optional<ExactProb> brute_force;  // empty above the enumeration cap
};

int cmd_exact(const CliConfig& cfg) {
  std::vector<ExactRow> rows;
  bool cap_exceeded = false;
  const int max_n = cfg.game == 3 ? 1 : cfg.rounds;
  for (int n = 1; n <= max_n; ++n) {
    const GameSpec spec = cfg.game == 1   ? game1_spec(n)
                          : cfg.game == 2 ? game2_spec(n)
                                          : game3_spec();
    ExactRow row{n, uniform_win_prob(spec), std::nullopt};
    if (n <= kEnumerationCap) {
      row.brute_force = brute_force_uniform_win_prob(spec);
    } else {
      cap_exceeded = true;
    }
    rows.push_back(std::move(row));
  }
  if (cap_exceeded) {
    std::cerr << "warning: brute-force cross-check omitted for n > " << kEnumerationCap << "\n";
  }

  std::ostringstream out;
  if (cfg.format == "json") {
    Json table = Json::array();
    for (const ExactRow& row : rows) {
      Json j{{"n", row.n},
             {"exact", to_json(row.closed_form)},
             {"decimal", row.closed_form.decimal_string()},
             {"brute_force", row.brute_force ? to_json(*row.brute_force) : Json(nullptr)},
             {"match", row.brute_force ? Json(row.closed_form == *row.brute_force)
                                       : Json(nullptr)}};
      table.push_back(std::move(j));
    }
    out << table.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "n,exact,decimal,brute_force,match\n";
    for (const ExactRow& row : rows) {
      out << row.n << ',' << row.closed_form.fraction_string() << ','
          << row.closed_form.decimal_string() << ',';
      if (row.brute_force) {
        out << row.brute_force->fraction_string() << ','
            << (row.closed_form == *row.brute_force ? "yes" : "NO");
      } else {
        out << ",skipped";
      }
      out << "\n";
    }
  } else {
    out << "game " << cfg.game << ", Model U (uniform random answers)\n";
    out << std::left << std::setw(4) << "n" << std::setw(18) << "exact" << std::setw(18)
        << "decimal" << std::setw(18) << "brute_force" << "match\n";
    for (const ExactRow& row : rows) {
      out << std::left << std::setw(4) << row.n << std::setw(18)
          << row.closed_form.fraction_string() << std::setw(18)
          << row.closed_form.decimal_string();
      if (row.brute_force) {
        out << std::setw(18) << row.brute_force->fraction_string()
            << (row.closed_form == *row.brute_force ? "yes" : "NO");
      } else {
        out << std::setw(18) << "-" << "skipped (n > cap)";
      }
      out << "\n";
    }
  }
  emit(cfg, out.str());

  for (const ExactRow& row : rows) {
    if (row.brute_force && !(row.closed_form == *row.brute_force)) return kExitContract;
  }
  return kExitOk;
}

// ------------------------------------------------------------------ run ---

int cmd_run(const CliConfig& cfg) {
  const GameSpec spec = spec_for(cfg);
  const StrategyPair players = resolve_players(cfg, spec);

  std::ofstream transcript_file;
  TranscriptSink sink;
  if (!cfg.transcripts.empty()) {
    transcript_file.open(cfg.transcripts, std::ios::binary);
    if (!transcript_file) {
      throw std::runtime_error("cannot open transcript file: " + cfg.transcripts);
    }
    transcript_file << "trial," << transcript_csv_header() << "\n";
    sink = [&](std::int64_t trial, const Transcript& t) {
      for (std::size_t i = 0; i < t.rounds.size(); ++i) {
        const Round& r = t.rounds[i];
        transcript_file << trial << ',' << i << ',' << to_string(r.q_a) << ','
                        << to_string(r.q_b) << ',' << r.a.value() << ',' << r.b.value() << "\n";
      }
    };
  }

  const RunReport report = run_game(spec, players, cfg.trials, cfg.seed, sink);

  std::ostringstream out;
  if (cfg.format == "json") {
    out << to_json(report).dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << report_csv_header() << "\n" << report_csv_line(report) << "\n";
  } else {
    out << "game:               " << to_string(report.game_id) << "\n"
        << "rounds per trial:   " << report.n << "\n"
        << "strategy:           " << cfg.strategy << "\n"
        << "trials:             " << report.trials << "\n"
        << "wins:               " << report.wins << "\n"
        << "win frequency:      " << format_double(report.win_frequency) << "\n";
    if (report.exact_reference) {
      out << "exact reference:    " << report.exact_reference->fraction_string() << " = "
          << report.exact_reference->decimal_string() << "\n";
    }
    out << "promise violations: " << report.promise_violations << "\n"
        << "seed:               " << report.seed << "\n";
  }
  emit(cfg, out.str());

  return report.promise_violations == 0 ? kExitOk : kExitContract;
}

// ------------------------------------------------------------- enumerate ---

int cmd_enumerate(const CliConfig& cfg) {
  const GameSpec spec = spec_for(cfg);
  const auto table = enumerate_deterministic_strategies(spec);
  const ExactProb best = coordinated_deterministic_max(spec);
  const bool both_questions = spec.id == GameId::Game3;

  std::ostringstream out;
  if (cfg.format == "json") {
    Json rows = Json::array();
    for (const StrategyEvaluation& eval : table) {
      Json j;
      j["alice_x"] = eval.pair.alice.to_x.value();
      if (both_questions) j["alice_xbar"] = eval.pair.alice.to_xbar.value();
      j["bob_x"] = eval.pair.bob.to_x.value();
      if (both_questions) j["bob_xbar"] = eval.pair.bob.to_xbar.value();
      j["win_prob"] = to_json(eval.win_prob);
      j["is_max"] = eval.win_prob == best;
      rows.push_back(std::move(j));
    }
    out << rows.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << (both_questions ? "alice_x,alice_xbar,bob_x,bob_xbar,win_prob,is_max"
                           : "alice_x,bob_x,win_prob,is_max")
        << "\n";
    for (const StrategyEvaluation& eval : table) {
      out << std::showpos << eval.pair.alice.to_x.value();
      if (both_questions) out << ',' << eval.pair.alice.to_xbar.value();
      out << ',' << eval.pair.bob.to_x.value();
      if (both_questions) out << ',' << eval.pair.bob.to_xbar.value();
      out << std::noshowpos << ',' << eval.win_prob.fraction_string() << ','
          << (eval.win_prob == best ? "yes" : "no") << "\n";
    }
  } else {
    out << "deterministic strategy pairs, game " << cfg.game << " (n = " << spec.rounds
        << "), exact win probability\n";
    for (const StrategyEvaluation& eval : table) {
      out << std::showpos << "  alice: X->" << eval.pair.alice.to_x.value();
      if (both_questions) out << " XBAR->" << eval.pair.alice.to_xbar.value();
      out << "  bob: X->" << eval.pair.bob.to_x.value();
      if (both_questions) out << " XBAR->" << eval.pair.bob.to_xbar.value();
      out << std::noshowpos << "  win " << eval.win_prob.fraction_string()
          << (eval.win_prob == best ? "   <- max" : "") << "\n";
    }
    out << "maximum: " << best.fraction_string() << "\n";
  }
  emit(cfg, out.str());
  return kExitOk;
}

// ---------------------------------------------------------------- verify ---

int cmd_verify(const CliConfig& cfg) {
  const auto checks = verify_eigen_relations();

  std::ostringstream out;
  if (cfg.format == "json") {
    Json rows = Json::array();
    for (const EigenCheck& check : checks) rows.push_back(to_json(check));
    out << rows.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "observable,state,eigenvalue,residual,pass\n";
    for (const EigenCheck& check : checks) {
      out << '"' << check.observable << "\"," << check.state << ','
          << format_double(check.eigenvalue) << ',' << format_double(check.residual) << ','
          << (check.pass ? "yes" : "no") << "\n";
    }
  } else {
    for (const EigenCheck& check : checks) {
      out << (check.pass ? "PASS" : "FAIL") << "  " << check.observable << " on "
          << check.state << ": eigenvalue " << format_double(check.eigenvalue) << ", residual "
          << format_double(check.residual) << "\n";
    }
  }
  emit(cfg, out.str());

  for (const EigenCheck& check : checks) {
    if (!check.pass) return kExitContract;
  }
  return kExitOk;
}

// ---------------------------------------------------------- game3-report ---

int cmd_game3_report(const CliConfig& cfg) {
  const Game3DualReport dual = game3_dual_report(cfg.trials, cfg.seed);

  std::ostringstream out;
  if (cfg.format == "json") {
    out << to_json(dual).dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << report_csv_header() << ",product_condition_rate,inverse_condition_rate\n"
        << report_csv_line(dual.report) << ',' << format_double(dual.product_condition_rate)
        << ',' << format_double(dual.inverse_condition_rate) << "\n";
  } else {
    out << "game 3, phi_plus quantum players, " << dual.report.trials << " trials\n"
        << "verbatim winning condition (b = -a AND a*b = 1):\n"
        << "  win frequency:            " << format_double(dual.report.win_frequency) << "\n"
        << "  product clause a*b = 1:   rate " << format_double(dual.product_condition_rate)
        << "\n"
        << "  inverse clause b = -a:    rate " << format_double(dual.inverse_condition_rate)
        << "\n"
        << "operator-level check:\n";
    for (const EigenCheck& check : dual.report.eigen_checks) {
      out << "  " << (check.pass ? "PASS" : "FAIL") << "  " << check.observable << " on "
          << check.state << ": eigenvalue " << format_double(check.eigenvalue) << ", residual "
          << format_double(check.residual) << "\n";
    }
    out << "seed: " << dual.report.seed << "\n";
  }
  emit(cfg, out.str());

  for (const EigenCheck& check : dual.report.eigen_checks) {
    if (!check.pass) return kExitContract;
  }
  return dual.report.promise_violations == 0 ? kExitOk : kExitContract;
}

void add_common_flags(CLI::App* cmd, CliConfig& cfg, bool with_game, bool with_strategy) {
  if (with_game) {
    cmd->add_option("--game", cfg.game, "Game number (1, 2, or 3)")
        ->check(CLI::IsMember({1, 2, 3}));
  }
  cmd->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  cmd->add_option("--output", cfg.output, "Write output to this file instead of stdout");
  if (with_strategy) {
    cmd->add_option("--strategy", cfg.strategy,
                    "Player strategy: uniform, quantum, or best-deterministic")
        ->check(CLI::IsMember({"uniform", "quantum", "best-deterministic"}))
        ->capture_default_str();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-party nonlocal game lab: exact classical values, entangled quantum\n"
               "strategies, and a seeded Monte-Carlo referee."};
  app.require_subcommand(1);

  CliConfig cfg;

  CLI::App* exact = app.add_subcommand(
      "exact", "Exact Model U win probabilities for n = 1..rounds, cross-checked by "
               "brute-force enumeration (CSV columns: n,exact,decimal,brute_force,match)");
  add_common_flags(exact, cfg, true, false);
  CLI::Option* exact_rounds =
      exact->add_option("--rounds", cfg.rounds, "Largest round count n in the table")
          ->check(CLI::PositiveNumber);

  CLI::App* run = app.add_subcommand(
      "run", "Play seeded Monte-Carlo trials and report the outcome (CSV columns: " +
                 report_csv_header() + ")");
  add_common_flags(run, cfg, true, true);
  CLI::Option* run_rounds = run->add_option("--rounds", cfg.rounds, "Rounds per trial")
                                ->check(CLI::PositiveNumber);
  run->add_option("--trials", cfg.trials, "Number of independent trials")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  run->add_option("--seed", cfg.seed, "Master 64-bit seed")->capture_default_str();
  run->add_option("--transcripts", cfg.transcripts,
                  "Stream per-round transcripts to this CSV file (columns: trial," +
                      transcript_csv_header() + ")");

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "Exact win probability of every coordinated deterministic strategy pair");
  add_common_flags(enumerate, cfg, true, false);
  CLI::Option* enum_rounds = enumerate->add_option("--rounds", cfg.rounds, "Rounds per trial")
                                 ->check(CLI::PositiveNumber);

  CLI::App* verify =
      app.add_subcommand("verify", "Verify the eigenvalue relations behind the quantum "
                                   "strategies (CSV columns: observable,state,eigenvalue,"
                                   "residual,pass)");
  add_common_flags(verify, cfg, false, false);

  CLI::App* game3_report = app.add_subcommand(
      "game3-report", "Game 3 dual report: verbatim predicate clause rates plus the "
                      "operator-level eigenvalue check");
  add_common_flags(game3_report, cfg, false, false);
  game3_report->add_option("--trials", cfg.trials, "Number of independent trials")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  game3_report->add_option("--seed", cfg.seed, "Master 64-bit seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(exact)) {
      cfg.rounds_given = exact_rounds->count() > 0;
      resolve_rounds(cfg);
      return cmd_exact(cfg);
    }
    if (app.got_subcommand(run)) {
      cfg.rounds_given = run_rounds->count() > 0;
      resolve_rounds(cfg);
      return cmd_run(cfg);
    }
    if (app.got_subcommand(enumerate)) {
      cfg.rounds_given = enum_rounds->count() > 0;
      resolve_rounds(cfg);
      return cmd_enumerate(cfg);
    }
    if (app.got_subcommand(verify)) return cmd_verify(cfg);
    if (app.got_subcommand(game3_report)) return cmd_game3_report(cfg);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitContract;
  }
  return kExitUsage;
}
