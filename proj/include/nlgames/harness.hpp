#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nlgames/analysis.hpp"
#include "nlgames/games.hpp"
#include "nlgames/quantum.hpp"
#include "nlgames/rational.hpp"

namespace nlgames {

enum class StrategyKind { UniformRandom, QuantumSinglet, QuantumPhiPlus, FixedDeterministic };

enum class EntangledStateKind { Singlet, PhiPlus };

// A player's behavior for one round. Answers may depend only on the current
// question and the current round's resource (the player's private stream and,
// for quantum strategies, the player's half of the shared entangled pair) -
// never on the trial index or on earlier rounds.
struct PlayerStrategy {
  StrategyKind kind;
  std::optional<DeterministicStrategy> fixed;  // FixedDeterministic only
};

PlayerStrategy uniform_random_player();
PlayerStrategy fixed_deterministic_player(DeterministicStrategy strategy);

// Both players of the given entanglement-assisted strategy: each round they
// answer with the +-1 eigenvalue of their sigma_x measurement on a fresh
// referee-provisioned pair, whatever the question.
std::pair<PlayerStrategy, PlayerStrategy> quantum_players(EntangledStateKind state_kind);

// A validated pair of isolated players. The only shared resource two players
// may claim is the one pre-round entangled pair, so two quantum strategies
// naming different states cannot form a pair; rejected at construction.
class StrategyPair {
 public:
  StrategyPair(PlayerStrategy alice, PlayerStrategy bob);

  const PlayerStrategy& alice() const { return alice_; }
  const PlayerStrategy& bob() const { return bob_; }

  // The entangled state the referee must provision each round, if any.
  std::optional<EntangledStateKind> shared_state() const { return shared_state_; }

 private:
  PlayerStrategy alice_;
  PlayerStrategy bob_;
  std::optional<EntangledStateKind> shared_state_;
};

struct EigenCheck {
  std::string observable;
  std::string state;
  double eigenvalue;
  double residual;
  bool pass;
};

struct RunReport {
  GameId game_id;
  int n = 0;  // rounds per trial
  std::int64_t trials = 0;
  std::int64_t wins = 0;
  double win_frequency = 0.0;
  std::optional<ExactProb> exact_reference;  // Model U value, uniform players only
  std::vector<EigenCheck> eigen_checks;
  std::uint64_t seed = 0;
  std::int64_t promise_violations = 0;
};

using TranscriptSink = std::function<void(std::int64_t trial_index, const Transcript&)>;

// Plays `trials` independent transcripts: per round the referee assigns
// questions, provisions a fresh entangled pair when the strategies need one,
// and collects answers from the isolated players; each transcript is checked
// against the promise and scored. Identical inputs give identical reports:
// every random draw comes from a stream derived from (seed, trial, round,
// role), independent of execution order.
RunReport run_game(const GameSpec& spec, const StrategyPair& players, std::int64_t trials,
                   std::uint64_t seed, const TranscriptSink& sink = nullptr);

// The three eigenvalue relations behind the quantum strategies:
// (sigma_x_A + sigma_x_B) annihilates the singlet, sigma_x (x) sigma_x fixes
// phi_plus (eigenvalue +1), and negates the singlet (eigenvalue -1).
// Residual tolerance 1e-12.
std::vector<EigenCheck> verify_eigen_relations();

// Game 3 under phi_plus quantum players, reported both ways: the literal
// conjunctive predicate at the outcome level (its two clauses tracked
// separately) and the operator-level eigenvalue check.
struct Game3DualReport {
  RunReport report;                     // win_frequency scores the verbatim conjunction
  double product_condition_rate = 0.0;  // fraction of trials with a*b = 1
  double inverse_condition_rate = 0.0;  // fraction of trials with b = -a
};

Game3DualReport game3_dual_report(std::int64_t trials, std::uint64_t seed);

std::string to_string(StrategyKind kind);

}  // namespace nlgames
