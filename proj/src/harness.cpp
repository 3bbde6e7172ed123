#include "nlgames/harness.hpp"

#include <cmath>
#include <stdexcept>

namespace nlgames {

namespace {

bool is_quantum(StrategyKind kind) {
  return kind == StrategyKind::QuantumSinglet || kind == StrategyKind::QuantumPhiPlus;
}

EntangledStateKind state_of(StrategyKind kind) {
  return kind == StrategyKind::QuantumSinglet ? EntangledStateKind::Singlet
                                              : EntangledStateKind::PhiPlus;
}

StateVector make_state(EntangledStateKind kind) {
  return kind == EntangledStateKind::Singlet ? singlet_state() : phi_plus_state();
}

// One player's answer for one round. Quantum players answer with their half
// of the measured pair whatever the question (XBar maps to the same sigma_x
// measurement); the others use only their private stream or fixed map.
Answer player_answer(const PlayerStrategy& strategy, Question question,
                     std::optional<int> x_outcome, Rng& own_stream) {
  switch (strategy.kind) {
    case StrategyKind::UniformRandom:
      return Answer(own_stream.next_sign());
    case StrategyKind::QuantumSinglet:
    case StrategyKind::QuantumPhiPlus:
      return Answer(x_outcome.value());
    case StrategyKind::FixedDeterministic:
      return strategy.fixed->answer_for(question);
  }
  throw std::logic_error("unknown strategy kind");
}

double residual_norm(const TwoQubitObservable& obs, const StateVector& state, double eigenvalue) {
  Amplitudes applied = apply(obs, state);
  double sq = 0.0;
  for (int i = 0; i < 4; ++i) sq += std::norm(applied[i] - eigenvalue * state.amps()[i]);
  return std::sqrt(sq);
}

EigenCheck make_eigen_check(const TwoQubitObservable& obs, const StateVector& state,
                            double eigenvalue) {
  const double residual = residual_norm(obs, state, eigenvalue);
  return EigenCheck{obs.label(), state.label(), eigenvalue, residual, residual < 1e-12};
}

}  // namespace

PlayerStrategy uniform_random_player() { return PlayerStrategy{StrategyKind::UniformRandom, {}}; }

PlayerStrategy fixed_deterministic_player(DeterministicStrategy strategy) {
  return PlayerStrategy{StrategyKind::FixedDeterministic, strategy};
}

std::pair<PlayerStrategy, PlayerStrategy> quantum_players(EntangledStateKind state_kind) {
  const StrategyKind kind = state_kind == EntangledStateKind::Singlet
                                ? StrategyKind::QuantumSinglet
                                : StrategyKind::QuantumPhiPlus;
  return {PlayerStrategy{kind, {}}, PlayerStrategy{kind, {}}};
}

StrategyPair::StrategyPair(PlayerStrategy alice, PlayerStrategy bob)
    : alice_(alice), bob_(bob) {
  if (alice_.kind == StrategyKind::FixedDeterministic && !alice_.fixed) {
    throw std::invalid_argument("fixed strategy without an answer map");
  }
  if (bob_.kind == StrategyKind::FixedDeterministic && !bob_.fixed) {
    throw std::invalid_argument("fixed strategy without an answer map");
  }
  if (is_quantum(alice_.kind) && is_quantum(bob_.kind) && alice_.kind != bob_.kind) {
    throw std::invalid_argument(
        "players claim different shared states; the only inter-player resource is the one "
        "pre-round entangled pair");
  }
  if (is_quantum(alice_.kind)) {
    shared_state_ = state_of(alice_.kind);
  } else if (is_quantum(bob_.kind)) {
    shared_state_ = state_of(bob_.kind);
  }
}

RunReport run_game(const GameSpec& spec, const StrategyPair& players, std::int64_t trials,
                   std::uint64_t seed, const TranscriptSink& sink) {
  if (trials < 1) throw std::invalid_argument("run_game: trials must be >= 1");

  RunReport report;
  report.game_id = spec.id;
  report.n = spec.rounds;
  report.trials = trials;
  report.seed = seed;
  if (players.alice().kind == StrategyKind::UniformRandom &&
      players.bob().kind == StrategyKind::UniformRandom) {
    report.exact_reference = uniform_win_prob(spec);
  } else if (players.alice().kind == StrategyKind::FixedDeterministic &&
             players.bob().kind == StrategyKind::FixedDeterministic) {
    report.exact_reference = deterministic_pair_win_prob(
        spec, DeterministicStrategyPair{*players.alice().fixed, *players.bob().fixed});
  }

  const std::optional<EntangledStateKind> shared = players.shared_state();
  for (std::int64_t trial = 0; trial < trials; ++trial) {
    Transcript transcript{spec.id, {}};
    transcript.rounds.reserve(static_cast<std::size_t>(spec.rounds));
    for (int round = 0; round < spec.rounds; ++round) {
      const auto t = static_cast<std::uint64_t>(trial);
      const auto r = static_cast<std::uint64_t>(round);
      Rng referee = derive_rng(seed, t, r, StreamRole::Referee);
      const auto [q_a, q_b] = assign_questions(spec, round, referee);

      std::optional<int> x_a, x_b;
      if (shared) {
        // Fresh pair each round, measured once; each player sees one half.
        Rng pair_stream = derive_rng(seed, t, r, StreamRole::Pair);
        const MeasurementResult m = measure_x_pair(make_state(*shared), pair_stream);
        x_a = m.outcome.a;
        x_b = m.outcome.b;
      }

      Rng alice_stream = derive_rng(seed, t, r, StreamRole::Alice);
      Rng bob_stream = derive_rng(seed, t, r, StreamRole::Bob);
      const Answer a = player_answer(players.alice(), q_a, x_a, alice_stream);
      const Answer b = player_answer(players.bob(), q_b, x_b, bob_stream);
      transcript.rounds.push_back(Round{q_a, q_b, a, b});
    }

    switch (judge(spec, transcript)) {
      case Verdict::Win:
        ++report.wins;
        break;
      case Verdict::Lose:
        break;
      case Verdict::PromiseViolated:
        ++report.promise_violations;
        break;
    }
    if (sink) sink(trial, transcript);
  }

  report.win_frequency =
      static_cast<double>(report.wins) / static_cast<double>(report.trials);
  return report;
}

std::vector<EigenCheck> verify_eigen_relations() {
  const TwoQubitObservable sum = pauli_x_observable(Site::A) + pauli_x_observable(Site::B);
  const TwoQubitObservable joint = pauli_x_observable(Site::Joint);
  return {
      make_eigen_check(sum, singlet_state(), 0.0),
      make_eigen_check(joint, phi_plus_state(), +1.0),
      make_eigen_check(joint, singlet_state(), -1.0),
  };
}

Game3DualReport game3_dual_report(std::int64_t trials, std::uint64_t seed) {
  const GameSpec spec = game3_spec();
  const auto [alice, bob] = quantum_players(EntangledStateKind::PhiPlus);

  std::int64_t product_hits = 0;
  std::int64_t inverse_hits = 0;
  const TranscriptSink tally = [&](std::int64_t, const Transcript& t) {
    const Round& r = t.rounds.front();
    if (r.a.value() * r.b.value() == 1) ++product_hits;
    if (r.b.value() == -r.a.value()) ++inverse_hits;
  };

  Game3DualReport dual;
  dual.report = run_game(spec, StrategyPair(alice, bob), trials, seed, tally);
  const TwoQubitObservable joint = pauli_x_observable(Site::Joint);
  dual.report.eigen_checks.push_back(make_eigen_check(joint, phi_plus_state(), +1.0));
  dual.product_condition_rate = static_cast<double>(product_hits) / static_cast<double>(trials);
  dual.inverse_condition_rate = static_cast<double>(inverse_hits) / static_cast<double>(trials);
  return dual;
}

std::string to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::UniformRandom: return "UNIFORM_RANDOM";
    case StrategyKind::QuantumSinglet: return "QUANTUM_SINGLET";
    case StrategyKind::QuantumPhiPlus: return "QUANTUM_PHI_PLUS";
    case StrategyKind::FixedDeterministic: return "FIXED_DETERMINISTIC";
  }
  return "?";
}

}  // namespace nlgames
