#include "nlgames/analysis.hpp"

#include <cstdint>
#include <stdexcept>

namespace nlgames {

namespace {

// Scores one fully specified answer tuple for a SameXBoth game. Bit 2i of
// `mask` is Alice's round-i answer, bit 2i+1 is Bob's (set bit = +1).
bool tuple_wins(const GameSpec& spec, std::uint64_t mask) {
  Transcript t{spec.id, {}};
  t.rounds.reserve(static_cast<std::size_t>(spec.rounds));
  for (int i = 0; i < spec.rounds; ++i) {
    const int a = (mask >> (2 * i)) & 1 ? +1 : -1;
    const int b = (mask >> (2 * i + 1)) & 1 ? +1 : -1;
    t.rounds.push_back(Round{Question::X, Question::X, Answer(a), Answer(b)});
  }
  return evaluate_win(spec, t);
}

bool game3_arrangement_wins(const GameSpec& spec, bool alice_gets_x, Answer a, Answer b) {
  const Question q_a = alice_gets_x ? Question::X : Question::XBar;
  const Question q_b = alice_gets_x ? Question::XBar : Question::X;
  Transcript t{spec.id, {Round{q_a, q_b, a, b}}};
  return evaluate_win(spec, t);
}

const Answer kAnswers[2] = {Answer(+1), Answer(-1)};

}  // namespace

BigInt central_binomial(int n) {
  if (n < 0) throw std::invalid_argument("central_binomial: n must be >= 0");
  BigInt result = 1;
  for (int i = 1; i <= n; ++i) {
    result *= n + i;  // running product stays integral: it is C(n+i, i)
    result /= i;
  }
  return result;
}

ExactProb uniform_win_prob(const GameSpec& spec) {
  switch (spec.id) {
    case GameId::Game1:
      return ExactProb(central_binomial(spec.rounds), BigInt(1) << (2 * spec.rounds));
    case GameId::Game2:
      return ExactProb(1, 2);
    case GameId::Game3:
      return ExactProb::zero();
  }
  throw std::logic_error("unknown game id");
}

ExactProb brute_force_uniform_win_prob(const GameSpec& spec, int n_cap) {
  if (n_cap < 1 || n_cap > kEnumerationCap) {
    throw std::invalid_argument("brute force: cap must be in 1..12");
  }
  if (spec.rounds > n_cap) {
    throw std::invalid_argument("brute force: round count exceeds the enumeration cap");
  }
  if (spec.id == GameId::Game3) {
    // Both question arrangements, all 4 answer pairs each.
    std::uint64_t wins = 0;
    for (int arrangement = 0; arrangement < 2; ++arrangement) {
      for (const Answer& a : kAnswers) {
        for (const Answer& b : kAnswers) {
          if (game3_arrangement_wins(spec, arrangement == 0, a, b)) ++wins;
        }
      }
    }
    return ExactProb(BigInt(wins), BigInt(8));
  }
  const std::uint64_t total = std::uint64_t(1) << (2 * spec.rounds);
  std::uint64_t wins = 0;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (tuple_wins(spec, mask)) ++wins;
  }
  return ExactProb(BigInt(wins), BigInt(total));
}

ExactProb decay_ratio(int n) {
  if (n < 1) throw std::invalid_argument("decay_ratio: n must be >= 1");
  return uniform_win_prob(game1_spec(n + 1)) / uniform_win_prob(game1_spec(n));
}

ExactProb deterministic_pair_win_prob(const GameSpec& spec,
                                      const DeterministicStrategyPair& pair) {
  if (spec.id == GameId::Game3) {
    // Fair referee coin over who gets X, averaged exactly.
    int wins = 0;
    if (game3_arrangement_wins(spec, true, pair.alice.to_x, pair.bob.to_xbar)) ++wins;
    if (game3_arrangement_wins(spec, false, pair.alice.to_xbar, pair.bob.to_x)) ++wins;
    return ExactProb(BigInt(wins), BigInt(2));
  }
  // Memoryless play against the always-X referee repeats one answer pair.
  Transcript t{spec.id, {}};
  for (int i = 0; i < spec.rounds; ++i) {
    t.rounds.push_back(Round{Question::X, Question::X, pair.alice.to_x, pair.bob.to_x});
  }
  return evaluate_win(spec, t) ? ExactProb::one() : ExactProb::zero();
}

std::vector<StrategyEvaluation> enumerate_deterministic_strategies(const GameSpec& spec) {
  std::vector<StrategyEvaluation> table;
  if (spec.id == GameId::Game3) {
    table.reserve(16);
    for (const Answer& ax : kAnswers) {
      for (const Answer& axb : kAnswers) {
        for (const Answer& bx : kAnswers) {
          for (const Answer& bxb : kAnswers) {
            DeterministicStrategyPair pair{{ax, axb}, {bx, bxb}};
            table.push_back({pair, deterministic_pair_win_prob(spec, pair)});
          }
        }
      }
    }
    return table;
  }
  // Games 1 and 2 only ever ask X; the XBar entry is irrelevant and pinned
  // to +1 so each of the 4 distinct behaviors appears once.
  table.reserve(4);
  for (const Answer& ax : kAnswers) {
    for (const Answer& bx : kAnswers) {
      DeterministicStrategyPair pair{{ax, Answer(+1)}, {bx, Answer(+1)}};
      table.push_back({pair, deterministic_pair_win_prob(spec, pair)});
    }
  }
  return table;
}

ExactProb coordinated_deterministic_max(const GameSpec& spec) {
  ExactProb best = ExactProb::zero();
  for (const StrategyEvaluation& eval : enumerate_deterministic_strategies(spec)) {
    if (eval.win_prob > best) best = eval.win_prob;
  }
  return best;
}

}  // namespace nlgames
