#pragma once

#include <vector>

#include "nlgames/games.hpp"
#include "nlgames/rational.hpp"

namespace nlgames {

// Memoryless deterministic strategy: one fixed answer per question, the same
// in every round.
struct DeterministicStrategy {
  Answer to_x;
  Answer to_xbar;

  Answer answer_for(Question q) const { return q == Question::X ? to_x : to_xbar; }

  bool operator==(const DeterministicStrategy&) const = default;
};

struct DeterministicStrategyPair {
  DeterministicStrategy alice;
  DeterministicStrategy bob;

  bool operator==(const DeterministicStrategyPair&) const = default;
};

struct StrategyEvaluation {
  DeterministicStrategyPair pair;
  ExactProb win_prob;
};

// Largest round count accepted by the brute-force enumerators (2^(2n) tuples).
inline constexpr int kEnumerationCap = 12;

// Exact C(2n, n): the number of +-1 sequences of length 2n that sum to zero.
BigInt central_binomial(int n);

// Model U: both players answer +1/-1 uniformly and independently.
// Game 1 -> C(2n,n)/4^n, Game 2 -> 1/2, Game 3 -> 0. All exact.
ExactProb uniform_win_prob(const GameSpec& spec);

// Model U value by exhaustive enumeration of all answer tuples (and, for
// Game 3, both question arrangements), scored through the game predicates.
// Independent of the closed forms above. Rejects n > n_cap (cap <= 12).
ExactProb brute_force_uniform_win_prob(const GameSpec& spec, int n_cap = kEnumerationCap);

// uniform_win_prob(game1(n+1)) / uniform_win_prob(game1(n)), exact.
// Equals (2n+1)/(2n+2), so the Game 1 value is strictly decreasing in n.
ExactProb decay_ratio(int n);

// Exact win probability of one coordinated deterministic pair (Game 3's
// fair-coin question assignment averaged exactly).
ExactProb deterministic_pair_win_prob(const GameSpec& spec, const DeterministicStrategyPair& pair);

// Model D: all memoryless deterministic strategy pairs with their exact win
// probabilities (Game 3's fair-coin question assignment averaged exactly).
// Games 1 and 2 range over the answers to X (4 pairs, XBar is never asked);
// Game 3 ranges over both questions (16 pairs).
std::vector<StrategyEvaluation> enumerate_deterministic_strategies(const GameSpec& spec);

// Maximum win probability over all coordinated deterministic strategy pairs.
ExactProb coordinated_deterministic_max(const GameSpec& spec);

}  // namespace nlgames
