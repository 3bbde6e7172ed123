#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nlgames/rng.hpp"

namespace nlgames {

enum class GameId { Game1, Game2, Game3 };

// Question alphabet: X, and its complementary question XBar (Game 3 only).
enum class Question { X, XBar };

// A +1/-1 answer.
class Answer {
 public:
  explicit Answer(int value) : value_(value) {
    if (value != +1 && value != -1) throw std::invalid_argument("Answer must be +1 or -1");
  }

  int value() const { return value_; }
  Answer negated() const { return Answer(-value_); }

  bool operator==(const Answer&) const = default;

 private:
  int value_;
};

struct Round {
  Question q_a;
  Question q_b;
  Answer a;
  Answer b;
};

struct Transcript {
  GameId game_id;
  std::vector<Round> rounds;
};

// How the referee assigns the per-round questions.
enum class QuestionRule {
  SameXBoth,          // both players get X every round
  ComplementaryCoin,  // fair coin gives one player X, the other XBar
};

// A two-party game in predicate form: a question-assignment rule, a promise
// over the assigned questions, and a winning predicate over the transcript.
struct GameSpec {
  GameId id;
  int rounds;  // n
  QuestionRule question_rule;
  std::function<bool(const Transcript&)> promise;
  std::function<bool(const Transcript&)> win;
};

// Raised when a transcript is scored without its promise holding.
class PromiseViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Verdict { Win, Lose, PromiseViolated };

// Game 1: both players are asked X for n rounds; they win iff the answers of
// both players across all rounds sum to zero. No promise.
GameSpec game1_spec(int n);

// Game 2: both players are asked X for n rounds; they win iff the product of
// all answers equals 1. No promise.
GameSpec game2_spec(int n);

// Game 3: a single round; one player is asked X and the other XBar (the
// promise). They win iff the answers are additive inverses of each other AND
// their product equals 1 - a conjunction no answer pair satisfies.
GameSpec game3_spec();

// Questions for one round. Game 3 flips a fair referee coin for who gets X.
std::pair<Question, Question> assign_questions(const GameSpec& spec, int round_index, Rng& rng);

// True iff the transcript's question assignments satisfy the spec's promise.
// The transcript must belong to the spec's game and have exactly n rounds.
bool check_promise(const GameSpec& spec, const Transcript& transcript);

// Scores a promise-respecting transcript. Throws PromiseViolation otherwise;
// a violated promise is not a loss.
bool evaluate_win(const GameSpec& spec, const Transcript& transcript);

// Non-throwing three-way verdict.
Verdict judge(const GameSpec& spec, const Transcript& transcript);

std::string to_string(GameId id);
std::string to_string(Question q);

}  // namespace nlgames
