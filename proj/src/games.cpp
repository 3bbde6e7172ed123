#include "nlgames/games.hpp"

namespace nlgames {

namespace {

bool always_true(const Transcript&) { return true; }

bool sum_is_zero(const Transcript& t) {
  long long sum = 0;
  for (const Round& r : t.rounds) sum += r.a.value() + r.b.value();
  return sum == 0;
}

bool product_is_one(const Transcript& t) {
  int product = 1;
  for (const Round& r : t.rounds) product *= r.a.value() * r.b.value();
  return product == 1;
}

bool complementary_questions(const Transcript& t) {
  for (const Round& r : t.rounds) {
    if (r.q_a == r.q_b) return false;
  }
  return true;
}

// Answers are additive inverses AND their product is 1. Encoded verbatim;
// the two clauses exclude each other, so this predicate is identically false.
bool inverse_and_product_one(const Transcript& t) {
  const Round& r = t.rounds.front();
  return r.b.value() == -r.a.value() && r.a.value() * r.b.value() == 1;
}

void require_matching(const GameSpec& spec, const Transcript& transcript) {
  if (transcript.game_id != spec.id) {
    throw std::invalid_argument("transcript game_id does not match the spec");
  }
  if (static_cast<int>(transcript.rounds.size()) != spec.rounds) {
    throw std::invalid_argument("transcript round count does not match the spec");
  }
  if (spec.question_rule == QuestionRule::SameXBoth) {
    // XBar is only ever asked in Game 3.
    for (const Round& r : transcript.rounds) {
      if (r.q_a != Question::X || r.q_b != Question::X) {
        throw std::invalid_argument("transcript contains a question this game never asks");
      }
    }
  }
}

}  // namespace

GameSpec game1_spec(int n) {
  if (n < 1) throw std::invalid_argument("game1_spec: n must be >= 1");
  return GameSpec{GameId::Game1, n, QuestionRule::SameXBoth, always_true, sum_is_zero};
}

GameSpec game2_spec(int n) {
  if (n < 1) throw std::invalid_argument("game2_spec: n must be >= 1");
  return GameSpec{GameId::Game2, n, QuestionRule::SameXBoth, always_true, product_is_one};
}

GameSpec game3_spec() {
  return GameSpec{GameId::Game3, 1, QuestionRule::ComplementaryCoin, complementary_questions,
                  inverse_and_product_one};
}

std::pair<Question, Question> assign_questions(const GameSpec& spec, int round_index, Rng& rng) {
  if (round_index < 0 || round_index >= spec.rounds) {
    throw std::out_of_range("assign_questions: round_index out of range");
  }
  switch (spec.question_rule) {
    case QuestionRule::SameXBoth:
      return {Question::X, Question::X};
    case QuestionRule::ComplementaryCoin:
      return rng.next_bool() ? std::pair{Question::X, Question::XBar}
                             : std::pair{Question::XBar, Question::X};
  }
  throw std::logic_error("unknown question rule");
}

bool check_promise(const GameSpec& spec, const Transcript& transcript) {
  require_matching(spec, transcript);
  return spec.promise(transcript);
}

bool evaluate_win(const GameSpec& spec, const Transcript& transcript) {
  if (!check_promise(spec, transcript)) {
    throw PromiseViolation("transcript violates the game promise");
  }
  return spec.win(transcript);
}

Verdict judge(const GameSpec& spec, const Transcript& transcript) {
  if (!check_promise(spec, transcript)) return Verdict::PromiseViolated;
  return spec.win(transcript) ? Verdict::Win : Verdict::Lose;
}

std::string to_string(GameId id) {
  switch (id) {
    case GameId::Game1: return "GAME1";
    case GameId::Game2: return "GAME2";
    case GameId::Game3: return "GAME3";
  }
  return "?";
}

std::string to_string(Question q) { return q == Question::X ? "X" : "XBAR"; }

}  // namespace nlgames
