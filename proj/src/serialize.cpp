#include "nlgames/serialize.hpp"

#include <cstdio>
#include <ostream>

namespace nlgames {

Json to_json(const ExactProb& p) {
  return Json{{"num", p.num().str()}, {"den", p.den().str()}};
}

Json to_json(const EigenCheck& check) {
  return Json{{"observable", check.observable},
              {"state", check.state},
              {"eigenvalue", check.eigenvalue},
              {"residual", check.residual},
              {"pass", check.pass}};
}

Json to_json(const Transcript& transcript) {
  Json rounds = Json::array();
  for (std::size_t i = 0; i < transcript.rounds.size(); ++i) {
    const Round& r = transcript.rounds[i];
    rounds.push_back(Json{{"round_index", i},
                          {"q_a", to_string(r.q_a)},
                          {"q_b", to_string(r.q_b)},
                          {"a", r.a.value()},
                          {"b", r.b.value()}});
  }
  return Json{{"game_id", to_string(transcript.game_id)}, {"rounds", std::move(rounds)}};
}

Json to_json(const RunReport& report) {
  Json eigen = Json::array();
  for (const EigenCheck& check : report.eigen_checks) eigen.push_back(to_json(check));
  return Json{{"game_id", to_string(report.game_id)},
              {"n", report.n},
              {"trials", report.trials},
              {"wins", report.wins},
              {"win_frequency", report.win_frequency},
              {"exact_reference",
               report.exact_reference ? to_json(*report.exact_reference) : Json(nullptr)},
              {"eigen_checks", std::move(eigen)},
              {"seed", report.seed},
              {"promise_violations", report.promise_violations}};
}

Json to_json(const Game3DualReport& dual) {
  Json j = to_json(dual.report);
  j["product_condition_rate"] = dual.product_condition_rate;
  j["inverse_condition_rate"] = dual.inverse_condition_rate;
  return j;
}

std::string transcript_csv_header() { return "round_index,q_a,q_b,a,b"; }

void write_transcript_csv(std::ostream& out, const Transcript& transcript, bool header) {
  if (header) out << transcript_csv_header() << "\n";
  for (std::size_t i = 0; i < transcript.rounds.size(); ++i) {
    const Round& r = transcript.rounds[i];
    out << i << ',' << to_string(r.q_a) << ',' << to_string(r.q_b) << ',' << r.a.value() << ','
        << r.b.value() << "\n";
  }
}

std::string report_csv_header() {
  return "game_id,n,trials,wins,win_frequency,exact_num,exact_den,seed,promise_violations";
}

std::string report_csv_line(const RunReport& report) {
  std::string exact_num, exact_den;
  if (report.exact_reference) {
    exact_num = report.exact_reference->num().str();
    exact_den = report.exact_reference->den().str();
  }
  return to_string(report.game_id) + "," + std::to_string(report.n) + "," +
         std::to_string(report.trials) + "," + std::to_string(report.wins) + "," +
         format_double(report.win_frequency) + "," + exact_num + "," + exact_den + "," +
         std::to_string(report.seed) + "," + std::to_string(report.promise_violations);
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return std::string(buf);
}

}  // namespace nlgames
