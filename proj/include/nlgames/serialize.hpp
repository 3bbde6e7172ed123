#pragma once

#include <json.hpp>

#include <iosfwd>
#include <string>

#include "nlgames/harness.hpp"

namespace nlgames {

using Json = nlohmann::ordered_json;

Json to_json(const ExactProb& p);
Json to_json(const EigenCheck& check);
Json to_json(const Transcript& transcript);
Json to_json(const RunReport& report);
Json to_json(const Game3DualReport& dual);

// CSV row format: round_index,q_a,q_b,a,b
std::string transcript_csv_header();
void write_transcript_csv(std::ostream& out, const Transcript& transcript, bool header = true);

// One-line summary:
// game_id,n,trials,wins,win_frequency,exact_num,exact_den,seed,promise_violations
std::string report_csv_header();
std::string report_csv_line(const RunReport& report);

// Fixed-format decimal used in CSV output (12 significant digits).
std::string format_double(double value);

}  // namespace nlgames
