#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rank2sg/rep_graph.hpp"
#include "rank2sg/search.hpp"

namespace rank2sg {

using Json = nlohmann::ordered_json;

// Theta files are a small TOML subset:
//   m = 2
//   n = 2
//   relations = [[i, j, i2, j2], ...]   # e_i f_j = f_j2 e_i2
Theta parse_theta_toml(const std::string& text);
Theta load_theta(const std::string& path);
std::string theta_to_toml(const Theta& theta, const std::string& comment = "");

Json theta_to_json(const Theta& theta);
Theta theta_from_json(const Json& j);

// Reps: "rank2sg-rep/1". The theta may be inlined under "theta".
Json rep_to_json(const Rep& rep, bool inline_theta = true);
Rep rep_from_json(const Json& j, const Theta* theta = nullptr);

// Tails: {"preperiod": "...", "period": "..."}; pure digit strings take the
// color given by the caller, mixed words use "e1.f2" form.
Json tail_to_json(const TailSpec& t);
TailSpec tail_from_json(const Json& j, Color pure_color);

// Graphs: "rank2sg-repgraph/1".
Json graph_to_json(const RepGraph& g);
RepGraph graph_from_json(const Json& j);

Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// The shipped example thetas, as (file stem, theta, comment).
struct Fixture {
  std::string name;
  Theta theta;
  std::string comment;
};
std::vector<Fixture> builtin_fixtures();
Theta builtin_theta(const std::string& name);  // throws unknown-fixture

// The one-point rep of the reverse 3-cycle with e_2 = f_2 = 1.
Rep fixed_point_rep();

}  // namespace rank2sg
