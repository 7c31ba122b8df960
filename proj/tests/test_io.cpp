#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace rank2sg;

TEST(Toml, FixtureFilesMatchBuiltins) {
  for (const auto& f : builtin_fixtures()) {
    Theta th = load_theta(std::string(RANK2SG_FIXTURES) + "/" + f.name + ".toml");
    EXPECT_EQ(th, f.theta) << f.name;
    EXPECT_EQ(parse_theta_toml(theta_to_toml(th, "x")), th);
  }
}

TEST(Toml, CommentsAndWhitespace) {
  Theta th = parse_theta_toml(R"(# two by two
m = 2   # blue
n = 2
relations = [
  [1, 1, 1, 1], [1, 2, 2, 1],
  [2, 1, 1, 2],
  [2, 2, 2, 2],
]
)");
  EXPECT_EQ(th.forward(2, 1), std::make_pair(1, 2));
  EXPECT_EQ(th.forward(1, 2), std::make_pair(2, 1));
}

TEST(Toml, MalformedInput) {
  auto code_of = [](const std::string& text) {
    try {
      parse_theta_toml(text);
    } catch (const DomainError& e) {
      return e.code();
    }
    return std::string("none");
  };
  EXPECT_EQ(code_of("m = 2\nn = 2\nrelations = [[1,1,1,1]"), "parse");
  EXPECT_EQ(code_of("m = \"two\"\nn = 2\nrelations = []"), "parse");
  EXPECT_EQ(code_of("m 2"), "parse");
  EXPECT_EQ(code_of("n = 2\nrelations = []"), "parse");
  EXPECT_EQ(code_of("m = 2\nn = 2\nrelations = [[1,1,1,1],[1,2,1,2],[2,1,2,1],[2,2,2,3]]"), "out-of-range");
  EXPECT_EQ(code_of("m = 2\nn = 2\nrelations = [[1,1,1,1],[1,2,1,1],[2,1,2,1],[2,2,2,2]]"), "duplicate-target");
  EXPECT_THROW(load_theta("/nonexistent/theta.toml"), DomainError);
  EXPECT_THROW(builtin_theta("nope"), DomainError);
}

TEST(Json, ThetaRoundTrip) {
  for (const auto& f : builtin_fixtures()) EXPECT_EQ(theta_from_json(theta_to_json(f.theta)), f.theta);
}

TEST(Json, RepRoundTrip) {
  Theta th = builtin_theta("forward3");
  std::vector<Rep> reps{
      from_theta_cycle(th, th.cycles()[0], RationalAngle(1, 3), RationalAngle(2, 7)),
      from_commuting_pair(th, parse_blue("122111"), parse_red("111221")),
      build_3bi(th, parse_blue("1"), parse_red("1"), RationalAngle(1, 5)),
      build_3bii(th, TailSpec{parse_blue("1"), parse_blue("2")}, TailSpec{parse_red("1"), parse_red("2")}, 1, 1),
      fixed_point_rep(),
  };
  for (const auto& r : reps) {
    Json j = rep_to_json(r);
    Rep back = rep_from_json(Json::parse(j.dump()));
    EXPECT_EQ(rep_to_json(back), j);
    EXPECT_TRUE(validate_rep(back).ok);
    Rep bare = rep_from_json(rep_to_json(r, false), &r.theta);
    EXPECT_EQ(rep_to_json(bare), j);
  }
  // fixedpoint22.json carries no theta of its own.
  Json fp = read_json_file(std::string(RANK2SG_FIXTURES) + "/fixedpoint22.json");
  EXPECT_THROW(rep_from_json(fp), DomainError);
  Theta rev = builtin_theta("reverse3");
  EXPECT_EQ(rep_to_json(rep_from_json(fp, &rev)), rep_to_json(fixed_point_rep()));
}

TEST(Json, GraphRoundTrip) {
  Theta th = builtin_theta("reverse3");
  auto d = dilate(th, graph_of(fixed_point_rep()), {3, std::nullopt, 200000});
  RepGraph g = graph_from_json(Json::parse(graph_to_json(d.graph).dump()));
  EXPECT_EQ(g, d.graph);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"schema":"other"})")), DomainError);
}

TEST(Json, TailRoundTrip) {
  TailSpec mixed{parse_word("e1.f2"), parse_word("e2.f1.e1.f1")};
  EXPECT_EQ(tail_from_json(tail_to_json(mixed), Color::Blue), mixed);
  TailSpec blue{parse_blue("12"), parse_blue("2")};
  EXPECT_EQ(tail_from_json(tail_to_json(blue), Color::Blue), blue);
}
