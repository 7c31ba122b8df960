#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace rank2sg;

namespace {

Theta fx(const std::string& name) { return builtin_theta(name); }

int at(const RepGraph& g, const std::string& word, int from) {
  auto v = act(g, parse_word(word), from);
  EXPECT_TRUE(v) << word;
  return v.value_or(-1);
}

DilationResult dilate_point(const std::string& theta, std::vector<std::pair<int, int>> cycle, int depth) {
  Theta th = fx(theta);
  return dilate(th, graph_of(from_theta_cycle(th, cycle)), {depth, std::nullopt, 200000});
}

}  // namespace

TEST(GraphOf, FiniteRepIsStarInterior) {
  for (const auto& f : builtin_fixtures())
    for (const auto& c : f.theta.cycles()) {
      auto [u, v] = cycle_words(c);
      RepGraph g = graph_of(from_commuting_pair(f.theta, u, v));
      EXPECT_TRUE(verify(g, VerifyMode::DefectFree).ok) << f.name;
      EXPECT_EQ(static_cast<std::size_t>(g.size()), u.size() * v.size());
      EXPECT_EQ(g.edges.size(), 2 * u.size() * v.size());
      EXPECT_EQ(classify(g).type, "1");
    }
}

TEST(GraphOf, WindowHasFrontier) {
  Theta th = fx("forward3");
  Rep r = build_3bii(th, TailSpec{parse_blue("1"), parse_blue("2")}, TailSpec{parse_red("1"), parse_red("2")}, 1, 1);
  RepGraph g = graph_of(r);
  EXPECT_TRUE(std::any_of(g.frontier.begin(), g.frontier.end(), [](bool b) { return b; }));
  EXPECT_TRUE(verify(g, VerifyMode::DefectFree).ok);
  EXPECT_THROW(dilate(th, g, {}), DomainError);
}

TEST(Verify, CatchesTwoIncomingEdges) {
  RepGraph g;
  g.m = g.n = 2;
  int a = g.add_vertex("a"), b = g.add_vertex("b");
  g.frontier[a] = true;
  g.add_edge(a, b, Color::Blue, 1);
  g.add_edge(b, b, Color::Blue, 2);
  Report r = verify(g, VerifyMode::DefectFree);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.code, "not-atomic");
}

// The reverse 3-cycle example: xi, eta = f1 xi, zeta_j = f_j eta.
TEST(Dilation, ReverseCycleExample) {
  auto res = dilate_point("reverse3", {{2, 2}}, 5);
  const RepGraph& g = res.graph;
  int xi = *g.find("[0,0]");
  int eta = at(g, "f1", xi);
  int z1 = at(g, "f1", eta), z2 = at(g, "f2", eta);
  EXPECT_EQ(at(g, "e1", eta), eta);
  EXPECT_EQ(at(g, "e1", z2), z1);
  EXPECT_EQ(at(g, "e2", z1), z2);
  EXPECT_EQ(ring_length(g, xi, Color::Blue), 1);
  EXPECT_EQ(ring_length(g, eta, Color::Blue), 1);
  EXPECT_EQ(ring_length(g, z1, Color::Blue), 2);
  EXPECT_EQ(ring_length(g, at(g, "f1", z1), Color::Blue), 4);
  EXPECT_EQ(g.names[z1], "[0,0]:f1.f1");
  EXPECT_TRUE(verify(g, VerifyMode::DefectFree).ok);
}

TEST(Dilation, GoldenDot) {
  auto res = dilate_point("reverse3", {{2, 2}}, 5);
  std::string golden = read_text_file(std::string(RANK2SG_GOLDEN) + "/reverse3_depth5.dot");
  EXPECT_EQ(to_dot(res.graph, "dilation"), golden);
}

// 3x3 swap with e3 = f3 = 1: f_j xi_i lands on zeta_ij = e_j zeta_i0, so xi_i
// sends both its red edges into the blue component of zeta_i0.
TEST(Dilation, SwapExampleRedEdgesShareTargets) {
  auto res = dilate_point("swap33", {{3, 3}}, 3);
  const RepGraph& g = res.graph;
  int xi0 = *g.find("[0,0]");
  for (int i = 1; i <= 2; ++i) {
    int zeta_i0 = at(g, "f" + std::to_string(i), xi0);
    EXPECT_EQ(at(g, "e3", zeta_i0), zeta_i0);
    auto ring = oracle::ring_of(g, zeta_i0, Color::Blue);
    EXPECT_EQ(ring, std::set<int>{zeta_i0});
    int xi_i = at(g, "e" + std::to_string(i), xi0);
    for (int j = 1; j <= 2; ++j) {
      int target = at(g, "f" + std::to_string(j), xi_i);
      EXPECT_EQ(target, at(g, "e" + std::to_string(j), zeta_i0));
      EXPECT_EQ(oracle::ring_of(g, target, Color::Blue), ring);
    }
  }
}

TEST(Dilation, SwapSecondExample) {
  auto res = dilate_point("swap33", {{1, 3}}, 3);
  const RepGraph& g = res.graph;
  int xi = *g.find("[0,0]");
  int z1 = at(g, "f1", xi), z2 = at(g, "f2", xi);
  EXPECT_EQ(at(g, "e1", z1), z1);
  EXPECT_EQ(at(g, "e2", z1), z2);
  EXPECT_EQ(oracle::ring_of(g, z1, Color::Blue), std::set<int>{z1});
}

TEST(Dilation, PropertiesOnAllFixtures) {
  for (const auto& f : builtin_fixtures())
    for (const auto& c : f.theta.cycles()) {
      RepGraph g = graph_of(from_theta_cycle(f.theta, c, RationalAngle(1, 4), RationalAngle(1, 6)));
      auto res = dilate(f.theta, g, {3, std::nullopt, 200000});
      const RepGraph& d = res.graph;
      // No edge enters the original part from outside.
      for (const auto& e : d.edges)
        if (d.original[e.dst]) EXPECT_TRUE(d.original[e.src]) << f.name;
      EXPECT_TRUE(verify(d, VerifyMode::StarInterior).ok) << f.name;
      EXPECT_EQ(restrict_to_original(d), g) << f.name;
      for (std::uint64_t seed = 1; seed <= 5; ++seed)
        EXPECT_EQ(dilate(f.theta, g, {3, seed, 200000}).graph, d) << f.name << " seed " << seed;
      // Names replay: the recorded word carries the origin to the vertex.
      for (int v = 0; v < d.size(); ++v) {
        auto origin = d.find(res.trace[v].first);
        ASSERT_TRUE(origin);
        EXPECT_EQ(act(d, res.trace[v].second, *origin), v);
      }
    }
}

TEST(Dilation, LoopsCommute) {
  for (const auto& f : builtin_fixtures())
    for (const auto& c : f.theta.cycles()) {
      auto res = dilate(f.theta, graph_of(from_theta_cycle(f.theta, c)), {4, std::nullopt, 200000});
      for (int v = 0; v < res.graph.size(); ++v) {
        auto u = blue_loop(res.graph, v), w = red_loop(res.graph, v);
        if (u && w) EXPECT_TRUE(commutes(f.theta, *u, *w)) << f.name << " " << res.graph.names[v];
      }
    }
}

TEST(Dilation, TooLargeIsRefused) {
  Theta th = fx("reverse3");
  EXPECT_THROW(dilate(th, graph_of(fixed_point_rep()), {8, std::nullopt, 50}), DomainError);
}

TEST(PushPull, PathRewritesToPullThenPush) {
  Theta th = fx("reverse3");
  auto res = dilate(th, graph_of(fixed_point_rep()), {4, std::nullopt, 200000});
  const RepGraph& g = res.graph;
  for (int v1 = 0; v1 < g.size(); v1 += 7)
    for (int v2 = 0; v2 < g.size(); v2 += 5) {
      PushPull pp = push_pull_path(th, g, v1, v2);
      EXPECT_EQ(act(g, pp.w1, pp.eta), v1);
      EXPECT_EQ(act(g, pp.w2, pp.eta), v2);
    }
}

TEST(Classify, TypesOfTheConstructions) {
  Theta th = fx("forward3");
  EXPECT_EQ(classify(graph_of(from_theta_cycle(th, th.cycles()[0]))).type, "1");
  EXPECT_EQ(classify(graph_of(build_3bi(th, parse_blue("1"), parse_red("1")))).type, "3bi");
  auto v = classify(graph_of(from_theta_cycle(th, th.cycles()[0])));
  EXPECT_EQ(v.blue.kind, ComponentKind::Ring);
  EXPECT_EQ(v.blue.ring_length, 3);
}

TEST(Export, DotMentionsColours) {
  std::string dot = to_dot(graph_of(fixed_point_rep()), "x");
  EXPECT_NE(dot.find("color=blue, label=\"e:2\""), std::string::npos);
  EXPECT_NE(dot.find("color=red, label=\"f:2\""), std::string::npos);
}
