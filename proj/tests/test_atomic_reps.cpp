#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace rank2sg;

namespace {

Theta fx(const std::string& name) { return builtin_theta(name); }

std::vector<Rep> cycle_reps() {
  std::vector<Rep> out;
  for (const auto& f : builtin_fixtures())
    for (const auto& c : f.theta.cycles()) {
      out.push_back(from_theta_cycle(f.theta, c));
      auto [u, v] = cycle_words(c);
      out.push_back(from_commuting_pair(f.theta, u, v));
    }
  return out;
}

std::vector<RationalAngle> random_gauge(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(0, 59);
  std::vector<RationalAngle> g;
  for (std::size_t a = 0; a < n; ++a) g.push_back(RationalAngle(num(rng), 60));
  return g;
}

}  // namespace

TEST(CycleReps, AllFixtureCyclesValidate) {
  for (const auto& f : builtin_fixtures())
    for (const auto& c : f.theta.cycles()) {
      Rep r = from_theta_cycle(f.theta, c);
      EXPECT_TRUE(validate_rep(r).ok) << f.name;
      EXPECT_EQ(r.size(), c.size());
      auto [u, v] = cycle_words(c);
      EXPECT_TRUE(commutes(f.theta, u, v)) << f.name;
    }
}

TEST(CycleReps, ForwardThreeCycleGrid) {
  Theta th = fx("forward3");
  auto [u, v] = cycle_words(th.cycles()[0]);
  Rep grid = from_commuting_pair(th, u, v);
  EXPECT_EQ(grid.kernel, Sublattice::from({{3, 0}, {0, 3}}));
  SymmetryGroup H = symmetry_group(grid);
  EXPECT_TRUE(H.exact);
  EXPECT_EQ(H.lattice, Sublattice::from({{1, 1}, {3, 0}}));
  EXPECT_FALSE(is_irreducible(grid));
  Decomposition d = decompose(grid);
  ASSERT_TRUE(d.finite);
  ASSERT_EQ(d.summands.size(), 3u);
  std::set<RationalAngle> seen;
  for (const auto& s : d.summands) {
    EXPECT_TRUE(is_irreducible(s.rep));
    EXPECT_EQ(s.rep.size(), 3u);
    // The character lives on H/K, which is generated by (1,1).
    seen.insert(s.chi(Vec2{1, 1}));
  }
  EXPECT_EQ(seen, (std::set<RationalAngle>{RationalAngle(0, 1), RationalAngle(1, 3), RationalAngle(2, 3)}));
}

TEST(CycleReps, SummandScalarsMatchCharacter) {
  Theta th = fx("forward3");
  auto [u, v] = cycle_words(th.cycles()[0]);
  Rep grid = from_commuting_pair(th, u, v, RationalAngle(1, 5), RationalAngle(2, 7));
  for (const auto& s : decompose(grid).summands) {
    CharacterOnSublattice psi = scalar_character(s.rep);
    for (std::size_t a = 0; a < psi.values.size(); ++a)
      EXPECT_EQ(psi.values[a], s.psi(psi.domain.basis()[a]));
  }
}

TEST(Scalars, EquivalenceOnTwoByTwoGrid) {
  Theta th = fx("identity22");
  auto grid = [&](RationalAngle a) { return from_commuting_pair(th, parse_blue("12"), parse_red("12"), a, {}); };
  EXPECT_TRUE(equivalent_reps(grid(RationalAngle(1, 2)), grid(RationalAngle(0, 1))));
  EXPECT_FALSE(equivalent_reps(grid(RationalAngle(1, 2)), grid(RationalAngle(1, 4))));
}

TEST(Scalars, CyclicGroupShiftsAlphaAgainstBeta) {
  // On C_k with g2 = -g1 only alpha + beta is an invariant.
  Theta th = fx("forward3");
  auto cyc = th.cycles()[0];
  Rep a = from_theta_cycle(th, cyc, RationalAngle(1, 3), RationalAngle(0, 1));
  Rep b = from_theta_cycle(th, cyc, RationalAngle(0, 1), RationalAngle(1, 3));
  Rep c = from_theta_cycle(th, cyc, RationalAngle(2, 3), RationalAngle(0, 1));
  EXPECT_TRUE(equivalent_reps(a, b));
  EXPECT_FALSE(equivalent_reps(a, c));
}

TEST(Scalars, GaugeThenNormalizeKeepsPsi) {
  std::mt19937_64 rng(31337);
  for (const Rep& base : cycle_reps()) {
    for (int rep = 0; rep < 10; ++rep) {
      Rep g = apply_gauge(base, random_gauge(base.size(), rng));
      Normalized nr = normalize_scalars(g);
      EXPECT_TRUE(nr.rep.constant_scalars());
      EXPECT_EQ(scalar_character(nr.rep), scalar_character(base));
      EXPECT_EQ(scalar_character(g), scalar_character(base));
    }
  }
}

// The phase around any kernel loop is the same from every base point.
TEST(Scalars, PathIndependence) {
  std::mt19937_64 rng(4);
  Theta th = fx("swap33");
  Rep base = from_commuting_pair(th, parse_blue("21"), parse_red("21"), RationalAngle(1, 7), RationalAngle(3, 11));
  Rep g = apply_gauge(base, random_gauge(base.size(), rng));
  for (const auto& k : g.kernel.basis()) {
    RationalAngle ref = path_phase(g, {0, 0}, k);
    for (std::size_t a = 0; a < g.size(); ++a) EXPECT_EQ(path_phase(g, g.point(a), k), ref);
  }
  // Going around a unit square forwards then back is trivial.
  EXPECT_TRUE((path_phase(g, {0, 0}, {1, 1}) + path_phase(g, {1, 1}, {-1, -1})).is_zero());
}

TEST(Validate, DetectsCorruptLabels) {
  Theta th = fx("forward3");
  Rep r = from_theta_cycle(th, th.cycles()[0]);
  ASSERT_TRUE(validate_rep(r).ok);
  r.imap[0] = r.imap[0] == 1 ? 2 : 1;
  Report rep = validate_rep(r);
  EXPECT_FALSE(rep.ok);
  EXPECT_THROW(require_valid(r), DomainError);
  Rep bad = from_theta_cycle(th, th.cycles()[0], RationalAngle(1, 2));
  bad.alpha[1] = RationalAngle(1, 3);
  EXPECT_FALSE(validate_rep(bad).ok);
}

TEST(Equivalence, ShiftedCycleIsEquivalent) {
  Theta th = fx("reverse3");
  auto c = th.cycles()[0];
  auto rotated = c;
  std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
  EXPECT_TRUE(equivalent_reps(from_theta_cycle(th, c), from_theta_cycle(th, rotated)));
}

TEST(Irreducible, PrimitivePairsUnderIdentity) {
  Theta th = fx("identity22");
  Rep r = from_commuting_pair(th, parse_blue("112"), parse_red("12"));
  EXPECT_TRUE(is_irreducible(r));
  Rep s = from_commuting_pair(th, parse_blue("1212"), parse_red("12"));
  EXPECT_FALSE(is_irreducible(s));
  EXPECT_EQ(symmetry_group(s).lattice.index(), 4);
}

// Sigma entries read off the rewrite class directly.
TEST(Sigma, MatchesExhaustiveRewriter) {
  for (const std::string name : {"forward3", "reverse3", "flip"}) {
    Theta th = fx(name);
    const int T = 3;
    for (const auto& tau : {parse_word("e1.f1.e2.f1.e1.f2"), parse_word("e2.f2.e1.f1.e1.f1"),
                            parse_word("e1.f2.e2.f1.e2.f2")}) {
      SigmaWindow w = sigma_of_word(th, tau, 2, 2);
      auto cls = oracle::rewrite_class(th, tau);
      auto find = [&](const ColorPattern& p) {
        for (const auto& x : cls)
          if (pattern_of(x) == p) return x;
        ADD_FAILURE();
        return Word{};
      };
      for (int t = -2; t <= 0; ++t)
        for (int s = -2; s <= 0; ++s) {
          ColorPattern pa(static_cast<std::size_t>(-s), Color::Blue), pb;
          pa.insert(pa.end(), static_cast<std::size_t>(-t), Color::Red);
          pb = pa;
          pa.insert(pa.end(), static_cast<std::size_t>(T + s), Color::Blue);
          pa.insert(pa.end(), static_cast<std::size_t>(T + t), Color::Red);
          pb.insert(pb.end(), static_cast<std::size_t>(T + t), Color::Red);
          pb.insert(pb.end(), static_cast<std::size_t>(T + s), Color::Blue);
          std::size_t pos = static_cast<std::size_t>(-s - t);
          EXPECT_EQ(w.i_at(s, t), find(pa)[pos].index) << name << " " << s << "," << t;
          EXPECT_EQ(w.j_at(s, t), find(pb)[pos].index) << name << " " << s << "," << t;
        }
    }
  }
}

TEST(Sigma, LongerPrefixesAgreeOnTheCommonWindow) {
  Theta th = fx("twocycles33");
  TailSpec tau{parse_word("e1.f3.e2.f2"), parse_word("e3.f1.e1.f2")};
  SigmaWindow small = build_inductive_window(th, tau, 2, 3);
  SigmaWindow large = build_inductive_window(th, tau, 6, 6);
  for (int t = -3; t <= 0; ++t)
    for (int s = -2; s <= 0; ++s) {
      EXPECT_EQ(small.i_at(s, t), large.i_at(s, t));
      EXPECT_EQ(small.j_at(s, t), large.j_at(s, t));
    }
  Rep r = sigma_to_rep(th, large);
  EXPECT_TRUE(validate_rep(r).ok);
}

TEST(Sigma, PeriodicTailHasEventualSymmetry) {
  Theta th = fx("identity22");
  TailSpec tau{{}, parse_word("e1.f2")};
  SymmetryGroup g = tail_symmetry(th, tau, 6);
  EXPECT_FALSE(g.exact);
  EXPECT_EQ(g.lattice.rank(), 2);
  EXPECT_THROW(tail_symmetry(th, TailSpec{parse_word("e1.f1.e1.f1.e1.f1"), parse_word("e1.f2")}, 2), DomainError);
}

TEST(RingByTail, SwapExample) {
  Theta th = fx("swap33");
  Rep r = build_ring_by_tail(th, parse_blue("3"), TailSpec{parse_red("1"), parse_red("12")});
  EXPECT_TRUE(validate_rep(r).ok);
  EXPECT_EQ(r.kernel, Sublattice::from({{1, 0}}));
  EXPECT_EQ(classify(graph_of(r)).type, "2a");
  EXPECT_THROW(build_ring_by_tail(fx("forward3"), parse_blue("1"), TailSpec{{}, parse_red("12")}), DomainError);
}

TEST(ThreeBI, ForwardCycleFromOneOne) {
  Theta th = fx("forward3");
  Rep r = build_3bi(th, parse_blue("1"), parse_red("1"));
  EXPECT_EQ(r.meta.at("p"), "3");
  EXPECT_EQ(r.kernel, Sublattice::from({{1, 1}}));
  SymmetryGroup H = symmetry_group(r);
  EXPECT_TRUE(H.lattice.contains({3, 0}));
  EXPECT_TRUE(H.lattice.contains({0, -3}));
  EXPECT_FALSE(is_irreducible(r));
  auto verdict = classify(graph_of(r));
  EXPECT_EQ(verdict.type, "3bi");
  ASSERT_TRUE(verdict.period);
  EXPECT_EQ(*verdict.period, (Vec2{1, 1}));
  Decomposition d = decompose(r);
  EXPECT_FALSE(d.finite);
  ASSERT_TRUE(d.quotient);
  EXPECT_FALSE(d.sample(3).empty());
}

TEST(ThreeBII, BackwardBlocksAndStrip) {
  Theta th = fx("forward3");
  auto blocks = backward_blocks(th, parse_blue("1"), parse_red("1"), 5);
  ASSERT_TRUE(blocks);
  std::string us, vs;
  for (const auto& w : blocks->first) us += format_indices(w);
  for (const auto& w : blocks->second) vs += format_indices(w);
  EXPECT_EQ(us.substr(0, 4), "1222");
  EXPECT_EQ(vs.substr(0, 4), "1222");
  Rep r = build_3bii(th, TailSpec{parse_blue("1"), parse_blue("2")}, TailSpec{parse_red("1"), parse_red("2")}, 1, 1);
  EXPECT_TRUE(validate_rep(r).ok);
  EXPECT_EQ(r.kernel, Sublattice::from({{1, -1}}));
  auto verdict = classify(graph_of(r));
  EXPECT_EQ(verdict.type, "3bii");
  ASSERT_TRUE(verdict.period);
  EXPECT_EQ(*verdict.period, (Vec2{1, -1}));
}

TEST(ThreeA, WitnessWindowIsATailByTail) {
  Theta th = fx("forward3");
  auto w = aperiodic_search(th, 12);
  ASSERT_TRUE(w);
  Rep r = sigma_to_rep(th, w->window);
  EXPECT_EQ(classify(graph_of(r)).type, "3a");
  EXPECT_EQ(symmetry_group(r).lattice.rank(), 0);
}
