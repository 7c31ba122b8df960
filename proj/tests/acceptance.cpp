// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

#include "../tests/oracles.hpp"
#include "rank2sg/search.hpp"

using namespace rank2sg;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Check {
  Outcome out;
  void require(bool cond, const std::string& what) {
    if (!cond && out.ok) {
      out.ok = false;
      out.detail = what;
    }
  }
};

std::vector<Rep> finite_reps() {
  std::vector<Rep> out;
  for (const auto& f : builtin_fixtures())
    for (const auto& c : f.theta.cycles()) {
      out.push_back(from_theta_cycle(f.theta, c));
      auto [u, v] = cycle_words(c);
      out.push_back(from_commuting_pair(f.theta, u, v));
    }
  return out;
}

Outcome ac1() {
  Check c;
  Theta th = builtin_theta("forward3");
  c.require(red_first(th, parse_word("e1.f1")) == parse_word("f2.e1"), "e1f1");
  c.require(red_first(th, parse_word("e1.f2")) == parse_word("f1.e2"), "e1f2");
  c.require(red_first(th, parse_word("e2.f1")) == parse_word("f1.e1"), "e2f1");
  c.require(red_first(th, parse_word("e2.f2")) == parse_word("f2.e2"), "e2f2");
  return c.out;
}

Outcome ac2() {
  Check c;
  Theta th = builtin_theta("forward3");
  c.require(commutes(th, parse_blue("1121212"), parse_red("1222212")), "1121212 / 1222212");
  int closing = 0;
  for (int mask = 0; mask < 128; ++mask) {
    std::vector<int> u;
    for (int b = 6; b >= 0; --b) u.push_back((mask >> b) & 1 ? 1 : 2);
    auto [v, uk] = oracle::binomial_push(u);
    if (uk != blue_word(u)) continue;
    ++closing;
    c.require(commutes(th, uk, v), "family member " + format_indices(uk));
  }
  c.require(closing == 64, "expected 64 closing words, got " + std::to_string(closing));
  c.out.detail = c.out.ok ? std::to_string(closing) + " family pairs" : c.out.detail;
  return c.out;
}

Outcome ac3() {
  Check c;
  std::mt19937_64 rng(1);
  std::size_t total = 0;
  for (const auto& f : builtin_fixtures())
    for (int rep = 0; rep < 10000; ++rep) {
      Word w = oracle::random_word(f.theta, rng, 16);
      Degree d = degree(w);
      Word r = refactor(f.theta, w, oracle::random_pattern(d, rng));
      c.require(degree(r) == d, f.name + " degree " + format_word(w));
      c.require(refactor(f.theta, r, pattern_of(w)) == w, f.name + " round trip " + format_word(w));
      ++total;
    }
  if (c.out.ok) c.out.detail = std::to_string(total) + " round trips";
  return c.out;
}

Outcome ac4() {
  Check c;
  for (const auto& f : builtin_fixtures())
    for (auto [k, l] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
      ThetaPrime tp(f.theta, k, l);
      tp.tabulate();
      std::vector<bool> hit(tp.size(), false);
      bool perm = true;
      for (auto x : tp.table()) {
        if (x >= tp.size() || hit[x]) perm = false;
        else hit[x] = true;
      }
      c.require(perm, f.name + " not a permutation at " + std::to_string(k) + "," + std::to_string(l));
      if (k == 1 && l == 1)
        for (int i = 1; i <= f.theta.m(); ++i)
          for (int j = 1; j <= f.theta.n(); ++j) {
            auto [i2, j2] = f.theta.forward(i, j);
            c.require(tp.apply(Word{e(i)}, Word{rank2sg::f(j)}) == std::make_pair(Word{e(i2)}, Word{rank2sg::f(j2)}),
                      f.name + " degree one differs from theta");
          }
    }
  return c.out;
}

Outcome ac5() {
  Check c;
  auto r = iso_classes(2, 2, true);
  std::size_t sum = std::accumulate(r.orbit_sizes.begin(), r.orbit_sizes.end(), std::size_t{0});
  c.require(r.count() == 9, "count " + std::to_string(r.count()));
  c.require(sum == 24, "orbit sum " + std::to_string(sum));
  c.out.detail = std::to_string(r.count()) + " classes, orbit sizes sum " + std::to_string(sum);
  return c.out;
}

Outcome ac6() {
  Check c;
  Theta th = builtin_theta("forward3");
  auto [u, v] = cycle_words(th.cycles()[0]);
  Rep grid = from_commuting_pair(th, u, v);
  SymmetryGroup H = symmetry_group(grid);
  c.require(H.lattice == Sublattice::from({{1, 1}, {3, 0}}), "H = " + H.lattice.str());
  Decomposition d = decompose(grid);
  c.require(d.finite && d.summands.size() == 3, "summand count");
  std::set<RationalAngle> chis;
  for (const auto& s : d.summands) {
    c.require(is_irreducible(s.rep), "reducible summand");
    chis.insert(s.chi(Vec2{1, 1}));
  }
  c.require(chis == std::set<RationalAngle>{RationalAngle(0, 1), RationalAngle(1, 3), RationalAngle(2, 3)},
            "characters");
  return c.out;
}

Outcome ac7() {
  Check c;
  Theta th = builtin_theta("identity22");
  auto grid = [&](RationalAngle a) { return from_commuting_pair(th, parse_blue("12"), parse_red("12"), a, {}); };
  c.require(equivalent_reps(grid(RationalAngle(1, 2)), grid(RationalAngle(0, 1))), "1/2 vs 0");
  c.require(!equivalent_reps(grid(RationalAngle(1, 2)), grid(RationalAngle(1, 4))), "1/2 vs 1/4");
  return c.out;
}

Outcome ac8() {
  Check c;
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> num(0, 59), base(0, 11);
  std::size_t total = 0;
  for (const auto& f : builtin_fixtures()) {
    std::vector<Rep> reps;
    for (const auto& cyc : f.theta.cycles()) {
      auto [u, v] = cycle_words(cyc);
      reps.push_back(from_commuting_pair(f.theta, u, v, RationalAngle(base(rng), 12), RationalAngle(base(rng), 12)));
    }
    for (int k = 0; k < 100; ++k) {
      const Rep& r = reps[static_cast<std::size_t>(k) % reps.size()];
      std::vector<RationalAngle> gamma;
      for (std::size_t a = 0; a < r.size(); ++a) gamma.push_back(RationalAngle(num(rng), 60));
      Rep g = apply_gauge(r, gamma);
      Normalized nr = normalize_scalars(g);
      c.require(nr.rep.constant_scalars(), f.name + " scalars not constant");
      c.require(scalar_character(nr.rep) == scalar_character(g), f.name + " psi changed");
      ++total;
    }
  }
  if (c.out.ok) c.out.detail = std::to_string(total) + " gauged reps";
  return c.out;
}

Outcome ac9() {
  Check c;
  auto at = [](const RepGraph& g, const std::string& w, int v) { return act(g, parse_word(w), v).value_or(-1); };
  {
    Theta th = builtin_theta("reverse3");
    const RepGraph g = dilate(th, graph_of(fixed_point_rep()), {5, std::nullopt, 200000}).graph;
    int xi = *g.find("[0,0]");
    int eta = at(g, "f1", xi), z1 = at(g, "f1", eta), z2 = at(g, "f2", eta);
    c.require(at(g, "e1", eta) == eta, "e1 eta = eta");
    c.require(at(g, "e1", z2) == z1 && at(g, "e2", z1) == z2, "zeta relations");
    std::vector<int> rings{ring_length(g, xi, Color::Blue), ring_length(g, eta, Color::Blue),
                           ring_length(g, z1, Color::Blue), ring_length(g, at(g, "f1", z1), Color::Blue)};
    c.require(rings == std::vector<int>{1, 1, 2, 4}, "ring lengths");
  }
  {
    Theta th = builtin_theta("swap33");
    const RepGraph g = dilate(th, graph_of(from_theta_cycle(th, {{3, 3}})), {3, std::nullopt, 200000}).graph;
    int xi0 = *g.find("[0,0]");
    for (int i = 1; i <= 2; ++i) {
      int zeta = at(g, "f" + std::to_string(i), xi0);
      int xi = at(g, "e" + std::to_string(i), xi0);
      c.require(at(g, "e3", zeta) == zeta, "e3 zeta");
      for (int j = 1; j <= 2; ++j) {
        int tgt = at(g, "f" + std::to_string(j), xi);
        c.require(tgt == at(g, "e" + std::to_string(j), zeta), "f_j xi_i = e_j zeta_i0");
        c.require(oracle::ring_of(g, tgt, Color::Blue) == std::set<int>{zeta}, "target ring");
      }
    }
  }
  return c.out;
}

Outcome ac10() {
  Check c;
  std::size_t runs = 0;
  for (const auto& f : builtin_fixtures())
    for (const auto& cyc : f.theta.cycles()) {
      auto [u, v] = cycle_words(cyc);
      for (const Rep& r : {from_theta_cycle(f.theta, cyc), from_commuting_pair(f.theta, u, v)}) {
        RepGraph g = graph_of(r);
        DilationResult d = dilate(f.theta, g, {3, std::nullopt, 200000});
        for (const auto& ed : d.graph.edges)
          c.require(!d.graph.original[ed.dst] || d.graph.original[ed.src], f.name + " coinvariance");
        c.require(verify(d.graph, VerifyMode::StarInterior).ok, f.name + " star interior");
        c.require(restrict_to_original(d.graph) == g, f.name + " compression");
        for (std::uint64_t seed = 1; seed <= 20; ++seed, ++runs)
          c.require(dilate(f.theta, g, {3, seed, 200000}).graph == d.graph, f.name + " confluence");
      }
    }
  if (c.out.ok) c.out.detail = std::to_string(runs) + " shuffled dilations";
  return c.out;
}

Outcome ac11() {
  Check c;
  Theta th = builtin_theta("forward3");
  Rep r = build_3bi(th, parse_blue("1"), parse_red("1"));
  c.require(r.meta.count("p") && r.meta.at("p") == "3", "p");
  c.require(symmetry_group(r).lattice.contains({3, 0}), "(3,0) in H");
  c.require(!is_irreducible(r), "irreducible");
  return c.out;
}

Outcome ac12() {
  Check c;
  for (const std::string name : {"forward3", "identity22"}) {
    Theta th = builtin_theta(name);
    auto w = aperiodic_search(th, 12);
    c.require(w.has_value(), name + " no witness");
    if (w)
      c.require(tail_symmetry(th, w->tail, aperiodic_horizon(12), false).lattice.rank() == 0,
                name + " witness fails recheck");
  }
  c.require(!aperiodic_search(builtin_theta("flip"), 12), "flip has a witness");
  return c.out;
}

Outcome ac13() {
  Check c;
  std::size_t loops = 0;
  auto scan = [&](const Theta& th, const RepGraph& g, bool interior_only) {
    for (int v = 0; v < g.size(); ++v) {
      if (interior_only && g.frontier[v]) continue;
      auto u = blue_loop(g, v), w = red_loop(g, v);
      if (!u || !w) continue;
      ++loops;
      c.require(commutes(th, *u, *w), "loops at " + g.names[v]);
    }
  };
  for (const Rep& r : finite_reps()) {
    RepGraph g = graph_of(r);
    scan(r.theta, g, false);
    scan(r.theta, dilate(r.theta, g, {4, std::nullopt, 200000}).graph, true);
  }
  if (c.out.ok) c.out.detail = std::to_string(loops) + " loop pairs";
  return c.out;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> checks{
      {"forward 3-cycle relations", ac1},     {"long commuting pair and family", ac2},
      {"unique factorization round trips", ac3}, {"theta' bijectivity", ac4},
      {"isomorphism classes", ac5},           {"cycle rep decomposition", ac6},
      {"scalar equivalence", ac7},            {"scalar normalization", ac8},
      {"dilation examples", ac9},             {"dilation properties", ac10},
      {"3bi symmetry", ac11},                 {"aperiodicity evidence", ac12},
      {"closed loop commutation", ac13},
  };
  int failed = 0;
  for (std::size_t a = 0; a < checks.size(); ++a) {
    Outcome o;
    try {
      o = checks[a].second();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    failed += o.ok ? 0 : 1;
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << "AC" << (a + 1) << " " << checks[a].first;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << "\n";
  }
  return failed == 0 ? 0 : 1;
}
