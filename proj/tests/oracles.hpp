// Independent reference computations for the tests. Nothing here calls the
// refactoring engine.
#pragma once

#include <deque>
#include <random>
#include <set>
#include <vector>

#include "rank2sg/io.hpp"

namespace oracle {

using namespace rank2sg;

// Every word reachable from w by rewriting one adjacent pair e_i f_j <-> f_j' e_i'.
inline std::set<Word> rewrite_class(const Theta& th, const Word& w) {
  std::set<Word> seen{w};
  std::deque<Word> q{w};
  while (!q.empty()) {
    Word x = q.front();
    q.pop_front();
    for (std::size_t a = 0; a + 1 < x.size(); ++a) {
      Word y = x;
      if (x[a].color == Color::Blue && x[a + 1].color == Color::Red) {
        auto [i2, j2] = th.forward(x[a].index, x[a + 1].index);
        y[a] = f(j2);
        y[a + 1] = e(i2);
      } else if (x[a].color == Color::Red && x[a + 1].color == Color::Blue) {
        auto [i0, j0] = th.inverse(x[a + 1].index, x[a].index);
        y[a] = e(i0);
        y[a + 1] = f(j0);
      } else {
        continue;
      }
      if (seen.insert(y).second) q.push_back(y);
    }
  }
  return seen;
}

// All words of length len over the generators of theta.
inline std::vector<Word> all_words(const Theta& th, int len) {
  std::vector<Word> out{Word{}};
  for (int a = 0; a < len; ++a) {
    std::vector<Word> next;
    for (const auto& w : out) {
      for (int i = 1; i <= th.m(); ++i) {
        next.push_back(w);
        next.back().push_back(e(i));
      }
      for (int j = 1; j <= th.n(); ++j) {
        next.push_back(w);
        next.back().push_back(f(j));
      }
    }
    out = std::move(next);
  }
  return out;
}

inline Word random_word(const Theta& th, std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> coin(0, 1);
  Word w;
  int L = len(rng);
  for (int a = 0; a < L; ++a) {
    if (coin(rng)) w.push_back(e(std::uniform_int_distribution<int>(1, th.m())(rng)));
    else w.push_back(f(std::uniform_int_distribution<int>(1, th.n())(rng)));
  }
  return w;
}

inline ColorPattern random_pattern(const Degree& d, std::mt19937_64& rng) {
  ColorPattern p(static_cast<std::size_t>(d.k), Color::Blue);
  p.insert(p.end(), static_cast<std::size_t>(d.l), Color::Red);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Forward 3-cycle written additively: f_j e_i = e_{i+j} f_i with indices mod 2
// (index 2 stands for 0). Starting from u, push f letters through e_u k times;
// returns the red word v with f_v e_u = e_{u_k} f_v and the final blue word u_k.
inline std::pair<Word, Word> binomial_push(const std::vector<int>& u) {
  auto z = [](int i) { return i % 2; };
  auto back = [](int x) { return x == 0 ? 2 : 1; };
  std::vector<int> w;
  for (int i : u) w.push_back(z(i));
  std::size_t k = w.size();
  std::vector<int> xs;
  for (std::size_t r = 0; r < k; ++r) {
    xs.push_back(w[k - 1]);
    std::vector<int> w2(k);
    w2[0] = (w[k - 1] + w[0]) % 2;
    for (std::size_t s = 1; s < k; ++s) w2[s] = (w[s - 1] + w[s]) % 2;
    w = w2;
  }
  Word v, uk;
  for (std::size_t r = xs.size(); r-- > 0;) v.push_back(f(back(xs[r])));
  for (int x : w) uk.push_back(e(back(x)));
  return {v, uk};
}

// Pullback ring of v in colour c, as a sorted vertex set (empty for a tail).
inline std::set<int> ring_of(const RepGraph& g, int v, Color c) {
  std::vector<int> path{v};
  for (int step = 0; step <= g.size(); ++step) {
    auto e = g.in_edge(path.back(), c);
    if (!e) return {};
    int x = g.edges[*e].src;
    auto it = std::find(path.begin(), path.end(), x);
    if (it != path.end()) return std::set<int>(it, path.end());
    path.push_back(x);
  }
  return {};
}

}  // namespace oracle
