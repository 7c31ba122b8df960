#include "rank2sg/search.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_set>

namespace rank2sg {

// ---------------------------------------------------------------- iso classes

std::vector<int> theta_table(const Theta& theta) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(theta.m() * theta.n()));
  for (int i = 1; i <= theta.m(); ++i)
    for (int j = 1; j <= theta.n(); ++j) {
      auto [i2, j2] = theta.forward(i, j);
      out.push_back((i2 - 1) * theta.n() + (j2 - 1));
    }
  return out;
}

Theta relabel(const Theta& theta, const std::vector<int>& pi, const std::vector<int>& rho, bool swap) {
  if (static_cast<int>(pi.size()) != theta.m() || static_cast<int>(rho.size()) != theta.n())
    throw DomainError("out-of-range", "relabelling sizes do not match theta");
  if (swap && theta.m() != theta.n()) throw DomainError("out-of-range", "e/f exchange needs m == n");
  std::vector<std::array<int, 4>> raw;
  for (const auto& r : theta.relations()) {
    std::array<int, 4> x{pi[r[0] - 1], rho[r[1] - 1], pi[r[2] - 1], rho[r[3] - 1]};
    if (swap) x = {x[3], x[2], x[1], x[0]};
    raw.push_back(x);
  }
  return Theta::from_relations(theta.m(), theta.n(), raw);
}

namespace {

std::uint64_t pack(const std::vector<int>& p) {
  std::uint64_t x = 0;
  for (int v : p) x = (x << 4) | static_cast<std::uint64_t>(v);
  return x;
}

}  // namespace

IsoClassReport iso_classes(int m, int n, bool allow_swap, int cap) {
  if (m < 1 || n < 1) throw DomainError("out-of-range", "m and n must be positive");
  if (cap > 10) cap = 10;
  if (m * n > cap)
    throw DomainError("cap-exceeded", "m*n = " + std::to_string(m * n) + " exceeds cap " + std::to_string(cap));
  const int N = m * n;
  IsoClassReport rep;
  rep.m = m;
  rep.n = n;
  rep.swap = allow_swap && m == n;

  // Cell maps of the acting group, as (map, swap flag).
  std::vector<std::pair<std::vector<int>, bool>> group;
  std::vector<int> pi(m), rho(n);
  std::iota(pi.begin(), pi.end(), 0);
  do {
    std::iota(rho.begin(), rho.end(), 0);
    do {
      std::vector<int> cell(N);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) cell[i * n + j] = pi[i] * n + rho[j];
      group.emplace_back(cell, false);
      if (rep.swap) group.emplace_back(cell, true);
    } while (std::next_permutation(rho.begin(), rho.end()));
  } while (std::next_permutation(pi.begin(), pi.end()));

  auto act = [&](const std::vector<int>& p, const std::vector<int>& cell, bool swap) {
    std::vector<int> q(N);
    for (int c = 0; c < N; ++c) q[cell[c]] = cell[p[c]];
    if (!swap) return q;
    // e_i f_j = f_j' e_i' becomes e_j' f_i' = f_j e_i.
    std::vector<int> r(N);
    auto tr = [&](int c) { return (c % n) * n + c / n; };
    for (int c = 0; c < N; ++c) r[tr(q[c])] = tr(c);
    return r;
  };

  std::unordered_set<std::uint64_t> seen;
  std::vector<std::pair<std::vector<int>, std::size_t>> found;
  std::vector<int> p(N);
  std::iota(p.begin(), p.end(), 0);
  do {
    ++rep.total;
    if (seen.count(pack(p))) continue;
    std::set<std::vector<int>> orbit;
    for (const auto& [cell, sw] : group) orbit.insert(act(p, cell, sw));
    for (const auto& q : orbit) seen.insert(pack(q));
    found.emplace_back(*orbit.begin(), orbit.size());
  } while (std::next_permutation(p.begin(), p.end()));

  std::sort(found.begin(), found.end());
  for (const auto& [table, size] : found) {
    std::vector<std::array<int, 4>> raw;
    for (int c = 0; c < N; ++c) raw.push_back({c / n + 1, c % n + 1, table[c] / n + 1, table[c] % n + 1});
    rep.representatives.push_back(Theta::from_relations(m, n, raw));
    rep.orbit_sizes.push_back(size);
  }
  return rep;
}

// ---------------------------------------------------------------- commuting pairs

namespace {

bool primitive(const Word& w) {
  std::size_t n = w.size();
  if (n == 0) return false;
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t a = d; a < n && periodic; ++a) periodic = w[a] == w[a - d];
    if (periodic) return false;
  }
  return true;
}

std::optional<CommutingPairResult> certify(const Theta& theta, const Word& u, const Word& v, int L,
                                           std::size_t t, std::size_t max_rep_size) {
  if (u.size() * v.size() > max_rep_size) return std::nullopt;
  if (!commutes(theta, u, v)) throw DomainError("internal", "cycle words fail to commute");
  Rep rep = from_commuting_pair(theta, u, v);
  SymmetryGroup sym = symmetry_group(rep);
  CommutingPairResult res;
  res.u = u;
  res.v = v;
  res.block_len = L;
  res.cycle = t;
  res.symmetry = sym.lattice;
  res.dimension = sym.lattice.index();
  return res;
}

}  // namespace

CommutingPairResult find_commuting_pair(const Theta& theta, std::int64_t target, int max_block_len,
                                        std::size_t max_rep_size) {
  if (target < 1) throw DomainError("out-of-range", "target dimension must be positive");
  for (int L = 1; L <= max_block_len; ++L) {
    ThetaPrime tp(theta, L, L, 4000000);
    tp.tabulate();
    const auto& table = tp.table();

    bool all_fixed = true;
    for (std::uint64_t c = 0; c < tp.size() && all_fixed; ++c) all_fixed = table[c] == c;
    if (all_fixed) {
      Word u(static_cast<std::size_t>(L), e(std::min(2, theta.m())));
      Word v(static_cast<std::size_t>(L), f(std::min(2, theta.n())));
      u[0] = e(1);
      v[0] = f(1);
      auto res = certify(theta, u, v, L, 1, max_rep_size);
      if (res && res->dimension >= target) return *res;
      continue;
    }

    std::vector<bool> seen(tp.size(), false);
    for (std::uint64_t c = 0; c < tp.size(); ++c) {
      if (seen[c]) continue;
      std::vector<std::uint64_t> cyc;
      for (std::uint64_t x = c; !seen[x]; x = table[x]) {
        seen[x] = true;
        cyc.push_back(x);
      }
      Word U, V;
      if (cyc.size() == 1) {
        auto [u, v] = tp.decode(cyc[0]);
        if (!primitive(u) || !primitive(v)) continue;
        U = u;
        V = v;
      } else {
        // U = u_{t-1} ... u_0, V = v_0 ... v_{t-1}
        for (std::size_t a = 0; a < cyc.size(); ++a) {
          auto [u, v] = tp.decode(cyc[cyc.size() - 1 - a]);
          U = concat(U, u);
          auto [u2, v2] = tp.decode(cyc[a]);
          V = concat(V, v2);
        }
      }
      auto res = certify(theta, U, V, L, cyc.size(), max_rep_size);
      if (res && res->dimension >= target) return *res;
    }
  }
  throw DomainError("target-not-reached",
                    "no pair of dimension >= " + std::to_string(target) + " up to block length " +
                        std::to_string(max_block_len));
}

// ---------------------------------------------------------------- aperiodicity

int aperiodic_horizon(int max_len) { return max_len / 2 - 1; }

namespace {

// Searches prefixes whose first pair has index `first`; returns the lexicographically first witness.
std::optional<AperiodicWitness> search_subtree(const Theta& theta, int pairs, int first) {
  const int m = theta.m(), n = theta.n();
  const int w = pairs - 1;
  std::vector<int> idx(static_cast<std::size_t>(pairs), 0);
  idx[0] = first;
  Word word(static_cast<std::size_t>(2 * pairs));
  // Iterate positions 1..pairs-1 as an odometer; depth first in lexicographic order.
  for (;;) {
    for (int a = 0; a < pairs; ++a) {
      word[2 * a] = e(idx[a] / n + 1);
      word[2 * a + 1] = f(idx[a] % n + 1);
    }
    SigmaWindow win = sigma_of_word(theta, word, w, w);
    SymmetryGroup sym = sigma_symmetry(win, w / 2, 0);
    // The outgoing-label window drops the outermost row and column; asking for
    // no symmetry there too rules out witnesses that differ only at the edge.
    if (sym.lattice.rank() == 0 && window_symmetry(sigma_to_rep(theta, win), w / 2).lattice.rank() == 0)
      return AperiodicWitness{TailSpec{{}, word}, win, sym};
    int a = pairs - 1;
    while (a >= 1 && ++idx[a] == m * n) idx[a--] = 0;
    if (a < 1) return std::nullopt;
  }
}

}  // namespace

std::optional<AperiodicWitness> aperiodic_search(const Theta& theta, int max_len, int jobs) {
  int pairs = max_len / 2;
  if (pairs < 2) return std::nullopt;
  const int roots = theta.m() * theta.n();
  jobs = std::clamp(jobs, 1, roots);
  std::vector<std::optional<AperiodicWitness>> result(static_cast<std::size_t>(roots));
  std::atomic<int> best{roots};
  auto worker = [&](int id) {
    for (int r = id; r < roots; r += jobs) {
      if (r > best.load()) return;
      result[static_cast<std::size_t>(r)] = search_subtree(theta, pairs, r);
      if (result[static_cast<std::size_t>(r)]) {
        int cur = best.load();
        while (r < cur && !best.compare_exchange_weak(cur, r)) {
        }
        return;
      }
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int id = 0; id < jobs; ++id) pool.emplace_back(worker, id);
    for (auto& th : pool) th.join();
  }
  for (auto& r : result)
    if (r) return r;
  return std::nullopt;
}

// ---------------------------------------------------------------- survey

std::vector<SurveyRow> theta_prime_survey(const Theta& theta, int kmax, int lmax, std::uint64_t cap) {
  std::vector<SurveyRow> out;
  for (int k = 1; k <= kmax; ++k)
    for (int l = 1; l <= lmax; ++l) {
      ThetaPrime tp(theta, k, l, cap);
      SurveyRow row;
      row.k = k;
      row.l = l;
      row.size = tp.size();
      for (auto len : tp.cycle_lengths()) ++row.cycles[len];
      out.push_back(row);
    }
  return out;
}

}  // namespace rank2sg
