#include "rank2sg/atomic_reps.hpp"

#include <algorithm>
#include <set>

namespace rank2sg {

// ---------------------------------------------------------------- tails

void TailSpec::check() const {
  if (period.empty()) throw DomainError("empty-period", "tail period must be nonempty");
}

Letter TailSpec::at(std::size_t n) const {
  if (n < preperiod.size()) return preperiod[n];
  check();
  return period[(n - preperiod.size()) % period.size()];
}

Word TailSpec::prefix(std::size_t n) const { return block(0, n); }

Word TailSpec::block(std::size_t start, std::size_t len) const {
  Word w;
  w.reserve(len);
  for (std::size_t a = 0; a < len; ++a) w.push_back(at(start + a));
  return w;
}

// ---------------------------------------------------------------- domain

Rep make_periodic(const Theta& theta, const Sublattice& kernel, const Sublattice& period) {
  if (period.rank() != 2) throw DomainError("malformed-domain", "period lattice must have rank 2");
  if (!kernel.subset_of(period)) throw DomainError("malformed-domain", "kernel not contained in period lattice");
  Rep r;
  r.theta = theta;
  r.kernel = kernel;
  r.kind = DomainKind::Periodic;
  r.period = period;
  auto n = static_cast<std::size_t>(period.index());
  r.imap.assign(n, 0);
  r.jmap.assign(n, 0);
  r.alpha.assign(n, RationalAngle{});
  r.beta.assign(n, RationalAngle{});
  return r;
}

Rep make_window(const Theta& theta, const Sublattice& kernel, const Rect& rect, Vec2 threshold) {
  if (kernel.rank() > 1) throw DomainError("malformed-domain", "window domains need a kernel of rank 0 or 1");
  if (rect.width() <= 0 || rect.height() <= 0) throw DomainError("malformed-domain", "empty window");
  Rep r;
  r.theta = theta;
  r.kernel = kernel;
  r.kind = DomainKind::Window;
  r.rect = rect;
  r.threshold = threshold;
  auto n = static_cast<std::size_t>(rect.width() * rect.height());
  r.imap.assign(n, 0);
  r.jmap.assign(n, 0);
  r.alpha.assign(n, RationalAngle{});
  r.beta.assign(n, RationalAngle{});
  return r;
}

namespace {

// Range of c with lo <= x + c*d <= hi.
bool shift_range(std::int64_t x, std::int64_t d, std::int64_t lo, std::int64_t hi, std::int64_t& cmin,
                 std::int64_t& cmax) {
  if (d == 0) return x >= lo && x <= hi;
  std::int64_t a, b;
  if (d > 0) {
    a = ceil_div(lo - x, d);
    b = floor_div(hi - x, d);
  } else {
    a = ceil_div(hi - x, d);
    b = floor_div(lo - x, d);
  }
  cmin = std::max(cmin, a);
  cmax = std::min(cmax, b);
  return true;
}

}  // namespace

std::optional<std::size_t> Rep::slot(const Vec2& v) const {
  if (kind == DomainKind::Periodic) {
    Vec2 r = period.reduce(v);
    return static_cast<std::size_t>(r.t * period.basis()[0].s + r.s);
  }
  Vec2 w = v;
  if (kernel.rank() == 1) {
    const Vec2& k = kernel.basis()[0];
    std::int64_t cmin = std::numeric_limits<std::int64_t>::min() / 4;
    std::int64_t cmax = std::numeric_limits<std::int64_t>::max() / 4;
    if (!shift_range(v.s, k.s, rect.s_lo, rect.s_hi, cmin, cmax)) return std::nullopt;
    if (!shift_range(v.t, k.t, rect.t_lo, rect.t_hi, cmin, cmax)) return std::nullopt;
    if (cmin > cmax) return std::nullopt;
    w = v + k * cmin;
  }
  if (!rect.contains(w)) return std::nullopt;
  return static_cast<std::size_t>((w.s - rect.s_lo) + (w.t - rect.t_lo) * rect.width());
}

Vec2 Rep::point(std::size_t idx) const {
  auto i = static_cast<std::int64_t>(idx);
  if (kind == DomainKind::Periodic) {
    std::int64_t a = period.basis()[0].s;
    return {i % a, i / a};
  }
  return {rect.s_lo + i % rect.width(), rect.t_lo + i / rect.width()};
}

int Rep::i_at(const Vec2& v) const {
  auto s = slot(v);
  return s ? imap[*s] : 0;
}

int Rep::j_at(const Vec2& v) const {
  auto s = slot(v);
  return s ? jmap[*s] : 0;
}

bool Rep::constant_scalars() const {
  for (std::size_t a = 0; a < size(); ++a) {
    if (imap[a] != 0 && alpha[a] != alpha[0]) return false;
    if (jmap[a] != 0 && beta[a] != beta[0]) return false;
  }
  return true;
}

// ---------------------------------------------------------------- validation

Report validate_rep(const Rep& rep) {
  Report r;
  auto fail = [&](std::string code, std::string msg, std::optional<Vec2> at) {
    r.ok = false;
    r.code = std::move(code);
    r.message = std::move(msg);
    r.where = at;
    return r;
  };
  std::size_t n = rep.size();
  if (rep.jmap.size() != n || rep.alpha.size() != n || rep.beta.size() != n)
    return fail("malformed-domain", "table sizes differ", std::nullopt);
  if (rep.kind == DomainKind::Periodic) {
    if (rep.period.rank() != 2 || !rep.kernel.subset_of(rep.period) ||
        static_cast<std::int64_t>(n) != rep.period.index())
      return fail("malformed-domain", "periodic tables do not match the period lattice", std::nullopt);
  } else if (rep.kernel.rank() > 1 || static_cast<std::int64_t>(n) != rep.rect.width() * rep.rect.height()) {
    return fail("malformed-domain", "window tables do not match the rectangle", std::nullopt);
  }
  const Theta& th = rep.theta;
  for (std::size_t a = 0; a < n; ++a) {
    Vec2 x = rep.point(a);
    int i = rep.imap[a], j = rep.jmap[a];
    bool undefined_ok = rep.kind == DomainKind::Window;
    if ((i == 0 || j == 0) && !undefined_ok) return fail("malformed-domain", "missing label", x);
    if (i < 0 || i > th.m() || j < 0 || j > th.n()) return fail("out-of-range", "label out of range", x);
  }
  for (std::size_t a = 0; a < n; ++a) {
    Vec2 x = rep.point(a);
    auto up = rep.slot(x + kG2);
    auto right = rep.slot(x + kG1);
    if (!up || !right) continue;
    int i_up = rep.imap[*up], j_here = rep.jmap[a], i_here = rep.imap[a], j_right = rep.jmap[*right];
    if (i_up == 0 || j_here == 0 || i_here == 0 || j_right == 0) continue;
    if (th.forward(i_up, j_here) != std::pair{i_here, j_right})
      return fail("inconsistent-commutation", "commutation fails at " + to_string(x), x);
    if (rep.alpha[*up] + rep.beta[a] != rep.beta[*right] + rep.alpha[a])
      return fail("cocycle-violation", "scalar cocycle fails at " + to_string(x), x);
  }
  return r;
}

void require_valid(const Rep& rep) {
  Report r = validate_rep(rep);
  if (!r.ok) throw DomainError(r.code, r.message);
}

// ---------------------------------------------------------------- grids

namespace {

void set_constant_scalars(Rep& rep, RationalAngle a, RationalAngle b) {
  std::fill(rep.alpha.begin(), rep.alpha.end(), a);
  std::fill(rep.beta.begin(), rep.beta.end(), b);
}

// Fills one row of cells: given the labels i(s, t+1) along the top and the
// red label j(0, t) on the left, returns i(s, t) for s in [0,k) and
// j(s, t) for s in [0,k].
std::pair<std::vector<int>, std::vector<int>> fill_row(const Theta& th, const std::vector<int>& top, int left) {
  std::size_t k = top.size();
  std::vector<int> bottom(k), red(k + 1);
  red[0] = left;
  for (std::size_t s = 0; s < k; ++s) {
    auto [i2, j2] = th.forward(top[s], red[s]);
    bottom[s] = i2;
    red[s + 1] = j2;
  }
  return {bottom, red};
}

// Grid on [0,k] x [0,l] from W = e_u f_v. gi[t][s] = i(s,t) for t in [0,l],
// gj[t][s] = j(s,t) for t in [0,l).
struct Grid {
  std::vector<std::vector<int>> gi;
  std::vector<std::vector<int>> gj;
};

Grid fill_grid(const Theta& th, const Word& u, const Word& v) {
  std::size_t k = u.size(), l = v.size();
  Grid g;
  g.gi.assign(l + 1, std::vector<int>(k));
  g.gj.assign(l, std::vector<int>(k + 1));
  for (std::size_t s = 0; s < k; ++s) g.gi[l][s] = u[k - 1 - s].index;
  for (std::size_t t = l; t-- > 0;) {
    auto [bottom, red] = fill_row(th, g.gi[t + 1], v[l - 1 - t].index);
    g.gi[t] = bottom;
    g.gj[t] = red;
  }
  return g;
}

std::vector<int> row_of(const Word& u) {
  std::vector<int> row(u.size());
  for (std::size_t s = 0; s < u.size(); ++s) row[s] = u[u.size() - 1 - s].index;
  return row;
}

void require_color(const Word& w, Color c, const char* what) {
  for (const auto& x : w)
    if (x.color != c) throw DomainError("color-violation", std::string(what) + " has a letter of the wrong color");
}

}  // namespace

std::pair<Word, Word> cycle_words(const std::vector<std::pair<int, int>>& cycle) {
  Word u, v;
  for (std::size_t s = cycle.size(); s-- > 0;) u.push_back(e(cycle[s].first));
  for (const auto& c : cycle) v.push_back(f(c.second));
  return {u, v};
}

Rep from_theta_cycle(const Theta& theta, const std::vector<std::pair<int, int>>& cycle, RationalAngle alpha0,
                     RationalAngle beta0) {
  auto k = static_cast<std::int64_t>(cycle.size());
  if (k == 0) throw DomainError("not-a-cycle", "empty cycle");
  std::set<std::pair<int, int>> seen;
  for (std::int64_t s = 0; s < k; ++s) {
    auto [i, j] = cycle[s];
    if (i < 1 || i > theta.m() || j < 1 || j > theta.n()) throw DomainError("out-of-range", "cycle entry out of range");
    if (!seen.insert(cycle[s]).second) throw DomainError("not-a-cycle", "repeated pair in cycle");
    if (theta.forward(i, j) != cycle[(s + 1) % k])
      throw DomainError("not-a-cycle", "theta does not map entry " + std::to_string(s) + " to the next");
  }
  Sublattice K = Sublattice::from({{1, 1}, {k, 0}});
  Rep rep = make_periodic(theta, K, K);
  for (std::size_t a = 0; a < rep.size(); ++a) {
    Vec2 x = rep.point(a);
    std::int64_t g = mod_pos(x.s - x.t, k);
    rep.imap[a] = cycle[g].first;
    rep.jmap[a] = cycle[mod_pos(g - 1, k)].second;
  }
  set_constant_scalars(rep, alpha0, beta0);
  rep.meta["construction"] = "cycle";
  require_valid(rep);
  return rep;
}

Rep from_commuting_pair(const Theta& theta, const Word& u0, const Word& v0, RationalAngle alpha, RationalAngle beta) {
  require_color(u0, Color::Blue, "u0");
  require_color(v0, Color::Red, "v0");
  check_word(theta, u0);
  check_word(theta, v0);
  if (u0.empty() || v0.empty()) throw DomainError("empty-word", "commuting pair needs nonempty words");
  if (!commutes(theta, u0, v0))
    throw DomainError("not-commuting", "e_" + format_indices(u0) + " and f_" + format_indices(v0) + " do not commute");
  auto k = static_cast<std::int64_t>(u0.size());
  auto l = static_cast<std::int64_t>(v0.size());
  Grid g = fill_grid(theta, u0, v0);
  for (std::int64_t t = 0; t < l; ++t)
    if (g.gj[t][k] != g.gj[t][0]) throw DomainError("internal", "grid does not close horizontally");
  if (g.gi[0] != g.gi[l]) throw DomainError("internal", "grid does not close vertically");
  Sublattice K = Sublattice::from({{k, 0}, {0, l}});
  Rep rep = make_periodic(theta, K, K);
  for (std::size_t a = 0; a < rep.size(); ++a) {
    Vec2 x = rep.point(a);
    rep.imap[a] = g.gi[x.t][x.s];
    rep.jmap[a] = g.gj[x.t][x.s];
  }
  set_constant_scalars(rep, alpha, beta);
  rep.meta["construction"] = "pair";
  rep.meta["u0"] = format_indices(u0);
  rep.meta["v0"] = format_indices(v0);
  require_valid(rep);
  return rep;
}

Rep build_ring_by_tail(const Theta& theta, const Word& u0, const TailSpec& v0, RationalAngle alpha0) {
  require_color(u0, Color::Blue, "u0");
  check_word(theta, u0);
  v0.check();
  require_color(v0.preperiod, Color::Red, "tail preperiod");
  require_color(v0.period, Color::Red, "tail period");
  check_word(theta, v0.preperiod);
  check_word(theta, v0.period);
  if (u0.empty()) throw DomainError("empty-word", "ring word must be nonempty");
  auto k = static_cast<std::int64_t>(u0.size());
  auto horizon = static_cast<std::int64_t>(v0.preperiod.size() + 2 * v0.period.size());

  // rows[r] = labels of row t = -r, reds[r] = red labels on row t = -r-1.
  std::vector<std::vector<int>> rows{row_of(u0)};
  std::vector<std::vector<int>> reds;
  for (std::int64_t r = 0; r < horizon; ++r) {
    int j = v0.at(static_cast<std::size_t>(r)).index;
    auto [bottom, red] = fill_row(theta, rows.back(), j);
    if (red[k] != red[0])
      throw DomainError("commutation-fails", "e_u0 and f_v0(0," + std::to_string(r + 1) + "] do not commute");
    rows.push_back(bottom);
    red.pop_back();
    reds.push_back(red);
  }

  // Forward rows: repeat up to the first return of u0, else extend greedily.
  std::int64_t ret = 0;
  for (std::int64_t r = 1; r <= horizon && ret == 0; ++r)
    if (rows[r] == rows[0]) ret = r;
  std::vector<std::vector<int>> fwd_rows;  // fwd_rows[c] = row t = c+1
  std::vector<std::vector<int>> fwd_reds;  // fwd_reds[c] = reds on row t = c
  std::int64_t forward = ret > 0 ? ret : std::max<std::int64_t>(1, static_cast<std::int64_t>(v0.period.size()));
  if (ret > 0) {
    for (std::int64_t c = 0; c < forward; ++c) {
      fwd_rows.push_back(rows[ret - 1 - c]);
      fwd_reds.push_back(reds[ret - 1 - c]);
    }
  } else {
    std::vector<int> cur = rows[0];
    std::int64_t total = 1;
    for (std::int64_t c = 0; c < k; ++c) total *= theta.m();
    for (std::int64_t c = 0; c < forward; ++c) {
      bool found = false;
      for (std::int64_t code = 0; code < total && !found; ++code) {
        std::vector<int> cand(k);
        std::int64_t x = code;
        for (std::int64_t s = k - 1; s >= 0; --s) {
          cand[s] = static_cast<int>(x % theta.m()) + 1;
          x /= theta.m();
        }
        for (int j = 1; j <= theta.n() && !found; ++j) {
          auto [bottom, red] = fill_row(theta, cand, j);
          if (bottom == cur && red[k] == j) {
            red.pop_back();
            fwd_rows.push_back(cand);
            fwd_reds.push_back(red);
            cur = cand;
            found = true;
          }
        }
      }
      if (!found) throw DomainError("no-forward-extension", "no ring row fits above row " + std::to_string(c));
    }
  }

  Sublattice K = Sublattice::from({{k, 0}});
  Rect rect{0, k - 1, -horizon, forward};
  Rep rep = make_window(theta, K, rect, {kNoThreshold, 0});
  for (std::int64_t r = 0; r <= horizon; ++r)
    for (std::int64_t s = 0; s < k; ++s) rep.imap[*rep.slot({s, -r})] = rows[r][s];
  for (std::int64_t r = 0; r < horizon; ++r)
    for (std::int64_t s = 0; s < k; ++s) rep.jmap[*rep.slot({s, -r - 1})] = reds[r][s];
  for (std::int64_t c = 0; c < forward; ++c)
    for (std::int64_t s = 0; s < k; ++s) {
      rep.imap[*rep.slot({s, c + 1})] = fwd_rows[c][s];
      rep.jmap[*rep.slot({s, c})] = fwd_reds[c][s];
    }
  set_constant_scalars(rep, alpha0, RationalAngle{});
  rep.meta["construction"] = "ring-tail";
  rep.meta["first_return"] = std::to_string(ret);
  rep.meta["symmetry_bound"] = std::to_string(horizon / 2);
  require_valid(rep);
  return rep;
}

// ---------------------------------------------------------------- sigma

SigmaWindow sigma_of_word(const Theta& theta, const Word& tau, int width, int height) {
  if (width < 0 || height < 0) throw DomainError("out-of-range", "negative window size");
  std::size_t pairs = tau.size() / 2;
  if (tau.size() % 2 != 0 || static_cast<int>(pairs) < std::max(width, height) + 1)
    throw DomainError("tail-too-short", "need " + std::to_string(std::max(width, height) + 1) + " letter pairs");
  for (std::size_t a = 0; a < tau.size(); ++a)
    if (tau[a].color != (a % 2 == 0 ? Color::Blue : Color::Red))
      throw DomainError("color-violation", "tail must alternate e, f letters");
  check_word(theta, tau);
  SigmaWindow w;
  w.width = width;
  w.height = height;
  std::size_t n = static_cast<std::size_t>((width + 1) * (height + 1));
  w.i.assign(n, 0);
  w.j.assign(n, 0);
  auto T = static_cast<std::int64_t>(pairs);
  for (std::int64_t t = -height; t <= 0; ++t) {
    for (std::int64_t s = -width; s <= 0; ++s) {
      ColorPattern head(static_cast<std::size_t>(-s), Color::Blue);
      head.insert(head.end(), static_cast<std::size_t>(-t), Color::Red);
      ColorPattern pa = head, pb = head;
      pa.insert(pa.end(), static_cast<std::size_t>(T + s), Color::Blue);
      pa.insert(pa.end(), static_cast<std::size_t>(T + t), Color::Red);
      pb.insert(pb.end(), static_cast<std::size_t>(T + t), Color::Red);
      pb.insert(pb.end(), static_cast<std::size_t>(T + s), Color::Blue);
      std::size_t pos = static_cast<std::size_t>(-s - t);
      w.i[w.index(s, t)] = refactor(theta, tau, pa)[pos].index;
      w.j[w.index(s, t)] = refactor(theta, tau, pb)[pos].index;
    }
  }
  return w;
}

SigmaWindow build_inductive_window(const Theta& theta, const TailSpec& tau, int width, int height) {
  tau.check();
  std::size_t pairs = static_cast<std::size_t>(std::max(width, height) + 1);
  return sigma_of_word(theta, tau.prefix(2 * pairs), width, height);
}

Rep sigma_to_rep(const Theta& theta, const SigmaWindow& w) {
  Rect rect{-w.width, 0, -w.height, 0};
  Rep rep = make_window(theta, Sublattice{}, rect, {0, 0});
  for (std::int64_t t = -w.height; t <= 0; ++t)
    for (std::int64_t s = -w.width; s <= 0; ++s) {
      std::size_t a = *rep.slot({s, t});
      if (s < 0) rep.imap[a] = w.i_at(s + 1, t);
      if (t < 0) rep.jmap[a] = w.j_at(s, t + 1);
    }
  rep.meta["construction"] = "3a";
  rep.meta["symmetry_bound"] = std::to_string(std::min(w.width, w.height) / 2);
  require_valid(rep);
  return rep;
}

// ---------------------------------------------------------------- 3bi / 3bii

Rep build_3bi(const Theta& theta, const Word& u0, const Word& v0, RationalAngle beta) {
  require_color(u0, Color::Blue, "u0");
  require_color(v0, Color::Red, "v0");
  check_word(theta, u0);
  check_word(theta, v0);
  if (u0.empty() || v0.empty()) throw DomainError("empty-word", "3bi needs nonempty words");
  auto cyc = theta_prime_cycle(theta, u0, v0);
  auto p = static_cast<std::int64_t>(cyc.size());
  auto k = static_cast<std::int64_t>(u0.size());
  auto l = static_cast<std::int64_t>(v0.size());
  Word U, V;
  for (std::int64_t r = p; r-- > 0;) U = concat(U, cyc[r].first);
  for (std::int64_t r = 0; r < p; ++r) V = concat(V, cyc[r].second);
  Rep grid = from_commuting_pair(theta, U, V);

  Sublattice K = Sublattice::from({{k, l}});
  Sublattice P = Sublattice::from({{p * k, 0}, {0, p * l}, {k, l}});
  Rep rep = make_periodic(theta, K, P);
  for (std::size_t a = 0; a < rep.size(); ++a) {
    Vec2 x = rep.point(a);
    rep.imap[a] = grid.i_at(x);
    rep.jmap[a] = grid.j_at(x);
  }
  for (std::size_t a = 0; a < grid.size(); ++a) {
    Vec2 x = grid.point(a);
    if (rep.i_at(x) != grid.imap[a] || rep.j_at(x) != grid.jmap[a])
      throw DomainError("internal", "unfolded grid is not (k,l) periodic at " + to_string(x));
  }
  CharacterOnZ2 phi = extend_character(CharacterOnSublattice{K, {beta}});
  set_constant_scalars(rep, phi.x, phi.y);
  rep.meta["construction"] = "3bi";
  rep.meta["p"] = std::to_string(p);
  rep.meta["U"] = format_indices(U);
  rep.meta["V"] = format_indices(V);
  require_valid(rep);
  return rep;
}

std::optional<std::pair<std::vector<Word>, std::vector<Word>>> backward_blocks(const Theta& theta, const Word& u0,
                                                                               const Word& v0, int count) {
  std::vector<Word> us{u0}, vs{v0};
  auto l = static_cast<int>(v0.size());
  std::int64_t total = 1;
  for (int c = 0; c < l; ++c) total *= theta.n();
  for (int d = 0; d < count; ++d) {
    bool found = false;
    for (std::int64_t code = 0; code < total && !found; ++code) {
      std::vector<int> idx(l);
      std::int64_t x = code;
      for (int c = l - 1; c >= 0; --c) {
        idx[c] = static_cast<int>(x % theta.n()) + 1;
        x /= theta.n();
      }
      Word cand = red_word(idx);
      auto [u2, v2] = theta_prime_apply(theta, us.back(), cand);
      if (v2 == vs.back()) {
        us.push_back(u2);
        vs.push_back(cand);
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return std::pair{us, vs};
}

Rep build_3bii(const Theta& theta, const TailSpec& tau_e, const TailSpec& tau_f, int k, int l, RationalAngle beta) {
  tau_e.check();
  tau_f.check();
  if (k < 1 || l < 1) throw DomainError("out-of-range", "block lengths must be positive");
  for (const Word* w : {&tau_e.preperiod, &tau_e.period}) require_color(*w, Color::Blue, "tau_e");
  for (const Word* w : {&tau_f.preperiod, &tau_f.period}) require_color(*w, Color::Red, "tau_f");
  auto span = [](const TailSpec& t) { return t.preperiod.size() + 2 * t.period.size(); };
  int D = static_cast<int>(std::max((span(tau_e) + k - 1) / k, (span(tau_f) + l - 1) / l)) + 1;
  D = std::max(D, 2);

  // u[c], v[c] hold the blocks u_{-c}, v_{-c}.
  std::vector<Word> u, v;
  for (int c = 0; c <= D; ++c) {
    u.push_back(tau_e.block(static_cast<std::size_t>(c) * k, k));
    v.push_back(tau_f.block(static_cast<std::size_t>(c) * l, l));
    check_word(theta, u.back());
    check_word(theta, v.back());
  }
  for (int c = 1; c <= D; ++c) {
    auto [u2, v2] = theta_prime_apply(theta, u[c - 1], v[c]);
    if (u2 != u[c] || v2 != v[c - 1])
      throw DomainError("compatibility-violation", "block relation fails at d=" + std::to_string(-c));
  }

  // First repeated block pair, scanning downward.
  int rep_a = -1, rep_b = -1;
  for (int b = 1; b <= D && rep_b < 0; ++b)
    for (int a = 0; a < b; ++a)
      if (u[a] == u[b] && v[a] == v[b]) {
        rep_a = a;
        rep_b = b;
        break;
      }
  if (rep_b < 0) throw DomainError("no-repeat", "no repeated block pair within the checked horizon");
  Word U, Vw;
  for (int c = rep_a; c < rep_b; ++c) {
    U = concat(U, u[c]);
    Vw = concat(Vw, v[c]);
  }
  if (!commutes(theta, U, Vw)) throw DomainError("internal", "long words at the first repeat do not commute");

  // Forward blocks (index c >= 1 holds u_c, v_c).
  int q = rep_b - rep_a;
  int F = q;
  std::vector<Word> fu{u[0]}, fv{v[0]};
  if (rep_a == 0) {
    for (int c = 1; c <= F; ++c) {
      fu.push_back(u[q - c]);
      fv.push_back(v[q - c]);
    }
  } else {
    std::int64_t total = 1;
    for (int c = 0; c < k; ++c) total *= theta.m();
    for (int c = 1; c <= F; ++c) {
      bool found = false;
      for (std::int64_t code = 0; code < total && !found; ++code) {
        std::vector<int> idx(k);
        std::int64_t x = code;
        for (int a = k - 1; a >= 0; --a) {
          idx[a] = static_cast<int>(x % theta.m()) + 1;
          x /= theta.m();
        }
        Word cand = blue_word(idx);
        auto [u2, v2] = theta_prime_apply(theta, cand, fv.back());
        if (u2 == fu.back()) {
          fu.push_back(cand);
          fv.push_back(v2);
          found = true;
        }
      }
      if (!found) throw DomainError("no-forward-extension", "no block pair fits at d=" + std::to_string(c));
    }
  }
  auto ublock = [&](int d) -> const Word& { return d <= 0 ? u[-d] : fu[d]; };
  auto vblock = [&](int d) -> const Word& { return d <= 0 ? v[-d] : fv[d]; };

  Sublattice K = Sublattice::from({{k, -l}});
  Rect rect{static_cast<std::int64_t>(-D) * k, static_cast<std::int64_t>(F) * k - 1, -l, -1};
  Rep rep = make_window(theta, K, rect, {-1, kNoThreshold});
  // Segment d covers columns [(d-1)k, dk); filled upward from the bottom row
  // (a copy of u_{d-1}) and leftward from the column carrying v_d.
  for (int d = -D + 1; d <= F; ++d) {
    const Word& ub = ublock(d - 1);
    const Word& vb = vblock(d);
    std::int64_t s0 = static_cast<std::int64_t>(d - 1) * k;
    std::vector<std::vector<int>> gi(l + 1, std::vector<int>(k));  // gi[t+l][s-s0]
    std::vector<std::vector<int>> gj(l, std::vector<int>(k + 1));  // gj[t+l][s-s0]
    for (int c = 0; c < k; ++c) gi[0][c] = ub[k - 1 - c].index;
    for (int t = 0; t < l; ++t) gj[t][k] = vb[l - 1 - t].index;
    for (int t = 0; t < l; ++t)
      for (int c = k - 1; c >= 0; --c) {
        auto [i2, j2] = theta.inverse(gi[t][c], gj[t][c + 1]);
        gi[t + 1][c] = i2;
        gj[t][c] = j2;
      }
    const Word& top = ublock(d);
    const Word& left = vblock(d - 1);
    for (int c = 0; c < k; ++c)
      if (gi[l][c] != top[k - 1 - c].index)
        throw DomainError("compatibility-violation", "block relation fails at d=" + std::to_string(d - 1));
    for (int t = 0; t < l; ++t)
      if (gj[t][0] != left[l - 1 - t].index)
        throw DomainError("compatibility-violation", "block relation fails at d=" + std::to_string(d - 1));
    for (int t = 0; t < l; ++t)
      for (int c = 0; c < k; ++c) {
        std::size_t a = *rep.slot({s0 + c, t - l});
        rep.imap[a] = gi[t][c];
        rep.jmap[a] = gj[t][c];
      }
  }
  CharacterOnZ2 phi = extend_character(CharacterOnSublattice{K, {beta}});
  set_constant_scalars(rep, phi.x, phi.y);
  rep.meta["construction"] = "3bii";
  rep.meta["repeat"] = std::to_string(-rep_a) + "," + std::to_string(-rep_b);
  rep.meta["repeat_u"] = format_indices(U);
  rep.meta["repeat_v"] = format_indices(Vw);
  rep.meta["symmetry_bound"] = std::to_string(std::max(k, l) * q);
  require_valid(rep);
  return rep;
}

// ---------------------------------------------------------------- symmetry

SymmetryGroup window_symmetry(const Rep& rep, std::int64_t bound) {
  SymmetryGroup out;
  out.exact = false;
  out.bound = bound;
  out.threshold = rep.threshold;
  std::vector<Vec2> gens = rep.kernel.basis();
  for (std::int64_t p = -bound; p <= bound; ++p)
    for (std::int64_t q = -bound; q <= bound; ++q) {
      Vec2 h{p, q};
      if (rep.kernel.contains(h)) continue;
      std::size_t compared = 0;
      bool ok = true;
      for (std::size_t a = 0; a < rep.size() && ok; ++a) {
        Vec2 x = rep.point(a);
        if (!rep.in_core(x)) continue;
        auto b = rep.slot(x + h);
        if (!b || !rep.in_core(rep.point(*b))) continue;
        if (rep.imap[a] && rep.imap[*b]) {
          ++compared;
          ok = rep.imap[a] == rep.imap[*b];
        }
        if (ok && rep.jmap[a] && rep.jmap[*b]) {
          ++compared;
          ok = rep.jmap[a] == rep.jmap[*b];
        }
      }
      if (ok && compared > 0) gens.push_back(h);
    }
  out.lattice = Sublattice::from(gens);
  return out;
}

SymmetryGroup symmetry_group(const Rep& rep) {
  if (rep.kind == DomainKind::Window) {
    std::int64_t bound = std::min(rep.rect.width(), rep.rect.height()) / 2;
    auto it = rep.meta.find("symmetry_bound");
    if (it != rep.meta.end()) bound = std::stoll(it->second);
    return window_symmetry(rep, bound);
  }
  SymmetryGroup out;
  std::vector<Vec2> gens = rep.period.basis();
  for (std::size_t h = 0; h < rep.size(); ++h) {
    Vec2 hv = rep.point(h);
    bool ok = true;
    for (std::size_t a = 0; a < rep.size() && ok; ++a) {
      Vec2 x = rep.point(a);
      std::size_t b = *rep.slot(x + hv);
      ok = rep.imap[a] == rep.imap[b] && rep.jmap[a] == rep.jmap[b];
    }
    if (ok) gens.push_back(hv);
  }
  out.lattice = Sublattice::from(gens);
  return out;
}

// ---------------------------------------------------------------- scalars

RationalAngle path_phase(const Rep& rep, const Vec2& from, const Vec2& delta) {
  RationalAngle ph;
  Vec2 x = from;
  auto need = [&](const Vec2& v) {
    auto s = rep.slot(v);
    if (!s) throw DomainError("window-too-small", "path leaves the domain at " + to_string(v));
    return *s;
  };
  for (std::int64_t c = 0; c < std::llabs(delta.s); ++c) {
    if (delta.s > 0) {
      ph += rep.alpha[need(x)];
      x = x + kG1;
    } else {
      x = x - kG1;
      ph -= rep.alpha[need(x)];
    }
  }
  for (std::int64_t c = 0; c < std::llabs(delta.t); ++c) {
    if (delta.t > 0) {
      ph += rep.beta[need(x)];
      x = x + kG2;
    } else {
      x = x - kG2;
      ph -= rep.beta[need(x)];
    }
  }
  need(x);
  return ph;
}

CharacterOnSublattice scalar_character(const Rep& rep) {
  CharacterOnSublattice psi{rep.kernel, {}};
  const auto& basis = rep.kernel.basis();
  if (basis.empty()) return psi;
  for (std::size_t a = 0; a < rep.size(); ++a) {
    Vec2 base = rep.point(a);
    try {
      std::vector<RationalAngle> vals;
      for (const auto& b : basis) vals.push_back(path_phase(rep, base, b));
      if (basis.size() == 2 &&
          path_phase(rep, base, basis[0] + basis[1]) != vals[0] + vals[1])
        throw DomainError("cocycle-violation", "closed path phases are not additive");
      psi.values = vals;
      return psi;
    } catch (const DomainError& e) {
      if (e.code() != "window-too-small") throw;
    }
  }
  throw DomainError("window-too-small", "no closed path for the kernel basis fits in the window");
}

Rep apply_gauge(const Rep& rep, const std::vector<RationalAngle>& gamma) {
  if (gamma.size() != rep.size()) throw DomainError("malformed-domain", "gauge size mismatch");
  Rep out = rep;
  for (std::size_t a = 0; a < rep.size(); ++a) {
    Vec2 x = rep.point(a);
    if (auto r = rep.slot(x + kG1)) out.alpha[a] = rep.alpha[a] + gamma[*r] - gamma[a];
    if (auto u = rep.slot(x + kG2)) out.beta[a] = rep.beta[a] + gamma[*u] - gamma[a];
  }
  return out;
}

Normalized normalize_scalars(const Rep& rep) {
  Report r = validate_rep(rep);
  if (!r.ok) throw DomainError(r.code, r.message);
  if (rep.constant_scalars())
    return Normalized{rep, rep.alpha0(), rep.beta0(), std::vector<RationalAngle>(rep.size())};
  if (!rep.finite()) throw DomainError("unsupported-domain", "per-edge scalars are only normalized on finite groups");
  CharacterOnSublattice psi = scalar_character(rep);
  CharacterOnZ2 phi = extend_character(psi);
  std::vector<RationalAngle> gamma(rep.size());
  Vec2 origin = rep.point(0);
  for (std::size_t a = 0; a < rep.size(); ++a) {
    Vec2 x = rep.point(a);
    gamma[a] = phi(x - origin) - path_phase(rep, origin, x - origin);
  }
  Rep out = apply_gauge(rep, gamma);
  for (std::size_t a = 0; a < out.size(); ++a)
    if (out.alpha[a] != phi.x || out.beta[a] != phi.y)
      throw DomainError("internal", "gauge did not produce constant scalars");
  return Normalized{out, phi.x, phi.y, gamma};
}

// ---------------------------------------------------------------- decomposition

namespace {

Summand make_summand(const Rep& rep, const Sublattice& L, const CharacterOnSublattice& chi) {
  Summand sm;
  sm.chi = chi;
  CharacterOnZ2 phi0{rep.alpha0(), rep.beta0()};
  sm.psi = CharacterOnSublattice{L, {}};
  for (std::size_t c = 0; c < L.basis().size(); ++c) sm.psi.values.push_back(phi0(L.basis()[c]) + chi.values[c]);
  sm.rep = make_periodic(rep.theta, L, L);
  for (std::size_t a = 0; a < sm.rep.size(); ++a) {
    Vec2 g = sm.rep.point(a);
    Vec2 h1 = g + kG1 - L.reduce(g + kG1);
    Vec2 h2 = g + kG2 - L.reduce(g + kG2);
    sm.h1.push_back(h1);
    sm.h2.push_back(h2);
    sm.rep.imap[a] = rep.i_at(g);
    sm.rep.jmap[a] = rep.j_at(g);
    sm.rep.alpha[a] = rep.alpha0() + chi(h1);
    sm.rep.beta[a] = rep.beta0() + chi(h2);
  }
  sm.rep.meta["construction"] = "summand";
  require_valid(sm.rep);
  return sm;
}

}  // namespace

Decomposition decompose(const Rep& rep) {
  if (rep.kind != DomainKind::Periodic)
    throw DomainError("unsupported-domain", "decomposition needs periodic label data");
  if (!rep.constant_scalars()) throw DomainError("non-constant-scalars", "normalize the scalars first");
  require_valid(rep);
  Decomposition out;
  out.H = join(symmetry_group(rep).lattice, rep.kernel);
  const Sublattice& L = out.H;
  const Sublattice K = rep.kernel;
  if (K.rank() == 2) {
    std::set<std::vector<RationalAngle>> seen;
    std::vector<CharacterOnSublattice> chis;
    for (const auto& chi : QuotientGroup(K).characters()) {
      CharacterOnSublattice r = restrict_character(chi, L);
      if (seen.insert(r.values).second) chis.push_back(r);
    }
    std::sort(chis.begin(), chis.end(), [](const auto& a, const auto& b) { return a.values < b.values; });
    for (const auto& chi : chis) out.summands.push_back(make_summand(rep, L, chi));
    out.finite = true;
    out.descriptor = "characters of " + L.str() + " vanishing on " + K.str();
    return out;
  }
  out.finite = false;
  CharacterOnSublattice zero{L, std::vector<RationalAngle>(L.basis().size())};
  out.quotient = make_summand(rep, L, zero).rep;
  out.descriptor = "characters of " + L.str() + " vanishing on " + K.str() + " (continuous family)";
  Rep copy = rep;
  out.sample = [copy, L, K](std::int64_t q) {
    std::vector<Summand> res;
    if (q <= 0) return res;
    std::size_t r = L.basis().size();
    std::vector<std::int64_t> num(r, 0);
    for (;;) {
      CharacterOnSublattice chi{L, {}};
      for (auto a : num) chi.values.push_back(RationalAngle(a, q));
      bool vanishes = true;
      for (const auto& kv : K.basis()) vanishes = vanishes && chi(kv).is_zero();
      if (vanishes) res.push_back(make_summand(copy, L, chi));
      std::size_t d = 0;
      while (d < r && ++num[d] == q) num[d++] = 0;
      if (d == r) break;
    }
    return res;
  };
  return out;
}

bool is_irreducible(const Rep& rep) { return symmetry_group(rep).lattice == rep.kernel; }

bool equivalent_reps(const Rep& a, const Rep& b) {
  if (!a.finite() || !b.finite()) throw DomainError("infinite-domain", "equivalence is decided for finite groups only");
  require_valid(a);
  require_valid(b);
  if (!(a.theta == b.theta) || !(a.kernel == b.kernel)) return false;
  if (scalar_character(a) != scalar_character(b)) return false;
  for (std::size_t g0 = 0; g0 < b.size(); ++g0) {
    Vec2 shift = b.point(g0);
    bool ok = true;
    for (std::size_t x = 0; x < a.size() && ok; ++x) {
      Vec2 p = a.point(x);
      ok = a.imap[x] == b.i_at(p + shift) && a.jmap[x] == b.j_at(p + shift);
    }
    if (ok) return true;
  }
  return false;
}

// ---------------------------------------------------------------- tail symmetry

SymmetryGroup sigma_symmetry(const SigmaWindow& w, std::int64_t bound, std::int64_t threshold) {
  SymmetryGroup out;
  out.exact = false;
  out.bound = bound;
  out.threshold = {threshold, threshold};
  std::vector<Vec2> gens;
  for (std::int64_t p = -bound; p <= bound; ++p)
    for (std::int64_t q = -bound; q <= bound; ++q) {
      if (p == 0 && q == 0) continue;
      std::size_t compared = 0;
      bool ok = true;
      for (std::int64_t t = -w.height; t <= threshold && ok; ++t)
        for (std::int64_t s = -w.width; s <= threshold && ok; ++s) {
          std::int64_t s2 = s + p, t2 = t + q;
          if (!w.contains(s2, t2) || s2 > threshold || t2 > threshold) continue;
          ++compared;
          ok = w.i_at(s, t) == w.i_at(s2, t2) && w.j_at(s, t) == w.j_at(s2, t2);
        }
      if (ok && compared > 0) gens.push_back({p, q});
    }
  out.lattice = Sublattice::from(gens);
  return out;
}

SymmetryGroup tail_symmetry(const Theta& theta, const TailSpec& tau, int horizon, bool strict) {
  tau.check();
  int a = static_cast<int>((tau.preperiod.size() + 1) / 2);
  int b = static_cast<int>(tau.period.size() % 2 == 0 ? tau.period.size() / 2 : tau.period.size());
  if (strict && horizon < a + 2 * b)
    throw DomainError("horizon-too-small", "horizon " + std::to_string(horizon) + " below preperiod + 2*period = " +
                                               std::to_string(a + 2 * b));
  if (horizon < 1) throw DomainError("horizon-too-small", "horizon must be positive");
  SigmaWindow w = build_inductive_window(theta, tau, horizon, horizon);
  std::int64_t bound = std::max(0, (horizon - a) / 2);
  return sigma_symmetry(w, bound, -a);
}

}  // namespace rank2sg
