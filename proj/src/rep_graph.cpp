#include "rank2sg/rep_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <sstream>

namespace rank2sg {

// ---------------------------------------------------------------- RepGraph

int RepGraph::add_vertex(std::string name, bool is_original) {
  names.push_back(std::move(name));
  original.push_back(is_original);
  frontier.push_back(false);
  indexed_ = false;
  return size() - 1;
}

void RepGraph::add_edge(int src, int dst, Color c, int label, RationalAngle phase) {
  edges.push_back({src, dst, c, label, phase});
  indexed_ = false;
}

std::optional<int> RepGraph::find(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<int>(it - names.begin());
}

void RepGraph::index() const {
  if (indexed_ && static_cast<int>(out_.size()) == size()) return;
  out_.assign(size(), {});
  in_.assign(size(), {});
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    out_[edges[e].src].push_back(e);
    in_[edges[e].dst].push_back(e);
  }
  indexed_ = true;
}

const std::vector<int>& RepGraph::out_edges(int v) const {
  index();
  return out_[v];
}

const std::vector<int>& RepGraph::in_edges(int v) const {
  index();
  return in_[v];
}

std::optional<int> RepGraph::in_edge(int v, Color c) const {
  for (int e : in_edges(v))
    if (edges[e].color == c) return e;
  return std::nullopt;
}

std::optional<int> RepGraph::out_edge(int v, Color c, int label) const {
  for (int e : out_edges(v))
    if (edges[e].color == c && edges[e].label == label) return e;
  return std::nullopt;
}

// ---------------------------------------------------------------- graph_of

RepGraph graph_of(const Rep& rep, std::optional<Rect> window) {
  require_valid(rep);
  std::vector<Vec2> reps;
  if (rep.kind == DomainKind::Window || rep.finite()) {
    for (std::size_t a = 0; a < rep.size(); ++a) reps.push_back(rep.point(a));
  } else {
    Rect r;
    if (window) {
      r = *window;
    } else {
      std::int64_t span = 2 * rep.period.index();
      if (rep.kernel.rank() == 1 && rep.kernel.basis()[0].s > 0)
        r = Rect{0, rep.kernel.basis()[0].s - 1, -span, span};
      else
        r = Rect{-span, span, -span, span};
    }
    for (std::int64_t t = r.t_lo; t <= r.t_hi; ++t)
      for (std::int64_t s = r.s_lo; s <= r.s_hi; ++s) reps.push_back({s, t});
  }
  RepGraph g;
  g.m = rep.theta.m();
  g.n = rep.theta.n();
  std::map<Vec2, int> id;
  std::vector<Vec2> where;
  for (const auto& x : reps) {
    Vec2 key = rep.kernel.reduce(x);
    if (id.count(key)) continue;
    id[key] = g.add_vertex("[" + std::to_string(key.s) + "," + std::to_string(key.t) + "]");
    where.push_back(x);
  }
  for (int v = 0; v < g.size(); ++v) {
    const Vec2& x = where[v];
    auto sl = rep.slot(x);
    if (!sl) continue;
    int i = rep.imap[*sl], j = rep.jmap[*sl];
    auto b = id.find(rep.kernel.reduce(x + kG1));
    if (i != 0 && b != id.end() && rep.slot(x + kG1)) g.add_edge(v, b->second, Color::Blue, i, rep.alpha[*sl]);
    auto r = id.find(rep.kernel.reduce(x + kG2));
    if (j != 0 && r != id.end() && rep.slot(x + kG2)) g.add_edge(v, r->second, Color::Red, j, rep.beta[*sl]);
  }
  for (int v = 0; v < g.size(); ++v) {
    bool complete = g.in_edge(v, Color::Blue) && g.in_edge(v, Color::Red);
    int ob = 0, orr = 0;
    for (int e : g.out_edges(v)) (g.edges[e].color == Color::Blue ? ob : orr)++;
    g.frontier[v] = !complete || ob == 0 || orr == 0;
  }
  return g;
}

// ---------------------------------------------------------------- verify

Report verify(const RepGraph& g, VerifyMode mode) {
  Report r;
  auto fail = [&](const std::string& code, int v, const std::string& msg) {
    r.ok = false;
    r.code = code;
    r.message = "vertex " + g.names[v] + ": " + msg;
    return r;
  };
  for (const auto& e : g.edges) {
    int hi = e.color == Color::Blue ? g.m : g.n;
    if (e.label < 1 || e.label > hi) return fail("out-of-range", e.src, "edge label out of range");
  }
  for (int v = 0; v < g.size(); ++v) {
    int in_b = 0, in_r = 0;
    for (int e : g.in_edges(v)) (g.edges[e].color == Color::Blue ? in_b : in_r)++;
    if (in_b > 1) return fail("not-atomic", v, "two incoming blue edges");
    if (in_r > 1) return fail("not-atomic", v, "two incoming red edges");
    std::vector<int> seen_b(g.m + 1, 0), seen_r(g.n + 1, 0);
    for (int e : g.out_edges(v)) {
      const auto& ed = g.edges[e];
      int& c = ed.color == Color::Blue ? seen_b[ed.label] : seen_r[ed.label];
      if (++c > 1) return fail("duplicate-out-label", v, "two outgoing edges with the same label");
    }
    if (g.frontier[v]) continue;
    if (in_b != 1 || in_r != 1) return fail("defect", v, "missing incoming edge");
    if (mode == VerifyMode::StarInterior) {
      for (int i = 1; i <= g.m; ++i)
        if (!seen_b[i]) return fail("not-isometric", v, "missing outgoing blue edge " + std::to_string(i));
      for (int j = 1; j <= g.n; ++j)
        if (!seen_r[j]) return fail("not-isometric", v, "missing outgoing red edge " + std::to_string(j));
    }
  }
  return r;
}

// ---------------------------------------------------------------- dilation

namespace {

class Dilator {
 public:
  Dilator(const Theta& theta, int max_vertices) : th_(theta), max_(max_vertices) {}

  int add(bool orig) {
    if (static_cast<int>(parent_.size()) >= max_)
      throw DomainError("too-large", "dilation exceeds " + std::to_string(max_) + " vertices");
    int id = static_cast<int>(parent_.size());
    parent_.push_back(id);
    orig_.push_back(orig);
    in_b_.push_back({-1, 0});
    in_r_.push_back({-1, 0});
    out_b_.emplace_back(th_.m() + 1, -1);
    out_r_.emplace_back(th_.n() + 1, -1);
    ph_b_.emplace_back(th_.m() + 1, RationalAngle{});
    ph_r_.emplace_back(th_.n() + 1, RationalAngle{});
    return id;
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void link(int src, int dst, Color c, int label, RationalAngle ph) {
    src = find(src);
    dst = find(dst);
    auto& out = c == Color::Blue ? out_b_[src] : out_r_[src];
    auto& in = c == Color::Blue ? in_b_[dst] : in_r_[dst];
    if (out[label] != -1) throw DomainError("not-atomic", "duplicate outgoing label in input graph");
    if (in.first != -1) throw DomainError("not-atomic", "two incoming edges of one color in input graph");
    out[label] = dst;
    in = {src, label};
    (c == Color::Blue ? ph_b_ : ph_r_)[src][label] = ph;
  }

  int ensure_out(int v, Color c, int label) {
    v = find(v);
    int cur = c == Color::Blue ? out_b_[v][label] : out_r_[v][label];
    if (cur != -1) return find(cur);
    int eta = add(false);
    if (c == Color::Blue) {
      out_b_[v][label] = eta;
      in_b_[eta] = {v, label};
      auto [v2, j0] = in_r_[find(v)];
      if (v2 == -1) throw DomainError("not-defect-free", "vertex without incoming red edge");
      auto [i1, j1] = th_.forward(label, j0);
      int x = ensure_out(v2, Color::Blue, i1);
      attach(x, Color::Red, j1, eta);
    } else {
      out_r_[v][label] = eta;
      in_r_[eta] = {v, label};
      auto [v2, i0] = in_b_[find(v)];
      if (v2 == -1) throw DomainError("not-defect-free", "vertex without incoming blue edge");
      auto [i1, j1] = th_.inverse(i0, label);
      int y = ensure_out(v2, Color::Red, j1);
      attach(y, Color::Blue, i1, eta);
    }
    return find(eta);
  }

  std::size_t count() const { return parent_.size(); }
  bool is_root(int x) const { return parent_[x] == x; }
  bool is_original(int x) const { return orig_[x]; }
  int out(int v, Color c, int label) {
    int x = c == Color::Blue ? out_b_[find(v)][label] : out_r_[find(v)][label];
    return x == -1 ? -1 : find(x);
  }
  RationalAngle phase(int v, Color c, int label) {
    return c == Color::Blue ? ph_b_[find(v)][label] : ph_r_[find(v)][label];
  }

 private:
  // Sets the incoming edge of eta (or merges with the existing target).
  void attach(int src, Color c, int label, int eta) {
    src = find(src);
    eta = find(eta);
    auto& out = c == Color::Blue ? out_b_[src] : out_r_[src];
    if (out[label] != -1) {
      merge(out[label], eta);
      return;
    }
    auto& in = c == Color::Blue ? in_b_[eta] : in_r_[eta];
    if (in.first != -1) {
      // eta already has a predecessor of this color: identify the edges.
      if (in.second != label) throw DomainError("identification-conflict", "incoming labels disagree");
      out[label] = eta;
      merge(in.first, src);
      return;
    }
    out[label] = eta;
    in = {src, label};
  }

  void merge(int a, int b) {
    std::deque<std::pair<int, int>> work{{a, b}};
    while (!work.empty()) {
      auto [x, y] = work.front();
      work.pop_front();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      if (orig_[x] || orig_[y])
        throw DomainError("identification-conflict", "dilation identifies an original vertex with another vertex");
      if (y < x) std::swap(x, y);
      parent_[y] = x;
      auto join_in = [&](std::pair<int, int>& ix, const std::pair<int, int>& iy) {
        if (iy.first == -1) return;
        if (ix.first == -1) {
          ix = iy;
          return;
        }
        if (ix.second != iy.second) throw DomainError("identification-conflict", "incoming labels disagree");
        work.emplace_back(ix.first, iy.first);
      };
      join_in(in_b_[x], in_b_[y]);
      join_in(in_r_[x], in_r_[y]);
      auto join_out = [&](std::vector<int>& ox, const std::vector<int>& oy) {
        for (std::size_t l = 1; l < oy.size(); ++l) {
          if (oy[l] == -1) continue;
          if (ox[l] == -1)
            ox[l] = oy[l];
          else
            work.emplace_back(ox[l], oy[l]);
        }
      };
      join_out(out_b_[x], out_b_[y]);
      join_out(out_r_[x], out_r_[y]);
    }
  }

  const Theta& th_;
  int max_;
  std::vector<int> parent_;
  std::vector<bool> orig_;
  std::vector<std::pair<int, int>> in_b_, in_r_;
  std::vector<std::vector<int>> out_b_, out_r_;
  std::vector<std::vector<RationalAngle>> ph_b_, ph_r_;
};

}  // namespace

DilationResult dilate(const Theta& theta, const RepGraph& g, const DilateOptions& opt) {
  if (g.m != theta.m() || g.n != theta.n()) throw DomainError("out-of-range", "graph and theta sizes differ");
  if (std::any_of(g.frontier.begin(), g.frontier.end(), [](bool b) { return b; }))
    throw DomainError("not-defect-free", "input graph has frontier vertices");
  Report r = verify(g, VerifyMode::DefectFree);
  if (!r.ok) throw DomainError("not-defect-free", r.message);
  if (opt.depth < 0) throw DomainError("out-of-range", "negative depth");

  Dilator d(theta, opt.max_vertices);
  int n0 = g.size();
  for (int v = 0; v < n0; ++v) d.add(true);
  for (const auto& e : g.edges) d.link(e.src, e.dst, e.color, e.label, e.phase);

  std::mt19937_64 rng(opt.shuffle_seed.value_or(0));
  struct Task {
    int v;
    Color c;
    int label;
  };
  for (;;) {
    std::vector<int> depth(d.count(), -1);
    std::deque<int> q;
    for (int v = 0; v < n0; ++v) {
      depth[d.find(v)] = 0;
      q.push_back(d.find(v));
    }
    std::vector<Task> tasks;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (Color c : {Color::Blue, Color::Red}) {
        int hi = c == Color::Blue ? theta.m() : theta.n();
        for (int l = 1; l <= hi; ++l) {
          int w = d.out(v, c, l);
          if (w == -1) {
            if (depth[v] < opt.depth) tasks.push_back({v, c, l});
            continue;
          }
          if (depth[w] == -1) {
            depth[w] = depth[v] + 1;
            q.push_back(w);
          }
        }
      }
    }
    if (tasks.empty()) break;
    if (opt.shuffle_seed) std::shuffle(tasks.begin(), tasks.end(), rng);
    for (const auto& t : tasks) d.ensure_out(t.v, t.c, t.label);
  }

  // Canonical names by breadth first search from the originals.
  DilationResult res;
  res.depth = opt.depth;
  RepGraph& out = res.graph;
  out.m = theta.m();
  out.n = theta.n();
  std::map<int, int> id;
  std::vector<int> order;
  std::deque<int> q;
  for (int v = 0; v < n0; ++v) {
    int root = d.find(v);
    id[root] = out.add_vertex(g.names[v], true);
    order.push_back(root);
    res.trace.emplace_back(g.names[v], Word{});
    q.push_back(root);
  }
  std::vector<std::pair<std::string, Word>> name_of(d.count());
  for (int v = 0; v < n0; ++v) name_of[d.find(v)] = {g.names[v], Word{}};
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (Color c : {Color::Blue, Color::Red}) {
      int hi = c == Color::Blue ? theta.m() : theta.n();
      for (int l = 1; l <= hi; ++l) {
        int w = d.out(v, c, l);
        if (w == -1 || id.count(w)) continue;
        Word word = normal_form(theta, concat(Word{Letter{c, l}}, name_of[v].second));
        name_of[w] = {name_of[v].first, word};
        id[w] = out.add_vertex(name_of[v].first + ":" + format_word(word), false);
        order.push_back(w);
        res.trace.push_back(name_of[w]);
        q.push_back(w);
      }
    }
  }
  for (int v : order) {
    bool complete = true;
    for (Color c : {Color::Blue, Color::Red}) {
      int hi = c == Color::Blue ? theta.m() : theta.n();
      for (int l = 1; l <= hi; ++l) {
        int w = d.out(v, c, l);
        if (w == -1) {
          complete = false;
          continue;
        }
        out.add_edge(id[v], id[w], c, l, d.phase(v, c, l));
      }
    }
    out.frontier[id[v]] = !complete;
  }
  return res;
}

RepGraph restrict_to_original(const RepGraph& g) {
  RepGraph out;
  out.m = g.m;
  out.n = g.n;
  std::map<int, int> id;
  for (int v = 0; v < g.size(); ++v)
    if (g.original[v]) id[v] = out.add_vertex(g.names[v], true);
  for (const auto& e : g.edges)
    if (id.count(e.src) && id.count(e.dst)) out.add_edge(id[e.src], id[e.dst], e.color, e.label, e.phase);
  return out;
}

// ---------------------------------------------------------------- classify

std::vector<std::vector<int>> components(const RepGraph& g) {
  std::vector<int> comp(g.size(), -1);
  std::vector<std::vector<int>> out;
  for (int v = 0; v < g.size(); ++v) {
    if (comp[v] != -1) continue;
    out.emplace_back();
    std::deque<int> q{v};
    comp[v] = static_cast<int>(out.size()) - 1;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      out.back().push_back(x);
      auto visit = [&](int y) {
        if (comp[y] == -1) {
          comp[y] = comp[v];
          q.push_back(y);
        }
      };
      for (int e : g.out_edges(x)) visit(g.edges[e].dst);
      for (int e : g.in_edges(x)) visit(g.edges[e].src);
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

int ring_length(const RepGraph& g, int v, Color c) {
  std::map<int, int> seen;
  int x = v;
  for (int step = 0;; ++step) {
    auto it = seen.find(x);
    if (it != seen.end()) return step - it->second;
    seen[x] = step;
    auto e = g.in_edge(x, c);
    if (!e) return 0;
    x = g.edges[*e].src;
  }
}

namespace {

std::vector<int> pullback_chain(const RepGraph& g, int v, Color c, int cap) {
  std::vector<int> chain{v};
  while (static_cast<int>(chain.size()) <= cap) {
    auto e = g.in_edge(chain.back(), c);
    if (!e) break;
    chain.push_back(g.edges[*e].src);
  }
  return chain;
}

ColorSummary summarize(const RepGraph& g, const std::vector<int>& comp, Color c) {
  ColorSummary s;
  bool any_ring = false, any_tail = false;
  for (int v : comp) {
    int len = ring_length(g, v, c);
    if (len > 0) {
      any_ring = true;
      s.ring_length = s.ring_length == 0 ? len : std::min(s.ring_length, len);
    } else {
      any_tail = true;
    }
  }
  if (any_ring && !any_tail) s.kind = ComponentKind::Ring;
  else if (any_tail && !any_ring) s.kind = ComponentKind::Tail;
  return s;
}

}  // namespace

TypeVerdict classify_component(const RepGraph& g, const std::vector<int>& comp) {
  TypeVerdict v;
  v.blue = summarize(g, comp, Color::Blue);
  v.red = summarize(g, comp, Color::Red);
  using K = ComponentKind;
  if (v.blue.kind == K::Ring && v.red.kind == K::Ring) v.type = "1";
  else if (v.blue.kind == K::Ring && v.red.kind == K::Tail) v.type = "2a";
  else if (v.blue.kind == K::Tail && v.red.kind == K::Ring) v.type = "2b";
  else if (v.blue.kind == K::Tail && v.red.kind == K::Tail) {
    const int cap = 64;
    std::optional<Vec2> found;
    std::string kind;
    bool conflict = false;
    for (int x : comp) {
      auto bx = pullback_chain(g, x, Color::Blue, cap);
      auto rx = pullback_chain(g, x, Color::Red, cap);
      for (int r = 1; r < static_cast<int>(rx.size()); ++r) {
        int z = rx[r];
        std::optional<Vec2> per;
        std::string kd;
        auto it = std::find(bx.begin() + 1, bx.end(), z);
        if (it != bx.end()) {
          per = Vec2{it - bx.begin(), -r};
          kd = "3bii";
        } else {
          auto bz = pullback_chain(g, z, Color::Blue, cap);
          auto jt = std::find(bz.begin() + 1, bz.end(), x);
          if (jt != bz.end()) {
            per = Vec2{jt - bz.begin(), r};
            kd = "3bi";
          }
        }
        if (per) {
          if (!found) {
            found = per;
            kind = kd;
          } else if (kind != kd) {
            conflict = true;
          }
          break;
        }
      }
    }
    if (conflict) v.type = "undetermined";
    else if (found) {
      v.type = kind;
      v.period = found;
    } else {
      v.type = "3a";
    }
  } else {
    v.type = "undetermined";
  }
  return v;
}

TypeVerdict classify(const RepGraph& g) {
  auto comps = components(g);
  if (comps.empty()) return TypeVerdict{{}, {}, "undetermined", std::nullopt};
  TypeVerdict first = classify_component(g, comps[0]);
  for (std::size_t c = 1; c < comps.size(); ++c)
    if (classify_component(g, comps[c]).type != first.type) first.type = "undetermined";
  return first;
}

// ---------------------------------------------------------------- paths

std::optional<int> act(const RepGraph& g, const Word& w, int v) {
  int x = v;
  for (std::size_t a = w.size(); a-- > 0;) {
    auto e = g.out_edge(x, w[a].color, w[a].index);
    if (!e) return std::nullopt;
    x = g.edges[*e].dst;
  }
  return x;
}

namespace {

std::optional<Word> loop_word(const RepGraph& g, int v, Color c) {
  Word w;
  int x = v;
  for (int step = 0; step <= g.size(); ++step) {
    auto e = g.in_edge(x, c);
    if (!e) return std::nullopt;
    w.push_back(Letter{c, g.edges[*e].label});
    x = g.edges[*e].src;
    if (x == v) return w;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Word> blue_loop(const RepGraph& g, int v) { return loop_word(g, v, Color::Blue); }
std::optional<Word> red_loop(const RepGraph& g, int v) { return loop_word(g, v, Color::Red); }

PushPull push_pull_path(const Theta& theta, const RepGraph& g, int v1, int v2) {
  struct Move {
    bool fwd;
    Color c;
    int label;
    int from;
    int to;
  };
  // Breadth first search over edges in both directions.
  std::vector<int> prev_edge(g.size(), -2);
  std::vector<bool> prev_fwd(g.size(), false);
  std::deque<int> q{v1};
  prev_edge[v1] = -1;
  while (!q.empty() && prev_edge[v2] == -2) {
    int x = q.front();
    q.pop_front();
    for (int e : g.out_edges(x)) {
      int y = g.edges[e].dst;
      if (prev_edge[y] == -2) {
        prev_edge[y] = e;
        prev_fwd[y] = true;
        q.push_back(y);
      }
    }
    for (int e : g.in_edges(x)) {
      int y = g.edges[e].src;
      if (prev_edge[y] == -2) {
        prev_edge[y] = e;
        prev_fwd[y] = false;
        q.push_back(y);
      }
    }
  }
  if (prev_edge[v2] == -2) throw DomainError("disconnected", "vertices lie in different components");
  std::vector<Move> moves;
  for (int x = v2; x != v1;) {
    const auto& ed = g.edges[prev_edge[x]];
    if (prev_fwd[x]) {
      moves.push_back({true, ed.color, ed.label, ed.src, ed.dst});
      x = ed.src;
    } else {
      moves.push_back({false, ed.color, ed.label, ed.dst, ed.src});
      x = ed.dst;
    }
  }
  std::reverse(moves.begin(), moves.end());

  auto need_in = [&](int v, Color c) {
    auto e = g.in_edge(v, c);
    if (!e) throw DomainError("not-defect-free", "vertex " + g.names[v] + " lacks an incoming edge");
    return g.edges[*e];
  };
  auto need_out = [&](int v, Color c, int label) {
    auto e = g.out_edge(v, c, label);
    if (!e) throw DomainError("incomplete-graph", "vertex " + g.names[v] + " lacks an outgoing edge");
    return g.edges[*e].dst;
  };
  for (std::size_t guard = 0; guard < 100000; ++guard) {
    std::size_t p = 0;
    while (p + 1 < moves.size() && !(moves[p].fwd && !moves[p + 1].fwd)) ++p;
    if (p + 1 >= moves.size()) break;
    Move a = moves[p], b = moves[p + 1];
    if (a.c == b.c) {
      moves.erase(moves.begin() + static_cast<std::ptrdiff_t>(p), moves.begin() + static_cast<std::ptrdiff_t>(p + 2));
      continue;
    }
    int base = a.from;
    Move back, fwd;
    if (a.c == Color::Blue) {
      GraphEdge in = need_in(base, Color::Red);
      auto [i1, j1] = theta.forward(a.label, in.label);
      back = {false, Color::Red, in.label, base, in.src};
      fwd = {true, Color::Blue, i1, in.src, need_out(in.src, Color::Blue, i1)};
    } else {
      GraphEdge in = need_in(base, Color::Blue);
      auto [i1, j1] = theta.inverse(in.label, a.label);
      back = {false, Color::Blue, in.label, base, in.src};
      fwd = {true, Color::Red, j1, in.src, need_out(in.src, Color::Red, j1)};
    }
    if (fwd.to != b.to) throw DomainError("graph-inconsistent", "diamond does not close at " + g.names[base]);
    moves[p] = back;
    moves[p + 1] = fwd;
  }
  PushPull res;
  res.eta = v1;
  for (const auto& mv : moves) {
    if (!mv.fwd) {
      res.w1.push_back(Letter{mv.c, mv.label});
      res.eta = mv.to;
    }
  }
  for (std::size_t a = moves.size(); a-- > 0;)
    if (moves[a].fwd) res.w2.push_back(Letter{moves[a].c, moves[a].label});
  return res;
}

// ---------------------------------------------------------------- export

std::string to_dot(const RepGraph& g, const std::string& title) {
  std::ostringstream os;
  os << "digraph \"" << title << "\" {\n";
  os << "  node [shape=circle];\n";
  for (int v = 0; v < g.size(); ++v) {
    os << "  v" << v << " [label=\"" << g.names[v] << "\"";
    if (g.original[v]) os << ", peripheries=2";
    if (g.frontier[v]) os << ", style=dashed";
    os << "];\n";
  }
  for (const auto& e : g.edges) {
    bool blue = e.color == Color::Blue;
    os << "  v" << e.src << " -> v" << e.dst << " [color=" << (blue ? "blue" : "red") << ", label=\""
       << (blue ? "e:" : "f:") << e.label;
    if (!e.phase.is_zero()) os << " @" << e.phase.str();
    os << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace rank2sg
