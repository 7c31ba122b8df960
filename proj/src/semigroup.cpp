#include "rank2sg/semigroup.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace rank2sg {

namespace {

std::string pair_str(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

Degree degree(const Word& w) {
  Degree d;
  for (const auto& x : w) (x.color == Color::Blue ? d.k : d.l)++;
  return d;
}

ColorPattern pattern_of(const Word& w) {
  ColorPattern p;
  p.reserve(w.size());
  for (const auto& x : w) p.push_back(x.color);
  return p;
}

Theta Theta::from_relations(int m, int n, const std::vector<std::array<int, 4>>& raw) {
  if (m <= 0 || n <= 0) throw DomainError("out-of-range", "m and n must be positive");
  Theta t;
  t.m_ = m;
  t.n_ = n;
  const int size = m * n;
  t.fwd_.assign(size, -1);
  t.inv_.assign(size, -1);
  for (const auto& r : raw) {
    auto [i, j, i2, j2] = r;
    if (i < 1 || i > m || i2 < 1 || i2 > m || j < 1 || j > n || j2 < 1 || j2 > n)
      throw DomainError("out-of-range",
                        "relation " + pair_str(i, j) + "->" + pair_str(i2, j2) + " out of range");
    int src = (i - 1) * n + (j - 1);
    int dst = (i2 - 1) * n + (j2 - 1);
    if (t.fwd_[src] != -1) throw DomainError("duplicate-source", "duplicate source pair " + pair_str(i, j));
    if (t.inv_[dst] != -1) throw DomainError("duplicate-target", "duplicate target pair " + pair_str(i2, j2));
    t.fwd_[src] = dst;
    t.inv_[dst] = src;
  }
  for (int c = 0; c < size; ++c) {
    if (t.fwd_[c] == -1)
      throw DomainError("missing-pair", "no relation for " + pair_str(c / n + 1, c % n + 1));
  }
  return t;
}

Theta Theta::identity(int m, int n) {
  std::vector<std::array<int, 4>> raw;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) raw.push_back({i, j, i, j});
  return from_relations(m, n, raw);
}

std::pair<int, int> Theta::forward(int i, int j) const {
  int c = fwd_[(i - 1) * n_ + (j - 1)];
  return {c / n_ + 1, c % n_ + 1};
}

std::pair<int, int> Theta::inverse(int i2, int j2) const {
  int c = inv_[(i2 - 1) * n_ + (j2 - 1)];
  return {c / n_ + 1, c % n_ + 1};
}

std::vector<std::array<int, 4>> Theta::relations() const {
  std::vector<std::array<int, 4>> out;
  for (int c = 0; c < m_ * n_; ++c) {
    int d = fwd_[c];
    out.push_back({c / n_ + 1, c % n_ + 1, d / n_ + 1, d % n_ + 1});
  }
  return out;
}

std::vector<std::vector<std::pair<int, int>>> Theta::cycles() const {
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<bool> seen(fwd_.size(), false);
  for (int c = 0; c < static_cast<int>(fwd_.size()); ++c) {
    if (seen[c]) continue;
    std::vector<std::pair<int, int>> cyc;
    for (int x = c; !seen[x]; x = fwd_[x]) {
      seen[x] = true;
      cyc.emplace_back(x / n_ + 1, x % n_ + 1);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

Theta validate_theta(const std::vector<std::array<int, 4>>& raw, int m, int n) {
  return Theta::from_relations(m, n, raw);
}

void check_word(const Theta& theta, const Word& w) {
  for (const auto& x : w) {
    int hi = x.color == Color::Blue ? theta.m() : theta.n();
    if (x.index < 1 || x.index > hi)
      throw DomainError("out-of-range", "letter index " + std::to_string(x.index) + " out of range");
  }
}

namespace {

// Swaps w[r-1] w[r] (which must differ in color) using the relations.
void swap_adjacent(const Theta& theta, Word& w, std::size_t r) {
  Letter& a = w[r - 1];
  Letter& b = w[r];
  if (a.color == Color::Blue) {
    auto [i2, j2] = theta.forward(a.index, b.index);
    a = f(j2);
    b = e(i2);
  } else {
    auto [i, j] = theta.inverse(b.index, a.index);
    a = e(i);
    b = f(j);
  }
}

}  // namespace

Word refactor(const Theta& theta, const Word& w, const ColorPattern& pattern) {
  check_word(theta, w);
  Degree d = degree(w);
  Degree pd;
  for (Color c : pattern) (c == Color::Blue ? pd.k : pd.l)++;
  if (pattern.size() != w.size() || !(pd == d))
    throw DomainError("pattern-mismatch", "pattern " + format_pattern(pattern) +
                                              " does not match degree of " + format_word(w));
  Word out = w;
  for (std::size_t pos = 0; pos < out.size(); ++pos) {
    if (out[pos].color == pattern[pos]) continue;
    std::size_t q = pos + 1;
    while (out[q].color != pattern[pos]) ++q;
    for (std::size_t r = q; r > pos; --r) swap_adjacent(theta, out, r);
  }
  return out;
}

Word normal_form(const Theta& theta, const Word& w) {
  Degree d = degree(w);
  ColorPattern p(d.k, Color::Blue);
  p.insert(p.end(), d.l, Color::Red);
  return refactor(theta, w, p);
}

Word red_first(const Theta& theta, const Word& w) {
  Degree d = degree(w);
  ColorPattern p(d.l, Color::Red);
  p.insert(p.end(), d.k, Color::Blue);
  return refactor(theta, w, p);
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word multiply(const Theta& theta, const Word& w1, const Word& w2) {
  return normal_form(theta, concat(w1, w2));
}

std::pair<Word, Word> split_blue_red(const Word& w) {
  Word u, v;
  for (const auto& x : w) (x.color == Color::Blue ? u : v).push_back(x);
  return {u, v};
}

Word blue_word(const std::vector<int>& indices) {
  Word w;
  for (int i : indices) w.push_back(e(i));
  return w;
}

Word red_word(const std::vector<int>& indices) {
  Word w;
  for (int j : indices) w.push_back(f(j));
  return w;
}

std::vector<int> indices_of(const Word& w) {
  std::vector<int> out;
  for (const auto& x : w) out.push_back(x.index);
  return out;
}

namespace {

void require_color(const Word& w, Color c, const char* what) {
  for (const auto& x : w)
    if (x.color != c) throw DomainError("color-violation", std::string(what) + " has a letter of the wrong color");
}

}  // namespace

std::pair<Word, Word> theta_prime_apply(const Theta& theta, const Word& u, const Word& v) {
  require_color(u, Color::Blue, "u");
  require_color(v, Color::Red, "v");
  Word w = red_first(theta, concat(u, v));
  Word v2(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(v.size()));
  Word u2(w.begin() + static_cast<std::ptrdiff_t>(v.size()), w.end());
  return {u2, v2};
}

std::vector<std::pair<Word, Word>> theta_prime_cycle(const Theta& theta, const Word& u,
                                                     const Word& v, std::uint64_t cap) {
  std::vector<std::pair<Word, Word>> cyc;
  std::pair<Word, Word> cur{u, v};
  do {
    if (cyc.size() >= cap) throw DomainError("cap-exceeded", "theta' cycle longer than cap");
    cyc.push_back(cur);
    cur = theta_prime_apply(theta, cur.first, cur.second);
  } while (!(cur.first == u && cur.second == v));
  return cyc;
}

bool commutes(const Theta& theta, const Word& u, const Word& v) {
  auto [u2, v2] = theta_prime_apply(theta, u, v);
  return u2 == u && v2 == v;
}

ThetaPrime::ThetaPrime(const Theta& theta, int k, int l, std::uint64_t cap)
    : theta_(theta), k_(k), l_(l), cap_(cap) {
  if (k < 0 || l < 0) throw DomainError("out-of-range", "negative word length");
  blue_count_ = 1;
  std::uint64_t red_count = 1;
  const std::uint64_t limit = std::uint64_t{1} << 62;
  for (int a = 0; a < k; ++a) {
    blue_count_ *= static_cast<std::uint64_t>(theta.m());
    if (blue_count_ > limit) throw DomainError("cap-exceeded", "theta' domain too large");
  }
  for (int b = 0; b < l; ++b) {
    red_count *= static_cast<std::uint64_t>(theta.n());
    if (red_count > limit / blue_count_) throw DomainError("cap-exceeded", "theta' domain too large");
  }
  size_ = blue_count_ * red_count;
}

std::uint64_t ThetaPrime::encode(const Word& u, const Word& v) const {
  std::uint64_t cu = 0, cv = 0;
  for (const auto& x : u) cu = cu * theta_.m() + static_cast<std::uint64_t>(x.index - 1);
  for (const auto& x : v) cv = cv * theta_.n() + static_cast<std::uint64_t>(x.index - 1);
  return cv * blue_count_ + cu;
}

std::pair<Word, Word> ThetaPrime::decode(std::uint64_t code) const {
  std::uint64_t cu = code % blue_count_;
  std::uint64_t cv = code / blue_count_;
  Word u(k_), v(l_);
  for (int a = k_ - 1; a >= 0; --a) {
    u[a] = e(static_cast<int>(cu % theta_.m()) + 1);
    cu /= theta_.m();
  }
  for (int b = l_ - 1; b >= 0; --b) {
    v[b] = f(static_cast<int>(cv % theta_.n()) + 1);
    cv /= theta_.n();
  }
  return {u, v};
}

std::uint64_t ThetaPrime::apply(std::uint64_t code) const {
  if (!table_.empty()) return table_[code];
  auto [u, v] = decode(code);
  auto [u2, v2] = theta_prime_apply(theta_, u, v);
  return encode(u2, v2);
}

std::pair<Word, Word> ThetaPrime::apply(const Word& u, const Word& v) const {
  if (static_cast<int>(u.size()) != k_ || static_cast<int>(v.size()) != l_)
    throw DomainError("pattern-mismatch", "word lengths do not match theta' degree");
  if (!table_.empty()) return decode(table_[encode(u, v)]);
  return theta_prime_apply(theta_, u, v);
}

void ThetaPrime::tabulate() {
  if (!table_.empty()) return;
  if (size_ > cap_) throw DomainError("cap-exceeded", "theta' table of size " + std::to_string(size_) +
                                                          " exceeds cap " + std::to_string(cap_));
  std::vector<std::uint64_t> t(size_);
  for (std::uint64_t c = 0; c < size_; ++c) t[c] = apply(c);
  table_ = std::move(t);
}

std::vector<std::uint64_t> ThetaPrime::cycle_lengths() {
  tabulate();
  std::vector<std::uint64_t> out;
  std::vector<bool> seen(size_, false);
  for (std::uint64_t c = 0; c < size_; ++c) {
    if (seen[c]) continue;
    std::uint64_t len = 0;
    for (std::uint64_t x = c; !seen[x]; x = table_[x]) {
      seen[x] = true;
      ++len;
    }
    out.push_back(len);
  }
  return out;
}

namespace {

std::vector<int> parse_index_list(std::string_view s) {
  std::vector<int> out;
  if (s.find(',') != std::string_view::npos) {
    std::string tok;
    std::stringstream ss{std::string(s)};
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) throw DomainError("parse", "empty index in word");
      out.push_back(std::stoi(tok));
    }
    return out;
  }
  for (char c : s) {
    if (c < '0' || c > '9') throw DomainError("parse", std::string("bad digit '") + c + "' in word");
    out.push_back(c - '0');
  }
  return out;
}

}  // namespace

Word parse_blue(std::string_view s) { return blue_word(parse_index_list(s)); }
Word parse_red(std::string_view s) { return red_word(parse_index_list(s)); }

Word parse_word(std::string_view s) {
  Word w;
  if (s.empty() || s == "-" || s == "1" || s == "empty") return w;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t dot = s.find('.', start);
    std::string_view tok = s.substr(start, dot == std::string_view::npos ? s.size() - start : dot - start);
    if (tok.size() < 2 || (tok[0] != 'e' && tok[0] != 'f'))
      throw DomainError("parse", "bad letter '" + std::string(tok) + "'");
    int idx = 0;
    for (char c : tok.substr(1)) {
      if (c < '0' || c > '9') throw DomainError("parse", "bad letter '" + std::string(tok) + "'");
      idx = idx * 10 + (c - '0');
    }
    w.push_back(tok[0] == 'e' ? e(idx) : f(idx));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return w;
}

ColorPattern parse_pattern(std::string_view s) {
  ColorPattern p;
  if (s.find(',') != std::string_view::npos) {
    std::stringstream ss{std::string(s)};
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok == "blue" || tok == "e") p.push_back(Color::Blue);
      else if (tok == "red" || tok == "f") p.push_back(Color::Red);
      else throw DomainError("parse", "bad pattern entry '" + tok + "'");
    }
    return p;
  }
  for (char c : s) {
    if (c == 'e' || c == 'b') p.push_back(Color::Blue);
    else if (c == 'f' || c == 'r') p.push_back(Color::Red);
    else throw DomainError("parse", std::string("bad pattern character '") + c + "'");
  }
  return p;
}

std::string format_indices(const Word& w) {
  bool wide = std::any_of(w.begin(), w.end(), [](const Letter& x) { return x.index > 9; });
  std::string out;
  for (std::size_t a = 0; a < w.size(); ++a) {
    if (wide && a) out += ',';
    out += std::to_string(w[a].index);
  }
  return out;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "empty";
  std::string out;
  for (std::size_t a = 0; a < w.size(); ++a) {
    if (a) out += '.';
    out += (w[a].color == Color::Blue ? 'e' : 'f');
    out += std::to_string(w[a].index);
  }
  return out;
}

std::string format_pattern(const ColorPattern& p) {
  std::string out;
  for (Color c : p) out += (c == Color::Blue ? 'e' : 'f');
  return out;
}

}  // namespace rank2sg
