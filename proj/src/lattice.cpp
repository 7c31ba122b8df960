#include "rank2sg/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace rank2sg {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::int64_t mod_pos(std::int64_t a, std::int64_t b) {
  std::int64_t r = a % b;
  return r < 0 ? r + b : r;
}

namespace {

std::int64_t narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw DomainError("overflow", "integer overflow in angle arithmetic");
  return static_cast<std::int64_t>(v);
}

}  // namespace

std::string to_string(const Vec2& v) {
  return "(" + std::to_string(v.s) + "," + std::to_string(v.t) + ")";
}

RationalAngle::RationalAngle(std::int64_t p, std::int64_t q) {
  if (q == 0) throw DomainError("parse", "zero denominator");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  p = mod_pos(p, q);
  std::int64_t g = std::gcd(p, q);
  p_ = p / g;
  q_ = q / g;
}

RationalAngle RationalAngle::parse(std::string_view s) {
  auto to_int = [&](std::string_view part) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size())
      throw DomainError("parse", "bad rational angle '" + std::string(s) + "'");
    return v;
  };
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return RationalAngle(to_int(s), 1);
  return RationalAngle(to_int(s.substr(0, slash)), to_int(s.substr(slash + 1)));
}

RationalAngle RationalAngle::operator+(const RationalAngle& o) const {
  std::int64_t g = std::gcd(q_, o.q_);
  __int128 q = static_cast<__int128>(q_ / g) * o.q_;
  __int128 p = static_cast<__int128>(p_) * (o.q_ / g) + static_cast<__int128>(o.p_) * (q_ / g);
  return RationalAngle(narrow(p % q), narrow(q));
}

RationalAngle RationalAngle::operator-() const { return RationalAngle(-p_, q_); }
RationalAngle RationalAngle::operator-(const RationalAngle& o) const { return *this + (-o); }

RationalAngle RationalAngle::operator*(std::int64_t c) const {
  __int128 p = static_cast<__int128>(p_) * c;
  p %= q_;
  return RationalAngle(narrow(p), q_);
}

RationalAngle RationalAngle::div(std::int64_t c) const {
  if (c <= 0) throw DomainError("parse", "angle division by non-positive integer");
  return RationalAngle(p_, narrow(static_cast<__int128>(q_) * c));
}

std::string RationalAngle::str() const {
  if (p_ == 0) return "0";
  return std::to_string(p_) + "/" + std::to_string(q_);
}

Sublattice Sublattice::from(const std::vector<Vec2>& gens) {
  std::vector<Vec2> rows;
  for (const auto& g : gens)
    if (g.s != 0 || g.t != 0) rows.push_back(g);

  // Euclid on the second column until at most one row has t != 0.
  std::vector<Vec2> flat;
  Vec2 pivot{0, 0};
  bool have_pivot = false;
  for (;;) {
    std::vector<Vec2> live;
    for (const auto& r : rows) {
      if (r.t == 0) {
        if (r.s != 0) flat.push_back(r);
      } else {
        live.push_back(r);
      }
    }
    if (live.empty()) break;
    if (live.size() == 1) {
      pivot = live[0];
      have_pivot = true;
      break;
    }
    auto it = std::min_element(live.begin(), live.end(),
                               [](const Vec2& a, const Vec2& b) { return std::llabs(a.t) < std::llabs(b.t); });
    Vec2 p = *it;
    rows.clear();
    rows.push_back(p);
    for (auto jt = live.begin(); jt != live.end(); ++jt) {
      if (jt == it) continue;
      std::int64_t c = jt->t / p.t;
      rows.push_back(*jt - p * c);
    }
  }
  std::int64_t a = 0;
  for (const auto& r : flat) a = std::gcd(a, std::llabs(r.s));

  Sublattice out;
  if (have_pivot && pivot.t < 0) pivot = -pivot;
  if (a > 0 && have_pivot) {
    out.basis_ = {Vec2{a, 0}, Vec2{mod_pos(pivot.s, a), pivot.t}};
  } else if (a > 0) {
    out.basis_ = {Vec2{a, 0}};
  } else if (have_pivot) {
    if (pivot.s < 0) pivot = -pivot;
    out.basis_ = {pivot};
  }
  return out;
}

Sublattice sublattice_from(const std::vector<Vec2>& gens) { return Sublattice::from(gens); }

Sublattice join(const Sublattice& a, const Sublattice& b) {
  std::vector<Vec2> g = a.basis();
  g.insert(g.end(), b.basis().begin(), b.basis().end());
  return Sublattice::from(g);
}

Vec2 Sublattice::reduce(const Vec2& v) const {
  if (basis_.empty()) return v;
  if (basis_.size() == 1) {
    const Vec2& p = basis_[0];
    std::int64_t c = p.s > 0 ? floor_div(v.s, p.s) : floor_div(v.t, p.t);
    return v - p * c;
  }
  const Vec2& v1 = basis_[0];
  const Vec2& v2 = basis_[1];
  Vec2 w = v - v2 * floor_div(v.t, v2.t);
  return w - v1 * floor_div(w.s, v1.s);
}

bool Sublattice::contains(const Vec2& v) const { return reduce(v) == Vec2{0, 0}; }

std::vector<std::int64_t> Sublattice::coordinates(const Vec2& v) const {
  if (!contains(v)) throw DomainError("not-in-lattice", to_string(v) + " is not in " + str());
  if (basis_.empty()) return {};
  if (basis_.size() == 1) {
    const Vec2& p = basis_[0];
    return {p.s != 0 ? v.s / p.s : v.t / p.t};
  }
  std::int64_t c2 = v.t / basis_[1].t;
  std::int64_t c1 = (v.s - c2 * basis_[1].s) / basis_[0].s;
  return {c1, c2};
}

std::int64_t Sublattice::index() const {
  if (basis_.size() != 2) throw DomainError("infinite-group", "sublattice " + str() + " has infinite index");
  return basis_[0].s * basis_[1].t;
}

SmithForm Sublattice::smith() const {
  if (basis_.size() != 2) throw DomainError("infinite-group", "Smith form needs a rank 2 lattice");
  // Work on M = U B V with B = [[a,0],[b,d]]; 2x2 elimination keeping U, V.
  std::array<std::int64_t, 4> m{basis_[0].s, basis_[0].t, basis_[1].s, basis_[1].t};
  Mat2 U, V;
  auto row_op = [&](int dst, int src, std::int64_t c) {  // row dst -= c * row src
    m[dst * 2] -= c * m[src * 2];
    m[dst * 2 + 1] -= c * m[src * 2 + 1];
    U.a[dst * 2] -= c * U.a[src * 2];
    U.a[dst * 2 + 1] -= c * U.a[src * 2 + 1];
  };
  auto col_op = [&](int dst, int src, std::int64_t c) {  // col dst -= c * col src
    m[dst] -= c * m[src];
    m[2 + dst] -= c * m[2 + src];
    V.a[dst] -= c * V.a[src];
    V.a[2 + dst] -= c * V.a[2 + src];
  };
  auto row_swap = [&] {
    std::swap(m[0], m[2]);
    std::swap(m[1], m[3]);
    std::swap(U.a[0], U.a[2]);
    std::swap(U.a[1], U.a[3]);
  };
  auto col_swap = [&] {
    std::swap(m[0], m[1]);
    std::swap(m[2], m[3]);
    std::swap(V.a[0], V.a[1]);
    std::swap(V.a[2], V.a[3]);
  };
  for (int guard = 0; guard < 256; ++guard) {
    // Clear column 0 below the pivot, then row 0 right of the pivot.
    while (m[2] != 0) {
      if (m[0] == 0 || std::llabs(m[2]) < std::llabs(m[0])) row_swap();
      row_op(1, 0, m[2] / m[0]);
    }
    while (m[1] != 0) {
      if (m[0] == 0 || std::llabs(m[1]) < std::llabs(m[0])) col_swap();
      col_op(1, 0, m[1] / m[0]);
    }
    if (m[2] != 0) continue;
    if (m[3] % m[0] != 0) {
      row_op(0, 1, -1);  // row 0 += row 1 and repeat
      continue;
    }
    break;
  }
  if (m[0] < 0) {
    m[0] = -m[0];
    U.a[0] = -U.a[0];
    U.a[1] = -U.a[1];
  }
  if (m[3] < 0) {
    m[3] = -m[3];
    U.a[2] = -U.a[2];
    U.a[3] = -U.a[3];
  }
  return SmithForm{m[0], m[3], U, V};
}

bool Sublattice::subset_of(const Sublattice& o) const {
  return std::all_of(basis_.begin(), basis_.end(), [&](const Vec2& v) { return o.contains(v); });
}

std::string Sublattice::str() const {
  std::string out = "<";
  for (std::size_t a = 0; a < basis_.size(); ++a) {
    if (a) out += ",";
    out += to_string(basis_[a]);
  }
  return out + ">";
}

RationalAngle CharacterOnSublattice::operator()(const Vec2& v) const {
  auto c = domain.coordinates(v);
  RationalAngle out;
  for (std::size_t a = 0; a < c.size(); ++a) out += values[a] * c[a];
  return out;
}

CharacterOnSublattice restrict_character(const CharacterOnZ2& phi, const Sublattice& k) {
  CharacterOnSublattice out{k, {}};
  for (const auto& b : k.basis()) out.values.push_back(phi(b));
  return out;
}

CharacterOnZ2 extend_character(const CharacterOnSublattice& psi) {
  const auto& b = psi.domain.basis();
  if (b.empty()) return {};
  if (b.size() == 1) {
    const Vec2& p = b[0];
    if (p.t != 0) {
      RationalAngle v = p.t > 0 ? psi.values[0] : -psi.values[0];
      return {RationalAngle{}, v.div(std::llabs(p.t))};
    }
    return {psi.values[0].div(p.s), RationalAngle{}};
  }
  std::int64_t a = b[0].s;
  std::int64_t bb = b[1].s;
  std::int64_t d = b[1].t;
  RationalAngle x = psi.values[0].div(a);
  RationalAngle y = (psi.values[1] - x * bb).div(d);
  return {x, y};
}

std::int64_t QuotientGroup::order() const { return kernel_.index(); }

std::size_t QuotientGroup::index_of(const Vec2& v) const {
  if (!finite()) throw DomainError("infinite-group", "group " + kernel_.str() + " is infinite");
  Vec2 r = reduce(v);
  return static_cast<std::size_t>(r.t * kernel_.basis()[0].s + r.s);
}

Vec2 QuotientGroup::element(std::size_t idx) const {
  if (!finite()) throw DomainError("infinite-group", "group " + kernel_.str() + " is infinite");
  std::int64_t a = kernel_.basis()[0].s;
  auto i = static_cast<std::int64_t>(idx);
  return {i % a, i / a};
}

std::vector<Vec2> QuotientGroup::enumerate() const {
  std::vector<Vec2> out;
  std::int64_t n = order();
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) out.push_back(element(static_cast<std::size_t>(i)));
  return out;
}

std::vector<CharacterOnZ2> QuotientGroup::characters() const {
  if (!finite()) throw DomainError("infinite-group", "group " + kernel_.str() + " is infinite");
  std::int64_t a = kernel_.basis()[0].s;
  std::int64_t b = kernel_.basis()[1].s;
  std::int64_t d = kernel_.basis()[1].t;
  std::vector<CharacterOnZ2> out;
  for (std::int64_t p = 0; p < a; ++p) {
    RationalAngle x(p, a);
    RationalAngle base = -(x * b);
    for (std::int64_t r = 0; r < d; ++r) {
      // base in [0,1): (base + r)/d over r = 0..d-1 gives every solution.
      out.push_back({x, RationalAngle(base.num() + r * base.den(), base.den() * d)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vec2> enumerate_group(const QuotientGroup& g) { return g.enumerate(); }
std::vector<CharacterOnZ2> characters(const QuotientGroup& g) { return g.characters(); }

}  // namespace rank2sg
