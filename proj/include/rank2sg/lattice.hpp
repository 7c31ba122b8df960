#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rank2sg/error.hpp"

namespace rank2sg {

struct Vec2 {
  std::int64_t s = 0;
  std::int64_t t = 0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
  friend auto operator<=>(const Vec2&, const Vec2&) = default;
  Vec2 operator+(const Vec2& o) const { return {s + o.s, t + o.t}; }
  Vec2 operator-(const Vec2& o) const { return {s - o.s, t - o.t}; }
  Vec2 operator-() const { return {-s, -t}; }
  Vec2 operator*(std::int64_t c) const { return {s * c, t * c}; }
};

inline constexpr Vec2 kG1{1, 0};
inline constexpr Vec2 kG2{0, 1};

std::string to_string(const Vec2& v);

// Integer division rounding down / up, and remainder in [0, |b|) for b > 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t ceil_div(std::int64_t a, std::int64_t b);
std::int64_t mod_pos(std::int64_t a, std::int64_t b);

// Exact element of Q/Z, standing for exp(2 pi i p/q). Always 0 <= p < q.
class RationalAngle {
 public:
  RationalAngle() = default;
  RationalAngle(std::int64_t p, std::int64_t q);

  static RationalAngle parse(std::string_view s);  // "p/q", "p" or "0"

  std::int64_t num() const { return p_; }
  std::int64_t den() const { return q_; }
  bool is_zero() const { return p_ == 0; }

  RationalAngle operator+(const RationalAngle& o) const;
  RationalAngle operator-(const RationalAngle& o) const;
  RationalAngle operator-() const;
  RationalAngle operator*(std::int64_t c) const;
  RationalAngle& operator+=(const RationalAngle& o) { return *this = *this + o; }
  RationalAngle& operator-=(const RationalAngle& o) { return *this = *this - o; }

  // The representative in [0,1) divided by c > 0; lands in [0, 1/c).
  RationalAngle div(std::int64_t c) const;

  std::string str() const;

  friend bool operator==(const RationalAngle&, const RationalAngle&) = default;
  friend auto operator<=>(const RationalAngle& a, const RationalAngle& b) {
    return static_cast<__int128>(a.p_) * b.q_ <=> static_cast<__int128>(b.p_) * a.q_;
  }

 private:
  std::int64_t p_ = 0;
  std::int64_t q_ = 1;
};

struct Mat2 {
  std::array<std::int64_t, 4> a{1, 0, 0, 1};  // row major
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

struct SmithForm {
  std::int64_t d1 = 0;
  std::int64_t d2 = 0;
  // U * B * V = diag(d1, d2) where B has the basis vectors as rows.
  Mat2 U;
  Mat2 V;
};

// Sublattice of Z^2 in Hermite normal form.
//   rank 2: (a,0), (b,d) with a,d > 0 and 0 <= b < a
//   rank 1: a single vector whose first nonzero coordinate is positive
class Sublattice {
 public:
  Sublattice() = default;
  static Sublattice from(const std::vector<Vec2>& gens);

  int rank() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vec2>& basis() const { return basis_; }

  // Canonical coset representative of v modulo this lattice.
  //   rank 2: 0 <= t < d, then 0 <= s < a
  //   rank 1 (p,q): p > 0 gives 0 <= s < p, else 0 <= t < q
  Vec2 reduce(const Vec2& v) const;
  bool contains(const Vec2& v) const;

  // Coordinates of v in the basis; v must lie in the lattice.
  std::vector<std::int64_t> coordinates(const Vec2& v) const;

  std::int64_t index() const;  // |Z^2 / L|, rank 2 only
  SmithForm smith() const;     // rank 2 only

  bool subset_of(const Sublattice& o) const;
  std::string str() const;

  friend bool operator==(const Sublattice&, const Sublattice&) = default;

 private:
  std::vector<Vec2> basis_;
};

Sublattice sublattice_from(const std::vector<Vec2>& gens);
Sublattice join(const Sublattice& a, const Sublattice& b);

// A homomorphism phi: Z^2 -> Q/Z.
struct CharacterOnZ2 {
  RationalAngle x;  // phi(1,0)
  RationalAngle y;  // phi(0,1)

  RationalAngle operator()(const Vec2& v) const { return x * v.s + y * v.t; }
  CharacterOnZ2 operator+(const CharacterOnZ2& o) const { return {x + o.x, y + o.y}; }
  friend bool operator==(const CharacterOnZ2&, const CharacterOnZ2&) = default;
  friend auto operator<=>(const CharacterOnZ2&, const CharacterOnZ2&) = default;
};

// A homomorphism psi: K -> Q/Z given by its values on the HNF basis of K.
struct CharacterOnSublattice {
  Sublattice domain;
  std::vector<RationalAngle> values;

  RationalAngle operator()(const Vec2& v) const;
  friend bool operator==(const CharacterOnSublattice&, const CharacterOnSublattice&) = default;
};

CharacterOnSublattice restrict_character(const CharacterOnZ2& phi, const Sublattice& k);

// Deterministic extension phi with phi|K = psi. Rank 2 solves the triangular
// HNF system with the smallest nonnegative angles, rank 1 puts the whole
// value on the second coordinate when possible.
CharacterOnZ2 extend_character(const CharacterOnSublattice& psi);

// G = Z^2 / K with generators g1 = [1,0], g2 = [0,1].
class QuotientGroup {
 public:
  QuotientGroup() = default;
  explicit QuotientGroup(Sublattice kernel) : kernel_(std::move(kernel)) {}

  const Sublattice& kernel() const { return kernel_; }
  bool finite() const { return kernel_.rank() == 2; }
  std::int64_t order() const;  // throws infinite-group

  Vec2 reduce(const Vec2& v) const { return kernel_.reduce(v); }
  bool same(const Vec2& a, const Vec2& b) const { return kernel_.contains(a - b); }

  // Finite groups only: index of the canonical representative, and back.
  std::size_t index_of(const Vec2& v) const;
  Vec2 element(std::size_t idx) const;

  std::vector<Vec2> enumerate() const;              // throws infinite-group
  std::vector<CharacterOnZ2> characters() const;    // throws infinite-group

 private:
  Sublattice kernel_;
};

std::vector<Vec2> enumerate_group(const QuotientGroup& g);
std::vector<CharacterOnZ2> characters(const QuotientGroup& g);

}  // namespace rank2sg
