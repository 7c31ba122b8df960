#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rank2sg/lattice.hpp"
#include "rank2sg/semigroup.hpp"

namespace rank2sg {

// Eventually periodic infinite word: preperiod followed by period repeated.
struct TailSpec {
  Word preperiod;
  Word period;

  Letter at(std::size_t n) const;
  Word prefix(std::size_t n) const;
  // Block of `len` letters starting at offset `start`.
  Word block(std::size_t start, std::size_t len) const;
  void check() const;  // period nonempty

  friend bool operator==(const TailSpec&, const TailSpec&) = default;
};

// Closed rectangle of lattice points.
struct Rect {
  std::int64_t s_lo = 0, s_hi = -1;
  std::int64_t t_lo = 0, t_hi = -1;

  std::int64_t width() const { return s_hi - s_lo + 1; }
  std::int64_t height() const { return t_hi - t_lo + 1; }
  bool contains(const Vec2& v) const { return v.s >= s_lo && v.s <= s_hi && v.t >= t_lo && v.t <= t_hi; }
  friend bool operator==(const Rect&, const Rect&) = default;
};

enum class DomainKind { Periodic, Window };

inline constexpr std::int64_t kNoThreshold = std::numeric_limits<std::int64_t>::max();

// Group construction on G = Z^2/K. Labels use the outgoing convention: the
// blue edge g -> g+g1 carries e_{i(g)} with scalar alpha(g), the red edge
// g -> g+g2 carries f_{j(g)} with scalar beta(g).
//
// Periodic: tables indexed by Z^2/P for a full rank P containing K. P == K
// means G is finite and the tables are exactly G.
// Window: tables over a rectangle of representatives (K of rank 0 or 1).
// Label 0 marks an undefined entry. Points with s <= threshold.s and
// t <= threshold.t form the part carrying genuine data; the rest is an
// extension.
struct Rep {
  Theta theta;
  Sublattice kernel;
  DomainKind kind = DomainKind::Periodic;
  Sublattice period;
  Rect rect;
  Vec2 threshold{kNoThreshold, kNoThreshold};
  std::vector<int> imap;
  std::vector<int> jmap;
  std::vector<RationalAngle> alpha;
  std::vector<RationalAngle> beta;
  std::map<std::string, std::string> meta;

  std::size_t size() const { return imap.size(); }
  bool finite() const { return kind == DomainKind::Periodic && period == kernel; }
  QuotientGroup group() const { return QuotientGroup(kernel); }

  std::optional<std::size_t> slot(const Vec2& v) const;
  Vec2 point(std::size_t idx) const;  // a representative in Z^2
  bool in_core(const Vec2& v) const { return v.s <= threshold.s && v.t <= threshold.t; }

  int i_at(const Vec2& v) const;  // 0 when outside the domain or undefined
  int j_at(const Vec2& v) const;

  bool constant_scalars() const;
  RationalAngle alpha0() const { return alpha.empty() ? RationalAngle{} : alpha[0]; }
  RationalAngle beta0() const { return beta.empty() ? RationalAngle{} : beta[0]; }
};

// Builds an empty Periodic rep with tables sized |Z^2/P|.
Rep make_periodic(const Theta& theta, const Sublattice& kernel, const Sublattice& period);
Rep make_window(const Theta& theta, const Sublattice& kernel, const Rect& rect, Vec2 threshold);

struct Report {
  bool ok = true;
  std::string code;
  std::string message;
  std::optional<Vec2> where;
};

Report validate_rep(const Rep& rep);
void require_valid(const Rep& rep);  // throws DomainError with the report code

// Cycle ((i_0,j_0),...,(i_{k-1},j_{k-1})) with theta(i_s,j_s) = (i_{s+1},j_{s+1}).
// Result lives on Z^2/<(1,1),(k,0)> (C_k with g1 = 1, g2 = -1).
Rep from_theta_cycle(const Theta& theta, const std::vector<std::pair<int, int>>& cycle,
                     RationalAngle alpha0 = {}, RationalAngle beta0 = {});

// The commuting words of a theta cycle: u = i_{k-1}...i_0, v = j_0...j_{k-1}.
std::pair<Word, Word> cycle_words(const std::vector<std::pair<int, int>>& cycle);

// Ring by ring rep on C_k x C_l from e_{u0} f_{v0} = f_{v0} e_{u0}.
Rep from_commuting_pair(const Theta& theta, const Word& u0, const Word& v0, RationalAngle alpha = {},
                        RationalAngle beta = {});

// Ring by tail window on C_k x Z. Rows t <= 0 come from the tail, rows
// above 0 repeat the segment up to the first return of the ring word.
Rep build_ring_by_tail(const Theta& theta, const Word& u0, const TailSpec& v0, RationalAngle alpha0 = {});

// Sigma data of an alternating tail tau = e_{i0} f_{j0} e_{i1} ... on the
// rectangle -width <= s <= 0, -height <= t <= 0. Entries use the incoming
// convention: i(s,t) labels the blue edge into (s,t), j(s,t) the red edge.
struct SigmaWindow {
  int width = 0;
  int height = 0;
  std::vector<int> i;
  std::vector<int> j;

  std::size_t index(std::int64_t s, std::int64_t t) const {
    return static_cast<std::size_t>((s + width) + (t + height) * (width + 1));
  }
  bool contains(std::int64_t s, std::int64_t t) const { return s >= -width && s <= 0 && t >= -height && t <= 0; }
  int i_at(std::int64_t s, std::int64_t t) const { return i[index(s, t)]; }
  int j_at(std::int64_t s, std::int64_t t) const { return j[index(s, t)]; }
  friend bool operator==(const SigmaWindow&, const SigmaWindow&) = default;
};

SigmaWindow build_inductive_window(const Theta& theta, const TailSpec& tau, int width, int height);
SigmaWindow sigma_of_word(const Theta& theta, const Word& tau_prefix, int width, int height);

// Outgoing-label window rep (K = 0) carrying the Sigma data.
Rep sigma_to_rep(const Theta& theta, const SigmaWindow& w);

// Unfolds the theta' cycle through (u0, v0) onto Z^2/Z(k,l).
Rep build_3bi(const Theta& theta, const Word& u0, const Word& v0, RationalAngle beta = {});

// Block tails tau_e = u_0 u_{-1} ..., tau_f = v_0 v_{-1} ... with blocks of
// lengths k and l. Window on Z^2/Z(k,-l).
Rep build_3bii(const Theta& theta, const TailSpec& tau_e, const TailSpec& tau_f, int k, int l,
               RationalAngle beta = {});

// Blocks going down from (u0, v0): the smallest u_{d-1} compatible with
// (u_d, v_d) at every step. Returns nullopt when some step has no solution.
std::optional<std::pair<std::vector<Word>, std::vector<Word>>> backward_blocks(const Theta& theta, const Word& u0,
                                                                               const Word& v0, int count);

struct SymmetryGroup {
  Sublattice lattice;  // H as a sublattice of Z^2, contains K
  bool exact = true;
  std::int64_t bound = 0;  // window mode: largest |p|,|q| tested
  Vec2 threshold{kNoThreshold, kNoThreshold};
};

SymmetryGroup symmetry_group(const Rep& rep);
// Window reps: shifts with |p|,|q| <= bound compared on the core region.
SymmetryGroup window_symmetry(const Rep& rep, std::int64_t bound);

// Phase accumulated along the staircase path from `from` by `delta`
// (s-steps first, then t-steps; backward steps count negatively).
RationalAngle path_phase(const Rep& rep, const Vec2& from, const Vec2& delta);

CharacterOnSublattice scalar_character(const Rep& rep);

// New scalars alpha'(g) = alpha(g) + gamma(g+g1) - gamma(g), likewise beta.
Rep apply_gauge(const Rep& rep, const std::vector<RationalAngle>& gamma);

struct Normalized {
  Rep rep;
  RationalAngle alpha0;
  RationalAngle beta0;
  std::vector<RationalAngle> gamma;  // indexed like the rep tables
};

Normalized normalize_scalars(const Rep& rep);

struct Summand {
  CharacterOnSublattice chi;   // on L = HK, vanishing on K
  CharacterOnSublattice psi;   // psi_chi on L
  Rep rep;                     // on Z^2/L with per-edge scalars
  std::vector<Vec2> h1;        // per coset: g + g1 - rep(g + g1)
  std::vector<Vec2> h2;
};

struct Decomposition {
  Sublattice H;
  bool finite = true;          // H/K finite
  std::vector<Summand> summands;
  // Infinite H/K: the label data on G/H and a sampler over characters of L
  // vanishing on K whose angles have denominator dividing q.
  std::optional<Rep> quotient;
  std::string descriptor;
  std::function<std::vector<Summand>(std::int64_t q)> sample;
};

Decomposition decompose(const Rep& rep);
bool is_irreducible(const Rep& rep);
bool equivalent_reps(const Rep& a, const Rep& b);

// Evidence for the eventual symmetry of Sigma(tau). horizon is in letter
// pairs. strict requires horizon >= preperiod + 2 * period (in pairs).
SymmetryGroup tail_symmetry(const Theta& theta, const TailSpec& tau, int horizon, bool strict = true);
SymmetryGroup sigma_symmetry(const SigmaWindow& w, std::int64_t bound, std::int64_t threshold);

}  // namespace rank2sg
