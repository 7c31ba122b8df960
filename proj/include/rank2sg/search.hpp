#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rank2sg/atomic_reps.hpp"

namespace rank2sg {

struct IsoClassReport {
  int m = 0;
  int n = 0;
  bool swap = false;
  std::size_t total = 0;                  // (m n)!
  std::vector<Theta> representatives;    // lexicographically smallest per orbit
  std::vector<std::size_t> orbit_sizes;  // parallel to representatives

  std::size_t count() const { return representatives.size(); }
};

// Orbits of S_m x S_n (and the e/f exchange when m == n and allow_swap) on
// the permutations of {1..m} x {1..n}. Refused when m*n exceeds cap.
IsoClassReport iso_classes(int m, int n, bool allow_swap, int cap = 8);

// Permutation table of theta as a flat vector; the canonical form compares these.
std::vector<int> theta_table(const Theta& theta);
Theta relabel(const Theta& theta, const std::vector<int>& pi, const std::vector<int>& rho, bool swap);

struct CommutingPairResult {
  Word u;
  Word v;
  int block_len = 0;       // L
  std::size_t cycle = 0;   // theta' cycle length t (1 for a primitive pair)
  std::int64_t dimension = 0;  // |Z^2 / H| of the constructed rep
  Sublattice symmetry;
};

// Walks theta' cycles at block lengths 1..max_block_len in lexicographic
// order and returns the first pair whose rep certifies dimension >= target.
CommutingPairResult find_commuting_pair(const Theta& theta, std::int64_t target, int max_block_len,
                                        std::size_t max_rep_size = 250000);

struct AperiodicWitness {
  TailSpec tail;
  SigmaWindow window;
  SymmetryGroup symmetry;
};

// Depth first over alternating prefixes of max_len letters (max_len/2 pairs)
// for a Sigma window with no nonzero symmetry shift, neither in the raw data
// nor in the outgoing-label window built from it.
std::optional<AperiodicWitness> aperiodic_search(const Theta& theta, int max_len, int jobs = 1);

// Horizon used to re-check a witness of the given length.
int aperiodic_horizon(int max_len);

// Histogram of theta' cycle lengths for every (k,l) with k <= kmax, l <= lmax.
struct SurveyRow {
  int k = 0;
  int l = 0;
  std::uint64_t size = 0;
  std::map<std::uint64_t, std::uint64_t> cycles;  // length -> count
};

std::vector<SurveyRow> theta_prime_survey(const Theta& theta, int kmax, int lmax, std::uint64_t cap = 1000000);

}  // namespace rank2sg
