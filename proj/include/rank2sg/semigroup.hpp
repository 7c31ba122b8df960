#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rank2sg/error.hpp"

namespace rank2sg {

// Blue letters are the e_i, red letters the f_j. Indices are 1-based.
enum class Color : std::uint8_t { Blue, Red };

struct Letter {
  Color color = Color::Blue;
  int index = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

inline Letter e(int i) { return {Color::Blue, i}; }
inline Letter f(int j) { return {Color::Red, j}; }

// Letters in product order: w = w[0] w[1] ... w[n-1]. Acting on a basis
// vector, the last letter is applied first.
using Word = std::vector<Letter>;
using ColorPattern = std::vector<Color>;

struct Degree {
  int k = 0;  // blue letters
  int l = 0;  // red letters

  friend bool operator==(const Degree&, const Degree&) = default;
  Degree operator+(const Degree& o) const { return {k + o.k, l + o.l}; }
};

Degree degree(const Word& w);
ColorPattern pattern_of(const Word& w);

// theta(i,j) = (i2,j2) encodes the relation e_i f_j = f_j2 e_i2.
class Theta {
 public:
  Theta() = default;

  // raw entries are {i, j, i2, j2}.
  static Theta from_relations(int m, int n, const std::vector<std::array<int, 4>>& raw);
  static Theta identity(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }

  std::pair<int, int> forward(int i, int j) const;
  std::pair<int, int> inverse(int i2, int j2) const;

  // All relations sorted by source pair.
  std::vector<std::array<int, 4>> relations() const;

  // Cycles of the permutation, each starting at its smallest pair.
  std::vector<std::vector<std::pair<int, int>>> cycles() const;

  friend bool operator==(const Theta&, const Theta&) = default;

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<int> fwd_;  // (i-1)*n + (j-1) -> same encoding
  std::vector<int> inv_;
};

Theta validate_theta(const std::vector<std::array<int, 4>>& raw, int m, int n);

// Checks letter indices against theta's ranges.
void check_word(const Theta& theta, const Word& w);

// Unique word equal to w whose color sequence is pattern.
Word refactor(const Theta& theta, const Word& w, const ColorPattern& pattern);

// Blue letters first, then red.
Word normal_form(const Theta& theta, const Word& w);

// Red letters first, then blue.
Word red_first(const Theta& theta, const Word& w);

Word multiply(const Theta& theta, const Word& w1, const Word& w2);

// Splits a word already in e-first form into its blue and red parts.
std::pair<Word, Word> split_blue_red(const Word& w);

Word blue_word(const std::vector<int>& indices);
Word red_word(const std::vector<int>& indices);
std::vector<int> indices_of(const Word& w);
Word concat(const Word& a, const Word& b);

// e_u f_v = f_v' e_u'. Returns (u', v').
std::pair<Word, Word> theta_prime_apply(const Theta& theta, const Word& u, const Word& v);

// Iterates theta' from (u, v) until the first return.
std::vector<std::pair<Word, Word>> theta_prime_cycle(const Theta& theta, const Word& u,
                                                     const Word& v,
                                                     std::uint64_t cap = 1000000);

bool commutes(const Theta& theta, const Word& u, const Word& v);

// theta' on pairs (blue word of length k, red word of length l). Lazy unless
// tabulate() is called; tabulation is refused above the cap.
class ThetaPrime {
 public:
  ThetaPrime(const Theta& theta, int k, int l, std::uint64_t cap = 1000000);

  int k() const { return k_; }
  int l() const { return l_; }
  std::uint64_t size() const { return size_; }

  std::uint64_t encode(const Word& u, const Word& v) const;
  std::pair<Word, Word> decode(std::uint64_t code) const;

  std::uint64_t apply(std::uint64_t code) const;
  std::pair<Word, Word> apply(const Word& u, const Word& v) const;

  void tabulate();
  bool tabulated() const { return !table_.empty(); }
  const std::vector<std::uint64_t>& table() const { return table_; }

  // Cycle lengths of the tabulated permutation (tabulates on demand).
  std::vector<std::uint64_t> cycle_lengths();

 private:
  Theta theta_;
  int k_;
  int l_;
  std::uint64_t cap_;
  std::uint64_t size_;
  std::uint64_t blue_count_;
  std::vector<std::uint64_t> table_;
};

// Parsing and formatting. Pure words are digit strings ("1121212"), or
// comma separated when an index exceeds 9. Mixed words are "e1.f2.e2".
Word parse_blue(std::string_view s);
Word parse_red(std::string_view s);
Word parse_word(std::string_view s);
ColorPattern parse_pattern(std::string_view s);  // e.g. "ffe" or "red,blue"
std::string format_indices(const Word& w);
std::string format_word(const Word& w);
std::string format_pattern(const ColorPattern& p);

}  // namespace rank2sg
