#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fricke/errors.hpp"

namespace fricke {

inline constexpr int min_rank = 2;
inline constexpr int max_rank = 10;

// Number of Horowitz coordinates, 2^n - 1. Throws rank_error outside [min_rank, max_rank].
int var_count(int rank);
void check_rank(int rank);

// Freely reduced word in F_n. A letter is a signed generator index: +g is the
// g-th generator (1-based), -g its inverse. The constructor free-reduces, so
// every Word is a valid group element representative.
class Word {
 public:
  explicit Word(int rank);
  Word(int rank, std::vector<int> letters);

  int rank() const { return rank_; }
  const std::vector<int>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  Word inverse() const;
  Word operator*(const Word& rhs) const;  // concatenation, freely reduced

  bool operator==(const Word& rhs) const = default;
  // Total order used to pick canonical representatives: shorter first, then
  // letterwise by (generator index, exponent sign) with +1 before -1.
  bool operator<(const Word& rhs) const;

 private:
  int rank_;
  std::vector<int> letters_;
};

Word reduce_free(int rank, std::span<const int> raw);

// Least word, under Word::operator<, among all rotations of the cyclic
// reduction of `w` and of its inverse. Words with equal canonical_rep have
// equal trace under every SL(2,C) representation.
Word canonical_rep(const Word& w);

// Nonempty subset of generators, read as the word with those generators in
// ascending index order, all with exponent +1.
struct BasicWord {
  int rank = 0;
  std::uint32_t mask = 0;  // bit g-1 set iff generator g occurs

  int length() const;
  Word word() const;
  std::string name() const;  // concatenated lowercase letters, e.g. "ab"
  bool operator==(const BasicWord&) const = default;
};

// All 2^n - 1 basic words in the global Horowitz ordering (position + 1 is the
// ordinal): shorter words first, ties broken at the first disagreeing letter.
const std::vector<BasicWord>& basic_words(int rank);

int ordinal_of(const BasicWord& b);                      // 1..2^n-1
BasicWord basic_by_ordinal(int rank, int ordinal);
int ordinal_by_mask(int rank, std::uint32_t mask);
const std::string& var_name(int rank, int ordinal);
// Ordinal of a variable name like "ab"; 0 if the name is not a basic word at this rank.
int var_ordinal(int rank, std::string_view name);

// If w is a basic word verbatim (ascending distinct generators, all +1),
// returns its ordinal; otherwise 0.
int basic_ordinal_of_word(const Word& w);

// Nielsen generators of Out(F_n): twist T: A1 -> A1 A2, its inverse
// T': A1 -> A1 A2^-1, swap P: A1 <-> A2, rotation R: Ai -> Ai+1 (An -> A1),
// inversion I: A1 -> A1^-1.
enum class Nielsen { twist, twist_inv, swap12, rotate, invert };

Word apply_nielsen(const Word& w, Nielsen gen);
// Applies the letters of the Nielsen word left to right to the group element.
Word apply_nielsen(const Word& w, std::span<const Nielsen> word);

std::vector<Nielsen> parse_nielsen(std::string_view text);  // e.g. "TT'PRI"
std::string format_nielsen(std::span<const Nielsen> word);

// Word grammar: token = uppercase letter (A = A1, B = A2, ...) optionally
// followed by ^ and a nonzero integer. Whitespace ignored. "A^-1B^2C".
Word parse_word(int rank, std::string_view text);
std::string format_word(const Word& w);

}  // namespace fricke
