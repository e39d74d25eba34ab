#include "fricke/words.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>

namespace fricke {

void check_rank(int rank) {
  if (rank < min_rank || rank > max_rank)
    throw rank_error("rank must be in [" + std::to_string(min_rank) + ", " +
                     std::to_string(max_rank) + "], got " + std::to_string(rank));
}

int var_count(int rank) {
  check_rank(rank);
  return (1 << rank) - 1;
}

namespace {

// Letter order key: generators ascending, +1 before -1 within a generator.
inline int letter_key(int letter) {
  return (std::abs(letter) << 1) | (letter < 0 ? 1 : 0);
}

void check_letter(int rank, int letter) {
  int g = std::abs(letter);
  if (g < 1 || g > rank)
    throw rank_error("generator index " + std::to_string(g) + " out of range for rank " +
                     std::to_string(rank));
}

std::vector<int> reduce_letters(int rank, std::span<const int> raw) {
  std::vector<int> out;
  out.reserve(raw.size());
  for (int letter : raw) {
    check_letter(rank, letter);
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

bool letters_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return letter_key(a[i]) < letter_key(b[i]);
  return false;
}

}  // namespace

Word::Word(int rank) : rank_(rank) { check_rank(rank); }

Word::Word(int rank, std::vector<int> letters) : rank_(rank) {
  check_rank(rank);
  letters_ = reduce_letters(rank, letters);
}

Word Word::inverse() const {
  std::vector<int> inv(letters_.rbegin(), letters_.rend());
  for (int& l : inv) l = -l;
  Word w(rank_);
  w.letters_ = std::move(inv);  // reversal of a reduced word stays reduced
  return w;
}

Word Word::operator*(const Word& rhs) const {
  if (rank_ != rhs.rank_) throw rank_error("word rank mismatch");
  std::vector<int> cat = letters_;
  cat.insert(cat.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(rank_, std::move(cat));
}

bool Word::operator<(const Word& rhs) const { return letters_less(letters_, rhs.letters_); }

Word reduce_free(int rank, std::span<const int> raw) {
  return Word(rank, std::vector<int>(raw.begin(), raw.end()));
}

Word canonical_rep(const Word& w) {
  std::vector<int> c = w.letters();
  // cyclic reduction: strip cancelling first/last pairs
  std::size_t lo = 0, hi = c.size();
  while (hi - lo >= 2 && c[lo] == -c[hi - 1]) {
    ++lo;
    --hi;
  }
  c.assign(c.begin() + lo, c.begin() + hi);
  const std::size_t len = c.size();
  Word result(w.rank());
  if (len == 0) return result;

  std::vector<int> inv(c.rbegin(), c.rend());
  for (int& l : inv) l = -l;

  std::vector<int> best, candidate(len);
  for (const std::vector<int>* src : {&c, &inv}) {
    for (std::size_t start = 0; start < len; ++start) {
      for (std::size_t i = 0; i < len; ++i) candidate[i] = (*src)[(start + i) % len];
      if (best.empty() || letters_less(candidate, best)) best = candidate;
    }
  }
  return Word(w.rank(), std::move(best));
}

int BasicWord::length() const { return std::popcount(mask); }

Word BasicWord::word() const {
  std::vector<int> letters;
  for (int g = 1; g <= rank; ++g)
    if (mask & (1u << (g - 1))) letters.push_back(g);
  return Word(rank, std::move(letters));
}

std::string BasicWord::name() const {
  std::string s;
  for (int g = 1; g <= rank; ++g)
    if (mask & (1u << (g - 1))) s.push_back(static_cast<char>('a' + g - 1));
  return s;
}

namespace {

struct BasicTable {
  std::vector<BasicWord> words;           // by ordinal - 1
  std::vector<int> ordinal_by_mask;       // by mask, 0 unused
  std::vector<std::string> names;         // by ordinal - 1
  std::map<std::string, int, std::less<>> ordinal_by_name;
};

const BasicTable& basic_table(int rank) {
  check_rank(rank);
  static std::array<std::unique_ptr<BasicTable>, max_rank + 1> tables;
  static std::mutex mu;
  std::lock_guard lock(mu);
  auto& slot = tables[rank];
  if (!slot) {
    auto t = std::make_unique<BasicTable>();
    const std::uint32_t total = (1u << rank) - 1;
    for (std::uint32_t mask = 1; mask <= total; ++mask) t->words.push_back({rank, mask});
    std::sort(t->words.begin(), t->words.end(), [](const BasicWord& a, const BasicWord& b) {
      if (a.length() != b.length()) return a.length() < b.length();
      // same popcount: compare ascending index tuples lexicographically
      std::uint32_t ma = a.mask, mb = b.mask;
      while (ma && mb) {
        int ga = std::countr_zero(ma), gb = std::countr_zero(mb);
        if (ga != gb) return ga < gb;
        ma &= ma - 1;
        mb &= mb - 1;
      }
      return false;
    });
    t->ordinal_by_mask.assign(total + 1, 0);
    for (std::size_t i = 0; i < t->words.size(); ++i) {
      t->ordinal_by_mask[t->words[i].mask] = static_cast<int>(i) + 1;
      t->names.push_back(t->words[i].name());
      t->ordinal_by_name.emplace(t->names.back(), static_cast<int>(i) + 1);
    }
    slot = std::move(t);
  }
  return *slot;
}

}  // namespace

const std::vector<BasicWord>& basic_words(int rank) { return basic_table(rank).words; }

int ordinal_of(const BasicWord& b) {
  if (b.mask == 0) throw domain_error("basic word must be a nonempty subset");
  return basic_table(b.rank).ordinal_by_mask[b.mask];
}

BasicWord basic_by_ordinal(int rank, int ordinal) {
  const auto& t = basic_table(rank);
  if (ordinal < 1 || ordinal > static_cast<int>(t.words.size()))
    throw domain_error("ordinal " + std::to_string(ordinal) + " out of range for rank " +
                       std::to_string(rank));
  return t.words[ordinal - 1];
}

int ordinal_by_mask(int rank, std::uint32_t mask) {
  const auto& t = basic_table(rank);
  if (mask == 0 || mask >= t.ordinal_by_mask.size())
    throw domain_error("invalid basic word mask");
  return t.ordinal_by_mask[mask];
}

const std::string& var_name(int rank, int ordinal) {
  const auto& t = basic_table(rank);
  if (ordinal < 1 || ordinal > static_cast<int>(t.names.size()))
    throw domain_error("ordinal out of range");
  return t.names[ordinal - 1];
}

int var_ordinal(int rank, std::string_view name) {
  const auto& t = basic_table(rank);
  auto it = t.ordinal_by_name.find(name);
  return it == t.ordinal_by_name.end() ? 0 : it->second;
}

int basic_ordinal_of_word(const Word& w) {
  if (w.empty()) return 0;
  std::uint32_t mask = 0;
  int prev = 0;
  for (int letter : w.letters()) {
    if (letter <= prev) return 0;  // needs +1 exponents in strictly ascending index order
    prev = letter;
    mask |= 1u << (letter - 1);
  }
  return ordinal_by_mask(w.rank(), mask);
}

namespace {

// Image of a single positive generator under a Nielsen generator.
std::vector<int> nielsen_image(int g, Nielsen gen, int rank) {
  switch (gen) {
    case Nielsen::twist:
      return g == 1 ? std::vector<int>{1, 2} : std::vector<int>{g};
    case Nielsen::twist_inv:
      return g == 1 ? std::vector<int>{1, -2} : std::vector<int>{g};
    case Nielsen::swap12:
      return g == 1 ? std::vector<int>{2} : g == 2 ? std::vector<int>{1} : std::vector<int>{g};
    case Nielsen::rotate:
      return {g == rank ? 1 : g + 1};
    case Nielsen::invert:
      return g == 1 ? std::vector<int>{-1} : std::vector<int>{g};
  }
  throw domain_error("unknown Nielsen generator");
}

}  // namespace

Word apply_nielsen(const Word& w, Nielsen gen) {
  std::vector<int> out;
  out.reserve(2 * w.length());
  for (int letter : w.letters()) {
    std::vector<int> img = nielsen_image(std::abs(letter), gen, w.rank());
    if (letter < 0) {
      std::reverse(img.begin(), img.end());
      for (int& l : img) l = -l;
    }
    out.insert(out.end(), img.begin(), img.end());
  }
  return Word(w.rank(), std::move(out));
}

Word apply_nielsen(const Word& w, std::span<const Nielsen> word) {
  Word result = w;
  for (Nielsen gen : word) result = apply_nielsen(result, gen);
  return result;
}

std::vector<Nielsen> parse_nielsen(std::string_view text) {
  std::vector<Nielsen> out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    switch (ch) {
      case 'T':
        if (i + 1 < text.size() && text[i + 1] == '\'') {
          out.push_back(Nielsen::twist_inv);
          ++i;
        } else {
          out.push_back(Nielsen::twist);
        }
        break;
      case 'P': out.push_back(Nielsen::swap12); break;
      case 'R': out.push_back(Nielsen::rotate); break;
      case 'I': out.push_back(Nielsen::invert); break;
      default:
        throw parse_error(std::string("unexpected character '") + ch + "' in Nielsen word", i);
    }
  }
  return out;
}

std::string format_nielsen(std::span<const Nielsen> word) {
  std::string s;
  for (Nielsen gen : word) {
    switch (gen) {
      case Nielsen::twist: s += 'T'; break;
      case Nielsen::twist_inv: s += "T'"; break;
      case Nielsen::swap12: s += 'P'; break;
      case Nielsen::rotate: s += 'R'; break;
      case Nielsen::invert: s += 'I'; break;
    }
  }
  return s;
}

Word parse_word(int rank, std::string_view text) {
  check_rank(rank);
  std::vector<int> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (ch < 'A' || ch > 'Z')
      throw parse_error(std::string("expected generator letter, got '") + ch + "'", i);
    int g = ch - 'A' + 1;
    if (g > rank)
      throw parse_error(std::string("generator '") + ch + "' exceeds rank " + std::to_string(rank),
                        i);
    ++i;
    long exponent = 1;
    if (i < text.size() && text[i] == '^') {
      std::size_t expo_pos = ++i;
      bool neg = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw parse_error("expected integer exponent after '^'", expo_pos);
      long mag = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        mag = mag * 10 + (text[i] - '0');
        if (mag > 10000) throw parse_error("exponent too large", expo_pos);
        ++i;
      }
      if (mag == 0) throw parse_error("exponent must be nonzero", expo_pos);
      exponent = neg ? -mag : mag;
    }
    for (long k = 0; k < std::labs(exponent); ++k) letters.push_back(exponent > 0 ? g : -g);
  }
  return Word(rank, std::move(letters));
}

std::string format_word(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  std::size_t i = 0;
  const auto& ls = w.letters();
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    long run = static_cast<long>(j - i);
    s += static_cast<char>('A' + std::abs(ls[i]) - 1);
    long expo = ls[i] > 0 ? run : -run;
    if (expo != 1) s += "^" + std::to_string(expo);
    i = j;
  }
  return s;
}

}  // namespace fricke
