#include "fricke/trace.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <tuple>

namespace fricke {

const Polynomial* TraceCache::find(const Word& canonical) const {
  if (!enabled_) return nullptr;
  auto it = memo_.find(canonical.letters());
  return it == memo_.end() ? nullptr : &it->second;
}

void TraceCache::store(const Word& canonical, Polynomial value) {
  if (!enabled_) return;
  memo_.emplace(canonical.letters(), std::move(value));
}

namespace {

std::size_t neg_count(const std::vector<int>& ls) {
  std::size_t n = 0;
  for (int l : ls)
    if (l < 0) ++n;
  return n;
}

// The representative the rewriting runs on: among all rotations of the cyclic
// reduction of w and of its inverse, the one with the fewest negative letters,
// ties broken lexicographically. Minimizing negatives first makes every
// negative-elimination step decrease the class minimum.
Word working_rep(const Word& w) {
  std::vector<int> c = w.letters();
  std::size_t lo = 0, hi = c.size();
  while (hi - lo >= 2 && c[lo] == -c[hi - 1]) {
    ++lo;
    --hi;
  }
  c.assign(c.begin() + lo, c.begin() + hi);
  const std::size_t len = c.size();
  if (len == 0) return Word(w.rank());

  std::vector<int> inv(c.rbegin(), c.rend());
  for (int& l : inv) l = -l;

  auto key = [](int letter) { return (std::abs(letter) << 1) | (letter < 0 ? 1 : 0); };
  std::vector<int> best, candidate(len);
  std::size_t best_negs = len + 1;
  for (const std::vector<int>* src : {&c, &inv}) {
    std::size_t negs = neg_count(*src);
    if (negs > best_negs) continue;
    for (std::size_t start = 0; start < len; ++start) {
      for (std::size_t i = 0; i < len; ++i) candidate[i] = (*src)[(start + i) % len];
      bool better = best.empty() || negs < best_negs;
      if (!better && negs == best_negs)
        better = std::lexicographical_compare(
            candidate.begin(), candidate.end(), best.begin(), best.end(),
            [&](int a, int b) { return key(a) < key(b); });
      if (better) {
        best = candidate;
        best_negs = negs;
      }
    }
  }
  return Word(w.rank(), std::move(best));
}

// Termination measure, evaluated on working representatives.
struct Measure {
  std::size_t letters;
  std::size_t negatives;
  std::size_t inversions;
  auto tie() const { return std::tie(letters, negatives, inversions); }
};

Measure measure_of(const Word& rep) {
  Measure m{rep.length(), 0, 0};
  const auto& ls = rep.letters();
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (ls[i] < 0) ++m.negatives;
    for (std::size_t j = i + 1; j < ls.size(); ++j)
      if (std::abs(ls[i]) > std::abs(ls[j])) ++m.inversions;
  }
  return m;
}

class Reducer {
 public:
  explicit Reducer(TraceCache& cache) : cache_(cache), rank_(cache.rank()) {}

  Polynomial run(const Word& w) {
    if (w.rank() != rank_) throw rank_error("word rank does not match cache rank");
    const Word key = canonical_rep(w);
    if (key.empty()) return Polynomial::constant(rank_, 2);
    if (const Polynomial* hit = cache_.find(key)) return *hit;
    Polynomial result = reduce(working_rep(w));
    cache_.store(key, result);
    return result;
  }

 private:
  Polynomial reduce(const Word& rep) {
    if (int ordinal = basic_ordinal_of_word(rep)) return Polynomial::variable(rank_, ordinal);
    const auto& ls = rep.letters();
    for (int letter : ls)
      if (letter < 0) return negative_step(rep);
    for (std::size_t i = 0; i < ls.size(); ++i)
      for (std::size_t j = i + 1; j < ls.size(); ++j)
        if (ls[i] == ls[j]) return repeated_step(rep, i, j);
    return swap_step(rep);
  }

  Polynomial recurse(const Word& parent_rep, const Word& next) {
#ifndef NDEBUG
    assert(measure_of(working_rep(next)).tie() < measure_of(parent_rep).tie());
#else
    (void)parent_rep;
#endif
    return run(next);
  }

  Word make(std::vector<int> letters) const { return Word(rank_, std::move(letters)); }

  // tr(VU A^-1) = tr(VU) tr(A) - tr(VU A); rotate the leftmost negative letter last.
  Polynomial negative_step(const Word& rep) {
    const auto& ls = rep.letters();
    std::size_t k = 0;
    while (ls[k] >= 0) ++k;
    std::vector<int> rotated;
    rotated.reserve(ls.size());
    rotated.insert(rotated.end(), ls.begin() + k + 1, ls.end());
    rotated.insert(rotated.end(), ls.begin(), ls.begin() + k + 1);
    const int gen = -rotated.back();
    std::vector<int> prefix(rotated.begin(), rotated.end() - 1);
    std::vector<int> with_pos = prefix;
    with_pos.push_back(gen);
    return recurse(rep, make(prefix)) * Polynomial::variable(rank_, gen) -
           recurse(rep, make(with_pos));
  }

  // tr(A U A V) = tr(AU) tr(AV) - tr(U V^-1); ls[i] == ls[j], all letters positive.
  Polynomial repeated_step(const Word& rep, std::size_t i, std::size_t j) {
    const auto& ls = rep.letters();
    std::vector<int> rotated;
    rotated.reserve(ls.size());
    rotated.insert(rotated.end(), ls.begin() + i, ls.end());
    rotated.insert(rotated.end(), ls.begin(), ls.begin() + i);
    const std::size_t second = j - i;
    std::vector<int> au(rotated.begin(), rotated.begin() + second);
    std::vector<int> av;
    av.push_back(rotated[0]);
    av.insert(av.end(), rotated.begin() + second + 1, rotated.end());
    std::vector<int> uv;  // U V^-1
    uv.insert(uv.end(), rotated.begin() + 1, rotated.begin() + second);
    for (std::size_t t = rotated.size(); t > second + 1; --t) uv.push_back(-rotated[t - 1]);
    return recurse(rep, make(au)) * recurse(rep, make(av)) - recurse(rep, make(uv));
  }

  // Fricke swap tr(W y x) = P(W, x, y) - tr(W x y) on a positive square-free
  // non-basic word. Preferred pair: a cyclically adjacent pair whose
  // transposition sorts the word (then the subtracted trace is a single
  // variable); otherwise the leftmost descent. The representative starts with
  // its least letter, so descents sit at positions >= 1.
  Polynomial swap_step(const Word& rep) {
    const auto& ls = rep.letters();
    const std::size_t len = ls.size();
    std::size_t pos = len;
    for (std::size_t i = 0; i < len && pos == len; ++i) {
      std::vector<int> swapped = ls;
      std::swap(swapped[i], swapped[(i + 1) % len]);
      if (basic_ordinal_of_word(working_rep(make(swapped)))) pos = i;
    }
    if (pos == len) {
      pos = 1;
      while (pos + 1 < len && ls[pos] < ls[pos + 1]) ++pos;
      assert(pos + 1 < len);
    }
    const int y = ls[pos], x = ls[(pos + 1) % len];
    std::vector<int> block;  // W: the cyclic remainder after the pair
    for (std::size_t t = 0; t + 2 < len; ++t) block.push_back(ls[(pos + 2 + t) % len]);
    std::vector<int> subtracted = block;
    subtracted.push_back(x);
    subtracted.push_back(y);

    const Word wb = make(block);
    std::vector<int> bx = block, by = block;
    bx.push_back(x);
    by.push_back(y);
    Polynomial tw = recurse(rep, wb);
    Polynomial tx = Polynomial::variable(rank_, x);
    Polynomial ty = Polynomial::variable(rank_, y);
    Polynomial p = tw * recurse(rep, make({x, y})) + tx * recurse(rep, make(by)) +
                   ty * recurse(rep, make(bx)) - tw * tx * ty;
    return p - recurse(rep, make(subtracted));
  }

  TraceCache& cache_;
  int rank_;
};

}  // namespace

Polynomial trace_poly(const Word& w, TraceCache& cache) { return Reducer(cache).run(w); }

Polynomial trace_poly(const Word& w, int rank) {
  TraceCache cache(rank);
  return trace_poly(w, cache);
}

FrickePQ fricke_pq(const Word& w1, const Word& w2, const Word& w3, TraceCache& cache) {
  Polynomial t1 = trace_poly(w1, cache);
  Polynomial t2 = trace_poly(w2, cache);
  Polynomial t3 = trace_poly(w3, cache);
  Polynomial t12 = trace_poly(w1 * w2, cache);
  Polynomial t13 = trace_poly(w1 * w3, cache);
  Polynomial t23 = trace_poly(w2 * w3, cache);
  FrickePQ out{Polynomial(cache.rank()), Polynomial(cache.rank())};
  out.p = t1 * t23 + t2 * t13 + t3 * t12 - t1 * t2 * t3;
  out.q = t1 * t1 + t2 * t2 + t3 * t3 + t12 * t12 + t13 * t13 + t23 * t23 + t12 * t13 * t23 -
          t1 * t2 * t12 - t1 * t3 * t13 - t2 * t3 * t23 -
          Polynomial::constant(cache.rank(), 4);
  return out;
}

}  // namespace fricke
