#pragma once

#include <map>
#include <vector>

#include "fricke/poly.hpp"
#include "fricke/words.hpp"

namespace fricke {

// Memo of trace polynomials keyed by canonical representative (and rank).
// Not synchronized: confine one cache to one worker.
class TraceCache {
 public:
  explicit TraceCache(int rank) : rank_(rank) { check_rank(rank); }

  int rank() const { return rank_; }
  bool enabled() const { return enabled_; }
  void set_enabled(bool on) { enabled_ = on; }
  std::size_t size() const { return memo_.size(); }

  const Polynomial* find(const Word& canonical) const;
  void store(const Word& canonical, Polynomial value);

 private:
  int rank_;
  bool enabled_ = true;
  std::map<std::vector<int>, Polynomial> memo_;
};

// tr_W as an integer-coefficient polynomial in the Horowitz variables, via the
// fundamental SL(2) trace relations:
//   tr(V U A^-1) = tr(V U) tr(A) - tr(V U A)          (negative letter)
//   tr(A U A V)  = tr(A U) tr(A V) - tr(U V^-1)       (repeated generator)
//   tr(W y x)    = P(W, x, y) - tr(W x y)             (Fricke swap)
// Each step strictly decreases (letter count, negative letters, inversions).
Polynomial trace_poly(const Word& w, TraceCache& cache);
Polynomial trace_poly(const Word& w, int rank);  // convenience, private cache

struct FrickePQ {
  Polynomial p;  // tr(W1 W2 W3) + tr(W1 W3 W2)
  Polynomial q;  // tr(W1 W2 W3) * tr(W1 W3 W2)
};

// P and Q of the quadratic z^2 - Pz + Q with roots tr(W1 W2 W3), tr(W1 W3 W2),
// built from the six block traces.
FrickePQ fricke_pq(const Word& w1, const Word& w2, const Word& w3, TraceCache& cache);

}  // namespace fricke
