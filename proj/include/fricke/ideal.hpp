#pragma once

#include <array>
#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "fricke/poly.hpp"
#include "fricke/trace.hpp"
#include "fricke/words.hpp"

#include "json.hpp"

namespace fricke {

// How a generator of I_n was produced: the target basic word y_i, the case of
// the construction, and the four words substituted as M = N into the Magnus
// Relation.
struct GeneratorSpec {
  BasicWord target;
  int magnus_case = 0;  // 1: y = Amu Anu, nu > mu > 2; 2: y = Amu Anu Xj
  std::array<Word, 4> octet;
};

struct IdealGenerators {
  int rank = 0;
  std::vector<std::pair<GeneratorSpec, Polynomial>> generators;  // ordinal order
};

// det(tr Mi Nj) + det(tr Mi Nj^-1) over the two symbolic 4x4 trace matrices.
// Vanishes identically on characters for any octet of words.
Polynomial magnus_poly(std::span<const Word, 4> m, std::span<const Word, 4> n, TraceCache& cache);

// Octet (W1, W2, W1 W2, W3) for the three-block decomposition W1 W2 W3.
std::array<Word, 4> magnus_octet(const Word& w1, const Word& w2, const Word& w3);

// Generator from a three-block Magnus decomposition: z^2 - P z + Q with
// z = tr(W1 W2 W3) and P, Q the Fricke polynomials of the blocks. The raw
// Magnus polynomial of the matching octet equals this times the cofactor
// 2 (tr[W1, W2] - 2).
Polynomial decomposition_generator(const Word& w1, const Word& w2, const Word& w3,
                                   TraceCache& cache);

// Generator p_y for a basic word with ordinal > 3n-3, sign-normalized so the
// coefficient of the greatest monomial is positive. Case 1 (y = Amu Anu) is
// the Magnus polynomial of (A1, A2, Amu, Anu) with integer content removed;
// case 2 is the quadratic from the decomposition Amu . Anu . Xj.
std::pair<GeneratorSpec, Polynomial> generator_for(const BasicWord& y, TraceCache& cache);

// All m = 2^n-1-(3n-3) generators of I_n, in ordinal order (empty for n = 2).
// With parallel = true the targets are built concurrently, one trace cache per
// task; the result is identical either way.
IdealGenerators ideal_generators(int rank, bool parallel = true);

struct MagnusConditions {
  Complex commutator;    // tr[A1, A2] from the foundation coordinates
  Complex discriminant;  // P^2 - 4Q of the y1 = tr(A1 A2 A3) quadratic
  bool commutator_ok = false;    // != 2 within tolerance
  bool discriminant_ok = false;  // != 0 within tolerance
};

// foundation = the first 3n-3 coordinates of a character point, n >= 3.
MagnusConditions magnus_conditions(std::span<const Complex> foundation, double tol = 1e-9);

// { "n", "variables", "generators": [{ "target", "case", "octet", "poly",
//   "target_degree" }] }, polynomials in canonical text.
nlohmann::json to_json(const IdealGenerators& gens);

}  // namespace fricke
