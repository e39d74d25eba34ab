#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "fricke/poly.hpp"
#include "fricke/trace.hpp"
#include "fricke/words.hpp"

#include "json.hpp"

namespace fricke {

using NielsenWord = std::vector<Nielsen>;

// Polynomial self-map induced by a word in the Nielsen generators: component i
// is the trace polynomial of the image of the i-th basic word. The Nielsen
// word acts on group elements left factor first; the induced point maps then
// compose in reversed order, i.e. induced_map(uv) == compose(induced_map(u),
// induced_map(v)).
PolyMap induced_map(std::span<const Nielsen> word, TraceCache& cache);
PolyMap induced_map(std::span<const Nielsen> word, int rank);

// det(Jac(m)) as a polynomial; constant +1 or -1 for Nielsen-induced maps.
Polynomial jac_det(const PolyMap& m);

using IntMatrix = std::vector<std::vector<Integer>>;

// Action of the Nielsen word on the abelianization Z^n, columns = images of
// basis vectors (twist sends e1 to e1 + e2). det equals jac_det of the
// induced map.
IntMatrix abelianization(std::span<const Nielsen> word, int rank);
Integer int_det(const IntMatrix& m);

// Order of the signed-permutation subgroup generated by swap, rotation and
// inversion, 2^n n!. Closure elements are tracked as (induced map,
// abelianized action) pairs: at rank 2 inverting both generators acts
// trivially on characters, so induced maps alone undercount the group.
// Supported at ranks 2 and 3.
int hyperoctahedral_count(int rank);

// Negative control: the twist map on the 14 shorter-word coordinates of the
// rank-4 variety (longest coordinate eliminated by the half-integer identity
// for 2 tr(ABCD)). The Jacobian determinant is (1/2) b: non-constant and not
// integral, unlike the full-coordinate embedding.
Polynomial gama_phi1_det();

// { "n", "word", "components": { varname: canonical poly string } }
nlohmann::json to_json(const PolyMap& m, std::string_view word);

}  // namespace fricke
