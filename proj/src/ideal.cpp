#include "fricke/ideal.hpp"

namespace fricke {

Polynomial magnus_poly(std::span<const Word, 4> m, std::span<const Word, 4> n,
                       TraceCache& cache) {
  const int rank = cache.rank();
  PolyMatrix direct(4), inverted(4);
  for (int i = 0; i < 4; ++i) {
    if (m[i].rank() != rank || n[i].rank() != rank) throw rank_error("octet rank mismatch");
    for (int j = 0; j < 4; ++j) {
      direct[i].push_back(trace_poly(m[i] * n[j], cache));
      inverted[i].push_back(trace_poly(m[i] * n[j].inverse(), cache));
    }
  }
  return det(direct) + det(inverted);
}

std::array<Word, 4> magnus_octet(const Word& w1, const Word& w2, const Word& w3) {
  return {w1, w2, w1 * w2, w3};
}

Polynomial decomposition_generator(const Word& w1, const Word& w2, const Word& w3,
                                   TraceCache& cache) {
  FrickePQ pq = fricke_pq(w1, w2, w3, cache);
  Polynomial z = trace_poly(w1 * w2 * w3, cache);
  return z * z - pq.p * z + pq.q;
}

std::pair<GeneratorSpec, Polynomial> generator_for(const BasicWord& y, TraceCache& cache) {
  const int n = y.rank;
  if (n != cache.rank()) throw rank_error("target rank does not match cache rank");
  const int ordinal = ordinal_of(y);
  if (ordinal <= 3 * n - 3)
    throw domain_error("basic word '" + y.name() + "' is a foundation variable (ordinal " +
                       std::to_string(ordinal) + " <= " + std::to_string(3 * n - 3) + ")");

  std::vector<int> gens;
  for (int g = 1; g <= n; ++g)
    if (y.mask & (1u << (g - 1))) gens.push_back(g);

  auto single = [&](int g) { return Word(n, {g}); };
  const bool pair_case = y.length() == 2;
  GeneratorSpec spec{y, pair_case ? 1 : 2,
                     pair_case
                         ? std::array<Word, 4>{single(1), single(2), single(gens[0]),
                                               single(gens[1])}
                         : magnus_octet(single(gens[0]), single(gens[1]),
                                        Word(n, std::vector<int>(gens.begin() + 2, gens.end())))};

  Polynomial p = pair_case
                     ? magnus_poly(spec.octet, spec.octet, cache).primitive_part()
                     : decomposition_generator(spec.octet[0], spec.octet[1], spec.octet[3], cache);
  if (p.leading_sign() < 0) p = -p;
  return {spec, p};
}

IdealGenerators ideal_generators(int rank, bool parallel) {
  const int total = var_count(rank);
  IdealGenerators out;
  out.rank = rank;
  const int first = 3 * rank - 2;
  if (first > total) return out;  // n = 2: I_2 is trivial
  const int count = total - first + 1;
  const Word id(rank);
  out.generators.resize(count,
                        {GeneratorSpec{BasicWord{}, 0, {id, id, id, id}}, Polynomial(rank)});

#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < count; ++k) {
      TraceCache cache(rank);
      out.generators[k] = generator_for(basic_by_ordinal(rank, first + k), cache);
    }
    return out;
  }
#else
  (void)parallel;
#endif
  TraceCache cache(rank);
  for (int k = 0; k < count; ++k)
    out.generators[k] = generator_for(basic_by_ordinal(rank, first + k), cache);
  return out;
}

nlohmann::json to_json(const IdealGenerators& gens) {
  nlohmann::json out;
  out["n"] = gens.rank;
  out["variables"] = nlohmann::json::array();
  for (int i = 1; i <= var_count(gens.rank); ++i)
    out["variables"].push_back(var_name(gens.rank, i));
  out["generators"] = nlohmann::json::array();
  for (const auto& [spec, poly] : gens.generators) {
    nlohmann::json g;
    g["target"] = spec.target.name();
    g["case"] = spec.magnus_case;
    g["octet"] = nlohmann::json::array();
    for (const Word& w : spec.octet) g["octet"].push_back(format_word(w));
    g["poly"] = poly.str();
    g["target_degree"] = poly.degree_in(ordinal_of(spec.target));
    out["generators"].push_back(g);
  }
  return out;
}

MagnusConditions magnus_conditions(std::span<const Complex> foundation, double tol) {
  if (foundation.size() % 3 != 0 || foundation.size() < 6)
    throw domain_error("foundation must have 3n-3 coordinates with n >= 3");
  const int n = static_cast<int>(foundation.size() / 3) + 1;
  check_rank(n);
  const Complex x1 = foundation[0], x2 = foundation[1], x3 = foundation[2];
  const Complex x12 = foundation[n];          // ordinal n+1: tr(A1 A2)
  const Complex x13 = foundation[n + 1];      // ordinal n+2: tr(A1 A3)
  const Complex x23 = foundation[2 * n - 1];  // ordinal 2n:  tr(A2 A3)

  MagnusConditions out;
  out.commutator = x1 * x1 + x2 * x2 + x12 * x12 - x1 * x2 * x12 - 2.0;
  const Complex p = x1 * x23 + x2 * x13 + x3 * x12 - x1 * x2 * x3;
  const Complex q = x1 * x1 + x2 * x2 + x3 * x3 + x12 * x12 + x13 * x13 + x23 * x23 +
                    x12 * x13 * x23 - x1 * x2 * x12 - x1 * x3 * x13 - x2 * x3 * x23 - 4.0;
  out.discriminant = p * p - 4.0 * q;
  out.commutator_ok = std::abs(out.commutator - 2.0) > tol;
  out.discriminant_ok = std::abs(out.discriminant) > tol;
  return out;
}

}  // namespace fricke
