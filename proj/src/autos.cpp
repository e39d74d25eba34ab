#include "fricke/autos.hpp"

#include <deque>
#include <map>
#include <string>

namespace fricke {

PolyMap induced_map(std::span<const Nielsen> word, TraceCache& cache) {
  const int rank = cache.rank();
  std::vector<Polynomial> comps;
  comps.reserve(var_count(rank));
  for (const BasicWord& b : basic_words(rank))
    comps.push_back(trace_poly(apply_nielsen(b.word(), word), cache));
  return PolyMap(rank, std::move(comps));
}

PolyMap induced_map(std::span<const Nielsen> word, int rank) {
  TraceCache cache(rank);
  return induced_map(word, cache);
}

Polynomial jac_det(const PolyMap& m) { return det(jacobian(m)); }

namespace {

IntMatrix int_identity(int rank) {
  IntMatrix m(rank, std::vector<Integer>(rank, 0));
  for (int i = 0; i < rank; ++i) m[i][i] = 1;
  return m;
}

IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b) {
  const int n = static_cast<int>(a.size());
  IntMatrix c(n, std::vector<Integer>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

}  // namespace

IntMatrix abelianization(std::span<const Nielsen> word, int rank) {
  check_rank(rank);
  auto generator_matrix = [&](Nielsen gen) {
    IntMatrix m = int_identity(rank);
    switch (gen) {
      case Nielsen::twist: m[1][0] = 1; break;       // e1 -> e1 + e2
      case Nielsen::twist_inv: m[1][0] = -1; break;  // e1 -> e1 - e2
      case Nielsen::swap12:
        m[0][0] = m[1][1] = 0;
        m[0][1] = m[1][0] = 1;
        break;
      case Nielsen::rotate: {
        IntMatrix r(rank, std::vector<Integer>(rank, 0));
        for (int g = 0; g < rank; ++g) r[(g + 1) % rank][g] = 1;  // e_g -> e_{g+1}
        return r;
      }
      case Nielsen::invert: m[0][0] = -1; break;
    }
    return m;
  };
  // left factor acts first, so its matrix is applied first (rightmost)
  IntMatrix acc = int_identity(rank);
  for (Nielsen gen : word) acc = int_multiply(generator_matrix(gen), acc);
  return acc;
}

Integer int_det(const IntMatrix& m) {
  const int n = static_cast<int>(m.size());
  // fraction-free Bareiss over the integers
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r][k] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return 0;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

int hyperoctahedral_count(int rank) {
  if (rank != 2 && rank != 3)
    throw domain_error("hyperoctahedral closure is computed symbolically only at ranks 2 and 3");
  TraceCache cache(rank);
  struct Element {
    PolyMap map;
    IntMatrix action;
  };
  std::vector<Element> gens;
  for (Nielsen g : {Nielsen::swap12, Nielsen::rotate, Nielsen::invert}) {
    std::vector<Nielsen> word{g};
    gens.push_back({induced_map(word, cache), abelianization(word, rank)});
  }
  auto key_of = [](const Element& e) {
    std::string key;
    for (const auto& c : e.map.components()) {
      key += c.str();
      key += ';';
    }
    key += '|';
    for (const auto& row : e.action)
      for (const auto& v : row) {
        key += v.str();
        key += ',';
      }
    return key;
  };
  std::map<std::string, Element> seen;
  std::deque<const Element*> frontier;
  for (const auto& g : gens) {
    auto [it, inserted] = seen.emplace(key_of(g), g);
    if (inserted) frontier.push_back(&it->second);
  }
  while (!frontier.empty()) {
    const Element* cur = frontier.front();
    frontier.pop_front();
    for (const auto& g : gens) {
      // append a generator: maps compose reversed, abelianizations in order
      Element next{compose(cur->map, g.map), int_multiply(g.action, cur->action)};
      auto [it, inserted] = seen.emplace(key_of(next), std::move(next));
      if (inserted) frontier.push_back(&it->second);
    }
  }
  return static_cast<int>(seen.size());
}

nlohmann::json to_json(const PolyMap& m, std::string_view word) {
  nlohmann::json out;
  out["n"] = m.rank();
  out["word"] = std::string(word);
  out["components"] = nlohmann::json::object();
  for (int i = 1; i <= var_count(m.rank()); ++i)
    out["components"][var_name(m.rank(), i)] = m.component(i).str();
  return out;
}

Polynomial gama_phi1_det() {
  const int rank = 4;
  // Coordinates l..y are the 14 basic words of length <= 3, ordinals 1..14;
  // z = tr(ABCD), ordinal 15, is eliminated.
  auto var = [&](int ordinal) { return Polynomial::variable(rank, ordinal); };
  auto mono = [&](std::initializer_list<int> ordinals) {
    Polynomial p = Polynomial::constant(rank, 1);
    for (int v : ordinals) p *= var(v);
    return p;
  };
  std::vector<Polynomial> comps;
  comps.push_back(var(5));                // l -> p
  comps.push_back(var(2));                // m -> m
  comps.push_back(var(3));                // n -> n
  comps.push_back(var(4));                // o -> o
  comps.push_back(mono({2, 5}) - var(1));  // p -> mp - l
  comps.push_back(var(11));               // q -> v
  comps.push_back(var(12));               // r -> w
  comps.push_back(var(8));                // s -> s
  comps.push_back(var(9));                // t -> t
  comps.push_back(var(10));               // u -> u
  comps.push_back(mono({2, 11}) - var(6));   // v -> mv - q
  comps.push_back(mono({2, 12}) - var(7));   // w -> mw - r
  // x -> z = (lmno - lmu - los - mnr - nop + ly + mx + nw + ov - qt + rs) / 2
  comps.push_back((mono({1, 2, 3, 4}) - mono({1, 2, 10}) - mono({1, 4, 8}) - mono({2, 3, 7}) -
                   mono({3, 4, 5}) + mono({1, 14}) + mono({2, 13}) + mono({3, 12}) +
                   mono({4, 11}) - mono({6, 9}) + mono({7, 8})) *
                  Rational(1, 2));
  comps.push_back(var(14));  // y -> y

  PolyMatrix jac(14);
  for (int i = 0; i < 14; ++i)
    for (int v = 1; v <= 14; ++v) jac[i].push_back(comps[i].derivative(v));
  return det(jac);
}

}  // namespace fricke
