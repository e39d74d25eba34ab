#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fricke/ideal.hpp"
#include "fricke/numerics.hpp"
#include "helpers.hpp"

using namespace fricke;
using testutil::P;
using testutil::W;
using testutil::parse_f4;
using testutil::random_word;

namespace {

int max_ordinal_used(const Polynomial& p) {
  int top = 0;
  for (const auto& [m, c] : p.terms())
    for (const auto& [v, e] : m.factors()) top = std::max(top, v);
  return top;
}

}  // namespace

TEST_CASE("magnus polynomial of the rank-3 example factors over the Fricke relation") {
  TraceCache cache(3);
  std::array<Word, 4> octet = {W(3, "A"), W(3, "B"), W(3, "AB"), W(3, "C")};
  Polynomial raw = magnus_poly(octet, octet, cache);
  Polynomial fricke = P(3, testutil::fricke_relation_n3);
  Polynomial cofactor = P(3, "2*a^2 + 2*b^2 + 2*ab^2 - 2*a*b*ab - 8");  // 2 (tr[A,B] - 2)
  CHECK(raw == cofactor * fricke);
  CHECK(exact_div(raw, cofactor) == fricke);
}

TEST_CASE("magnus polynomial of the identity octet is zero") {
  TraceCache cache(3);
  std::array<Word, 4> e = {Word(3), Word(3), Word(3), Word(3)};
  CHECK(magnus_poly(e, e, cache).is_zero());
}

TEST_CASE("magnus polynomial vanishes numerically for random word octets") {
  std::mt19937_64 rng(211);
  for (int trial = 0; trial < 12; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    TraceCache cache(n);
    std::array<Word, 4> m = {random_word(rng, n, 3), random_word(rng, n, 3),
                             random_word(rng, n, 3), random_word(rng, n, 3)};
    std::array<Word, 4> nn = {random_word(rng, n, 3), random_word(rng, n, 3),
                              random_word(rng, n, 3), random_word(rng, n, 3)};
    Polynomial p = magnus_poly(m, nn, cache);
    for (int s = 0; s < 5; ++s) {
      Representation rep = sample_rep(n, derive_seed(301, trial * 5 + s));
      auto [value, scale] = p.evaluate_scaled(character_point(rep));
      CHECK(std::abs(value) <= 1e-8 * std::max(1.0, scale));
    }
  }
}

TEST_CASE("rank-3 generator matches the printed relation exactly") {
  TraceCache cache(3);
  auto [spec, poly] = generator_for(basic_by_ordinal(3, 7), cache);
  CHECK(spec.magnus_case == 2);
  CHECK(poly == P(3, testutil::fricke_relation_n3));
  CHECK(format_word(spec.octet[0]) == "A");
  CHECK(format_word(spec.octet[1]) == "B");
  CHECK(format_word(spec.octet[2]) == "AB");
  CHECK(format_word(spec.octet[3]) == "C");
}

TEST_CASE("rank-4 generators match the printed fixtures exactly") {
  IdealGenerators gens = ideal_generators(4);
  REQUIRE(gens.generators.size() == 6);
  const char* fixtures[6] = {testutil::f4_py1, testutil::f4_py2, testutil::f4_py3,
                             testutil::f4_py4, testutil::f4_py5, testutil::f4_py6};
  const char* targets[6] = {"cd", "abc", "abd", "acd", "bcd", "abcd"};
  for (int i = 0; i < 6; ++i) {
    CAPTURE(i);
    CHECK(gens.generators[i].first.target.name() == targets[i]);
    CHECK(gens.generators[i].second == parse_f4(fixtures[i]));
  }
  CHECK(gens.generators[0].first.magnus_case == 1);
  for (int i = 1; i < 6; ++i) CHECK(gens.generators[i].first.magnus_case == 2);
}

TEST_CASE("case-2 generator equals the reduced magnus polynomial") {
  // raw det-sum = 2 (tr[W1, W2] - 2) * quadratic, exactly
  for (int n : {3, 4}) {
    TraceCache cache(n);
    IdealGenerators gens = ideal_generators(n);
    for (const auto& [spec, poly] : gens.generators) {
      if (spec.magnus_case != 2) continue;
      Polynomial raw = magnus_poly(spec.octet, spec.octet, cache);
      Polynomial t1 = trace_poly(spec.octet[0], cache);
      Polynomial t2 = trace_poly(spec.octet[1], cache);
      Polynomial t12 = trace_poly(spec.octet[2], cache);
      Polynomial cof = (t1 * t1 + t2 * t2 + t12 * t12 - t1 * t2 * t12 -
                        Polynomial::constant(n, 4)) *
                       Rational(2);
      CHECK(raw == cof * poly);
    }
  }
}

TEST_CASE("generator counts per rank") {
  CHECK(ideal_generators(2).generators.empty());
  CHECK(ideal_generators(3).generators.size() == 1);
  CHECK(ideal_generators(4).generators.size() == 6);
  CHECK(ideal_generators(5).generators.size() == 19);
}

TEST_CASE("parallel and serial generator construction agree") {
  for (int n : {3, 4}) {
    IdealGenerators a = ideal_generators(n, true);
    IdealGenerators b = ideal_generators(n, false);
    REQUIRE(a.generators.size() == b.generators.size());
    for (std::size_t i = 0; i < a.generators.size(); ++i) {
      CHECK(a.generators[i].first.target == b.generators[i].first.target);
      CHECK(a.generators[i].second == b.generators[i].second);
    }
  }
}

TEST_CASE("degree and variable-floor properties") {
  for (int n : {3, 4, 5}) {
    IdealGenerators gens = ideal_generators(n);
    for (const auto& [spec, poly] : gens.generators) {
      CAPTURE(n);
      CAPTURE(spec.target.name());
      int target = ordinal_of(spec.target);
      CHECK(poly.is_integral());
      CHECK(max_ordinal_used(poly) <= target);
      if (spec.magnus_case == 1) {
        CHECK(poly.total_degree() == 8);
        int d = poly.degree_in(target);
        CHECK((d == 1 || d == 2));
      } else {
        CHECK(poly.total_degree() == 4);
        CHECK(poly.degree_in(target) == 2);
        CHECK(poly.coefficient_of(target, 2) == Polynomial::constant(n, 1));
      }
      CHECK(poly.leading_sign() > 0);
    }
  }
}

TEST_CASE("generator_for rejects foundation variables") {
  TraceCache cache(3);
  CHECK_THROWS_AS(generator_for(basic_by_ordinal(3, 4), cache), domain_error);  // ab
  CHECK_THROWS_AS(generator_for(basic_by_ordinal(3, 1), cache), domain_error);  // a
}

TEST_CASE("generators vanish numerically at sampled character points") {
  for (int n : {3, 4, 5}) {
    IdealGenerators gens = ideal_generators(n);
    for (int s = 0; s < 25; ++s) {
      Representation rep = sample_rep(n, derive_seed(401 + n, s));
      auto pt = character_point(rep);
      for (const auto& [spec, poly] : gens.generators) {
        auto [value, scale] = poly.evaluate_scaled(pt);
        CHECK(std::abs(value) <= 1e-8 * std::max(1.0, scale));
      }
    }
  }
}

TEST_CASE("decomposition independence for tr(ABCD)") {
  TraceCache cache(4);
  const std::array<std::array<Word, 3>, 4> decomps = {{
      {W(4, "A"), W(4, "B"), W(4, "CD")},
      {W(4, "A"), W(4, "BC"), W(4, "D")},
      {W(4, "AB"), W(4, "C"), W(4, "D")},
      {W(4, "AD"), W(4, "B"), W(4, "C")},
  }};
  for (const auto& blocks : decomps) {
    Polynomial p = decomposition_generator(blocks[0], blocks[1], blocks[2], cache);
    CHECK(p.degree_in(15) == 2);  // quadratic in abcd
    for (int s = 0; s < 25; ++s) {
      Representation rep = sample_rep(4, derive_seed(555, s));
      auto [value, scale] = p.evaluate_scaled(character_point(rep));
      CHECK(std::abs(value) <= 1e-8 * std::max(1.0, scale));
    }
  }
}

TEST_CASE("json export round-trips") {
  for (int n : {3, 4}) {
    IdealGenerators gens = ideal_generators(n);
    nlohmann::json j = to_json(gens);
    CHECK(j["n"] == n);
    REQUIRE(j["variables"].size() == static_cast<std::size_t>(var_count(n)));
    for (int i = 1; i <= var_count(n); ++i)
      CHECK(j["variables"][i - 1] == var_name(n, i));
    REQUIRE(j["generators"].size() == gens.generators.size());
    for (std::size_t k = 0; k < gens.generators.size(); ++k) {
      const auto& g = j["generators"][k];
      CHECK(g["target"] == gens.generators[k].first.target.name());
      CHECK((g["case"] == 1 || g["case"] == 2));
      REQUIRE(g["octet"].size() == 4);
      for (int o = 0; o < 4; ++o)
        CHECK(parse_word(n, g["octet"][o].get<std::string>()) ==
              gens.generators[k].first.octet[o]);
      CHECK(Polynomial::parse(n, g["poly"].get<std::string>()) == gens.generators[k].second);
      CHECK(g["target_degree"] ==
            gens.generators[k].second.degree_in(ordinal_of(gens.generators[k].first.target)));
    }
  }
}

TEST_CASE("magnus witness conditions") {
  // identity representation: commuting matrices, commutator trace exactly 2
  std::vector<Complex> identity_foundation(6, Complex(2.0, 0.0));
  MagnusConditions cond = magnus_conditions(identity_foundation);
  CHECK(std::abs(cond.commutator - 2.0) < 1e-12);
  CHECK(!cond.commutator_ok);

  // paper witness values
  Representation witness = paper_witness_rep();
  auto pt = character_point(witness);
  MagnusConditions wc = magnus_conditions(std::span<const Complex>(pt.data(), 6));
  CHECK(std::abs(wc.commutator - Complex(-0.5598, 0.0)) <= 5e-5);
  CHECK(std::abs(wc.discriminant - Complex(0.0239, 0.0)) <= 5e-5);
  CHECK(wc.commutator_ok);
  CHECK(wc.discriminant_ok);

  // matrix commutator trace agrees with the foundation formula
  Word comm = W(3, "ABA^-1B^-1");
  CHECK(std::abs(witness.evaluate(comm).trace() - wc.commutator) <= 1e-9);

  // random character points satisfy both conditions almost surely
  int ok = 0;
  for (int s = 0; s < 100; ++s) {
    Representation rep = sample_rep(3, derive_seed(606, s));
    auto p = character_point(rep);
    MagnusConditions c = magnus_conditions(std::span<const Complex>(p.data(), 6));
    if (c.commutator_ok && c.discriminant_ok) ++ok;
  }
  CHECK(ok >= 95);

  CHECK_THROWS_AS(magnus_conditions(std::vector<Complex>(5)), domain_error);
  CHECK_THROWS_AS(magnus_conditions(std::vector<Complex>(3)), domain_error);
}
