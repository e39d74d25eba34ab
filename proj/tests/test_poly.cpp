#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fricke/ideal.hpp"
#include "fricke/numerics.hpp"
#include "fricke/poly.hpp"
#include "helpers.hpp"

using namespace fricke;
using testutil::P;

namespace {

Polynomial random_poly(std::mt19937_64& rng, int rank, int max_terms, bool rational = false) {
  Polynomial p(rank);
  std::uniform_int_distribution<int> terms(0, max_terms);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> var(1, var_count(rank));
  std::uniform_int_distribution<int> expo(1, 3);
  int t = terms(rng);
  for (int i = 0; i < t; ++i) {
    Rational c(coeff(rng));
    if (rational) c /= 1 + (rng() % 4);
    Polynomial term = Polynomial::constant(rank, c);
    int nf = static_cast<int>(rng() % 3);
    for (int f = 0; f < nf; ++f) term *= Polynomial::variable(rank, var(rng), expo(rng));
    p += term;
  }
  return p;
}

std::vector<Complex> random_point(std::mt19937_64& rng, int rank) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> pt(var_count(rank));
  for (auto& z : pt) z = Complex(u(rng), u(rng));
  return pt;
}

PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b) {
  const int n = static_cast<int>(a.size());
  const int rank = a[0][0].rank();
  PolyMatrix c(n, std::vector<Polynomial>(n, Polynomial(rank)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// Independent oracle: Laplace expansion along the first row, any size.
Polynomial det_laplace(const PolyMatrix& m, std::vector<int> rows, std::vector<int> cols) {
  const int rank = m[0][0].rank();
  if (rows.size() == 1) return m[rows[0]][cols[0]];
  Polynomial acc(rank);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    std::vector<int> sub_cols;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (j != k) sub_cols.push_back(cols[j]);
    Polynomial term = m[rows[0]][cols[k]] * det_laplace(m, sub_rows, sub_cols);
    if (k % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

Polynomial det_oracle(const PolyMatrix& m) {
  std::vector<int> idx(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) idx[i] = static_cast<int>(i);
  return det_laplace(m, idx, idx);
}

}  // namespace

TEST_CASE("arithmetic basics") {
  int n = 2;
  Polynomial a = P(n, "a"), b = P(n, "b");
  CHECK((a + b) * (a - b) == P(n, "a^2 - b^2"));
  Polynomial p = P(n, "3*a*b - ab + 2");
  CHECK((p + (-p)).is_zero());
  CHECK(P(n, "ab").pow(3) == P(n, "ab^3"));
  CHECK(P(n, "a").pow(0) == P(n, "1"));
  CHECK_THROWS_AS(P(2, "a") + P(3, "a"), rank_error);
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 2);
    Polynomial p = random_poly(rng, n, 4), q = random_poly(rng, n, 4),
               r = random_poly(rng, n, 4);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p - p == Polynomial(n));
  }
}

TEST_CASE("evaluation") {
  int n = 3;
  std::vector<Complex> pt(7, Complex(0.0, 0.0));
  pt[0] = 2.5;
  CHECK(P(n, "-4").evaluate(pt) == Complex(-4.0, 0.0));
  CHECK(P(n, "a").evaluate(pt) == Complex(2.5, 0.0));
  CHECK_THROWS_AS(P(n, "a").evaluate(std::vector<Complex>(6)), rank_error);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial p = random_poly(rng, 3, 4), q = random_poly(rng, 3, 4);
    auto x = random_point(rng, 3);
    Complex lhs = (p * q).evaluate(x);
    Complex rhs = p.evaluate(x) * q.evaluate(x);
    CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("rank-3 relation vanishes at sampled character points") {
  TraceCache cache(3);
  Polynomial fricke = generator_for(basic_by_ordinal(3, 7), cache).second;
  for (int s = 0; s < 20; ++s) {
    Representation rep = sample_rep(3, derive_seed(17, s));
    auto [value, scale] = fricke.evaluate_scaled(character_point(rep));
    CHECK(std::abs(value) <= 1e-9 * std::max(1.0, scale));
  }
}

TEST_CASE("substitution") {
  int n = 2;
  PolyMap id = PolyMap::identity(n);
  CHECK(substitute(P(n, "ab"), id) == P(n, "ab"));
  Polynomial p = P(n, "a^2*b - 3*ab + 1");
  CHECK(substitute(p, id) == p);

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    Polynomial f = random_poly(rng, 2, 3), g = random_poly(rng, 2, 3);
    std::vector<Polynomial> images;
    for (int i = 0; i < 3; ++i) images.push_back(random_poly(rng, 2, 2));
    PolyMap m(2, images);
    CHECK(substitute(f * g, m) == substitute(f, m) * substitute(g, m));
    CHECK(substitute(f + g, m) == substitute(f, m) + substitute(g, m));
  }
}

TEST_CASE("jacobian") {
  CHECK(jacobian(PolyMap::identity(2)) ==
        PolyMatrix{{P(2, "1"), P(2, "0"), P(2, "0")},
                   {P(2, "0"), P(2, "1"), P(2, "0")},
                   {P(2, "0"), P(2, "0"), P(2, "1")}});
  // constant map -> zero matrix
  PolyMap constant(2, {P(2, "1"), P(2, "2"), P(2, "-4")});
  for (const auto& row : jacobian(constant))
    for (const auto& e : row) CHECK(e.is_zero());
  // twist-inverse style map (a, b, a*b - ab): lower triangular, diagonal (1, 1, -1)
  PolyMap phi4(2, {P(2, "a"), P(2, "b"), P(2, "a*b - ab")});
  PolyMatrix j = jacobian(phi4);
  CHECK(j[0][0] == P(2, "1"));
  CHECK(j[1][1] == P(2, "1"));
  CHECK(j[2][2] == P(2, "-1"));
  CHECK(j[0][1].is_zero());
  CHECK(j[0][2].is_zero());
  CHECK(j[1][2].is_zero());
  CHECK(det(j) == P(2, "-1"));
}

TEST_CASE("determinants") {
  int n = 2;
  PolyMatrix ident3(3, std::vector<Polynomial>(3, Polynomial(n)));
  for (int i = 0; i < 3; ++i) ident3[i][i] = P(n, "1");
  CHECK(det(ident3) == P(n, "1"));

  PolyMatrix diag(3, std::vector<Polynomial>(3, Polynomial(n)));
  diag[0][0] = P(n, "a");
  diag[1][1] = P(n, "b");
  diag[2][2] = P(n, "ab");
  CHECK(det(diag) == P(n, "a*b*ab"));

  std::mt19937_64 rng(31);
  for (int size : {2, 3}) {
    for (int trial = 0; trial < 10; ++trial) {
      PolyMatrix a(size, std::vector<Polynomial>(size, Polynomial(n)));
      PolyMatrix b = a;
      for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) {
          a[i][j] = random_poly(rng, n, 2);
          b[i][j] = random_poly(rng, n, 2);
        }
      CHECK(det(matmul(a, b)) == det(a) * det(b));
    }
  }
  CHECK_THROWS_AS(det(PolyMatrix{}), domain_error);
}

TEST_CASE("bareiss elimination agrees with cofactor expansion") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 6; ++trial) {
    PolyMatrix m(5, std::vector<Polynomial>(5, Polynomial(2)));
    for (auto& row : m)
      for (auto& e : row) e = random_poly(rng, 2, 2);
    CHECK(det(m) == det_oracle(m));  // size 5 forces the Bareiss path
  }
  // singular matrix with a zero pivot column
  PolyMatrix s(5, std::vector<Polynomial>(5, Polynomial(2)));
  for (int i = 0; i < 5; ++i) s[i][1] = P(2, "a");
  CHECK(det(s).is_zero());
}

TEST_CASE("jacobian chain rule") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Polynomial> f, g;
    for (int i = 0; i < 3; ++i) {
      f.push_back(random_poly(rng, 2, 2));
      g.push_back(random_poly(rng, 2, 2));
    }
    PolyMap outer(2, f), inner(2, g);
    PolyMatrix lhs = jacobian(compose(outer, inner));
    PolyMatrix jf = jacobian(outer);
    for (auto& row : jf)
      for (auto& e : row) e = substitute(e, inner);
    PolyMatrix rhs = matmul(jf, jacobian(inner));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("format and parse") {
  CHECK(Polynomial(3).str() == "0");
  CHECK(P(3, "0").is_zero());
  CHECK(P(2, "a^2 - 2").str() == "a^2 - 2");
  CHECK(P(2, "1/2*b").str() == "1/2*b");
  CHECK(P(2, "-a + 3").str() == "-a + 3");
  CHECK(P(4, "2*a*b^2*cd").str() == "2*a*b^2*cd");

  // the rank-3 relation formats with the abc^2 term and trailing -4
  TraceCache cache(3);
  std::string s = generator_for(basic_by_ordinal(3, 7), cache).second.str();
  CHECK(s.find("abc^2") != std::string::npos);
  CHECK(s.substr(s.size() - 3) == "- 4");

  // fixture round-trip
  Polynomial py2 = testutil::parse_f4(testutil::f4_py2);
  CHECK(Polynomial::parse(4, py2.str()) == py2);

  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 80; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    Polynomial p = random_poly(rng, n, 5, trial % 2 == 1);
    CHECK(Polynomial::parse(n, p.str()) == p);
  }

  CHECK_THROWS_AS(P(2, "a +"), parse_error);
  CHECK_THROWS_AS(P(2, "q"), parse_error);
  CHECK_THROWS_AS(P(2, "ac"), parse_error);  // not a basic word at rank 2
  CHECK_THROWS_AS(P(2, "a^0"), parse_error);
  CHECK_THROWS_AS(P(2, "1/0"), parse_error);
  try {
    P(2, "a * ?");
  } catch (const parse_error& e) {
    CHECK(e.position == 4);
  }
}

TEST_CASE("integrality and content") {
  CHECK(P(2, "2*a - 3*b").is_integral());
  CHECK(!P(2, "1/2*a").is_integral());
  CHECK(P(2, "4*a - 6*b").content() == Rational(2));
  CHECK(P(2, "4*a - 6*b").primitive_part() == P(2, "2*a - 3*b"));
  CHECK(P(2, "1/2*a - 3/4").content() == Rational(1, 4));
  CHECK(P(2, "1/2*a - 3/4").primitive_part() == P(2, "2*a - 3"));
  CHECK(Polynomial(2).primitive_part().is_zero());
}

TEST_CASE("polynomial map invariants") {
  CHECK_THROWS_AS(PolyMap(2, {P(2, "a")}), rank_error);
  PolyMap id = PolyMap::identity(3);
  CHECK(compose(id, id) == id);
  std::mt19937_64 rng(47);
  auto pt = random_point(rng, 3);
  auto image = id.evaluate(pt);
  for (std::size_t i = 0; i < pt.size(); ++i) CHECK(image[i] == pt[i]);
}
