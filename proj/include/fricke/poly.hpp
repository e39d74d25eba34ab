#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fricke/errors.hpp"
#include "fricke/words.hpp"

namespace fricke {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;
using Complex = std::complex<double>;

// Product of variable powers; factors are (ordinal, exponent > 0) sorted by ordinal.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(int ordinal, int exponent = 1);

  int degree() const;
  int exponent(int ordinal) const;
  bool is_one() const { return factors_.empty(); }
  const std::vector<std::pair<int, int>>& factors() const { return factors_; }

  Monomial operator*(const Monomial& rhs) const;
  bool divides(const Monomial& into) const;
  Monomial divide(const Monomial& by) const;  // requires by.divides(*this)

  bool operator==(const Monomial&) const = default;
  // Graded lexicographic order, greatest monomial first (the canonical
  // printing/storage order).
  static bool before(const Monomial& a, const Monomial& b);

 private:
  std::vector<std::pair<int, int>> factors_;
};

struct MonomialBefore {
  bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::before(a, b); }
};

// Sparse multivariate polynomial with exact rational coefficients in the
// Horowitz variables x_1..x_{2^n-1} of a fixed rank n.
class Polynomial {
 public:
  explicit Polynomial(int rank);  // zero
  static Polynomial constant(int rank, Rational value);
  static Polynomial variable(int rank, int ordinal, int exponent = 1);

  int rank() const { return rank_; }
  int nvars() const { return (1 << rank_) - 1; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // 0 for the zero polynomial
  bool is_integral() const;         // all coefficients have denominator 1
  int total_degree() const;         // 0 for constants (including zero)
  int degree_in(int ordinal) const;
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rational, MonomialBefore>& terms() const { return terms_; }

  // Coefficient of y^power viewed as a polynomial in the remaining variables.
  Polynomial coefficient_of(int ordinal, int power) const;
  // Sign of the coefficient of the greatest monomial; 0 for the zero polynomial.
  int leading_sign() const;
  // Positive gcd of the coefficients (gcd of numerators over lcm of
  // denominators); 0 for the zero polynomial.
  Rational content() const;
  Polynomial primitive_part() const;  // *this divided by its content

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial&) const;
  Polynomial operator-(const Polynomial&) const;
  Polynomial operator*(const Polynomial&) const;
  Polynomial& operator+=(const Polynomial&);
  Polynomial& operator-=(const Polynomial&);
  Polynomial& operator*=(const Polynomial&);
  Polynomial operator*(const Rational& scalar) const;
  Polynomial pow(unsigned exponent) const;

  Polynomial derivative(int ordinal) const;
  Polynomial substitute(std::span<const Polynomial> images) const;  // images.size() == nvars

  Complex evaluate(std::span<const Complex> point) const;
  struct Evaluated {
    Complex value;
    double scale;  // largest |term| at the point
  };
  Evaluated evaluate_scaled(std::span<const Complex> point) const;

  // Canonical text: terms in monomial order, '*' between factors, '^k' powers,
  // rational coefficients as num/den. parse(rank, str(p)) == p.
  std::string str() const;
  static Polynomial parse(int rank, std::string_view text);

  bool operator==(const Polynomial&) const = default;

 private:
  void add_term(const Monomial& m, const Rational& c);
  int rank_;
  std::map<Monomial, Rational, MonomialBefore> terms_;
};

inline Polynomial operator*(const Rational& scalar, const Polynomial& p) { return p * scalar; }

// Self-map of C^{2^n-1}: one polynomial per Horowitz coordinate.
class PolyMap {
 public:
  PolyMap(int rank, std::vector<Polynomial> components);
  static PolyMap identity(int rank);

  int rank() const { return rank_; }
  const std::vector<Polynomial>& components() const { return components_; }
  const Polynomial& component(int ordinal) const { return components_.at(ordinal - 1); }

  std::vector<Complex> evaluate(std::span<const Complex> point) const;
  bool operator==(const PolyMap&) const = default;

 private:
  int rank_;
  std::vector<Polynomial> components_;
};

// (outer o inner): substitute inner's components into each component of outer.
PolyMap compose(const PolyMap& outer, const PolyMap& inner);
Polynomial substitute(const Polynomial& p, const PolyMap& m);

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Entry (i, j) = d(component i) / d(x_j).
PolyMatrix jacobian(const PolyMap& m);

// Exact determinant: cofactor expansion up to 4x4, fraction-free Bareiss
// elimination above.
Polynomial det(const PolyMatrix& m);

// Exact quotient; throws domain_error if den does not divide num.
Polynomial exact_div(const Polynomial& num, const Polynomial& den);

}  // namespace fricke
