#include "fricke/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace fricke {

Monomial Monomial::variable(int ordinal, int exponent) {
  if (ordinal < 1) throw domain_error("variable ordinal must be positive");
  if (exponent <= 0) throw domain_error("monomial exponent must be positive");
  Monomial m;
  m.factors_.emplace_back(ordinal, exponent);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

int Monomial::exponent(int ordinal) const {
  for (const auto& [v, e] : factors_)
    if (v == ordinal) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + rhs.factors_.size());
  auto a = factors_.begin(), b = rhs.factors_.begin();
  while (a != factors_.end() || b != rhs.factors_.end()) {
    if (b == rhs.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

bool Monomial::divides(const Monomial& into) const {
  for (const auto& [v, e] : factors_)
    if (into.exponent(v) < e) return false;
  return true;
}

Monomial Monomial::divide(const Monomial& by) const {
  Monomial out;
  auto a = factors_.begin();
  for (; a != factors_.end(); ++a) {
    int e = a->second - by.exponent(a->first);
    if (e < 0) throw domain_error("monomial division is not exact");
    if (e > 0) out.factors_.emplace_back(a->first, e);
  }
  return out;
}

bool Monomial::before(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  // graded lex: at the first ordinal where exponents differ, larger wins
  auto ia = a.factors_.begin(), ib = b.factors_.begin();
  while (ia != a.factors_.end() && ib != b.factors_.end()) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second > ib->second;
    ++ia;
    ++ib;
  }
  return ia != a.factors_.end();
}

Polynomial::Polynomial(int rank) : rank_(rank) { check_rank(rank); }

Polynomial Polynomial::constant(int rank, Rational value) {
  Polynomial p(rank);
  if (value != 0) p.terms_.emplace(Monomial{}, std::move(value));
  return p;
}

Polynomial Polynomial::variable(int rank, int ordinal, int exponent) {
  Polynomial p(rank);
  if (ordinal < 1 || ordinal > p.nvars())
    throw domain_error("variable ordinal " + std::to_string(ordinal) + " out of range for rank " +
                       std::to_string(rank));
  p.terms_.emplace(Monomial::variable(ordinal, exponent), Rational(1));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_value() const {
  if (!is_constant()) throw domain_error("polynomial is not constant");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

bool Polynomial::is_integral() const {
  for (const auto& [m, c] : terms_)
    if (denominator(c) != 1) return false;
  return true;
}

int Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

int Polynomial::degree_in(int ordinal) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(ordinal));
  return d;
}

Polynomial Polynomial::coefficient_of(int ordinal, int power) const {
  Polynomial out(rank_);
  for (const auto& [m, c] : terms_) {
    if (m.exponent(ordinal) != power) continue;
    Monomial rest = power > 0 ? m.divide(Monomial::variable(ordinal, power)) : m;
    out.add_term(rest, c);
  }
  return out;
}

int Polynomial::leading_sign() const {
  if (terms_.empty()) return 0;
  return terms_.begin()->second > 0 ? 1 : -1;
}

Rational Polynomial::content() const {
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : terms_) {
    num_gcd = gcd(num_gcd, numerator(c));
    den_lcm = lcm(den_lcm, denominator(c));
  }
  if (num_gcd < 0) num_gcd = -num_gcd;
  return Rational(num_gcd, den_lcm);
}

Polynomial Polynomial::primitive_part() const {
  if (terms_.empty()) return *this;
  return *this * Rational(1 / content());
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out(rank_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rank_ != rhs.rank_) throw rank_error("polynomial rank mismatch");
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rank_ != rhs.rank_) throw rank_error("polynomial rank mismatch");
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  Polynomial out = *this;
  out += rhs;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  Polynomial out = *this;
  out -= rhs;
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (rank_ != rhs.rank_) throw rank_error("polynomial rank mismatch");
  Polynomial out(rank_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
  Polynomial out(rank_);
  if (scalar == 0) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * scalar);
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = Polynomial::constant(rank_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative(int ordinal) const {
  Polynomial out(rank_);
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(ordinal);
    if (e == 0) continue;
    Monomial rest = m.divide(Monomial::variable(ordinal, 1));
    out.add_term(rest, c * e);
  }
  return out;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (static_cast<int>(images.size()) != nvars())
    throw rank_error("substitute expects one image per variable");
  // power cache per variable, built on demand
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power_of = [&](int ordinal, int e) -> const Polynomial& {
    auto& cache = powers[ordinal - 1];
    if (cache.empty()) cache.push_back(Polynomial::constant(rank_, 1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[ordinal - 1]);
    return cache[e];
  };
  Polynomial out(rank_);
  for (const auto& [m, c] : terms_) {
    Polynomial term = Polynomial::constant(rank_, c);
    for (const auto& [v, e] : m.factors()) term *= power_of(v, e);
    out += term;
  }
  return out;
}

namespace {

Complex powi(Complex base, int e) {
  Complex result(1.0, 0.0);
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace

Complex Polynomial::evaluate(std::span<const Complex> point) const {
  return evaluate_scaled(point).value;
}

Polynomial::Evaluated Polynomial::evaluate_scaled(std::span<const Complex> point) const {
  if (static_cast<int>(point.size()) != nvars())
    throw rank_error("point length must be 2^n-1 = " + std::to_string(nvars()));
  Complex sum(0.0, 0.0);
  double scale = 0.0;
  for (const auto& [m, c] : terms_) {
    Complex term(to_double(c), 0.0);
    for (const auto& [v, e] : m.factors()) term *= powi(point[v - 1], e);
    sum += term;
    scale = std::max(scale, std::abs(term));
  }
  return {sum, scale};
}

namespace {

void append_rational(std::string& out, const Rational& r) {
  out += numerator(r).str();
  if (denominator(r) != 1) {
    out += '/';
    out += denominator(r).str();
  }
}

}  // namespace

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out += '-';
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    bool need_star = false;
    if (mag != 1 || m.is_one()) {
      append_rational(out, mag);
      need_star = true;
    }
    for (const auto& [v, e] : m.factors()) {
      if (need_star) out += '*';
      out += var_name(rank_, v);
      if (e > 1) {
        out += '^';
        out += std::to_string(e);
      }
      need_star = true;
    }
  }
  return out;
}

namespace {

struct PolyParser {
  int rank;
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() { return text[pos]; }

  Integer parse_integer() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw parse_error("expected integer", pos);
    std::string digits;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      digits += text[pos++];
    return Integer(digits);
  }

  int parse_exponent() {
    skip_ws();
    std::size_t start = pos;
    Integer e = parse_integer();
    if (e <= 0 || e > 1000) throw parse_error("exponent out of range", start);
    return e.convert_to<int>();
  }

  Rational parse_coefficient() {
    Integer num = parse_integer();
    skip_ws();
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      std::size_t dpos = pos;
      Integer den = parse_integer();
      if (den == 0) throw parse_error("zero denominator", dpos);
      return Rational(num, den);
    }
    return Rational(num);
  }

  // varname [^exp]
  std::pair<int, int> parse_factor() {
    skip_ws();
    std::size_t start = pos;
    std::string name;
    while (pos < text.size() && text[pos] >= 'a' && text[pos] <= 'z') name += text[pos++];
    if (name.empty()) throw parse_error("expected variable name", pos);
    int ordinal = var_ordinal(rank, name);
    if (ordinal == 0)
      throw parse_error("'" + name + "' is not a basic-word variable at rank " +
                            std::to_string(rank),
                        start);
    int e = 1;
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      e = parse_exponent();
    }
    return {ordinal, e};
  }

  // [coeff] factor (* factor)*  |  coeff
  void parse_term(Polynomial& acc, bool negative) {
    skip_ws();
    Rational coeff(1);
    Monomial mono;
    bool have_coeff = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coeff = parse_coefficient();
      have_coeff = true;
    }
    bool have_factor = false;
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] >= 'a' && text[pos] <= 'z') {
        auto [v, e] = parse_factor();
        mono = mono * Monomial::variable(v, e);
        have_factor = true;
      } else if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          coeff *= parse_coefficient();
        } else {
          auto [v, e] = parse_factor();
          mono = mono * Monomial::variable(v, e);
          have_factor = true;
        }
      } else {
        break;
      }
    }
    if (!have_coeff && !have_factor) throw parse_error("expected term", pos);
    if (negative) coeff = -coeff;
    Polynomial term(rank);
    if (coeff != 0) {
      Polynomial t = Polynomial::constant(rank, coeff);
      if (!mono.is_one()) {
        Polynomial m(rank);
        // rebuild via variable products to validate ordinals against the rank
        m = Polynomial::constant(rank, 1);
        for (const auto& [v, e] : mono.factors()) m *= Polynomial::variable(rank, v, e);
        t *= m;
      }
      acc += t;
    }
  }

  Polynomial parse() {
    Polynomial acc(rank);
    skip_ws();
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      negative = text[pos] == '-';
      ++pos;
    }
    parse_term(acc, negative);
    while (!done()) {
      char op = peek();
      if (op != '+' && op != '-')
        throw parse_error(std::string("expected '+' or '-', got '") + op + "'", pos);
      ++pos;
      parse_term(acc, op == '-');
    }
    return acc;
  }
};

}  // namespace

Polynomial Polynomial::parse(int rank, std::string_view text) {
  check_rank(rank);
  PolyParser parser{rank, text};
  return parser.parse();
}

PolyMap::PolyMap(int rank, std::vector<Polynomial> components)
    : rank_(rank), components_(std::move(components)) {
  check_rank(rank);
  if (static_cast<int>(components_.size()) != (1 << rank) - 1)
    throw rank_error("PolyMap needs 2^n-1 components");
  for (const auto& c : components_)
    if (c.rank() != rank) throw rank_error("PolyMap component rank mismatch");
}

PolyMap PolyMap::identity(int rank) {
  std::vector<Polynomial> comps;
  int n = var_count(rank);
  comps.reserve(n);
  for (int i = 1; i <= n; ++i) comps.push_back(Polynomial::variable(rank, i));
  return PolyMap(rank, std::move(comps));
}

std::vector<Complex> PolyMap::evaluate(std::span<const Complex> point) const {
  std::vector<Complex> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(c.evaluate(point));
  return out;
}

PolyMap compose(const PolyMap& outer, const PolyMap& inner) {
  if (outer.rank() != inner.rank()) throw rank_error("compose: rank mismatch");
  std::vector<Polynomial> comps;
  comps.reserve(outer.components().size());
  for (const auto& c : outer.components()) comps.push_back(c.substitute(inner.components()));
  return PolyMap(outer.rank(), std::move(comps));
}

Polynomial substitute(const Polynomial& p, const PolyMap& m) {
  if (p.rank() != m.rank()) throw rank_error("substitute: rank mismatch");
  return p.substitute(m.components());
}

PolyMatrix jacobian(const PolyMap& m) {
  const int n = var_count(m.rank());
  PolyMatrix j(n);
  for (int i = 0; i < n; ++i) {
    j[i].reserve(n);
    for (int v = 1; v <= n; ++v) j[i].push_back(m.components()[i].derivative(v));
  }
  return j;
}

namespace {

Polynomial det_cofactor(const PolyMatrix& m, std::vector<int>& cols, int row) {
  const int size = static_cast<int>(cols.size());
  if (size == 1) return m[row][cols[0]];
  Polynomial acc(m[0][0].rank());
  for (int k = 0; k < size; ++k) {
    int col = cols[k];
    if (m[row][col].is_zero()) continue;
    std::vector<int> rest;
    rest.reserve(size - 1);
    for (int j = 0; j < size; ++j)
      if (j != k) rest.push_back(cols[j]);
    Polynomial minor = det_cofactor(m, rest, row + 1);
    Polynomial contrib = m[row][col] * minor;
    if (k % 2 == 0)
      acc += contrib;
    else
      acc -= contrib;
  }
  return acc;
}

Polynomial det_bareiss(PolyMatrix a) {
  const int n = static_cast<int>(a.size());
  const int rank = a[0][0].rank();
  int sign = 1;
  Polynomial prev = Polynomial::constant(rank, 1);
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k].is_zero()) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (!a[r][k].is_zero()) {
          pivot = r;
          break;
        }
      if (pivot < 0) return Polynomial(rank);  // singular
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      a[i][k] = Polynomial(rank);
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

}  // namespace

Polynomial det(const PolyMatrix& m) {
  if (m.empty()) throw domain_error("determinant of empty matrix");
  const int n = static_cast<int>(m.size());
  const int rank = m[0][0].rank();
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != n) throw domain_error("determinant needs a square matrix");
    for (const auto& e : row)
      if (e.rank() != rank) throw rank_error("matrix entry rank mismatch");
  }
  if (n <= 4) {
    std::vector<int> cols(n);
    for (int i = 0; i < n; ++i) cols[i] = i;
    return det_cofactor(m, cols, 0);
  }
  return det_bareiss(m);
}

Polynomial exact_div(const Polynomial& num, const Polynomial& den) {
  if (num.rank() != den.rank()) throw rank_error("exact_div: rank mismatch");
  if (den.is_zero()) throw domain_error("exact_div by zero");
  const int rank = num.rank();
  if (den.is_constant()) return num * Rational(1 / den.constant_value());
  Polynomial quotient(rank);
  Polynomial rem = num;
  const auto& lead_den = *den.terms().begin();
  while (!rem.is_zero()) {
    const auto& lead_rem = *rem.terms().begin();
    if (!lead_den.first.divides(lead_rem.first))
      throw domain_error("exact_div: division is not exact");
    Monomial mq = lead_rem.first.divide(lead_den.first);
    Rational cq = lead_rem.second / lead_den.second;
    Polynomial t = Polynomial::constant(rank, cq);
    if (!mq.is_one())
      for (const auto& [v, e] : mq.factors()) t *= Polynomial::variable(rank, v, e);
    quotient += t;
    rem -= t * den;
  }
  return quotient;
}

}  // namespace fricke
