#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fricke/poly.hpp"
#include "fricke/words.hpp"

#include "json.hpp"

namespace fricke {

// 2x2 complex matrix with unit determinant, checked at construction.
class Matrix2 {
 public:
  Matrix2(Complex a, Complex b, Complex c, Complex d);
  static Matrix2 identity();

  Complex a() const { return a_; }
  Complex b() const { return b_; }
  Complex c() const { return c_; }
  Complex d() const { return d_; }
  Complex trace() const { return a_ + d_; }
  Complex det() const { return a_ * d_ - b_ * c_; }

  Matrix2 inverse() const;              // adjugate, exact for unit determinant
  Matrix2 operator*(const Matrix2&) const;

 private:
  struct unchecked_t {};
  Matrix2(unchecked_t, Complex a, Complex b, Complex c, Complex d)
      : a_(a), b_(b), c_(c), d_(d) {}
  Complex a_, b_, c_, d_;
};

struct Representation {
  int rank = 0;
  std::vector<Matrix2> generators;  // one per free-group generator

  Matrix2 evaluate(const Word& w) const;
};

// splitmix64 seed derivation; sample i of a run uses derive_seed(seed, i), so
// results do not depend on how samples are distributed over workers.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Entries a, b, c uniform in [-1,1]^2, d = (1 + bc)/a, resampling while
// |a| < 1e-6. Deterministic given the seed.
Matrix2 sample_matrix(std::uint64_t seed);
Representation sample_rep(int rank, std::uint64_t seed);

// The rank-3 representation used in the paper's witness computation:
// A_i = [[sqrt(i), sqrt(i+1)], [2/sqrt(i+1), 3/sqrt(i)]], i = 1, 2, 3.
Representation paper_witness_rep();

// Traces of all 2^n-1 basic words, in ordinal order.
std::vector<Complex> character_point(const Representation& rep);

enum class VerifyKind { ideal, equivariance, magnus, jacobian_rank };
enum class Execution { serial, parallel };

VerifyKind parse_kind(std::string_view text);  // "ideal" | "equivariance" | "magnus" | "jacobian-rank"
std::string kind_name(VerifyKind kind);
double default_tolerance(VerifyKind kind);

struct VerificationReport {
  std::string kind;
  int n = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  double tolerance = 0;
  double max_residual = 0;
  bool pass = false;
  nlohmann::json details;

  nlohmann::json to_json() const;
};

VerificationReport verify(VerifyKind kind, int n, int samples, double tol, std::uint64_t seed,
                          Execution exec = Execution::parallel);

// Numerical rank of the generator Jacobian (rows = generators, columns = all
// 2^n-1 variables) at a point; singular values above cutoff * sigma_max count.
int generator_jacobian_rank(const std::vector<Polynomial>& generators,
                            std::span<const Complex> point, double cutoff = 1e-8);

}  // namespace fricke
