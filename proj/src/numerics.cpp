#include "fricke/numerics.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "fricke/autos.hpp"
#include "fricke/ideal.hpp"

namespace fricke {

Matrix2::Matrix2(Complex a, Complex b, Complex c, Complex d) : a_(a), b_(b), c_(c), d_(d) {
  if (std::abs(det() - 1.0) > 1e-12)
    throw domain_error("matrix determinant deviates from 1 by more than 1e-12");
}

Matrix2 Matrix2::identity() { return Matrix2(1.0, 0.0, 0.0, 1.0); }

Matrix2 Matrix2::inverse() const { return Matrix2(unchecked_t{}, d_, -b_, -c_, a_); }

Matrix2 Matrix2::operator*(const Matrix2& r) const {
  return Matrix2(unchecked_t{}, a_ * r.a_ + b_ * r.c_, a_ * r.b_ + b_ * r.d_,
                 c_ * r.a_ + d_ * r.c_, c_ * r.b_ + d_ * r.d_);
}

Matrix2 Representation::evaluate(const Word& w) const {
  if (w.rank() != rank) throw rank_error("word rank does not match representation");
  Matrix2 acc = Matrix2::identity();
  for (int letter : w.letters()) {
    const Matrix2& g = generators.at(std::abs(letter) - 1);
    acc = acc * (letter > 0 ? g : g.inverse());
  }
  return acc;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

namespace {

// Platform-independent uniform draws in [-1, 1).
struct Rng {
  std::uint64_t state;
  std::uint64_t next() {
    state = derive_seed(state, 0);
    return state;
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53 * 2.0 - 1.0; }
  Complex complex_unit_box() {
    double re = uniform();
    double im = uniform();
    return {re, im};
  }
};

}  // namespace

Matrix2 sample_matrix(std::uint64_t seed) {
  Rng rng{seed};
  Complex a = rng.complex_unit_box();
  for (int tries = 0; std::abs(a) < 1e-6; ++tries) {
    if (tries > 100) throw std::runtime_error("matrix sampling exceeded the resampling cap");
    a = rng.complex_unit_box();
  }
  Complex b = rng.complex_unit_box();
  Complex c = rng.complex_unit_box();
  Complex d = (1.0 + b * c) / a;
  return Matrix2(a, b, c, d);
}

Representation sample_rep(int rank, std::uint64_t seed) {
  check_rank(rank);
  Representation rep{rank, {}};
  rep.generators.reserve(rank);
  for (int g = 0; g < rank; ++g)
    rep.generators.push_back(sample_matrix(derive_seed(seed, 1000 + g)));
  return rep;
}

Representation paper_witness_rep() {
  Representation rep{3, {}};
  for (int i = 1; i <= 3; ++i) {
    double si = std::sqrt(static_cast<double>(i));
    double si1 = std::sqrt(static_cast<double>(i + 1));
    rep.generators.push_back(Matrix2(si, si1, 2.0 / si1, 3.0 / si));
  }
  return rep;
}

std::vector<Complex> character_point(const Representation& rep) {
  std::vector<Complex> point;
  point.reserve(var_count(rep.rank));
  for (const BasicWord& b : basic_words(rep.rank)) point.push_back(rep.evaluate(b.word()).trace());
  return point;
}

VerifyKind parse_kind(std::string_view text) {
  if (text == "ideal") return VerifyKind::ideal;
  if (text == "equivariance") return VerifyKind::equivariance;
  if (text == "magnus") return VerifyKind::magnus;
  if (text == "jacobian-rank") return VerifyKind::jacobian_rank;
  throw domain_error("unknown verification kind '" + std::string(text) + "'");
}

std::string kind_name(VerifyKind kind) {
  switch (kind) {
    case VerifyKind::ideal: return "ideal";
    case VerifyKind::equivariance: return "equivariance";
    case VerifyKind::magnus: return "magnus";
    case VerifyKind::jacobian_rank: return "jacobian-rank";
  }
  return "?";
}

double default_tolerance(VerifyKind kind) {
  return kind == VerifyKind::equivariance ? 1e-9 : 1e-8;
}

nlohmann::json VerificationReport::to_json() const {
  return {{"kind", kind},       {"n", n},
          {"samples", samples}, {"seed", seed},
          {"tolerance", tolerance}, {"max_residual", max_residual},
          {"pass", pass},       {"details", details}};
}

namespace {

// The parallel kernel and its serial reference: both fill per-sample slots of
// independent work; the seed split makes the result identical either way.
template <typename Fn>
void run_samples(int samples, Execution exec, Fn&& per_sample) {
  if (exec == Execution::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (int i = 0; i < samples; ++i) per_sample(i);
    return;
#endif
  }
  for (int i = 0; i < samples; ++i) per_sample(i);
}

double rel_residual(Complex value, double scale) { return std::abs(value) / std::max(1.0, scale); }

VerificationReport verify_ideal(int n, int samples, double tol, std::uint64_t seed,
                                Execution exec) {
  IdealGenerators gens = ideal_generators(n, exec == Execution::parallel);
  const int g = static_cast<int>(gens.generators.size());
  std::vector<double> residuals(static_cast<std::size_t>(samples) * std::max(g, 1), 0.0);
  run_samples(samples, exec, [&](int i) {
    Representation rep = sample_rep(n, derive_seed(seed, i));
    std::vector<Complex> point = character_point(rep);
    for (int k = 0; k < g; ++k) {
      auto [value, scale] = gens.generators[k].second.evaluate_scaled(point);
      residuals[static_cast<std::size_t>(i) * g + k] = rel_residual(value, scale);
    }
  });
  VerificationReport report{kind_name(VerifyKind::ideal), n, samples, seed, tol, 0.0, false, {}};
  report.details = nlohmann::json::array();
  for (int k = 0; k < g; ++k) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i)
      worst = std::max(worst, residuals[static_cast<std::size_t>(i) * g + k]);
    report.details.push_back(
        {{"target", gens.generators[k].first.target.name()}, {"max_residual", worst}});
    report.max_residual = std::max(report.max_residual, worst);
  }
  report.pass = report.max_residual <= tol;
  return report;
}

VerificationReport verify_equivariance(int n, int samples, double tol, std::uint64_t seed,
                                       Execution exec) {
  const std::vector<std::pair<std::string, Nielsen>> gens = {{"T", Nielsen::twist},
                                                             {"T'", Nielsen::twist_inv},
                                                             {"P", Nielsen::swap12},
                                                             {"R", Nielsen::rotate},
                                                             {"I", Nielsen::invert}};
  TraceCache cache(n);
  std::vector<PolyMap> maps;
  for (const auto& [name, g] : gens)
    maps.push_back(induced_map(std::vector<Nielsen>{g}, cache));
  const int ng = static_cast<int>(gens.size());

  std::vector<double> residuals(static_cast<std::size_t>(samples) * ng, 0.0);
  run_samples(samples, exec, [&](int i) {
    Representation rep = sample_rep(n, derive_seed(seed, i));
    std::vector<Complex> point = character_point(rep);
    for (int k = 0; k < ng; ++k) {
      std::vector<Complex> lhs = maps[k].evaluate(point);
      Representation pre{n, {}};
      for (int j = 1; j <= n; ++j)
        pre.generators.push_back(rep.evaluate(apply_nielsen(Word(n, {j}), gens[k].second)));
      std::vector<Complex> rhs = character_point(pre);
      double worst = 0.0;
      for (std::size_t t = 0; t < lhs.size(); ++t)
        worst = std::max(worst, std::abs(lhs[t] - rhs[t]) / std::max(1.0, std::abs(rhs[t])));
      residuals[static_cast<std::size_t>(i) * ng + k] = worst;
    }
  });
  VerificationReport report{kind_name(VerifyKind::equivariance), n, samples, seed, tol, 0.0,
                            false,  {}};
  report.details = nlohmann::json::array();
  for (int k = 0; k < ng; ++k) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i)
      worst = std::max(worst, residuals[static_cast<std::size_t>(i) * ng + k]);
    report.details.push_back({{"generator", gens[k].first}, {"max_residual", worst}});
    report.max_residual = std::max(report.max_residual, worst);
  }
  report.pass = report.max_residual <= tol;
  return report;
}

VerificationReport verify_magnus(int n, int samples, double tol, std::uint64_t seed,
                                 Execution exec) {
  std::vector<double> residuals(samples, 0.0);
  run_samples(samples, exec, [&](int i) {
    std::uint64_t s = derive_seed(seed, i);
    Eigen::Matrix4cd direct, inverted;
    Matrix2 m[4] = {sample_matrix(derive_seed(s, 1)), sample_matrix(derive_seed(s, 2)),
                    sample_matrix(derive_seed(s, 3)), sample_matrix(derive_seed(s, 4))};
    Matrix2 nn[4] = {sample_matrix(derive_seed(s, 5)), sample_matrix(derive_seed(s, 6)),
                     sample_matrix(derive_seed(s, 7)), sample_matrix(derive_seed(s, 8))};
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        direct(r, c) = (m[r] * nn[c]).trace();
        inverted(r, c) = (m[r] * nn[c].inverse()).trace();
      }
    Complex d1 = direct.determinant();
    Complex d2 = inverted.determinant();
    residuals[i] = std::abs(d1 + d2) / std::max({1.0, std::abs(d1), std::abs(d2)});
  });
  VerificationReport report{kind_name(VerifyKind::magnus), n, samples, seed, tol, 0.0, false, {}};
  for (double r : residuals) report.max_residual = std::max(report.max_residual, r);
  report.details = nlohmann::json::array(
      {{{"check", "random-octets"}, {"max_residual", report.max_residual}}});
  report.pass = report.max_residual <= tol;
  return report;
}

struct Decomposition {
  std::string label;
  std::array<Word, 3> blocks;
};

std::vector<Decomposition> abcd_decompositions() {
  const int n = 4;
  auto w = [&](std::vector<int> ls) { return Word(n, std::move(ls)); };
  return {
      {"A.B.CD", {w({1}), w({2}), w({3, 4})}},
      {"A.BC.D", {w({1}), w({2, 3}), w({4})}},
      {"AB.C.D", {w({1, 2}), w({3}), w({4})}},
      {"AD.B.C", {w({1, 4}), w({2}), w({3})}},
  };
}

VerificationReport verify_jacobian_rank(int n, int samples, double tol, std::uint64_t seed,
                                        Execution exec) {
  if (n != 4) throw domain_error("the jacobian-rank check is defined for n = 4");
  IdealGenerators base = ideal_generators(n, exec == Execution::parallel);
  std::vector<Polynomial> generators;
  for (const auto& [spec, poly] : base.generators) generators.push_back(poly);

  std::vector<Decomposition> decomps = abcd_decompositions();
  std::vector<Polynomial> variants;
  {
    TraceCache cache(n);
    for (const auto& d : decomps) {
      Polynomial p = decomposition_generator(d.blocks[0], d.blocks[1], d.blocks[2], cache);
      if (p.leading_sign() < 0) p = -p;
      variants.push_back(p);
    }
  }

  VerificationReport report{kind_name(VerifyKind::jacobian_rank), n, samples, seed, tol, 0.0,
                            true,   {}};
  report.details = nlohmann::json::array();
  Representation witness = paper_witness_rep();
  for (int i = 0; i < samples; ++i) {
    Representation rep{4, witness.generators};
    rep.generators.push_back(sample_matrix(derive_seed(seed, i)));
    std::vector<Complex> point = character_point(rep);
    for (std::size_t v = 0; v < decomps.size(); ++v) {
      std::vector<Polynomial> gens = generators;
      gens.back() = variants[v];  // replace the tr(ABCD) generator
      int rank = generator_jacobian_rank(gens, point, tol);
      if (rank != 6) {
        report.pass = false;
        report.max_residual = std::max(report.max_residual, 1.0);
      }
      report.details.push_back({{"sample", i},
                                {"decomposition", decomps[v].label},
                                {"rank", rank},
                                {"dimension", 15 - rank}});
    }
  }
  return report;
}

}  // namespace

int generator_jacobian_rank(const std::vector<Polynomial>& generators,
                            std::span<const Complex> point, double cutoff) {
  if (generators.empty()) return 0;
  const int nv = generators[0].nvars();
  Eigen::MatrixXcd jac(generators.size(), nv);
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (int v = 1; v <= nv; ++v) jac(i, v - 1) = generators[i].derivative(v).evaluate(point);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(jac);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  double top = sv(0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff * top) ++rank;
  return rank;
}

VerificationReport verify(VerifyKind kind, int n, int samples, double tol, std::uint64_t seed,
                          Execution exec) {
  check_rank(n);
  if (samples < 1) throw domain_error("samples must be >= 1");
  switch (kind) {
    case VerifyKind::ideal: return verify_ideal(n, samples, tol, seed, exec);
    case VerifyKind::equivariance: return verify_equivariance(n, samples, tol, seed, exec);
    case VerifyKind::magnus: return verify_magnus(n, samples, tol, seed, exec);
    case VerifyKind::jacobian_rank: return verify_jacobian_rank(n, samples, tol, seed, exec);
  }
  throw domain_error("unknown verification kind");
}

}  // namespace fricke
