#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "fricke/autos.hpp"
#include "fricke/ideal.hpp"
#include "fricke/numerics.hpp"
#include "fricke/poly.hpp"
#include "fricke/trace.hpp"
#include "fricke/words.hpp"

namespace {

using namespace fricke;

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt_complex(Complex z) {
  if (z.imag() == 0.0) return fmt_double(z.real());
  char buf[128];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
  return buf;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact toolkit for the SL(2,C) character variety of a free group"};
  app.require_subcommand(1);

  int rank = 3;
  std::string word_text, nielsen_text, kind_text = "ideal";
  bool json_out = false, no_cache = false, serial = false;
  int samples = 100;
  std::uint64_t seed = 1;
  double tol = -1.0;

  auto* cmd_basic = app.add_subcommand("basic-words", "List the basic words in Horowitz order");
  cmd_basic->add_option("-n", rank, "rank of the free group")->required();

  auto* cmd_trace = app.add_subcommand("trace", "Trace polynomial of a word");
  cmd_trace->add_option("-n", rank, "rank of the free group")->required();
  cmd_trace->add_option("word", word_text, "word, e.g. \"A^-1B^2C\"")->required();
  cmd_trace->add_flag("--no-cache", no_cache, "disable trace memoization (benchmarking)");

  auto* cmd_ideal = app.add_subcommand("ideal", "Generators of the ideal I_n");
  cmd_ideal->add_option("-n", rank, "rank of the free group")->required();
  cmd_ideal->add_flag("--json", json_out, "emit JSON");
  cmd_ideal->add_flag("--serial", serial, "build generators on one thread");

  auto* cmd_map = app.add_subcommand("map", "Induced polynomial map of a Nielsen word");
  cmd_map->add_option("-n", rank, "rank of the free group")->required();
  cmd_map->add_option("nielsen-word", nielsen_text, "word over T, T', P, R, I")->required();
  cmd_map->add_flag("--json", json_out, "emit JSON");

  auto* cmd_jacdet = app.add_subcommand("jacdet", "Jacobian determinant of an induced map");
  cmd_jacdet->add_option("-n", rank, "rank of the free group")->required();
  cmd_jacdet->add_option("nielsen-word", nielsen_text, "word over T, T', P, R, I")->required();

  auto* cmd_abel = app.add_subcommand("abelianize", "Action on the abelianization Z^n");
  cmd_abel->add_option("-n", rank, "rank of the free group")->required();
  cmd_abel->add_option("nielsen-word", nielsen_text, "word over T, T', P, R, I")->required();

  auto* cmd_verify = app.add_subcommand("verify", "Numeric verification reports");
  cmd_verify->add_option("--kind", kind_text, "ideal | equivariance | magnus | jacobian-rank")
      ->required();
  cmd_verify->add_option("-n", rank, "rank of the free group")->required();
  cmd_verify->add_option("--samples", samples, "number of samples");
  cmd_verify->add_option("--seed", seed, "RNG seed");
  cmd_verify->add_option("--tol", tol, "tolerance (default depends on kind)");
  cmd_verify->add_flag("--serial", serial, "run the serial reference path");

  auto* cmd_witness = app.add_subcommand("witness", "Paper witness computation (n = 3)");
  auto* cmd_gama = app.add_subcommand("gama-control",
                                      "Jacobian determinant of the reduced-coordinate twist map");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (cmd_basic->parsed()) {
    for (const BasicWord& b : basic_words(rank)) std::cout << format_word(b.word()) << "\n";
    return 0;
  }

  if (cmd_trace->parsed()) {
    Word w = parse_word(rank, word_text);
    TraceCache cache(rank);
    cache.set_enabled(!no_cache);
    std::cout << trace_poly(w, cache).str() << "\n";
    return 0;
  }

  if (cmd_ideal->parsed()) {
    IdealGenerators gens = ideal_generators(rank, !serial);
    if (json_out) {
      std::cout << to_json(gens).dump(2) << "\n";
    } else {
      for (const auto& [spec, poly] : gens.generators) std::cout << poly.str() << "\n";
    }
    return 0;
  }

  if (cmd_map->parsed() || cmd_jacdet->parsed() || cmd_abel->parsed()) {
    std::vector<Nielsen> nw = parse_nielsen(nielsen_text);
    if (cmd_abel->parsed()) {
      IntMatrix m = abelianization(nw, rank);
      for (const auto& row : m) {
        for (std::size_t j = 0; j < row.size(); ++j)
          std::cout << (j ? " " : "") << row[j].str();
        std::cout << "\n";
      }
      std::cout << "det = " << int_det(m).str() << "\n";
      return 0;
    }
    PolyMap m = induced_map(nw, rank);
    if (cmd_jacdet->parsed()) {
      std::cout << jac_det(m).str() << "\n";
      return 0;
    }
    if (json_out) {
      std::cout << to_json(m, format_nielsen(nw)).dump(2) << "\n";
    } else {
      for (int i = 1; i <= var_count(rank); ++i)
        std::cout << var_name(rank, i) << " -> " << m.component(i).str() << "\n";
    }
    return 0;
  }

  if (cmd_verify->parsed()) {
    VerifyKind kind = parse_kind(kind_text);
    if (tol < 0) tol = default_tolerance(kind);
    VerificationReport report =
        verify(kind, rank, samples, tol, seed, serial ? Execution::serial : Execution::parallel);
    std::cout << report.to_json().dump(2) << "\n";
    return report.pass ? 0 : 1;
  }

  if (cmd_witness->parsed()) {
    Representation rep = paper_witness_rep();
    std::vector<Complex> point = character_point(rep);
    MagnusConditions cond = magnus_conditions(std::span<const Complex>(point.data(), 6));
    std::cout << "tr_commutator = " << fmt_complex(cond.commutator) << "\n";
    std::cout << "discriminant = " << fmt_complex(cond.discriminant) << "\n";
    std::cout << "commutator_ok = " << (cond.commutator_ok ? "true" : "false") << "\n";
    std::cout << "discriminant_ok = " << (cond.discriminant_ok ? "true" : "false") << "\n";
    return cond.commutator_ok && cond.discriminant_ok ? 0 : 1;
  }

  if (cmd_gama->parsed()) {
    Polynomial d = gama_phi1_det();
    std::cout << d.str() << "\n";
    std::cout << "integral = " << (d.is_integral() ? "true" : "false") << "\n";
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const fricke::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
