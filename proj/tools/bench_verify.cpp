// Compares the serial reference path of the verification kernels against the
// OpenMP-parallel path on fixed workloads, and checks that both produce the
// same report.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fricke/numerics.hpp"

using namespace fricke;

namespace {

double run_ms(VerifyKind kind, int n, int samples, Execution exec, bool& pass) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport report = verify(kind, n, samples, default_tolerance(kind), 20250810, exec);
  auto t1 = std::chrono::steady_clock::now();
  pass = report.pass;
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int scale = argc > 1 ? std::atoi(argv[1]) : 1;
  if (scale < 1) scale = 1;
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-14s %3s %8s %12s %12s %8s\n", "kind", "n", "samples", "serial ms", "parallel ms",
              "speedup");

  struct Load {
    VerifyKind kind;
    int n;
    int samples;
  };
  const std::vector<Load> loads = {
      {VerifyKind::magnus, 4, 20000 * scale},
      {VerifyKind::ideal, 3, 4000 * scale},
      {VerifyKind::ideal, 4, 2000 * scale},
      {VerifyKind::equivariance, 3, 2000 * scale},
      {VerifyKind::equivariance, 4, 1000 * scale},
  };
  int failures = 0;
  for (const Load& load : loads) {
    bool pass_serial = false, pass_parallel = false;
    double serial = run_ms(load.kind, load.n, load.samples, Execution::serial, pass_serial);
    double parallel = run_ms(load.kind, load.n, load.samples, Execution::parallel, pass_parallel);
    std::printf("%-14s %3d %8d %12.1f %12.1f %7.2fx\n", kind_name(load.kind).c_str(), load.n,
                load.samples, serial, parallel, serial / parallel);
    if (!pass_serial || !pass_parallel) ++failures;

    VerificationReport a =
        verify(load.kind, load.n, load.samples, default_tolerance(load.kind), 7, Execution::serial);
    VerificationReport b = verify(load.kind, load.n, load.samples, default_tolerance(load.kind), 7,
                                  Execution::parallel);
    if (a.to_json() != b.to_json()) {
      std::printf("  MISMATCH: serial and parallel reports differ\n");
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}
