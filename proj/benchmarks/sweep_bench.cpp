// Compares the OpenMP sweep against the serial reference: same results bit
// for bit, wall-clock side by side. Exit 0 only when the outputs match.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "opo/config.hpp"
#include "opo/sweep.hpp"

namespace {

using namespace opo;

double seconds(const std::function<std::vector<SweepPoint>()>& fn,
               std::vector<SweepPoint>& out) {
  const auto start = std::chrono::steady_clock::now();
  out = fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

bool identical(const std::vector<SweepPoint>& a, const std::vector<SweepPoint>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    const SweepPoint& p = a[i];
    const SweepPoint& q = b[i];
    if (p.value != q.value || p.ok != q.ok || p.error != q.error) return false;
    if (!p.ok) continue;
    if (p.v.rows() != q.v.rows() || p.v.cols() != q.v.cols()) return false;
    if ((p.v - q.v).cwiseAbs().maxCoeff() != 0.0) return false;
    if ((p.sa.v_s - q.sa.v_s).cwiseAbs().maxCoeff() != 0.0) return false;
    if ((p.sa.v_a - q.sa.v_a).cwiseAbs().maxCoeff() != 0.0) return false;
    if ((p.sa.c_sa - q.sa.c_sa).cwiseAbs().maxCoeff() != 0.0) return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  int points = 200;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--points" && i + 1 < argc) {
      points = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--points N]\n", argv[0]);
      return 2;
    }
  }
  if (points < 2) {
    std::fprintf(stderr, "--points must be at least 2\n");
    return 2;
  }

  const OpoConfig cfg = reference_config();  // phonons on: the heavy path
  const Grid grid{1.01, 2.0, points};

  std::vector<SweepPoint> serial, parallel;
  // untimed warm-up so page faults and allocator growth hit neither timing
  run_sweep_serial(cfg, SweepAxis::Sigma, Grid{1.01, 1.2, 2});

  const double t_serial =
      seconds([&] { return run_sweep_serial(cfg, SweepAxis::Sigma, grid); }, serial);
  const double t_parallel =
      seconds([&] { return run_sweep(cfg, SweepAxis::Sigma, grid); }, parallel);

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("sigma sweep, %d points, phonons on\n", points);
  std::printf("serial    %8.3f s  (%.2f ms/point)\n", t_serial,
              1e3 * t_serial / points);
  std::printf("parallel  %8.3f s  (%.2f ms/point, %d threads)\n", t_parallel,
              1e3 * t_parallel / points, threads);
  std::printf("speedup   %8.2fx\n", t_serial / t_parallel);

  if (!identical(serial, parallel)) {
    std::printf("MISMATCH: parallel sweep diverged from the serial reference\n");
    return 1;
  }
  std::printf("parallel results identical to the serial reference\n");
  return 0;
}
