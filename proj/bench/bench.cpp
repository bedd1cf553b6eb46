#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <omp.h>

#include "a3d/engine.hpp"
#include "a3d/oracle.hpp"
#include "a3d/reference.hpp"

using namespace a3d;

namespace {

double seconds(const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Case {
  std::uint32_t p;
  std::size_t d;
  Multidegree delta;
};

void bench_components(const std::vector<Case>& cases, int threads) {
  std::printf("%-8s %-14s %8s %12s %12s %12s %9s\n", "field", "multidegree", "quotient", "reference_s", "serial_s",
              "parallel_s", "speedup");
  for (const auto& c : cases) {
    PrimeField F(c.p);
    std::size_t qr = 0, qs = 0, qp = 0;
    double tr = seconds([&] { qr = ReferenceComponent<PrimeField>(F, c.delta).quotient_dim(); });
    double ts = seconds([&] {
      EngineOptions o;
      o.threads = 1;
      qs = A3dEngine<PrimeField>(F, c.d, o).quotient_dimension(c.delta);
    });
    double tp = seconds([&] {
      EngineOptions o;
      o.threads = threads;
      qp = A3dEngine<PrimeField>(F, c.d, o).quotient_dimension(c.delta);
    });
    const bool same = qr == qs && qs == qp;
    std::printf("%-8s %-14s %8zu %12.3f %12.3f %12.3f %8.2fx%s\n", F.name().c_str(), c.delta.to_string().c_str(), qs, tr,
                ts, tp, ts / tp, same ? "" : "  MISMATCH");
  }
}

void bench_oracle(int cap, int threads) {
  std::printf("\n%-12s %4s %10s %12s %12s %9s\n", "eval field", "cap", "dmax", "serial_s", "parallel_s", "speedup");
  for (std::uint64_t ch : {3ULL, 7ULL, 0ULL}) {
    with_eval_field(ch, [&](auto E) {
      int d1 = 0, dn = 0;
      double t1 = seconds([&] {
        OracleOptions o;
        o.threads = 1;
        d1 = O3Oracle<decltype(E)>(E, 1, o).dmax_scan(cap).dmax;
      });
      double tn = seconds([&] {
        OracleOptions o;
        o.threads = threads;
        dn = O3Oracle<decltype(E)>(E, 1, o).dmax_scan(cap).dmax;
      });
      std::printf("%-24s %4d %10d %12.3f %12.3f %8.2fx%s\n", E.name().c_str(), cap, d1, t1, tn, t1 / tn,
                  d1 == dn ? "" : "  MISMATCH");
    });
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial versus OpenMP timings for component builds and oracle scans"};
  int threads = omp_get_max_threads();
  bool quick = false;
  app.add_option("--threads", threads, "OpenMP threads for the parallel runs");
  app.add_flag("--quick", quick, "Small cases only");
  CLI11_PARSE(app, argc, argv);

  std::printf("threads: %d (hardware: %d)\n\n", threads, omp_get_num_procs());
  std::vector<Case> cases = {{3, 1, Multidegree{6}}, {3, 2, Multidegree{2, 2}}, {5, 3, Multidegree{1, 1, 1}}};
  if (!quick) {
    cases.push_back({3, 2, Multidegree{3, 2}});
    cases.push_back({5, 2, Multidegree{3, 3}});
    cases.push_back({5, 4, Multidegree{1, 1, 1, 1}});
  }
  bench_components(cases, threads);
  bench_oracle(quick ? 6 : 10, threads);
  return 0;
}
