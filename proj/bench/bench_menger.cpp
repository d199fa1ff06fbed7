// Serial vs OpenMP batch of Menger queries from one source, the workload of
// extend_or_cuts.
//
// usage: bench_menger [n] [d] [demand] [jobs] [repeats]

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "immersion/gen.hpp"
#include "immersion/menger.hpp"

using namespace immersion;

namespace {

template <typename F>
double best_of(int repeats, F&& f) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

bool same(const std::vector<CutCertificate>& a, const std::vector<CutCertificate>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].has_paths() != b[i].has_paths()) return false;
    if (a[i].has_paths() ? a[i].packing().paths != b[i].packing().paths
                         : a[i].cut().arcs != b[i].cut().arcs) {
      return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 600;
  const int d = argc > 2 ? std::atoi(argv[2]) : 60;
  const int demand = argc > 3 ? std::atoi(argv[3]) : 8;
  const int jobs = argc > 4 ? std::atoi(argv[4]) : omp_get_max_threads();
  const int repeats = argc > 5 ? std::atoi(argv[5]) : 3;

  const MultiDigraph g = gen_out_regular(n, d, 1);
  std::vector<VertexId> targets;
  for (int i = 1; i < n; ++i) targets.push_back(vertex_id(static_cast<std::size_t>(i)));

  std::vector<CutCertificate> serial, parallel;
  const double ts = best_of(repeats, [&] { serial = paths_or_cut_serial(g, vertex_id(0), targets, demand); });
  const double tp = best_of(repeats, [&] {
    parallel = paths_or_cut_parallel(g, vertex_id(0), targets, demand, jobs);
  });

  std::cout << "n=" << n << " d=" << d << " demand=" << demand << " queries=" << targets.size()
            << " jobs=" << jobs << '\n'
            << "serial   " << ts * 1e3 << " ms\n"
            << "parallel " << tp * 1e3 << " ms  (speedup " << ts / tp << "x)\n"
            << "results " << (same(serial, parallel) ? "identical" : "DIFFER") << '\n';
  return same(serial, parallel) ? 0 : 1;
}
