#include <exception>
#include <omp.h>

#include "immersion/menger.hpp"

namespace immersion {

std::vector<CutCertificate> paths_or_cut_parallel(const MultiDigraph& g, VertexId source,
                                                  std::span<const VertexId> targets, int demand,
                                                  int jobs) {
  const long long count = static_cast<long long>(targets.size());
  std::vector<CutCertificate> results(targets.size());
  std::vector<std::exception_ptr> errors(targets.size());

  // Queries only read g; each writes its own slot.
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
  for (long long i = 0; i < count; ++i) {
    try {
      results[static_cast<std::size_t>(i)] =
          paths_or_cut(g, source, targets[static_cast<std::size_t>(i)], demand);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace immersion
