#pragma once

#include <span>
#include <variant>
#include <vector>

#include "immersion/certify.hpp"
#include "immersion/multidigraph.hpp"

namespace immersion {

struct PathPacking {
  std::vector<ArcPath> paths;  // pairwise arc-disjoint, vertex-simple
};

struct ArcCut {
  std::vector<ArcId> arcs;          // E: fewer than the demand, ascending
  std::vector<VertexId> sink_side;  // C: vertices reaching the target in g - E
};

/// Answer to a (source, target, demand) query: either `demand` arc-disjoint
/// paths or a cut smaller than `demand` that separates target from source.
struct CutCertificate {
  VertexId source{};
  VertexId target{};
  int demand = 0;
  std::variant<PathPacking, ArcCut> outcome;

  bool has_paths() const { return std::holds_alternative<PathPacking>(outcome); }
  const PathPacking& packing() const { return std::get<PathPacking>(outcome); }
  const ArcCut& cut() const { return std::get<ArcCut>(outcome); }
  /// min(max flow, demand).
  int value() const;
};

/// Unit-capacity augmenting paths (BFS, out-arcs then in-arcs, both in
/// ascending ArcId order), stopped after `demand` augmentations. A short flow
/// yields the cut on the source side of the final residual graph; the sink
/// side is then recomputed by reverse reachability and cross-checked.
CutCertificate paths_or_cut(const MultiDigraph& g, VertexId source, VertexId target, int demand);

/// One query per target, results in target order. Reference implementation.
std::vector<CutCertificate> paths_or_cut_serial(const MultiDigraph& g, VertexId source,
                                                std::span<const VertexId> targets, int demand);
/// Same contract, targets spread over `jobs` OpenMP threads.
std::vector<CutCertificate> paths_or_cut_parallel(const MultiDigraph& g, VertexId source,
                                                  std::span<const VertexId> targets, int demand,
                                                  int jobs);
/// Dispatches to the serial version for jobs <= 1.
std::vector<CutCertificate> paths_or_cut_many(const MultiDigraph& g, VertexId source,
                                              std::span<const VertexId> targets, int demand,
                                              int jobs);

}  // namespace immersion
