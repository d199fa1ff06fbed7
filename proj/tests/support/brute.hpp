#pragma once

// Slow, independent reference computations used as test oracles. None of
// these call into the library beyond the graph container.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "immersion/certify.hpp"
#include "immersion/multidigraph.hpp"

namespace brute {

using immersion::ArcId;
using immersion::ArcPath;
using immersion::MultiDigraph;
using immersion::VertexId;

/// Every vertex-simple path from s to t, as arc lists.
std::vector<ArcPath> simple_paths(const MultiDigraph& g, VertexId s, VertexId t);

/// Largest number of pairwise arc-disjoint s-t paths, by exhaustive search
/// over simple paths.
int max_disjoint_paths(const MultiDigraph& g, VertexId s, VertexId t);

/// Smallest number of arcs leaving a vertex set that contains s but not t,
/// by enumerating all such sets.
int min_cut(const MultiDigraph& g, VertexId s, VertexId t);

/// True when no s-t path survives removal of `cut`.
bool separates(const MultiDigraph& g, VertexId s, VertexId t, const std::vector<ArcId>& cut);

/// Whether `pattern` immerses in `host`, by enumerating injective maps and,
/// per pattern arc, all simple routes, then checking arc-disjointness of
/// every combination.
bool immerses(const MultiDigraph& host, const MultiDigraph& pattern);

/// Independent certificate check (true = valid).
bool certificate_valid(const MultiDigraph& host, const MultiDigraph& pattern,
                       const std::vector<VertexId>& vertex_map,
                       const std::vector<ArcPath>& arc_paths);

/// Positions i < j on some path with j >= i + 2 such that an arc from the
/// vertex at i to the vertex at j exists and no path uses it. Empty at a
/// shortcut fixpoint.
struct Detour {
  std::size_t path;
  std::size_t from;
  std::size_t to;
};
std::vector<Detour> detours(const MultiDigraph& host, const std::vector<ArcPath>& arc_paths);

/// All inclusion-minimal sub-covers drawn from `sets` (by index), by
/// enumerating every subset. Only for small families.
std::vector<std::vector<std::size_t>> minimal_covers(
    const std::vector<std::vector<std::size_t>>& sets, std::size_t universe);

/// Uniform random loop-free multidigraph.
MultiDigraph random_graph(std::mt19937_64& rng, int n, int m);

}  // namespace brute
