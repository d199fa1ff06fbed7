#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "immersion/multidigraph.hpp"

namespace immersion {

// Text format:
//   # comment lines anywhere
//   p dgr <n> <m>
//   a <tail> <head>      (exactly m lines, 0-based vertices)
// The ArcId of an arc is the 0-based position of its `a` line.

MultiDigraph read_digraph(std::istream& in);
MultiDigraph read_digraph_file(const std::filesystem::path& path);

/// Emits `p dgr <vertex_bound> <arc_count>` and the live arcs in ArcId order.
/// For a graph that never had anything removed this round-trips exactly;
/// otherwise retired vertices appear isolated and arcs are renumbered densely.
void write_digraph(std::ostream& out, const MultiDigraph& g);
void write_digraph_file(const std::filesystem::path& path, const MultiDigraph& g);
std::string to_text(const MultiDigraph& g);

}  // namespace immersion
