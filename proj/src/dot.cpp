#include "immersion/dot.hpp"

#include <array>
#include <ostream>
#include <set>

namespace immersion {

void write_dot(std::ostream& out, const MultiDigraph& host, const ImmersionCertificate* cert,
               std::size_t full_limit) {
  static constexpr std::array<const char*, 8> palette{
      "crimson", "royalblue", "forestgreen", "darkorange",
      "purple",  "teal",      "goldenrod",   "deeppink"};
  std::vector<int> colour(host.arc_bound(), -1);
  std::vector<int> label(host.vertex_bound(), -1);
  if (cert) {
    for (std::size_t i = 0; i < cert->arc_paths.size(); ++i) {
      for (ArcId a : cert->arc_paths[i]) {
        if (host.has_arc(a)) colour[index(a)] = static_cast<int>(i);
      }
    }
    for (std::size_t p = 0; p < cert->vertex_map.size(); ++p) {
      if (host.has_vertex(cert->vertex_map[p])) label[index(cert->vertex_map[p])] = static_cast<int>(p);
    }
  }
  const bool full = host.arc_count() <= full_limit;

  std::set<VertexId> shown;
  std::vector<ArcId> arcs;
  for (ArcId a : host.arcs()) {
    if (!full && colour[index(a)] < 0) continue;
    arcs.push_back(a);
    shown.insert(host.tail(a));
    shown.insert(host.head(a));
  }
  if (full) {
    for (VertexId v : host.vertices()) shown.insert(v);
  }
  for (std::size_t v = 0; v < label.size(); ++v) {
    if (label[v] >= 0) shown.insert(vertex_id(v));
  }

  out << "digraph immersion {\n  node [shape=circle];\n";
  for (VertexId v : shown) {
    out << "  v" << index(v);
    if (label[index(v)] >= 0) {
      out << " [label=\"" << index(v) << "\\nx" << label[index(v)] + 1
          << "\", style=filled, fillcolor=gold]";
    }
    out << ";\n";
  }
  for (ArcId a : arcs) {
    out << "  v" << index(host.tail(a)) << " -> v" << index(host.head(a)) << " [label=\"a"
        << index(a) << "\"";
    if (const int c = colour[index(a)]; c >= 0) {
      out << ", color=" << palette[static_cast<std::size_t>(c) % palette.size()]
          << ", penwidth=2";
    } else {
      out << ", color=gray70";
    }
    out << "];\n";
  }
  out << "}\n";
}

}  // namespace immersion
