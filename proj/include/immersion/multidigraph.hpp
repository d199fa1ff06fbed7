#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace immersion {

enum class VertexId : std::uint32_t {};
enum class ArcId : std::uint32_t {};

constexpr std::size_t index(VertexId v) noexcept { return static_cast<std::size_t>(v); }
constexpr std::size_t index(ArcId a) noexcept { return static_cast<std::size_t>(a); }
constexpr VertexId vertex_id(std::size_t i) noexcept { return static_cast<VertexId>(i); }
constexpr ArcId arc_id(std::size_t i) noexcept { return static_cast<ArcId>(i); }

/// Loop-free directed multigraph with stable identifiers.
///
/// Vertex and arc ids are dense and handed out in creation order. Removing an
/// element retires its id for the lifetime of the graph (and of every copy),
/// so certificates that name arcs stay meaningful across edits. Adjacency
/// lists are kept sorted by ArcId, which gives every traversal a fixed order.
class MultiDigraph {
 public:
  MultiDigraph() = default;
  explicit MultiDigraph(std::size_t vertex_count);

  VertexId add_vertex();
  ArcId add_arc(VertexId tail, VertexId head);

  /// Removes the given arcs. Duplicates in the input are tolerated.
  void remove_arcs(std::span<const ArcId> arcs);
  /// Removes the given vertices together with every incident arc.
  void remove_vertices(std::span<const VertexId> vertices);

  bool has_vertex(VertexId v) const noexcept;
  bool has_arc(ArcId a) const noexcept;

  VertexId tail(ArcId a) const;
  VertexId head(ArcId a) const;

  std::span<const ArcId> out_arcs(VertexId v) const;
  std::span<const ArcId> in_arcs(VertexId v) const;

  std::size_t vertex_count() const noexcept { return live_vertices_; }
  std::size_t arc_count() const noexcept { return live_arcs_; }
  /// One past the largest id ever issued; size for id-indexed scratch arrays.
  std::size_t vertex_bound() const noexcept { return vertex_alive_.size(); }
  std::size_t arc_bound() const noexcept { return arcs_.size(); }

  /// Live vertices in ascending id order.
  std::vector<VertexId> vertices() const;
  /// Live arcs in ascending id order.
  std::vector<ArcId> arcs() const;

  int out_degree(VertexId v) const;
  int in_degree(VertexId v) const;
  int multiplicity(VertexId tail, VertexId head) const;
  /// Zero for a graph without vertices.
  int min_out_degree() const;
  int max_out_degree() const;
  int max_multiplicity() const;
  bool is_simple() const { return max_multiplicity() <= 1; }

  /// Copy restricted to `keep`; surviving vertices and arcs keep their ids.
  MultiDigraph induced(std::span<const VertexId> keep) const;

  /// Vertices with a directed path to `target` that avoids `forbidden`.
  /// Always contains `target`. Ascending order.
  std::vector<VertexId> reach_to(VertexId target, std::span<const ArcId> forbidden = {}) const;
  /// Vertices reachable from `source` avoiding `forbidden`. Ascending order.
  std::vector<VertexId> reach_from(VertexId source, std::span<const ArcId> forbidden = {}) const;

  /// Full rescan of the adjacency indexes against the arc table. Throws
  /// Error(internal_invariant_broken) on the first inconsistency.
  void check_consistency() const;

 private:
  struct ArcRecord {
    VertexId tail;
    VertexId head;
    bool alive;
  };

  void require_vertex(VertexId v) const;
  void require_arc(ArcId a) const;
  std::vector<VertexId> reach(VertexId start, std::span<const ArcId> forbidden,
                              bool backwards) const;

  std::vector<ArcRecord> arcs_;
  std::vector<bool> vertex_alive_;
  std::vector<std::vector<ArcId>> out_;
  std::vector<std::vector<ArcId>> in_;
  std::size_t live_vertices_ = 0;
  std::size_t live_arcs_ = 0;
};

}  // namespace immersion
