#include "immersion/multidigraph.hpp"

#include <algorithm>
#include <string>

#include "immersion/error.hpp"

namespace immersion {

MultiDigraph::MultiDigraph(std::size_t vertex_count)
    : vertex_alive_(vertex_count, true),
      out_(vertex_count),
      in_(vertex_count),
      live_vertices_(vertex_count) {}

VertexId MultiDigraph::add_vertex() {
  vertex_alive_.push_back(true);
  out_.emplace_back();
  in_.emplace_back();
  ++live_vertices_;
  return vertex_id(vertex_alive_.size() - 1);
}

ArcId MultiDigraph::add_arc(VertexId tail, VertexId head) {
  require_vertex(tail);
  require_vertex(head);
  if (tail == head) {
    throw Error(ErrorKind::loop_arc, "arc " + std::to_string(index(tail)) + " -> " +
                                         std::to_string(index(head)));
  }
  const ArcId id = arc_id(arcs_.size());
  arcs_.push_back({tail, head, true});
  out_[index(tail)].push_back(id);
  in_[index(head)].push_back(id);
  ++live_arcs_;
  return id;
}

void MultiDigraph::remove_arcs(std::span<const ArcId> arcs) {
  for (ArcId a : arcs) require_arc(a);
  std::vector<VertexId> touched;
  for (ArcId a : arcs) {
    ArcRecord& rec = arcs_[index(a)];
    if (!rec.alive) continue;
    rec.alive = false;
    --live_arcs_;
    touched.push_back(rec.tail);
    touched.push_back(rec.head);
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  auto dead = [this](ArcId a) { return !arcs_[index(a)].alive; };
  for (VertexId v : touched) {
    std::erase_if(out_[index(v)], dead);
    std::erase_if(in_[index(v)], dead);
  }
}

void MultiDigraph::remove_vertices(std::span<const VertexId> vertices) {
  std::vector<ArcId> incident;
  for (VertexId v : vertices) {
    require_vertex(v);
    incident.insert(incident.end(), out_[index(v)].begin(), out_[index(v)].end());
    incident.insert(incident.end(), in_[index(v)].begin(), in_[index(v)].end());
  }
  remove_arcs(incident);
  for (VertexId v : vertices) {
    if (!vertex_alive_[index(v)]) continue;
    vertex_alive_[index(v)] = false;
    --live_vertices_;
  }
}

bool MultiDigraph::has_vertex(VertexId v) const noexcept {
  return index(v) < vertex_alive_.size() && vertex_alive_[index(v)];
}

bool MultiDigraph::has_arc(ArcId a) const noexcept {
  return index(a) < arcs_.size() && arcs_[index(a)].alive;
}

VertexId MultiDigraph::tail(ArcId a) const {
  require_arc(a);
  return arcs_[index(a)].tail;
}

VertexId MultiDigraph::head(ArcId a) const {
  require_arc(a);
  return arcs_[index(a)].head;
}

std::span<const ArcId> MultiDigraph::out_arcs(VertexId v) const {
  require_vertex(v);
  return out_[index(v)];
}

std::span<const ArcId> MultiDigraph::in_arcs(VertexId v) const {
  require_vertex(v);
  return in_[index(v)];
}

std::vector<VertexId> MultiDigraph::vertices() const {
  std::vector<VertexId> result;
  result.reserve(live_vertices_);
  for (std::size_t i = 0; i < vertex_alive_.size(); ++i) {
    if (vertex_alive_[i]) result.push_back(vertex_id(i));
  }
  return result;
}

std::vector<ArcId> MultiDigraph::arcs() const {
  std::vector<ArcId> result;
  result.reserve(live_arcs_);
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    if (arcs_[i].alive) result.push_back(arc_id(i));
  }
  return result;
}

int MultiDigraph::out_degree(VertexId v) const {
  return static_cast<int>(out_arcs(v).size());
}

int MultiDigraph::in_degree(VertexId v) const {
  return static_cast<int>(in_arcs(v).size());
}

int MultiDigraph::multiplicity(VertexId tail, VertexId head) const {
  require_vertex(head);
  const auto out = out_arcs(tail);
  return static_cast<int>(std::count_if(out.begin(), out.end(), [&](ArcId a) {
    return arcs_[index(a)].head == head;
  }));
}

int MultiDigraph::min_out_degree() const {
  int best = -1;
  for (std::size_t i = 0; i < vertex_alive_.size(); ++i) {
    if (!vertex_alive_[i]) continue;
    const int d = static_cast<int>(out_[i].size());
    if (best < 0 || d < best) best = d;
  }
  return best < 0 ? 0 : best;
}

int MultiDigraph::max_out_degree() const {
  int best = 0;
  for (std::size_t i = 0; i < vertex_alive_.size(); ++i) {
    if (vertex_alive_[i]) best = std::max(best, static_cast<int>(out_[i].size()));
  }
  return best;
}

int MultiDigraph::max_multiplicity() const {
  std::vector<int> count(vertex_alive_.size(), 0);
  int best = 0;
  for (std::size_t v = 0; v < vertex_alive_.size(); ++v) {
    for (ArcId a : out_[v]) best = std::max(best, ++count[index(arcs_[index(a)].head)]);
    for (ArcId a : out_[v]) count[index(arcs_[index(a)].head)] = 0;
  }
  return best;
}

MultiDigraph MultiDigraph::induced(std::span<const VertexId> keep) const {
  std::vector<bool> kept(vertex_alive_.size(), false);
  for (VertexId v : keep) {
    require_vertex(v);
    kept[index(v)] = true;
  }
  std::vector<VertexId> drop;
  for (std::size_t i = 0; i < vertex_alive_.size(); ++i) {
    if (vertex_alive_[i] && !kept[i]) drop.push_back(vertex_id(i));
  }
  MultiDigraph copy = *this;
  copy.remove_vertices(drop);
  return copy;
}

std::vector<VertexId> MultiDigraph::reach_to(VertexId target,
                                             std::span<const ArcId> forbidden) const {
  return reach(target, forbidden, true);
}

std::vector<VertexId> MultiDigraph::reach_from(VertexId source,
                                               std::span<const ArcId> forbidden) const {
  return reach(source, forbidden, false);
}

std::vector<VertexId> MultiDigraph::reach(VertexId start, std::span<const ArcId> forbidden,
                                          bool backwards) const {
  require_vertex(start);
  std::vector<char> blocked(arcs_.size(), 0);
  for (ArcId a : forbidden) {
    require_arc(a);
    blocked[index(a)] = 1;
  }
  std::vector<char> seen(vertex_alive_.size(), 0);
  std::vector<VertexId> stack{start};
  seen[index(start)] = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    const auto& adj = backwards ? in_[index(v)] : out_[index(v)];
    for (ArcId a : adj) {
      if (blocked[index(a)]) continue;
      const VertexId next = backwards ? arcs_[index(a)].tail : arcs_[index(a)].head;
      if (!seen[index(next)]) {
        seen[index(next)] = 1;
        stack.push_back(next);
      }
    }
  }
  std::vector<VertexId> result;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i]) result.push_back(vertex_id(i));
  }
  return result;
}

void MultiDigraph::check_consistency() const {
  auto fail = [](const std::string& what) {
    throw Error(ErrorKind::internal_invariant_broken, "graph index: " + what);
  };
  std::vector<int> out_count(vertex_alive_.size(), 0);
  std::vector<int> in_count(vertex_alive_.size(), 0);
  std::size_t alive = 0;
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const ArcRecord& rec = arcs_[i];
    if (!rec.alive) continue;
    ++alive;
    if (rec.tail == rec.head) fail("loop arc " + std::to_string(i));
    if (!has_vertex(rec.tail) || !has_vertex(rec.head)) {
      fail("arc " + std::to_string(i) + " touches a dead vertex");
    }
    ++out_count[index(rec.tail)];
    ++in_count[index(rec.head)];
  }
  if (alive != live_arcs_) fail("live arc counter");
  std::size_t live_v = 0;
  for (std::size_t v = 0; v < vertex_alive_.size(); ++v) {
    if (vertex_alive_[v]) ++live_v;
    if (!vertex_alive_[v] && (!out_[v].empty() || !in_[v].empty())) {
      fail("dead vertex " + std::to_string(v) + " has adjacency");
    }
    if (static_cast<int>(out_[v].size()) != out_count[v] ||
        static_cast<int>(in_[v].size()) != in_count[v]) {
      fail("degree mismatch at vertex " + std::to_string(v));
    }
    if (!std::is_sorted(out_[v].begin(), out_[v].end()) ||
        !std::is_sorted(in_[v].begin(), in_[v].end())) {
      fail("unsorted adjacency at vertex " + std::to_string(v));
    }
    for (ArcId a : out_[v]) {
      if (!arcs_[index(a)].alive || index(arcs_[index(a)].tail) != v) fail("out list");
    }
    for (ArcId a : in_[v]) {
      if (!arcs_[index(a)].alive || index(arcs_[index(a)].head) != v) fail("in list");
    }
  }
  if (live_v != live_vertices_) fail("live vertex counter");
}

void MultiDigraph::require_vertex(VertexId v) const {
  if (!has_vertex(v)) throw Error(ErrorKind::unknown_id, "vertex " + std::to_string(index(v)));
}

void MultiDigraph::require_arc(ArcId a) const {
  if (!has_arc(a)) throw Error(ErrorKind::unknown_id, "arc " + std::to_string(index(a)));
}

}  // namespace immersion
