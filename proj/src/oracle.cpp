#include "immersion/oracle.hpp"

#include <algorithm>

namespace immersion {

const char* to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::found: return "found";
    case SearchStatus::not_present: return "not-present";
    case SearchStatus::resource_exceeded: return "resource-exceeded";
  }
  return "?";
}

namespace {

struct BudgetExhausted {};

class ImmersionSearch {
 public:
  ImmersionSearch(const MultiDigraph& host, const Pattern& pattern, std::uint64_t budget)
      : host_(host),
        pattern_(pattern),
        budget_(budget),
        host_vertices_(host.vertices()),
        image_(pattern.graph.vertex_bound()),
        vertex_taken_(host.vertex_bound(), 0),
        arc_taken_(host.arc_bound(), 0),
        on_path_(pattern.graph.arc_bound(), std::vector<char>(host.vertex_bound(), 0)),
        paths_(pattern.graph.arc_bound()) {
    for (VertexId p : pattern.graph.vertices()) order_.push_back(p);
    const auto& pg = pattern.graph;
    std::stable_sort(order_.begin(), order_.end(), [&pg](VertexId a, VertexId b) {
      return pg.out_degree(a) + pg.in_degree(a) > pg.out_degree(b) + pg.in_degree(b);
    });
  }

  bool run() { return place(0); }
  std::uint64_t nodes() const { return nodes_; }

  ImmersionCertificate certificate() const {
    ImmersionCertificate cert;
    cert.pattern = pattern_;
    cert.vertex_map = image_;
    cert.arc_paths = paths_;
    return cert;
  }

 private:
  void tick() {
    if (++nodes_ > budget_) throw BudgetExhausted{};
  }

  bool place(std::size_t depth) {
    if (depth == order_.size()) return route_all();
    const VertexId p = order_[depth];
    for (VertexId h : host_vertices_) {
      if (vertex_taken_[index(h)]) continue;
      tick();
      vertex_taken_[index(h)] = 1;
      image_[index(p)] = h;
      if (place(depth + 1)) return true;
      vertex_taken_[index(h)] = 0;
    }
    return false;
  }

  bool route_all() {
    // Pattern arcs whose images are already adjacent first; the order only
    // affects how soon dead ends are found.
    arc_order_ = pattern_.graph.arcs();
    std::stable_partition(arc_order_.begin(), arc_order_.end(), [this](ArcId a) {
      return host_.multiplicity(image_[index(pattern_.graph.tail(a))],
                                image_[index(pattern_.graph.head(a))]) > 0;
    });
    return route(0);
  }

  bool route(std::size_t i) {
    if (i == arc_order_.size()) return true;
    const ArcId pa = arc_order_[i];
    const VertexId from = image_[index(pattern_.graph.tail(pa))];
    const VertexId to = image_[index(pattern_.graph.head(pa))];
    ArcPath& path = paths_[index(pa)];
    path.clear();
    on_path_[i][index(from)] = 1;
    const bool ok = extend(from, to, path, i);
    on_path_[i][index(from)] = 0;
    return ok;
  }

  bool extend(VertexId at, VertexId to, ArcPath& path, std::size_t i) {
    for (ArcId a : host_.out_arcs(at)) {
      if (arc_taken_[index(a)]) continue;
      const VertexId next = host_.head(a);
      if (on_path_[i][index(next)]) continue;
      tick();
      arc_taken_[index(a)] = 1;
      path.push_back(a);
      bool ok;
      if (next == to) {
        ok = route(i + 1);
      } else {
        on_path_[i][index(next)] = 1;
        ok = extend(next, to, path, i);
        on_path_[i][index(next)] = 0;
      }
      if (ok) return true;
      path.pop_back();
      arc_taken_[index(a)] = 0;
    }
    return false;
  }

  const MultiDigraph& host_;
  const Pattern& pattern_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<VertexId> host_vertices_;
  std::vector<VertexId> order_;
  std::vector<ArcId> arc_order_;
  std::vector<VertexId> image_;
  std::vector<char> vertex_taken_;
  std::vector<char> arc_taken_;
  std::vector<std::vector<char>> on_path_;  // per routing depth
  std::vector<ArcPath> paths_;
};

}  // namespace

SearchResult exhaustive_immersion(const MultiDigraph& host, const Pattern& pattern,
                                  const SearchLimits& limits) {
  SearchResult result;
  if (host.vertex_count() > limits.max_host_vertices || host.arc_count() > limits.max_host_arcs) {
    result.status = SearchStatus::resource_exceeded;
    return result;
  }
  if (pattern.graph.vertex_count() > host.vertex_count()) return result;

  ImmersionSearch search(host, pattern, limits.node_budget);
  try {
    if (search.run()) {
      result.status = SearchStatus::found;
      result.certificate = search.certificate();
    }
  } catch (const BudgetExhausted&) {
    result.status = SearchStatus::resource_exceeded;
  }
  result.nodes = search.nodes();
  return result;
}

}  // namespace immersion
