#include "immersion/menger.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "immersion/error.hpp"

namespace immersion {

int CutCertificate::value() const {
  return has_paths() ? static_cast<int>(packing().paths.size())
                     : static_cast<int>(cut().arcs.size());
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

class UnitFlow {
 public:
  UnitFlow(const MultiDigraph& g, VertexId source, VertexId target)
      : g_(g),
        source_(source),
        target_(target),
        flow_(g.arc_bound(), 0),
        parent_(g.vertex_bound(), kNone),
        forward_(g.vertex_bound(), 0),
        seen_(g.vertex_bound(), 0) {}

  /// Returns false when no augmenting path exists; `seen_` then holds the
  /// residual component of the source.
  bool augment() {
    std::fill(seen_.begin(), seen_.end(), 0);
    std::deque<VertexId> queue{source_};
    seen_[index(source_)] = 1;
    bool reached = false;
    while (!queue.empty() && !reached) {
      const VertexId u = queue.front();
      queue.pop_front();
      for (ArcId a : g_.out_arcs(u)) {
        const VertexId w = g_.head(a);
        if (flow_[index(a)] || seen_[index(w)]) continue;
        visit(w, a, true, queue);
        if (w == target_) {
          reached = true;
          break;
        }
      }
      if (reached) break;
      for (ArcId a : g_.in_arcs(u)) {
        const VertexId w = g_.tail(a);
        if (!flow_[index(a)] || seen_[index(w)]) continue;
        visit(w, a, false, queue);
        if (w == target_) {
          reached = true;
          break;
        }
      }
    }
    if (!reached) return false;
    for (VertexId v = target_; v != source_;) {
      const ArcId a = arc_id(parent_[index(v)]);
      if (forward_[index(v)]) {
        flow_[index(a)] = 1;
        v = g_.tail(a);
      } else {
        flow_[index(a)] = 0;
        v = g_.head(a);
      }
    }
    return true;
  }

  std::vector<ArcPath> decompose(int count) const {
    std::vector<char> consumed(flow_.size(), 0);
    std::vector<std::size_t> cursor(g_.vertex_bound(), 0);
    std::vector<std::size_t> position(g_.vertex_bound(), kNone);
    std::vector<ArcPath> paths;
    for (int p = 0; p < count; ++p) {
      ArcPath path;
      position[index(source_)] = 0;
      VertexId v = source_;
      while (v != target_) {
        const auto out = g_.out_arcs(v);
        std::size_t& c = cursor[index(v)];
        while (c < out.size() && (!flow_[index(out[c])] || consumed[index(out[c])])) ++c;
        if (c == out.size()) {
          throw Error(ErrorKind::internal_invariant_broken,
                      "flow decomposition stalled at vertex " + std::to_string(index(v)));
        }
        const ArcId a = out[c];
        consumed[index(a)] = 1;
        const VertexId w = g_.head(a);
        if (position[index(w)] != kNone) {
          // Closed a flow cycle; drop it.
          const std::size_t keep = position[index(w)];
          for (std::size_t j = keep; j < path.size(); ++j) position[index(g_.head(path[j]))] = kNone;
          path.resize(keep);
          position[index(w)] = keep;
        } else {
          path.push_back(a);
          position[index(w)] = path.size();
        }
        v = w;
      }
      position[index(source_)] = kNone;
      for (ArcId a : path) position[index(g_.head(a))] = kNone;
      paths.push_back(std::move(path));
    }
    return paths;
  }

  /// Arcs leaving the residual component of the source. Valid after a
  /// failed augment().
  std::vector<ArcId> frontier() const {
    std::vector<ArcId> cut;
    for (VertexId v : g_.vertices()) {
      if (!seen_[index(v)]) continue;
      for (ArcId a : g_.out_arcs(v)) {
        if (!seen_[index(g_.head(a))]) cut.push_back(a);
      }
    }
    std::sort(cut.begin(), cut.end());
    return cut;
  }

 private:
  void visit(VertexId w, ArcId a, bool forward, std::deque<VertexId>& queue) {
    seen_[index(w)] = 1;
    parent_[index(w)] = index(a);
    forward_[index(w)] = forward ? 1 : 0;
    queue.push_back(w);
  }

  const MultiDigraph& g_;
  VertexId source_;
  VertexId target_;
  std::vector<char> flow_;
  std::vector<std::size_t> parent_;
  std::vector<char> forward_;
  std::vector<char> seen_;
};

[[noreturn]] void broken(const std::string& what) {
  throw Error(ErrorKind::internal_invariant_broken, "menger: " + what);
}

}  // namespace

CutCertificate paths_or_cut(const MultiDigraph& g, VertexId source, VertexId target, int demand) {
  if (!g.has_vertex(source)) {
    throw Error(ErrorKind::unknown_id, "vertex " + std::to_string(index(source)));
  }
  if (!g.has_vertex(target)) {
    throw Error(ErrorKind::unknown_id, "vertex " + std::to_string(index(target)));
  }
  if (source == target) {
    throw Error(ErrorKind::same_endpoints, "source and target are both " +
                                               std::to_string(index(source)));
  }
  if (demand < 1) throw Error(ErrorKind::out_of_range, "demand must be >= 1");

  CutCertificate result;
  result.source = source;
  result.target = target;
  result.demand = demand;

  UnitFlow flow(g, source, target);
  int value = 0;
  while (value < demand && flow.augment()) ++value;
  if (value == demand) {
    result.outcome = PathPacking{flow.decompose(demand)};
    return result;
  }

  ArcCut cut;
  cut.arcs = flow.frontier();
  if (static_cast<int>(cut.arcs.size()) != value) {
    broken("cut of size " + std::to_string(cut.arcs.size()) + " for flow " +
           std::to_string(value));
  }
  cut.sink_side = g.reach_to(target, cut.arcs);
  if (std::binary_search(cut.sink_side.begin(), cut.sink_side.end(), source)) {
    broken("source reaches target around the cut");
  }
  const auto forward = g.reach_from(source, cut.arcs);
  if (std::binary_search(forward.begin(), forward.end(), target)) {
    broken("target reachable from source around the cut");
  }
  result.outcome = std::move(cut);
  return result;
}

std::vector<CutCertificate> paths_or_cut_serial(const MultiDigraph& g, VertexId source,
                                                std::span<const VertexId> targets, int demand) {
  std::vector<CutCertificate> results;
  results.reserve(targets.size());
  for (VertexId t : targets) results.push_back(paths_or_cut(g, source, t, demand));
  return results;
}

std::vector<CutCertificate> paths_or_cut_many(const MultiDigraph& g, VertexId source,
                                              std::span<const VertexId> targets, int demand,
                                              int jobs) {
  if (jobs <= 1 || targets.size() < 2) return paths_or_cut_serial(g, source, targets, demand);
  return paths_or_cut_parallel(g, source, targets, demand, jobs);
}

}  // namespace immersion
