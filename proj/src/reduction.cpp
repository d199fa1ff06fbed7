#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "immersion/patterns.hpp"
#include "solver_internal.hpp"

namespace immersion {

namespace detail {

void invariant_broken(const std::string& what, const MultiDigraph* graph,
                      const ImmersionCertificate* cert, std::string reduction) {
  DiagnosticDump dump;
  if (graph) dump.graph = std::make_shared<const MultiDigraph>(*graph);
  if (cert) dump.certificate = std::make_shared<const ImmersionCertificate>(*cert);
  if (reduction.empty()) reduction = "# reduction dump\nmessage " + what + "\n";
  dump.reduction = std::move(reduction);
  throw InternalInvariantBroken(what, std::move(dump));
}

void degree_check_failed(Mode mode, const std::string& what, const MultiDigraph* graph,
                         const ImmersionCertificate* cert, std::string reduction) {
  if (mode == Mode::fixture) throw Error(ErrorKind::search_failed, what);
  invariant_broken(what, graph, cert, std::move(reduction));
}

}  // namespace detail

namespace {

template <typename Range>
void append_ids(std::ostringstream& out, const Range& ids) {
  for (auto id : ids) out << ' ' << static_cast<std::uint64_t>(id);
}

}  // namespace

std::string dump_reduction(const ReductionState& rs, const std::string& message) {
  std::ostringstream out;
  out << "# reduction dump\n";
  out << "message " << message << '\n';
  out << "K " << rs.K << " l " << rs.l << '\n';
  out << "T";
  append_ids(out, rs.low);
  out << "\nX";
  append_ids(out, rs.branch);
  out << "\ntip " << index(rs.tip) << '\n';
  out << "paths " << rs.paths.size() << '\n';
  for (const CandidateCut& c : rs.cuts) {
    out << "cut " << index(c.y) << ' ' << c.cut.size() << ' ' << c.reach.size() << '\n';
  }
  out << "Y";
  append_ids(out, rs.cover);
  out << '\n';
  for (std::size_t i = 0; i < rs.private_sets.size() && i < rs.cover.size(); ++i) {
    out << "S " << index(rs.cover[i]) << ' ' << rs.private_sets[i].size() << '\n';
  }
  if (rs.aux.vertex_bound() == rs.cover.size()) {
    for (std::size_t i = 0; i < rs.cover.size(); ++i) {
      out << "R " << index(rs.cover[i]) << " in " << rs.aux.in_degree(vertex_id(i)) << " out "
          << rs.aux.out_degree(vertex_id(i)) << '\n';
    }
  }
  if (rs.chosen < rs.cover.size()) out << "ystar " << index(rs.cover[rs.chosen]) << '\n';
  return out.str();
}

CoverChoice choose_cover(const std::vector<std::vector<std::size_t>>& sets, std::size_t universe) {
  std::vector<boost::dynamic_bitset<>> bits(sets.size(), boost::dynamic_bitset<>(universe));
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t u : sets[i]) {
      if (u >= universe) throw Error(ErrorKind::out_of_range, "cover element out of range");
      bits[i].set(u);
    }
  }
  CoverChoice out;
  boost::dynamic_bitset<> uncovered(universe);
  uncovered.set();
  while (uncovered.any()) {
    std::size_t best = sets.size();
    std::size_t best_gain = 0;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      const std::size_t gain = (bits[i] & uncovered).count();
      if (gain > best_gain) {
        best = i;
        best_gain = gain;
      }
    }
    if (best == sets.size()) {
      throw Error(ErrorKind::precondition_violated, "sets do not cover the universe");
    }
    out.greedy.push_back(best);
    uncovered -= bits[best];
  }
  std::sort(out.greedy.begin(), out.greedy.end());

  std::vector<int> multiplicity(universe, 0);
  for (std::size_t i : out.greedy) {
    for (std::size_t u : sets[i]) ++multiplicity[u];
  }
  for (std::size_t i : out.greedy) {
    const bool redundant = std::all_of(sets[i].begin(), sets[i].end(),
                                       [&](std::size_t u) { return multiplicity[u] >= 2; });
    if (redundant) {
      for (std::size_t u : sets[i]) --multiplicity[u];
    } else {
      out.kept.push_back(i);
    }
  }
  return out;
}

ReductionState build_reduction(std::vector<CandidateCut> cuts, const NormalizedDigraph& nd,
                               const ResidualGraph& dprime, int K, int l, Mode mode) {
  ReductionState rs;
  rs.K = K;
  rs.l = l;
  rs.low = nd.low;
  rs.branch = dprime.branch;
  rs.tip = dprime.tip;
  rs.cuts = std::move(cuts);
  rs.chosen = static_cast<std::size_t>(-1);

  const MultiDigraph& g = dprime.graph;
  auto broken = [&](const std::string& what) {
    detail::invariant_broken(what, &nd.graph, nullptr, dump_reduction(rs, what));
  };
  auto degree_failed = [&](const std::string& what) {
    detail::degree_check_failed(mode, what, &nd.graph, nullptr, dump_reduction(rs, what));
  };

  // Universe: D' minus the tip, indexed densely.
  std::vector<VertexId> universe;
  for (VertexId v : g.vertices()) {
    if (v != rs.tip) universe.push_back(v);
  }
  const std::size_t n = universe.size();
  std::vector<std::size_t> slot(g.vertex_bound(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < n; ++i) slot[index(universe[i])] = i;

  std::sort(rs.cuts.begin(), rs.cuts.end(),
            [](const CandidateCut& a, const CandidateCut& b) { return a.y < b.y; });
  if (rs.cuts.size() != n) broken("expected one cut per candidate");

  std::vector<boost::dynamic_bitset<>> reach(n, boost::dynamic_bitset<>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const CandidateCut& c = rs.cuts[i];
    if (c.y != universe[i]) broken("cut list does not match the candidates");
    if (static_cast<int>(c.cut.size()) >= l) {
      broken("|E_y| = " + std::to_string(c.cut.size()) + " >= l for y = " +
             std::to_string(index(c.y)));
    }
    for (VertexId v : c.reach) {
      if (v == rs.tip) broken("tip lies in C_" + std::to_string(index(c.y)));
      if (!g.has_vertex(v)) broken("C_y contains a vertex outside D'");
      reach[i].set(slot[index(v)]);
    }
    if (!reach[i].test(i)) broken("y missing from its own C_y");
  }

  std::vector<std::vector<std::size_t>> sets(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t u = reach[i].find_first(); u != reach[i].npos; u = reach[i].find_next(u)) {
      sets[i].push_back(u);
    }
  }
  CoverChoice choice;
  try {
    choice = choose_cover(sets, n);
  } catch (const Error& e) {
    broken(e.what());
  }
  const std::vector<std::size_t>& kept = choice.kept;
  rs.pruned = kept.size() < choice.greedy.size();
  for (std::size_t i : kept) rs.cover.push_back(universe[i]);

  std::vector<int> multiplicity(n, 0);
  for (std::size_t i : kept) {
    for (std::size_t u : sets[i]) ++multiplicity[u];
  }
  for (std::size_t i : kept) {
    if (std::all_of(sets[i].begin(), sets[i].end(),
                    [&](std::size_t u) { return multiplicity[u] >= 2; })) {
      broken("cover is not minimal at " + std::to_string(index(universe[i])));
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    if (multiplicity[u] == 0) broken("cover misses vertex " + std::to_string(index(universe[u])));
  }

  // S_y: the part of C_y no other cover member reaches.
  std::vector<std::size_t> owner(n, static_cast<std::size_t>(-1));
  for (std::size_t k = 0; k < kept.size(); ++k) {
    const std::size_t i = kept[k];
    std::vector<VertexId> priv;
    for (std::size_t u = reach[i].find_first(); u != reach[i].npos; u = reach[i].find_next(u)) {
      if (multiplicity[u] != 1) continue;
      if (owner[u] != static_cast<std::size_t>(-1)) broken("private sets overlap");
      owner[u] = k;
      priv.push_back(universe[u]);
    }
    if (priv.empty()) {
      broken("cover is not minimal: S_" + std::to_string(index(universe[i])) + " is empty");
    }
    rs.private_sets.push_back(std::move(priv));
  }

  const std::set<VertexId> low(rs.low.begin(), rs.low.end());
  for (VertexId t : rs.low) {
    if (!g.has_vertex(t) || t == rs.tip) continue;
    if (!std::binary_search(rs.cover.begin(), rs.cover.end(), t)) {
      broken("low vertex " + std::to_string(index(t)) + " is not in Y");
    }
  }
  for (std::size_t k = 0; k < rs.cover.size(); ++k) {
    if (low.count(rs.cover[k])) continue;
    for (VertexId v : rs.private_sets[k]) {
      if (low.count(v)) broken("S_y of a high vertex contains low vertex " + std::to_string(index(v)));
    }
  }

  // R: one arc y -> y' for every D' arc leaving S_y into C_{y'}.
  rs.aux = MultiDigraph(rs.cover.size());
  std::vector<std::set<ArcId>> cut_sets;
  for (std::size_t i : kept) cut_sets.emplace_back(rs.cuts[i].cut.begin(), rs.cuts[i].cut.end());
  for (std::size_t k = 0; k < kept.size(); ++k) {
    for (VertexId v : rs.private_sets[k]) {
      for (ArcId a : g.out_arcs(v)) {
        const VertexId h = g.head(a);
        if (h == rs.tip) continue;
        const std::size_t hu = slot[index(h)];
        for (std::size_t j = 0; j < kept.size(); ++j) {
          if (j == k || !reach[kept[j]].test(hu)) continue;
          if (!cut_sets[j].count(a)) {
            broken("arc " + std::to_string(index(a)) + " enters C_" +
                   std::to_string(index(rs.cover[j])) + " without being in E_y");
          }
          rs.aux.add_arc(vertex_id(k), vertex_id(j));
          rs.aux_origin.push_back(a);
        }
      }
    }
  }
  for (std::size_t j = 0; j < kept.size(); ++j) {
    if (rs.aux.in_degree(vertex_id(j)) > static_cast<int>(cut_sets[j].size())) {
      broken("R in-degree of " + std::to_string(index(rs.cover[j])) + " exceeds |E_y|");
    }
  }

  if (mode != Mode::fixture) {
    const std::int64_t need = 2 * bound_c1(K, l);
    if (static_cast<std::int64_t>(rs.cover.size()) < need) {
      degree_failed("|Y| = " + std::to_string(rs.cover.size()) + " < 2 c1 = " +
                    std::to_string(need));
    }
  }

  int best_out = -1;
  for (std::size_t k = 0; k < rs.cover.size(); ++k) {
    if (low.count(rs.cover[k])) continue;
    const int out = rs.aux.out_degree(vertex_id(k));
    if (best_out < 0 || out < best_out) {
      best_out = out;
      rs.chosen = k;
    }
  }
  if (best_out < 0) degree_failed("Y has no vertex outside T");
  if (mode != Mode::fixture && best_out > 2 * l) {
    degree_failed("minimum R out-degree " + std::to_string(best_out) + " exceeds 2l");
  }
  return rs;
}

ReducedInstance build_h(const ReductionState& rs, const MultiDigraph& normalized,
                        std::size_t parent_vertices, Mode mode) {
  const int K = rs.K;
  const int l = rs.l;
  auto broken = [&](const std::string& what) {
    detail::invariant_broken(what, &normalized, nullptr, dump_reduction(rs, what));
  };

  const std::vector<VertexId>& priv = rs.private_sets.at(rs.chosen);
  std::vector<char> in_s(normalized.vertex_bound(), 0);
  for (VertexId v : priv) in_s[index(v)] = 1;
  std::vector<VertexId> keep = priv;
  for (VertexId x : rs.branch) {
    if (in_s[index(x)]) broken("branch vertex inside S_y*");
    keep.push_back(x);
  }

  ReducedInstance out;
  out.graph = normalized.induced(keep);
  std::vector<ArcId> drop;
  for (VertexId x : rs.branch) {
    const auto arcs = out.graph.out_arcs(x);
    drop.insert(drop.end(), arcs.begin(), arcs.end());
  }
  for (const ArcPath& p : rs.paths) {
    for (ArcId a : p) {
      if (out.graph.has_arc(a)) drop.push_back(a);
    }
  }
  std::sort(drop.begin(), drop.end());
  drop.erase(std::unique(drop.begin(), drop.end()), drop.end());
  out.graph.remove_arcs(drop);

  for (std::size_t p = 0; p < rs.paths.size(); ++p) {
    const ArcPath& path = rs.paths[p];
    std::size_t last = static_cast<std::size_t>(-1);  // arc position where the last z starts
    for (std::size_t pos = 0; pos <= path.size(); ++pos) {
      const VertexId v = pos == 0 ? normalized.tail(path.front()) : normalized.head(path[pos - 1]);
      if (!in_s[index(v)]) continue;
      if (last != static_cast<std::size_t>(-1)) {
        const VertexId from = normalized.tail(path[last]);
        const ArcId a = out.graph.add_arc(from, v);
        out.shortcuts.emplace(a, Shortcut{p, ArcPath(path.begin() + static_cast<std::ptrdiff_t>(last),
                                                     path.begin() + static_cast<std::ptrdiff_t>(pos))});
      }
      last = pos;
    }
  }

  const int multiplicity = out.graph.max_multiplicity();
  if (multiplicity > K * l) {
    broken("H has multiplicity " + std::to_string(multiplicity) + " > K l = " +
           std::to_string(K * l));
  }
  const std::int64_t f = bound_f(K, l);
  for (VertexId v : out.graph.vertices()) {
    if (out.graph.out_degree(v) < f) ++out.low_vertices;
  }
  if (out.graph.vertex_count() >= parent_vertices) {
    detail::degree_check_failed(mode,
                                "H has " + std::to_string(out.graph.vertex_count()) +
                                    " vertices, parent has " + std::to_string(parent_vertices),
                                &normalized, nullptr,
                                dump_reduction(rs, "H is not smaller than its parent"));
  }
  if (mode != Mode::fixture && static_cast<std::int64_t>(out.low_vertices) > bound_c1(K, l)) {
    const std::string what = std::to_string(out.low_vertices) +
                             " vertices of H fall below f(K, l); c1 = " +
                             std::to_string(bound_c1(K, l));
    detail::invariant_broken(what, &normalized, nullptr, dump_reduction(rs, what));
  }
  return out;
}

ImmersionCertificate lift(const ImmersionCertificate& cert_h, const ShortcutMap& shortcuts,
                          const MultiDigraph& host) {
  ImmersionCertificate out;
  out.pattern = cert_h.pattern;
  out.vertex_map = cert_h.vertex_map;
  std::unordered_set<std::uint32_t> claimed;
  for (const ArcPath& path : cert_h.arc_paths) {
    ArcPath walk;
    for (ArcId a : path) {
      if (const auto it = shortcuts.find(a); it != shortcuts.end()) {
        walk.insert(walk.end(), it->second.segment.begin(), it->second.segment.end());
      } else {
        walk.push_back(a);
      }
    }
    for (ArcId a : walk) {
      if (!host.has_arc(a)) {
        detail::invariant_broken("lifted path uses arc " + std::to_string(index(a)) +
                                     " missing from the parent graph",
                                 &host, &cert_h);
      }
      if (!claimed.insert(static_cast<std::uint32_t>(a)).second) {
        detail::invariant_broken("LiftCollision: arc " + std::to_string(index(a)) +
                                     " claimed twice",
                                 &host, &cert_h);
      }
    }
    out.arc_paths.push_back(excise_cycles(host, walk));
  }
  return out;
}

}  // namespace immersion
