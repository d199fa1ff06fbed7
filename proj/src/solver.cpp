#include "immersion/solver.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "immersion/menger.hpp"
#include "immersion/patterns.hpp"
#include "solver_internal.hpp"

namespace immersion {

const char* to_string(Mode mode) {
  switch (mode) {
    case Mode::strict: return "strict";
    case Mode::relaxed: return "relaxed";
    case Mode::fixture: return "fixture";
  }
  return "?";
}

const char* to_string(Branch branch) {
  switch (branch) {
    case Branch::base: return "base";
    case Branch::extended: return "extended";
    case Branch::reduced: return "reduced";
  }
  return "?";
}

std::string SolveTrace::summary() const {
  std::ostringstream out;
  for (const LevelRecord& r : levels) {
    out << std::string(static_cast<std::size_t>(2 * r.depth), ' ') << "K=" << r.K << " l=" << r.l
        << " mode=" << to_string(r.mode) << " n=" << r.vertices << " m=" << r.arcs
        << " |T|=" << r.low_vertices << " branch=" << to_string(r.branch);
    if (r.queries) out << " queries=" << r.queries;
    if (r.endpoint) out << " endpoint=" << index(*r.endpoint);
    out << '\n';
  }
  for (const ReductionSummary& s : reductions) {
    out << "reduction depth=" << s.depth << " |Y|=" << s.cover.size()
        << " y*=" << index(s.chosen) << " |R|=" << s.r_arcs << " |V(H)|=" << s.h_vertices
        << " shortcuts=" << s.shortcut_lengths.size() << '\n';
  }
  if (lifted) out << "lifted " << lifted << " certificate(s)\n";
  return out.str();
}

NormalizedDigraph normalize(const MultiDigraph& graph, int K, int l, Mode mode) {
  NormalizedDigraph nd{graph, {}, {}};
  if (mode == Mode::fixture) {
    for (VertexId v : graph.vertices()) {
      if (graph.out_degree(v) == 0) nd.low.push_back(v);
    }
    return nd;
  }
  const std::int64_t f = bound_f(K, l);
  for (VertexId v : graph.vertices()) {
    const auto out = graph.out_arcs(v);
    const std::int64_t degree = static_cast<std::int64_t>(out.size());
    if (degree < f) {
      nd.low.push_back(v);
      nd.removed_arcs.insert(nd.removed_arcs.end(), out.begin(), out.end());
    } else {
      nd.removed_arcs.insert(nd.removed_arcs.end(), out.begin() + f, out.end());
    }
  }
  const std::int64_t c1 = bound_c1(K, l);
  if (static_cast<std::int64_t>(nd.low.size()) > c1) {
    throw Error(ErrorKind::precondition_violated,
                std::to_string(nd.low.size()) + " vertices have outdegree below f(" +
                    std::to_string(K) + "," + std::to_string(l) + ") = " + std::to_string(f) +
                    ", at most c1 = " + std::to_string(c1) + " allowed (first: vertex " +
                    std::to_string(index(nd.low.front())) + ")");
  }
  std::sort(nd.removed_arcs.begin(), nd.removed_arcs.end());
  nd.graph.remove_arcs(nd.removed_arcs);
  return nd;
}

MultiDigraph reduce_for_induction(const NormalizedDigraph& nd, int K, int l, Mode mode) {
  MultiDigraph g = nd.graph;
  g.remove_vertices(nd.low);
  const int cap = (K - 1) * l;
  std::vector<ArcId> excess;
  for (VertexId v : g.vertices()) {
    std::unordered_map<std::uint32_t, int> seen;
    for (ArcId a : g.out_arcs(v)) {
      if (++seen[static_cast<std::uint32_t>(g.head(a))] > cap) excess.push_back(a);
    }
  }
  g.remove_arcs(excess);
  if (g.max_multiplicity() > cap) {
    detail::invariant_broken("multiplicity above (K-1) l after trimming", &nd.graph, nullptr);
  }
  if (mode != Mode::fixture) {
    const std::int64_t dprime = bound_dprime(K, l);
    const std::int64_t inner = bound_f(K - 1, l);
    if (dprime < inner) {
      detail::invariant_broken("d'(K, l) = " + std::to_string(dprime) + " < f(K-1, l) = " +
                                   std::to_string(inner),
                               &nd.graph, nullptr);
    }
    if (g.vertex_count() > 0 && g.min_out_degree() < dprime) {
      detail::degree_check_failed(mode,
                                  "outdegree " + std::to_string(g.min_out_degree()) +
                                      " after removing T, below d'(K, l) = " +
                                      std::to_string(dprime),
                                  &nd.graph, nullptr);
    }
  }
  return g;
}

ImmersionCertificate minimize_cert(const MultiDigraph& graph, ImmersionCertificate cert) {
  std::vector<char> used(graph.arc_bound(), 0);
  for (const ArcPath& p : cert.arc_paths) {
    for (ArcId a : p) used[index(a)] = 1;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (ArcPath& path : cert.arc_paths) {
      for (std::size_t i = 0; i + 2 <= path.size() && !changed; ++i) {
        std::unordered_map<std::uint32_t, ArcId> direct;  // head -> lowest unused arc
        for (ArcId a : graph.out_arcs(graph.tail(path[i]))) {
          if (!used[index(a)]) direct.try_emplace(static_cast<std::uint32_t>(graph.head(a)), a);
        }
        if (direct.empty()) continue;
        for (std::size_t j = path.size(); j >= i + 2; --j) {
          const auto it = direct.find(static_cast<std::uint32_t>(graph.head(path[j - 1])));
          if (it == direct.end()) continue;
          for (std::size_t t = i; t < j; ++t) used[index(path[t])] = 0;
          used[index(it->second)] = 1;
          path.erase(path.begin() + static_cast<std::ptrdiff_t>(i + 1),
                     path.begin() + static_cast<std::ptrdiff_t>(j));
          path[i] = it->second;
          changed = true;
          break;
        }
      }
      if (changed) break;
    }
  }
  return cert;
}

ResidualGraph build_dprime(const MultiDigraph& normalized, const ImmersionCertificate& inner) {
  ResidualGraph r{normalized, {}, inner.vertex_map};
  r.tip = r.branch.back();
  std::vector<ArcId> drop;
  for (const ArcPath& p : inner.arc_paths) drop.insert(drop.end(), p.begin(), p.end());
  r.graph.remove_arcs(drop);
  std::vector<VertexId> gone(r.branch.begin(), r.branch.end() - 1);
  r.graph.remove_vertices(gone);
  return r;
}

ExtendOutcome extend_or_cuts(const MultiDigraph& dprime, VertexId tip, int l, int jobs) {
  std::vector<VertexId> candidates;
  for (VertexId v : dprime.vertices()) {
    if (v != tip) candidates.push_back(v);
  }
  if (candidates.empty()) throw Error(ErrorKind::search_failed, "D' has no vertex besides the tip");

  ExtendOutcome out;
  const std::size_t block = jobs <= 1 ? 1 : 4 * static_cast<std::size_t>(jobs);
  for (std::size_t start = 0; start < candidates.size(); start += block) {
    const std::size_t len = std::min(block, candidates.size() - start);
    const std::span<const VertexId> batch(candidates.data() + start, len);
    std::vector<CutCertificate> answers = paths_or_cut_many(dprime, tip, batch, l, jobs);
    out.queries += len;
    for (CutCertificate& c : answers) {
      if (c.has_paths()) {
        out.extension = Extension{c.target, std::move(std::get<PathPacking>(c.outcome).paths)};
        return out;
      }
      ArcCut& cut = std::get<ArcCut>(c.outcome);
      out.cuts.push_back({c.target, std::move(cut.arcs), std::move(cut.sink_side)});
    }
  }
  return out;
}

namespace {

struct Solver {
  SolverOptions options;
  SolveTrace* trace;

  [[noreturn]] void precondition(int depth, const std::string& what, const MultiDigraph& g) {
    if (depth > 0) detail::invariant_broken("recursive call violates its contract: " + what, &g, nullptr);
    throw Error(ErrorKind::precondition_violated, what);
  }

  LevelRecord* record(std::size_t slot) { return trace ? &trace->levels[slot] : nullptr; }

  ImmersionCertificate checked(const MultiDigraph& g, ImmersionCertificate cert) {
    const auto violations = verify(g, cert);
    if (!violations.empty()) {
      detail::invariant_broken("constructed certificate does not verify: " + describe(violations),
                               &g, &cert);
    }
    return cert;
  }

  ImmersionCertificate solve(const MultiDigraph& g, int K, int l, Mode mode, int depth,
                             const ImmersionCertificate* planted) {
    if (l < 2) precondition(depth, "l must be at least 2, got " + std::to_string(l), g);
    if (K < 1) precondition(depth, "K must be at least 1, got " + std::to_string(K), g);
    std::size_t slot = 0;
    if (trace) {
      slot = trace->levels.size();
      LevelRecord r;
      r.depth = depth;
      r.K = K;
      r.l = l;
      r.mode = mode;
      r.vertices = g.vertex_count();
      r.arcs = g.arc_count();
      trace->levels.push_back(r);
    }

    if (K == 1) {
      if (g.vertex_count() == 0) {
        detail::degree_check_failed(mode, "no vertex left for F(1, l)", &g, nullptr);
      }
      ImmersionCertificate cert{build_chain(1, l), {g.vertices().front()}, {}};
      return checked(g, std::move(cert));
    }

    const int mult = g.max_multiplicity();
    if (static_cast<std::int64_t>(mult) > static_cast<std::int64_t>(K) * l) {
      precondition(depth,
                   "multiplicity " + std::to_string(mult) + " exceeds K l = " +
                       std::to_string(K * l),
                   g);
    }
    if (mode == Mode::strict) {
      const std::int64_t f = bound_f(K, l);
      for (VertexId v : g.vertices()) {
        if (g.out_degree(v) <= f) {
          precondition(depth,
                       "vertex " + std::to_string(index(v)) + " has outdegree " +
                           std::to_string(g.out_degree(v)) + ", need more than f(" +
                           std::to_string(K) + "," + std::to_string(l) + ") = " +
                           std::to_string(f),
                       g);
        }
      }
    }

    NormalizedDigraph nd = [&] {
      try {
        return normalize(g, K, l, mode);
      } catch (const InternalInvariantBroken&) {
        throw;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::precondition_violated) throw;
        precondition(depth, e.what(), g);
      }
    }();
    if (trace) record(slot)->low_vertices = nd.low.size();

    ImmersionCertificate inner;
    if (planted) {
      const Pattern want = build_chain(K - 1, l);
      if (!(planted->pattern == want)) {
        precondition(depth, "planted certificate is not F(K-1, l)", g);
      }
      const auto violations = verify(nd.graph, *planted);
      if (!violations.empty()) {
        precondition(depth, "planted certificate does not verify: " + describe(violations), g);
      }
      inner = *planted;
    } else {
      const MultiDigraph reduced = reduce_for_induction(nd, K, l, mode);
      const Mode next = mode == Mode::fixture ? Mode::fixture : Mode::relaxed;
      inner = solve(reduced, K - 1, l, next, depth + 1, nullptr);
    }
    inner = minimize_cert(nd.graph, std::move(inner));

    ResidualGraph dprime = build_dprime(nd.graph, inner);
    ExtendOutcome ext = [&] {
      try {
        return extend_or_cuts(dprime.graph, dprime.tip, l, options.jobs);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::search_failed) throw;
        detail::degree_check_failed(mode, e.what(), &nd.graph, &inner);
      }
    }();
    if (trace) record(slot)->queries = ext.queries;

    if (ext.extension) {
      ImmersionCertificate cert{build_chain(K, l), inner.vertex_map, inner.arc_paths};
      cert.vertex_map.push_back(ext.extension->endpoint);
      for (ArcPath& p : ext.extension->paths) cert.arc_paths.push_back(std::move(p));
      if (trace) {
        record(slot)->branch = Branch::extended;
        record(slot)->endpoint = ext.extension->endpoint;
      }
      return checked(g, std::move(cert));
    }

    ReductionState rs = build_reduction(std::move(ext.cuts), nd, dprime, K, l, mode);
    rs.paths = inner.arc_paths;
    ReducedInstance h = build_h(rs, nd.graph, g.vertex_count(), mode);
    if (trace) {
      record(slot)->branch = Branch::reduced;
      record(slot)->endpoint = rs.chosen_vertex();
      trace->reductions.push_back(summarize(rs, h, depth));
    }
    const Mode next = mode == Mode::fixture ? Mode::fixture : Mode::relaxed;
    ImmersionCertificate cert_h = solve(h.graph, K, l, next, depth + 1, nullptr);
    ImmersionCertificate lifted = lift(cert_h, h.shortcuts, nd.graph);
    if (trace) ++trace->lifted;
    return checked(g, std::move(lifted));
  }

  static ReductionSummary summarize(const ReductionState& rs, const ReducedInstance& h, int depth) {
    ReductionSummary s;
    s.depth = depth;
    s.K = rs.K;
    s.l = rs.l;
    s.cover = rs.cover;
    for (const auto& p : rs.private_sets) s.private_sizes.push_back(p.size());
    for (const CandidateCut& c : rs.cuts) s.cut_sizes.push_back(static_cast<int>(c.cut.size()));
    s.r_arcs = rs.aux.arc_count();
    for (std::size_t i = 0; i < rs.cover.size(); ++i) {
      s.r_in.push_back(rs.aux.in_degree(vertex_id(i)));
      s.r_out.push_back(rs.aux.out_degree(vertex_id(i)));
    }
    s.chosen = rs.chosen_vertex();
    s.pruned = rs.pruned;
    s.h_vertices = h.graph.vertex_count();
    s.h_multiplicity = h.graph.max_multiplicity();
    s.h_low_vertices = h.low_vertices;
    for (const auto& [arc, sc] : h.shortcuts) s.shortcut_lengths.push_back(sc.segment.size());
    std::sort(s.shortcut_lengths.begin(), s.shortcut_lengths.end());
    return s;
  }
};

}  // namespace

ImmersionCertificate find_f(const MultiDigraph& graph, int K, int l, const SolverOptions& options,
                            SolveTrace* trace) {
  Solver solver{options, trace};
  return solver.solve(graph, K, l, options.mode, 0, nullptr);
}

ImmersionCertificate find_f_from(const MultiDigraph& graph, int K, int l,
                                 const ImmersionCertificate& inner, const SolverOptions& options,
                                 SolveTrace* trace) {
  if (K < 2) throw Error(ErrorKind::precondition_violated, "find_f_from needs K >= 2");
  Solver solver{options, trace};
  return solver.solve(graph, K, l, options.mode, 0, &inner);
}

ImmersionCertificate find_tt(const MultiDigraph& graph, int k, bool force,
                             const SolverOptions& options, SolveTrace* trace) {
  if (k < 1) throw Error(ErrorKind::out_of_range, "k must be at least 1");
  if (!graph.is_simple()) {
    throw Error(ErrorKind::not_simple, "multiplicity " + std::to_string(graph.max_multiplicity()) +
                                           ", TT search needs a simple digraph");
  }
  ImmersionCertificate cert;
  cert.pattern = build_tournament(k);
  if (k == 1) {
    if (graph.vertex_count() == 0) throw Error(ErrorKind::search_failed, "empty digraph");
    cert.vertex_map = {graph.vertices().front()};
  } else if (k == 2) {
    const auto arcs = graph.arcs();
    if (arcs.empty()) throw Error(ErrorKind::search_failed, "digraph has no arc");
    cert.vertex_map = {graph.tail(arcs.front()), graph.head(arcs.front())};
    cert.arc_paths = {{arcs.front()}};
  } else {
    const int l = tt_chain_multiplicity(k);
    SolverOptions opts = options;
    if (force) {
      opts.mode = Mode::fixture;
    } else {
      opts.mode = Mode::strict;
      const std::int64_t f = bound_f(k, l);
      const int found = graph.min_out_degree();
      if (graph.vertex_count() == 0 || found <= f) {
        throw Error(ErrorKind::insufficient_outdegree,
                    "minimum outdegree " + std::to_string(found) + ", required > " +
                        std::to_string(f) + " = f(" + std::to_string(k) + "," +
                        std::to_string(l) + ")");
      }
    }
    const ImmersionCertificate chain = find_f(graph, k, l, opts, trace);
    cert = compose(graph, chain, route_tt_in_f(k));
  }
  const auto violations = verify(graph, cert);
  if (!violations.empty()) {
    detail::invariant_broken("TT certificate does not verify: " + describe(violations), &graph,
                             &cert);
  }
  return cert;
}

}  // namespace immersion
