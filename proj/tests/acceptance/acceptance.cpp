// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.
//
// usage: acceptance [WORKDIR]

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "brute.hpp"
#include "immersion/certify.hpp"
#include "immersion/digraph_io.hpp"
#include "immersion/error.hpp"
#include "immersion/gen.hpp"
#include "immersion/menger.hpp"
#include "immersion/oracle.hpp"
#include "immersion/patterns.hpp"
#include "immersion/solver.hpp"

#ifndef IMMERSION_CLI
#error "IMMERSION_CLI must name the command-line binary"
#endif

namespace fs = std::filesystem;
using namespace immersion;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string note;

  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
};

int invariant_events = 0;

void report_invariant(const InternalInvariantBroken& e) {
  ++invariant_events;
  std::cerr << "InternalInvariantBroken: " << e.what() << '\n' << e.dump().reduction;
  if (e.dump().certificate) std::cerr << to_text(*e.dump().certificate);
}

VertexId v(std::size_t i) { return vertex_id(i); }

// 1 ------------------------------------------------------------------------
Outcome induction_sweep() {
  Outcome out;
  using i128 = __int128;
  auto f = [](i128 k, i128 l) { return 2 * k * k * k * l * l; };
  for (std::int64_t k = 1; k <= 9; ++k) {
    for (std::int64_t l = 2; l <= 12; ++l) {
      const std::int64_t K = k + 1;
      const i128 fK = f(K, l);
      const i128 c1 = (K - 1) + K * l;
      const i128 lhs = fK - c1 * K * l - fK / K;
      if (lhs < f(k, l)) out.fail("inequality fails at k=" + std::to_string(k) + " l=" + std::to_string(l));
      if (static_cast<i128>(bound_dprime(K, l)) != lhs ||
          static_cast<i128>(bound_f(k, l)) != f(k, l)) {
        out.fail("library bound disagrees at k=" + std::to_string(k) + " l=" + std::to_string(l));
      }
    }
  }
  return out;
}

// 2 ------------------------------------------------------------------------
Outcome menger_duality() {
  Outcome out;
  std::mt19937_64 rng(20240601);
  int queries = 0;
  for (int round = 0; round < 200; ++round) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const int m = static_cast<int>(rng() % 31);
    const MultiDigraph g = brute::random_graph(rng, n, m);
    const VertexId s = v(rng() % static_cast<std::uint64_t>(n));
    const VertexId t = v((index(s) + 1 + rng() % static_cast<std::uint64_t>(n - 1)) %
                         static_cast<std::size_t>(n));
    const int best = brute::max_disjoint_paths(g, s, t);
    const int cut_value = brute::min_cut(g, s, t);
    if (best != cut_value) out.fail("brute oracles disagree on round " + std::to_string(round));
    for (int l = 1; l <= 3; ++l) {
      ++queries;
      const CutCertificate c = paths_or_cut(g, s, t, l);
      if (c.has_paths()) {
        ImmersionCertificate as_chain{build_chain(2, l), {s, t}, c.packing().paths};
        if (static_cast<int>(c.packing().paths.size()) != l || best < l ||
            !verify(g, as_chain).empty()) {
          out.fail("bad packing on round " + std::to_string(round));
        }
      } else {
        const ArcCut& cut = c.cut();
        if (static_cast<int>(cut.arcs.size()) != best || best >= l ||
            !brute::separates(g, s, t, cut.arcs)) {
          out.fail("bad cut on round " + std::to_string(round));
        }
      }
    }
  }
  out.note = out.pass ? std::to_string(queries) + " queries" : out.note;
  return out;
}

// 3 ------------------------------------------------------------------------
Outcome verifier_oracle() {
  Outcome out;
  std::mt19937_64 rng(77);
  const Pattern patterns[] = {build_tournament(3), build_chain(2, 2), build_chain(3, 1)};
  int cases = 0;
  int mutations = 0;
  while (cases < 100) {
    const int n = 3 + static_cast<int>(rng() % 3);
    MultiDigraph g = brute::random_graph(rng, n, 4 + static_cast<int>(rng() % 8));
    const Pattern& p = patterns[rng() % 3];
    const SearchResult r = exhaustive_immersion(g, p);
    if (r.status != SearchStatus::found) continue;
    ++cases;
    const ImmersionCertificate& c = *r.certificate;
    if (!verify(g, c).empty() ||
        !brute::certificate_valid(g, c.pattern.graph, c.vertex_map, c.arc_paths)) {
      out.fail("oracle certificate rejected");
      continue;
    }
    auto expect = [&](ImmersionCertificate bad, ViolationKind kind) {
      ++mutations;
      if (!has_violation(verify(g, bad), kind)) {
        out.fail(std::string("mutation not caught as ") + to_string(kind));
      }
    };
    for (std::size_t i = 0; i < c.arc_paths.size(); ++i) {
      const ArcPath& path = c.arc_paths[i];
      ImmersionCertificate drop_first = c;
      drop_first.arc_paths[i].erase(drop_first.arc_paths[i].begin());
      expect(drop_first, ViolationKind::endpoint_mismatch);
      ImmersionCertificate drop_last = c;
      drop_last.arc_paths[i].pop_back();
      expect(drop_last, ViolationKind::endpoint_mismatch);
      if (path.size() >= 3) {
        ImmersionCertificate drop_mid = c;
        drop_mid.arc_paths[i].erase(drop_mid.arc_paths[i].begin() + 1);
        expect(drop_mid, ViolationKind::broken_path);
      }
      for (std::size_t j = 0; j < c.arc_paths.size(); ++j) {
        if (j == i) continue;
        ImmersionCertificate dup = c;
        dup.arc_paths[j].push_back(path.front());
        expect(dup, ViolationKind::duplicate_arc);
      }
    }
    for (std::size_t pv = 1; pv < c.vertex_map.size(); ++pv) {
      ImmersionCertificate merged = c;
      merged.vertex_map[pv] = merged.vertex_map[0];
      expect(merged, ViolationKind::not_injective);
    }
  }
  if (out.pass) out.note = std::to_string(cases) + " cases, " + std::to_string(mutations) + " mutations";
  return out;
}

// 4 ------------------------------------------------------------------------
Outcome tt_routing() {
  Outcome out;
  for (int k = 1; k <= 8; ++k) {
    const ImmersionCertificate r = route_tt_in_f(k);
    const MultiDigraph f = build_chain(k, tt_chain_multiplicity(k)).graph;
    if (!verify(f, r).empty() ||
        !brute::certificate_valid(f, r.pattern.graph, r.vertex_map, r.arc_paths)) {
      out.fail("routing for k=" + std::to_string(k) + " rejected");
    }
  }
  for (std::int64_t k = 2; k <= 64; ++k) {
    for (std::int64_t t = 1; t <= k - 1; ++t) {
      if (t * (k - t) > k * (k - 1) / 2) out.fail("level load exceeds budget");
      if (level_load(k, t) != t * (k - t)) out.fail("level_load disagrees");
    }
  }
  return out;
}

// 5 ------------------------------------------------------------------------
std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int run(const std::string& args, const fs::path& log) {
  const std::string cmd = std::string("\"") + IMMERSION_CLI + "\" " + args + " > \"" +
                          log.string() + "\" 2>&1";
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome end_to_end(const fs::path& work) {
  Outcome out;
  const fs::path graph = work / "e2e.dgr";
  const fs::path cert_a = work / "e2e-a.cert";
  const fs::path cert_b = work / "e2e-b.cert";
  const fs::path dump = work / "e2e-dump";
  const auto t0 = Clock::now();
  if (run("gen --model regular --n 1200 --d 487 --seed 42 --out \"" + graph.string() + "\"",
          work / "gen.log") != 0) {
    out.fail("gen failed");
    return out;
  }
  const std::string find = "find --pattern tt --k 3 --input \"" + graph.string() + "\" --dump \"" +
                           dump.string() + "\" --cert ";
  const int first = run(find + "\"" + cert_a.string() + "\"", work / "find-a.log");
  const int second = run(find + "\"" + cert_b.string() + "\"", work / "find-b.log");
  if (first == 3 || second == 3) {
    ++invariant_events;
    std::cerr << slurp(work / "find-a.log") << slurp(dump / "reduction.dump");
  }
  if (first != 0 || second != 0) {
    out.fail("find exited " + std::to_string(first) + "/" + std::to_string(second));
    return out;
  }
  if (slurp(cert_a) != slurp(cert_b)) out.fail("certificates differ between runs");
  if (run("verify --input \"" + graph.string() + "\" --cert \"" + cert_a.string() + "\"",
          work / "verify.log") != 0) {
    out.fail("verify rejected the certificate");
  }
  // Independent check of the written files.
  const MultiDigraph g = read_digraph_file(graph);
  const ImmersionCertificate c = read_certificate_file(cert_a);
  if (g.min_out_degree() != 487 || g.max_out_degree() != 487 || !g.is_simple()) {
    out.fail("generated instance is not 487-out-regular and simple");
  }
  if (!brute::certificate_valid(g, c.pattern.graph, c.vertex_map, c.arc_paths) ||
      c.pattern.kind != PatternKind::transitive_tournament || c.pattern.k != 3) {
    out.fail("certificate is not a valid TT3 immersion");
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  if (seconds > 300) out.fail("took " + std::to_string(seconds) + " s");
  if (out.pass) {
    std::ostringstream s;
    s.precision(2);
    s << std::fixed << seconds << " s";
    out.note = s.str();
  }
  return out;
}

// 6 ------------------------------------------------------------------------
Outcome reduction_mechanics() {
  Outcome out;
  SolverOptions fixture;
  fixture.mode = Mode::fixture;
  for (const std::string& name : fixture_names()) {
    try {
      const ReductionFixture fx = gen_reduction_fixture(name);
      const int K = fx.expect.K;
      const int l = fx.expect.l;
      const NormalizedDigraph nd = normalize(fx.graph, K, l, Mode::fixture);
      const ImmersionCertificate inner = minimize_cert(nd.graph, fx.planted);
      const ResidualGraph dprime = build_dprime(nd.graph, inner);
      ExtendOutcome ext = extend_or_cuts(dprime.graph, dprime.tip, l);
      if (ext.extension) {
        out.fail(name + ": extension succeeded");
        continue;
      }
      for (const CandidateCut& c : ext.cuts) {
        if (static_cast<int>(c.cut.size()) >= l) out.fail(name + ": |E_y| >= l");
      }
      ReductionState rs = build_reduction(ext.cuts, nd, dprime, K, l, Mode::fixture);
      rs.paths = inner.arc_paths;

      // Minimality: dropping any y uncovers something.
      std::map<VertexId, const CandidateCut*> by_y;
      for (const CandidateCut& c : rs.cuts) by_y[c.y] = &c;
      for (VertexId drop : rs.cover) {
        std::set<VertexId> covered;
        for (VertexId y : rs.cover) {
          if (y != drop) covered.insert(by_y[y]->reach.begin(), by_y[y]->reach.end());
        }
        if (covered.size() + 1 >= dprime.graph.vertex_count()) out.fail(name + ": Y not minimal");
      }
      std::set<VertexId> seen;
      for (std::size_t k = 0; k < rs.cover.size(); ++k) {
        if (rs.private_sets[k].empty()) out.fail(name + ": empty S_y");
        for (VertexId x : rs.private_sets[k]) {
          if (!seen.insert(x).second) out.fail(name + ": S_y overlap");
        }
        if (rs.aux.in_degree(v(k)) > l) out.fail(name + ": R indegree above l");
      }
      const ReducedInstance h = build_h(rs, nd.graph, fx.graph.vertex_count(), Mode::fixture);
      if (h.graph.vertex_count() >= fx.graph.vertex_count()) out.fail(name + ": H not smaller");
      if (h.graph.max_multiplicity() > K * l) out.fail(name + ": H multiplicity above K l");
      const ImmersionCertificate cert_h = find_f(h.graph, K, l, fixture);
      const ImmersionCertificate lifted = lift(cert_h, h.shortcuts, nd.graph);
      if (!verify(fx.graph, lifted).empty() ||
          !brute::certificate_valid(fx.graph, lifted.pattern.graph, lifted.vertex_map,
                                    lifted.arc_paths)) {
        out.fail(name + ": lifted certificate rejected");
      }
      const ImmersionCertificate whole = find_f_from(fx.graph, K, l, fx.planted, fixture);
      if (!verify(fx.graph, whole).empty()) out.fail(name + ": solver result rejected");
    } catch (const InternalInvariantBroken& e) {
      report_invariant(e);
      out.fail(name + ": " + e.what());
    } catch (const std::exception& e) {
      out.fail(name + ": " + e.what());
    }
  }
  if (out.pass) out.note = std::to_string(fixture_names().size()) + " fixtures";
  return out;
}

// 7 ------------------------------------------------------------------------
// Plants F(k, l) by routing every pattern arc through fresh random detours,
// then sprinkles extra arcs, some of them parallel to path shortcuts.
struct Planted {
  MultiDigraph host;
  ImmersionCertificate cert;
};

Planted plant(std::mt19937_64& rng) {
  const int k = 2 + static_cast<int>(rng() % 3);
  const int l = 1 + static_cast<int>(rng() % 3);
  const int n = k + 4 + static_cast<int>(rng() % 8);
  Planted p{MultiDigraph(static_cast<std::size_t>(n)), {build_chain(k, l), {}, {}}};
  std::vector<std::size_t> order(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 0; i < k; ++i) p.cert.vertex_map.push_back(v(order[static_cast<std::size_t>(i)]));
  for (int lv = 0; lv + 1 < k; ++lv) {
    for (int c = 0; c < l; ++c) {
      const VertexId from = p.cert.vertex_map[static_cast<std::size_t>(lv)];
      const VertexId to = p.cert.vertex_map[static_cast<std::size_t>(lv + 1)];
      std::vector<VertexId> route{from};
      for (std::size_t x : order) {
        if (vertex_id(x) != from && vertex_id(x) != to && rng() % 4 == 0) route.push_back(v(x));
      }
      std::shuffle(route.begin() + 1, route.end(), rng);
      route.push_back(to);
      ArcPath path;
      for (std::size_t i = 0; i + 1 < route.size(); ++i) path.push_back(p.host.add_arc(route[i], route[i + 1]));
      p.cert.arc_paths.push_back(path);
    }
  }
  const int extra = static_cast<int>(rng() % 12);
  for (int i = 0; i < extra; ++i) {
    const ArcPath& path = p.cert.arc_paths[rng() % p.cert.arc_paths.size()];
    const std::size_t a = rng() % path.size();
    const std::size_t b = a + rng() % (path.size() - a);
    if (rng() % 2 == 0) {
      p.host.add_arc(p.host.tail(path[a]), p.host.head(path[b]));
    } else {
      const std::size_t x = rng() % static_cast<std::size_t>(n);
      const std::size_t y = (x + 1 + rng() % static_cast<std::size_t>(n - 1)) % static_cast<std::size_t>(n);
      p.host.add_arc(v(x), v(y));
    }
  }
  return p;
}

Outcome minimization_fixpoint() {
  Outcome out;
  std::mt19937_64 rng(4242);
  int shortened = 0;
  for (int round = 0; round < 100; ++round) {
    const Planted p = plant(rng);
    if (!verify(p.host, p.cert).empty()) {
      out.fail("planting produced an invalid certificate");
      continue;
    }
    const ImmersionCertificate m = minimize_cert(p.host, p.cert);
    if (!verify(p.host, m).empty()) out.fail("minimized certificate rejected");
    if (m.total_arcs() > p.cert.total_arcs()) out.fail("arc count increased");
    if (m.vertex_map != p.cert.vertex_map) out.fail("branch vertices moved");
    if (!brute::detours(p.host, m.arc_paths).empty()) out.fail("detour left at fixpoint");
    shortened += m.total_arcs() < p.cert.total_arcs();
  }
  if (out.pass) out.note = std::to_string(shortened) + " of 100 shortened";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path work = argc > 1 ? fs::path(argv[1]) : fs::temp_directory_path() / "immersion-acceptance";
  fs::create_directories(work);

  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"1 induction-inequality sweep", induction_sweep},
      {"2 menger duality", menger_duality},
      {"3 verifier/oracle agreement", verifier_oracle},
      {"4 tt routing", tt_routing},
      {"5 end-to-end TT3 instance", [&] { return end_to_end(work); }},
      {"6 reduction-branch mechanics", reduction_mechanics},
      {"7 minimization fixpoint", minimization_fixpoint},
  };

  bool all = true;
  for (const Criterion& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const InternalInvariantBroken& e) {
      report_invariant(e);
      o.fail(e.what());
    } catch (const std::exception& e) {
      o.fail(e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.name << " (" << static_cast<long>(ms) << " ms"
              << (o.note.empty() ? "" : "; " + o.note) << ")\n";
    all = all && o.pass;
  }
  const bool clean = invariant_events == 0;
  std::cout << (clean ? "PASS " : "FAIL ") << "8 no InternalInvariantBroken events ("
            << invariant_events << ")\n";
  all = all && clean;
  return all ? 0 : 1;
}
