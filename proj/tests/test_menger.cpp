#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "immersion/error.hpp"
#include "immersion/menger.hpp"

using namespace immersion;

namespace {

VertexId v(std::size_t i) { return vertex_id(i); }

void check_answer(const MultiDigraph& g, const CutCertificate& c, int demand) {
  const int best = brute::max_disjoint_paths(g, c.source, c.target);
  CHECK(c.value() == std::min(best, demand));
  if (c.has_paths()) {
    const auto& paths = c.packing().paths;
    CHECK(static_cast<int>(paths.size()) == demand);
    // Reuse the certificate checker: paths as an F(2, demand) immersion.
    ImmersionCertificate cert{build_chain(2, demand), {c.source, c.target}, paths};
    CHECK(verify(g, cert).empty());
  } else {
    const ArcCut& cut = c.cut();
    CHECK(static_cast<int>(cut.arcs.size()) == best);
    CHECK(best == brute::min_cut(g, c.source, c.target));
    CHECK(brute::separates(g, c.source, c.target, cut.arcs));
    CHECK(cut.sink_side == g.reach_to(c.target, cut.arcs));
  }
}

}  // namespace

TEST_CASE("packing or cut matches brute force on random digraphs") {
  std::mt19937_64 rng(2024);
  for (int round = 0; round < 120; ++round) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const int m = static_cast<int>(rng() % 22);
    const MultiDigraph g = brute::random_graph(rng, n, m);
    const int demand = 1 + static_cast<int>(rng() % 3);
    const VertexId s = v(rng() % static_cast<std::uint64_t>(n));
    VertexId t = v(rng() % static_cast<std::uint64_t>(n));
    if (t == s) t = v((index(s) + 1) % static_cast<std::size_t>(n));
    check_answer(g, paths_or_cut(g, s, t, demand), demand);
  }
}

TEST_CASE("unreachable target gives an empty cut") {
  MultiDigraph g(3);
  g.add_arc(v(0), v(1));
  g.add_arc(v(2), v(1));
  const CutCertificate c = paths_or_cut(g, v(0), v(2), 2);
  REQUIRE_FALSE(c.has_paths());
  CHECK(c.cut().arcs.empty());
  CHECK(c.cut().sink_side == std::vector<VertexId>{v(2)});
  CHECK(c.value() == 0);
}

TEST_CASE("single bottleneck arc") {
  MultiDigraph g(4);
  g.add_arc(v(0), v(1));
  g.add_arc(v(0), v(1));
  g.add_arc(v(1), v(2));
  g.add_arc(v(2), v(3));
  g.add_arc(v(2), v(3));
  const CutCertificate c = paths_or_cut(g, v(0), v(3), 2);
  REQUIRE_FALSE(c.has_paths());
  CHECK(c.cut().arcs == std::vector<ArcId>{arc_id(2)});
  CHECK(c.cut().sink_side == std::vector<VertexId>{v(2), v(3)});
}

TEST_CASE("query errors") {
  MultiDigraph g(2);
  g.add_arc(v(0), v(1));
  CHECK_THROWS_AS(paths_or_cut(g, v(0), v(0), 1), Error);
  CHECK_THROWS_AS(paths_or_cut(g, v(0), v(7), 1), Error);
  CHECK_THROWS_AS(paths_or_cut(g, v(0), v(1), 0), Error);
}

TEST_CASE("parallel batch equals serial batch") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 20; ++round) {
    const MultiDigraph g = brute::random_graph(rng, 30, 200);
    std::vector<VertexId> targets;
    for (std::size_t i = 1; i < 30; ++i) targets.push_back(v(i));
    const auto serial = paths_or_cut_serial(g, v(0), targets, 3);
    const auto parallel = paths_or_cut_parallel(g, v(0), targets, 3, 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
      CHECK(serial[i].target == parallel[i].target);
      CHECK(serial[i].has_paths() == parallel[i].has_paths());
      if (serial[i].has_paths()) {
        CHECK(serial[i].packing().paths == parallel[i].packing().paths);
      } else {
        CHECK(serial[i].cut().arcs == parallel[i].cut().arcs);
        CHECK(serial[i].cut().sink_side == parallel[i].cut().sink_side);
      }
    }
  }
}

TEST_CASE("parallel batch propagates errors") {
  MultiDigraph g(3);
  g.add_arc(v(0), v(1));
  const VertexId targets[] = {v(1), v(0)};
  CHECK_THROWS_AS(paths_or_cut_parallel(g, v(0), targets, 1, 2), Error);
}
