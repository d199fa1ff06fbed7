#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "immersion/oracle.hpp"

using namespace immersion;

namespace {

VertexId v(std::size_t i) { return vertex_id(i); }

MultiDigraph cycle3() {
  MultiDigraph g(3);
  g.add_arc(v(0), v(1));
  g.add_arc(v(1), v(2));
  g.add_arc(v(2), v(0));
  return g;
}

}  // namespace

TEST_CASE("TT3 does not immerse in a directed triangle") {
  const SearchResult r = exhaustive_immersion(cycle3(), build_tournament(3));
  CHECK(r.status == SearchStatus::not_present);
  CHECK_FALSE(r.certificate);
  CHECK_FALSE(brute::immerses(cycle3(), build_tournament(3).graph));
}

TEST_CASE("TT3 immerses in the complete digraph on three vertices") {
  MultiDigraph g(3);
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      if (a != b) g.add_arc(v(a), v(b));
    }
  }
  const SearchResult r = exhaustive_immersion(g, build_tournament(3));
  REQUIRE(r.status == SearchStatus::found);
  CHECK(verify(g, *r.certificate).empty());
}

TEST_CASE("TT2 in a single arc is that arc") {
  MultiDigraph g(2);
  g.add_arc(v(1), v(0));
  const SearchResult r = exhaustive_immersion(g, build_tournament(2));
  REQUIRE(r.status == SearchStatus::found);
  CHECK(r.certificate->arc_paths == std::vector<ArcPath>{{arc_id(0)}});
  CHECK(r.certificate->vertex_map == std::vector<VertexId>{v(1), v(0)});
}

TEST_CASE("F(k,l) needs paths through other vertices") {
  // 0 -> 1 once directly and once via 2: F(2,2) found, F(2,3) not.
  MultiDigraph g(3);
  g.add_arc(v(0), v(1));
  g.add_arc(v(0), v(2));
  g.add_arc(v(2), v(1));
  CHECK(exhaustive_immersion(g, build_chain(2, 2)).status == SearchStatus::found);
  CHECK(exhaustive_immersion(g, build_chain(2, 3)).status == SearchStatus::not_present);
}

TEST_CASE("limits are reported, never truncated") {
  MultiDigraph big(13);
  CHECK(exhaustive_immersion(big, build_tournament(3)).status == SearchStatus::resource_exceeded);
  MultiDigraph g(8);
  for (std::size_t a = 0; a < 8; ++a) g.add_arc(v(a), v((a + 1) % 8));
  SearchLimits tight;
  tight.node_budget = 5;
  CHECK(exhaustive_immersion(g, build_tournament(3), tight).status ==
        SearchStatus::resource_exceeded);
}

TEST_CASE("agrees with brute force on small multidigraphs") {
  std::mt19937_64 rng(11);
  const Pattern tt3 = build_tournament(3);
  int found = 0;
  for (int round = 0; round < 500; ++round) {
    const int n = 3 + static_cast<int>(rng() % 2);
    MultiDigraph g(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        const int copies = static_cast<int>(rng() % 3);
        for (int c = 0; c < copies; ++c) g.add_arc(v(static_cast<std::size_t>(a)), v(static_cast<std::size_t>(b)));
      }
    }
    const SearchResult r = exhaustive_immersion(g, tt3);
    REQUIRE(r.status != SearchStatus::resource_exceeded);
    const bool expected = brute::immerses(g, tt3.graph);
    CHECK((r.status == SearchStatus::found) == expected);
    if (r.certificate) {
      ++found;
      CHECK(verify(g, *r.certificate).empty());
    }
  }
  CHECK(found > 0);
}

TEST_CASE("agrees with brute force on every tournament with four vertices") {
  const Pattern tt3 = build_tournament(3);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = a + 1; b < 4; ++b) pairs.emplace_back(a, b);
  }
  int present = 0;
  for (unsigned mask = 0; mask < 64; ++mask) {
    MultiDigraph g(4);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      auto [a, b] = pairs[i];
      if (mask >> i & 1) std::swap(a, b);
      g.add_arc(v(a), v(b));
    }
    const bool oracle = exhaustive_immersion(g, tt3).status == SearchStatus::found;
    CHECK(oracle == brute::immerses(g, tt3.graph));
    present += oracle;
  }
  // Every tournament on 4 vertices contains a transitive triple.
  CHECK(present == 64);
}

TEST_CASE("adding an arc never loses an immersion") {
  std::mt19937_64 rng(5);
  const Pattern tt3 = build_tournament(3);
  for (int round = 0; round < 100; ++round) {
    MultiDigraph g = brute::random_graph(rng, 4, static_cast<int>(rng() % 7));
    const bool before = exhaustive_immersion(g, tt3).status == SearchStatus::found;
    const std::size_t x = rng() % 4;
    g.add_arc(v(x), v((x + 1 + rng() % 3) % 4));
    const bool after = exhaustive_immersion(g, tt3).status == SearchStatus::found;
    CHECK((!before || after));
  }
}
