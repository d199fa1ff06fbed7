#include "immersion/gen.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "immersion/error.hpp"

namespace immersion {

MultiDigraph gen_out_regular(int n, int d, std::uint64_t seed) {
  if (n < 2 || d < 1 || d > n - 1) {
    throw Error(ErrorKind::out_of_range, "need 1 <= d <= n-1, got n=" + std::to_string(n) +
                                             " d=" + std::to_string(d));
  }
  MultiDigraph g(static_cast<std::size_t>(n));
  std::mt19937_64 rng(seed);
  std::vector<int> others(static_cast<std::size_t>(n - 1));
  for (int v = 0; v < n; ++v) {
    for (int i = 0, w = 0; w < n; ++w) {
      if (w != v) others[static_cast<std::size_t>(i++)] = w;
    }
    const std::uint64_t pool = static_cast<std::uint64_t>(n - 1);
    for (int i = 0; i < d; ++i) {
      const std::uint64_t j = static_cast<std::uint64_t>(i) + rng() % (pool - static_cast<std::uint64_t>(i));
      std::swap(others[static_cast<std::size_t>(i)], others[j]);
    }
    std::vector<int> heads(others.begin(), others.begin() + d);
    std::sort(heads.begin(), heads.end());
    for (int h : heads) g.add_arc(vertex_id(static_cast<std::size_t>(v)), vertex_id(static_cast<std::size_t>(h)));
  }
  return g;
}

namespace {

using ArcList = std::vector<std::pair<int, int>>;

MultiDigraph make_graph(int n, const ArcList& arcs) {
  MultiDigraph g(static_cast<std::size_t>(n));
  for (auto [t, h] : arcs) g.add_arc(vertex_id(static_cast<std::size_t>(t)), vertex_id(static_cast<std::size_t>(h)));
  return g;
}

// Complete digraph on `vs`, every ordered pair `copies` times.
void add_complete(ArcList& arcs, std::initializer_list<int> vs, int copies) {
  for (int a : vs) {
    for (int b : vs) {
      if (a == b) continue;
      for (int c = 0; c < copies; ++c) arcs.emplace_back(a, b);
    }
  }
}

std::vector<VertexId> ids(std::initializer_list<int> vs) {
  std::vector<VertexId> out;
  for (int v : vs) out.push_back(vertex_id(static_cast<std::size_t>(v)));
  return out;
}

ImmersionCertificate single_vertex(int l, int v) {
  return ImmersionCertificate{build_chain(1, l), ids({v}), {}};
}

ReductionFixture bottleneck() {
  ArcList arcs{{0, 1}};
  add_complete(arcs, {1, 2, 3}, 1);
  add_complete(arcs, {4, 5, 6}, 1);
  ReductionFixture fx{"bottleneck-1",
                      "tip 0 has a single out-arc into the triangle {1,2,3}; {4,5,6} is "
                      "unreachable. K=2, l=2.",
                      make_graph(7, arcs), single_vertex(2, 0), {}};
  fx.expect = {2, 2, ids({1, 4}), {3, 3}, vertex_id(1), 0, 4, {}, 1};
  return fx;
}

ReductionFixture two_covers() {
  ArcList arcs{{0, 1}, {0, 4}};
  add_complete(arcs, {1, 2, 3}, 2);
  add_complete(arcs, {4, 5, 6}, 2);
  ReductionFixture fx{"two-covers",
                      "tip 0 enters two doubled triangles {1,2,3} and {4,5,6} through one arc "
                      "each. K=2, l=3.",
                      make_graph(7, arcs), single_vertex(3, 0), {}};
  fx.expect = {2, 3, ids({1, 4}), {3, 3}, vertex_id(1), 0, 4, {}, 1};
  return fx;
}

ReductionFixture relay() {
  ArcList arcs{{0, 1}, {0, 1}, {1, 2}, {1, 5}, {3, 0}};
  add_complete(arcs, {2, 3, 4}, 2);
  add_complete(arcs, {5, 6, 7}, 2);
  ReductionFixture fx{"relay",
                      "tip 0 reaches vertex 1 twice; 1 feeds the doubled triangles {2,3,4} and "
                      "{5,6,7} once each, and 3 points back at the tip. K=2, l=3.",
                      make_graph(8, arcs), single_vertex(3, 0), {}};
  fx.expect = {2, 3, ids({1, 2, 5}), {1, 3, 3}, vertex_id(2), 2, 4, {}, 2};
  return fx;
}

ReductionFixture shortcut_cascade() {
  const ArcList arcs{{0, 2}, {2, 6}, {6, 7}, {7, 3}, {3, 1}, {0, 1}, {2, 4},
                     {4, 3}, {3, 5}, {3, 5}, {5, 4}, {4, 1}, {1, 6}, {7, 6}};
  ImmersionCertificate planted{build_chain(2, 2),
                               ids({0, 1}),
                               {{arc_id(0), arc_id(1), arc_id(2), arc_id(3), arc_id(4)}, {arc_id(5)}}};
  ReductionFixture fx{"shortcut-cascade",
                      "planted F(2,2) on 0,1 whose first path detours 2->6->7->3; the reduced "
                      "instance replaces that detour by a shortcut arc 2->3. K=3, l=2.",
                      make_graph(8, arcs), std::move(planted), {}};
  fx.expect = {3, 2, ids({3, 6}), {4, 2}, vertex_id(3), 0, 6, {3}, 1};
  return fx;
}

ReductionFixture shared_feeder() {
  ArcList arcs{{0, 1}, {10, 4}, {10, 7}};
  add_complete(arcs, {1, 2, 3}, 1);
  add_complete(arcs, {4, 5, 6}, 1);
  add_complete(arcs, {7, 8, 9}, 1);
  ReductionFixture fx{"shared-feeder",
                      "tip 0 enters the triangle {1,2,3} once; vertex 10 feeds both unreachable "
                      "triangles {4,5,6} and {7,8,9}, so it lies in two cover sets and in no "
                      "private set. K=2, l=2.",
                      make_graph(11, arcs), single_vertex(2, 0), {}};
  fx.expect = {2, 2, ids({1, 4, 7}), {3, 3, 3}, vertex_id(1), 0, 4, {}, 1};
  return fx;
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"bottleneck-1", "two-covers", "relay", "shortcut-cascade", "shared-feeder"};
}

ReductionFixture gen_reduction_fixture(const std::string& name) {
  if (name == "bottleneck-1") return bottleneck();
  if (name == "two-covers") return two_covers();
  if (name == "relay") return relay();
  if (name == "shortcut-cascade") return shortcut_cascade();
  if (name == "shared-feeder") return shared_feeder();
  throw Error(ErrorKind::unknown_fixture, "no fixture named '" + name + "'");
}

}  // namespace immersion
