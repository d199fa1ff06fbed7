#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "immersion/certify.hpp"

namespace immersion {

/// Simple digraph in which every vertex has exactly `d` out-neighbours.
///
/// Generator (pinned so instances are reproducible): one std::mt19937_64
/// seeded with `seed`. For v = 0..n-1 in order, the other n-1 vertices are
/// listed ascending and a partial Fisher-Yates shuffle picks d of them:
/// for i in [0, d) swap slot i with slot i + (draw % (n-1-i)), one 64-bit
/// draw per step. The chosen heads are sorted and their arcs appended, so
/// ArcIds run vertex by vertex, heads ascending.
MultiDigraph gen_out_regular(int n, int d, std::uint64_t seed);

/// What a reduction fixture is built to exercise. Vertex lists are sorted.
struct FixtureExpectations {
  int K = 0;
  int l = 0;
  std::vector<VertexId> cover;            // Y after pruning
  std::vector<std::size_t> private_sizes;  // |S_y| for y in cover order
  VertexId chosen{};                      // y*
  std::size_t r_arc_count = 0;
  std::size_t h_vertices = 0;
  std::vector<std::size_t> shortcut_segment_lengths;  // ascending
  int max_cut_size = 0;                   // largest |E_y| over all candidates
};

struct ReductionFixture {
  std::string name;
  std::string description;
  MultiDigraph graph;
  ImmersionCertificate planted;  // F(K-1, l) whose extension must fail
  FixtureExpectations expect;
};

std::vector<std::string> fixture_names();
/// Throws Error(unknown_fixture) for names outside fixture_names().
ReductionFixture gen_reduction_fixture(const std::string& name);

}  // namespace immersion
