#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "immersion/multidigraph.hpp"

namespace immersion {

// Closed-form degree bounds, exact in 64-bit with overflow reported as
// Error(out_of_range). `K` is always the target chain length of the step
// being proved, so c1/dprime take the same K as the F(K, l) being sought.

/// 2 k^3 l^2.
std::int64_t bound_f(std::int64_t k, std::int64_t l);
/// Number of vertices allowed below the degree threshold: (K-1) + K l.
std::int64_t bound_c1(std::int64_t K, std::int64_t l);
/// Guaranteed outdegree after dropping low vertices and excess parallels:
/// f(K,l) - c1(K,l) K l - f(K,l) / K.
std::int64_t bound_dprime(std::int64_t K, std::int64_t l);

struct Bounds {
  std::int64_t K;
  std::int64_t l;
  std::int64_t f;
  std::int64_t c1;
  std::int64_t dprime;
};

Bounds bounds_for(std::int64_t K, std::int64_t l);

/// Smallest l for which F(k, l) carries a TT_k routing and the degree bound
/// is proved: max(2, k(k-1)/2).
int tt_chain_multiplicity(int k);

enum class PatternKind { chain, transitive_tournament };

const char* to_string(PatternKind kind);  // "f" / "tt"
PatternKind parse_pattern_kind(const std::string& text);

/// F(k, l): vertices x_1..x_k = 0..k-1 with l parallel arcs x_i -> x_{i+1};
/// arcs are numbered level by level, copy by copy (arc = level * l + copy).
/// TT(k): arcs (i, j) for every i < j, in lexicographic order.
struct Pattern {
  PatternKind kind = PatternKind::chain;
  int k = 1;
  int l = 0;  // 0 for tournaments
  MultiDigraph graph;
  std::vector<int> level;  // chain step of every arc, F only

  friend bool operator==(const Pattern& a, const Pattern& b) {
    return a.kind == b.kind && a.k == b.k && a.l == b.l;
  }
};

Pattern build_chain(int k, int l);
Pattern build_tournament(int k);
Pattern build_pattern(PatternKind kind, int k, int l = 0);

}  // namespace immersion
