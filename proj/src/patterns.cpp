#include "immersion/patterns.hpp"

#include <algorithm>

#include "immersion/error.hpp"

namespace immersion {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorKind::out_of_range, "bound arithmetic overflows 64 bits");
  }
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorKind::out_of_range, "bound arithmetic overflows 64 bits");
  }
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw Error(ErrorKind::out_of_range, "bound arithmetic overflows 64 bits");
  }
  return r;
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::out_of_range, what);
}

}  // namespace

std::int64_t bound_f(std::int64_t k, std::int64_t l) {
  require(k >= 1 && l >= 1, "bound_f needs k >= 1 and l >= 1");
  return checked_mul(2, checked_mul(checked_mul(checked_mul(k, k), k), checked_mul(l, l)));
}

std::int64_t bound_c1(std::int64_t K, std::int64_t l) {
  require(K >= 2 && l >= 1, "bound_c1 needs K >= 2 and l >= 1");
  return checked_add(K - 1, checked_mul(K, l));
}

std::int64_t bound_dprime(std::int64_t K, std::int64_t l) {
  require(K >= 2 && l >= 1, "bound_dprime needs K >= 2 and l >= 1");
  const std::int64_t f = bound_f(K, l);
  // K divides 2 K^3 l^2, so the division is exact.
  return checked_sub(checked_sub(f, checked_mul(checked_mul(bound_c1(K, l), K), l)), f / K);
}

Bounds bounds_for(std::int64_t K, std::int64_t l) {
  return {K, l, bound_f(K, l), bound_c1(K, l), bound_dprime(K, l)};
}

int tt_chain_multiplicity(int k) {
  require(k >= 1, "k must be >= 1");
  return std::max(2, k * (k - 1) / 2);
}

const char* to_string(PatternKind kind) {
  return kind == PatternKind::chain ? "f" : "tt";
}

PatternKind parse_pattern_kind(const std::string& text) {
  if (text == "f") return PatternKind::chain;
  if (text == "tt") return PatternKind::transitive_tournament;
  throw Error(ErrorKind::parse_error, "unknown pattern kind '" + text + "'");
}

Pattern build_chain(int k, int l) {
  require(k >= 1 && l >= 1, "F(k, l) needs k >= 1 and l >= 1");
  Pattern p;
  p.kind = PatternKind::chain;
  p.k = k;
  p.l = l;
  p.graph = MultiDigraph(static_cast<std::size_t>(k));
  for (int level = 0; level + 1 < k; ++level) {
    for (int copy = 0; copy < l; ++copy) {
      p.graph.add_arc(vertex_id(level), vertex_id(level + 1));
      p.level.push_back(level);
    }
  }
  return p;
}

Pattern build_tournament(int k) {
  require(k >= 1, "TT(k) needs k >= 1");
  Pattern p;
  p.kind = PatternKind::transitive_tournament;
  p.k = k;
  p.l = 0;
  p.graph = MultiDigraph(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) p.graph.add_arc(vertex_id(i), vertex_id(j));
  }
  return p;
}

Pattern build_pattern(PatternKind kind, int k, int l) {
  return kind == PatternKind::chain ? build_chain(k, l) : build_tournament(k);
}

}  // namespace immersion
