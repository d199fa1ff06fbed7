#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "immersion/multidigraph.hpp"
#include "immersion/patterns.hpp"

namespace immersion {

using ArcPath = std::vector<ArcId>;

/// Witness that `pattern` is immersed in some host digraph. The host is not
/// stored; every operation that needs it takes it explicitly.
struct ImmersionCertificate {
  Pattern pattern;
  std::vector<VertexId> vertex_map;  // pattern vertex -> host vertex
  std::vector<ArcPath> arc_paths;    // pattern arc -> host arcs, in order

  std::size_t total_arcs() const;
  friend bool operator==(const ImmersionCertificate&, const ImmersionCertificate&) = default;
};

enum class ViolationKind {
  not_injective,
  broken_path,
  vertex_repeat,
  duplicate_arc,
  missing_arc,
  endpoint_mismatch,
  unknown_vertex,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<std::uint32_t> ids;  // offending pattern/host ids, see detail
  std::string detail;
};

/// Checks every certificate condition against `host`. An empty result means
/// the certificate is valid. Never throws on malformed certificates.
std::vector<Violation> verify(const MultiDigraph& host, const ImmersionCertificate& cert);

bool has_violation(std::span<const Violation> violations, ViolationKind kind);
std::string describe(std::span<const Violation> violations);

/// Shortens a walk to a simple path by cutting out every closed sub-walk.
/// The walk must be head-to-tail chained in `g`.
ArcPath excise_cycles(const MultiDigraph& g, std::span<const ArcId> walk);

/// Transitivity of immersion: `outer` places Q in `host`, `inner` places P in
/// Q (= outer.pattern.graph). Returns P placed in `host`.
ImmersionCertificate compose(const MultiDigraph& host, const ImmersionCertificate& outer,
                             const ImmersionCertificate& inner);

/// TT(k) inside F(k, max(2, k(k-1)/2)). Arc (i, j) runs through levels
/// i..j-1; arcs are placed in lexicographic order, each taking the lowest
/// free parallel copy on every level it crosses.
ImmersionCertificate route_tt_in_f(int k);

/// Number of TT(k) arcs (i, j) with i <= t < j, i.e. the demand on level t.
std::int64_t level_load(std::int64_t k, std::int64_t t);

// Certificate text format:
//   c immersion <f|tt> <k> <l>      (l is 0 for tt)
//   v <pattern-vertex> <host-vertex>
//   p <pattern-arc> <host-arc> <host-arc> ...
void write_certificate(std::ostream& out, const ImmersionCertificate& cert);
void write_certificate_file(const std::filesystem::path& path, const ImmersionCertificate& cert);
std::string to_text(const ImmersionCertificate& cert);
ImmersionCertificate read_certificate(std::istream& in);
ImmersionCertificate read_certificate_file(const std::filesystem::path& path);

}  // namespace immersion
