#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "immersion/certify.hpp"
#include "immersion/multidigraph.hpp"

namespace immersion {

/// strict:  the theorem's hypothesis (every outdegree > f(K, l)).
/// relaxed: all but c1(K, l) vertices have outdegree >= f(K, l); this is
///          what every recursive call receives.
/// fixture: degree hypotheses waived. Structural invariants are still
///          asserted; failures that only the degree bounds could rule out
///          surface as Error(search_failed) instead of a broken invariant.
enum class Mode { strict, relaxed, fixture };

const char* to_string(Mode mode);

struct SolverOptions {
  Mode mode = Mode::strict;
  int jobs = 1;  // threads for the per-candidate Menger queries
};

enum class Branch { base, extended, reduced };

const char* to_string(Branch branch);

struct LevelRecord {
  int depth = 0;
  int K = 0;
  int l = 0;
  Mode mode = Mode::strict;
  std::size_t vertices = 0;
  std::size_t arcs = 0;
  Branch branch = Branch::base;
  std::size_t low_vertices = 0;  // |T|
  std::size_t queries = 0;       // Menger queries issued at this level
  std::optional<VertexId> endpoint;  // new branch vertex, or y* when reduced
};

struct ReductionSummary {
  int depth = 0;
  int K = 0;
  int l = 0;
  std::vector<VertexId> cover;
  std::vector<std::size_t> private_sizes;
  std::vector<int> cut_sizes;  // per candidate, ascending vertex order
  std::size_t r_arcs = 0;
  std::vector<int> r_in;
  std::vector<int> r_out;
  VertexId chosen{};
  bool pruned = false;
  std::size_t h_vertices = 0;
  int h_multiplicity = 0;
  std::size_t h_low_vertices = 0;
  std::vector<std::size_t> shortcut_lengths;  // ascending
};

struct SolveTrace {
  std::vector<LevelRecord> levels;  // pre-order
  std::vector<ReductionSummary> reductions;
  std::size_t lifted = 0;

  std::string summary() const;
};

// ---------------------------------------------------------------------------
// Top-level entry points. Every returned certificate has been verified
// against the input graph.

/// F(K, l) in `graph`. Requires l >= 2 and multiplicity <= K l, plus the
/// degree hypothesis of `options.mode`.
ImmersionCertificate find_f(const MultiDigraph& graph, int K, int l,
                            const SolverOptions& options = {}, SolveTrace* trace = nullptr);

/// Like find_f, but the induction step at the top level starts from the given
/// F(K-1, l) instead of a recursive search. Used to drive reduction fixtures.
ImmersionCertificate find_f_from(const MultiDigraph& graph, int K, int l,
                                 const ImmersionCertificate& inner,
                                 const SolverOptions& options = {}, SolveTrace* trace = nullptr);

/// TT(k) in a simple digraph. For k >= 3 this is F(k, l) with
/// l = max(2, k(k-1)/2) composed with the fixed TT routing. `force` skips the
/// outdegree check and runs in fixture mode (best effort).
ImmersionCertificate find_tt(const MultiDigraph& graph, int k, bool force = false,
                             const SolverOptions& options = {}, SolveTrace* trace = nullptr);

// ---------------------------------------------------------------------------
// Pipeline steps, exposed for testing.

struct NormalizedDigraph {
  MultiDigraph graph;               // outdegree exactly f(K, l), or 0 on `low`
  std::vector<VertexId> low;        // T
  std::vector<ArcId> removed_arcs;  // ascending
};

/// Strict/relaxed: T = vertices below f(K, l), stripped of out-arcs; everyone
/// else trimmed to exactly f(K, l), highest ArcIds first. Fixture: T = the
/// outdegree-0 vertices, nothing trimmed.
NormalizedDigraph normalize(const MultiDigraph& graph, int K, int l, Mode mode);

/// Drops T and trims every ordered pair to (K-1) l parallel arcs, highest
/// ArcIds first. Outside fixture mode asserts min outdegree >= d'(K, l).
MultiDigraph reduce_for_induction(const NormalizedDigraph& nd, int K, int l, Mode mode);

/// Shortcuts paths through unused direct arcs until no path travels from x
/// to y indirectly while an unused (x, y) arc exists.
ImmersionCertificate minimize_cert(const MultiDigraph& graph, ImmersionCertificate cert);

/// D': the normalized graph without the inner certificate's path arcs and
/// without every branch vertex except the last one (the tip).
struct ResidualGraph {
  MultiDigraph graph;
  VertexId tip{};
  std::vector<VertexId> branch;  // all inner branch vertices, chain order
};

ResidualGraph build_dprime(const MultiDigraph& normalized, const ImmersionCertificate& inner);

struct CandidateCut {
  VertexId y{};
  std::vector<ArcId> cut;     // E_y
  std::vector<VertexId> reach;  // C_y
};

struct Extension {
  VertexId endpoint{};
  std::vector<ArcPath> paths;
};

struct ExtendOutcome {
  std::optional<Extension> extension;
  std::vector<CandidateCut> cuts;  // complete only when extension is empty
  std::size_t queries = 0;
};

/// Tries the candidates of D' - tip in ascending order; the first with `l`
/// arc-disjoint paths from the tip wins. Throws Error(search_failed) when D'
/// has no candidate at all.
ExtendOutcome extend_or_cuts(const MultiDigraph& dprime, VertexId tip, int l, int jobs = 1);

/// Greedy set cover (most newly covered elements first, ties to the lowest
/// index), then one pruning pass in ascending index order that drops every
/// pick whose elements are all covered by other kept picks. `sets[i]` lists
/// element indices below `universe`. Throws Error(precondition_violated) when
/// the sets do not cover the universe.
struct CoverChoice {
  std::vector<std::size_t> greedy;  // ascending
  std::vector<std::size_t> kept;    // ascending, inclusion-minimal
};

CoverChoice choose_cover(const std::vector<std::vector<std::size_t>>& sets, std::size_t universe);

struct ReductionState {
  int K = 0;
  int l = 0;
  std::vector<VertexId> low;         // T
  std::vector<VertexId> branch;      // X
  VertexId tip{};
  std::vector<ArcPath> paths;        // P_{i,j}
  std::vector<CandidateCut> cuts;    // one per candidate, ascending y
  std::vector<VertexId> cover;       // Y, ascending, inclusion-minimal
  std::vector<std::vector<VertexId>> private_sets;  // S_y, parallel to cover
  MultiDigraph aux;                  // R on cover positions, one arc per cut arc use
  std::vector<ArcId> aux_origin;     // R arc -> D' arc
  std::size_t chosen = 0;            // position of y* in cover
  bool pruned = false;               // greedy cover contained a redundant y

  VertexId chosen_vertex() const { return cover.at(chosen); }
};

ReductionState build_reduction(std::vector<CandidateCut> cuts, const NormalizedDigraph& nd,
                               const ResidualGraph& dprime, int K, int l, Mode mode);

struct Shortcut {
  std::size_t path = 0;  // index into ReductionState::paths
  ArcPath segment;       // consecutive arcs of that path
};

using ShortcutMap = std::map<ArcId, Shortcut>;

struct ReducedInstance {
  MultiDigraph graph;  // H
  ShortcutMap shortcuts;
  std::size_t low_vertices = 0;  // vertices of H below f(K, l)
};

ReducedInstance build_h(const ReductionState& rs, const MultiDigraph& normalized,
                        std::size_t parent_vertices, Mode mode);

/// Expands shortcut arcs back into path segments of `host`.
ImmersionCertificate lift(const ImmersionCertificate& cert_h, const ShortcutMap& shortcuts,
                          const MultiDigraph& host);

/// Line-oriented description of a reduction, as written to reduction.dump.
std::string dump_reduction(const ReductionState& rs, const std::string& message);

}  // namespace immersion
