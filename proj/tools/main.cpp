// Command-line front end: find, verify, oracle, gen, stats.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "immersion/certify.hpp"
#include "immersion/digraph_io.hpp"
#include "immersion/dot.hpp"
#include "immersion/error.hpp"
#include "immersion/gen.hpp"
#include "immersion/oracle.hpp"
#include "immersion/patterns.hpp"
#include "immersion/solver.hpp"

namespace fs = std::filesystem;
using namespace immersion;

namespace {

enum Exit { ok = 0, negative = 1, precondition = 2, invariant = 3 };

struct FindArgs {
  std::string pattern = "tt";
  int k = 0;
  int l = 0;
  std::string input, cert, inner, dot;
  std::string dump = "immersion-dump";
  bool force = false;
  bool relaxed = false;
  int jobs = 1;
};

void write_dump(const fs::path& dir, const InternalInvariantBroken& e) {
  fs::create_directories(dir);
  const DiagnosticDump& d = e.dump();
  if (d.graph) write_digraph_file(dir / "graph.dgr", *d.graph);
  if (d.certificate) write_certificate_file(dir / "certificate.cert", *d.certificate);
  std::ofstream(dir / "reduction.dump") << d.reduction;
  std::cerr << "diagnostic dump written to " << dir.string() << '\n';
}

int run_find(const FindArgs& a) {
  const MultiDigraph g = read_digraph_file(a.input);
  const PatternKind kind = parse_pattern_kind(a.pattern);
  SolverOptions options;
  options.jobs = a.jobs;
  SolveTrace trace;
  ImmersionCertificate cert;
  int l = a.l;
  if (kind == PatternKind::transitive_tournament) {
    if (!a.inner.empty()) throw Error(ErrorKind::precondition_violated, "--inner needs --pattern f");
    l = a.k >= 3 ? tt_chain_multiplicity(a.k) : 0;
    cert = find_tt(g, a.k, a.force, options, &trace);
  } else {
    if (l < 2) throw Error(ErrorKind::precondition_violated, "--pattern f needs --l >= 2");
    options.mode = a.force ? Mode::fixture : a.relaxed ? Mode::relaxed : Mode::strict;
    if (a.inner.empty()) {
      cert = find_f(g, a.k, l, options, &trace);
    } else {
      cert = find_f_from(g, a.k, l, read_certificate_file(a.inner), options, &trace);
    }
  }
  write_certificate_file(a.cert, cert);
  if (!a.dot.empty()) {
    std::ofstream out(a.dot);
    write_dot(out, g, &cert);
  }
  std::cout << "n " << g.vertex_count() << "\nm " << g.arc_count() << "\npattern " << a.pattern
            << "\nK " << a.k << "\nl " << l << "\nbranch vertices";
  for (VertexId v : cert.vertex_map) std::cout << ' ' << index(v);
  std::cout << "\npath arcs " << cert.total_arcs() << '\n' << trace.summary();
  return ok;
}

int run_verify(const std::string& input, const std::string& cert_path) {
  const MultiDigraph g = read_digraph_file(input);
  const ImmersionCertificate cert = read_certificate_file(cert_path);
  const auto violations = verify(g, cert);
  if (violations.empty()) {
    std::cout << "ok\n";
    return ok;
  }
  std::cout << describe(violations);
  return negative;
}

int run_oracle(const std::string& input, const std::string& pattern, int k, int l,
               const std::string& cert_path) {
  const MultiDigraph g = read_digraph_file(input);
  const PatternKind kind = parse_pattern_kind(pattern);
  const Pattern p = build_pattern(kind, k, kind == PatternKind::chain ? l : 0);
  const SearchResult r = exhaustive_immersion(g, p);
  std::cout << to_string(r.status) << "\nnodes " << r.nodes << '\n';
  switch (r.status) {
    case SearchStatus::found:
      if (!cert_path.empty()) write_certificate_file(cert_path, *r.certificate);
      else std::cout << to_text(*r.certificate);
      return ok;
    case SearchStatus::not_present: return negative;
    case SearchStatus::resource_exceeded: return precondition;
  }
  return negative;
}

int run_gen(const std::string& model, int n, int d, std::uint64_t seed, const std::string& name,
            const std::string& out) {
  if (model == "regular") {
    write_digraph_file(out, gen_out_regular(n, d, seed));
    return ok;
  }
  if (model != "fixture") throw Error(ErrorKind::out_of_range, "unknown model '" + model + "'");
  const ReductionFixture fx = gen_reduction_fixture(name);
  const fs::path dir(out);
  fs::create_directories(dir);
  write_digraph_file(dir / "graph.dgr", fx.graph);
  write_certificate_file(dir / "planted.cert", fx.planted);
  std::ofstream info(dir / "fixture.txt");
  const FixtureExpectations& e = fx.expect;
  info << "# " << fx.description << "\nname " << fx.name << "\nK " << e.K << "\nl " << e.l
       << "\ncover";
  for (VertexId y : e.cover) info << ' ' << index(y);
  info << "\nprivate_sizes";
  for (std::size_t s : e.private_sizes) info << ' ' << s;
  info << "\nystar " << index(e.chosen) << "\nr_arcs " << e.r_arc_count << "\nh_vertices "
       << e.h_vertices << "\nshortcut_lengths";
  for (std::size_t s : e.shortcut_segment_lengths) info << ' ' << s;
  info << "\nmax_cut " << e.max_cut_size << '\n';
  return ok;
}

int run_stats(const std::string& input) {
  const MultiDigraph g = read_digraph_file(input);
  std::cout << "n " << g.vertex_count() << "\nm " << g.arc_count() << "\nmin_outdegree "
            << g.min_out_degree() << "\nmax_outdegree " << g.max_out_degree()
            << "\nmax_multiplicity " << g.max_multiplicity() << "\nsimple "
            << (g.is_simple() ? "yes" : "no") << '\n';
  return ok;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::search_failed: return negative;
    case ErrorKind::internal_invariant_broken: return invariant;
    default: return precondition;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Immersions of chains and transitive tournaments in dense digraphs"};
  app.require_subcommand(1);

  FindArgs fa;
  auto* find = app.add_subcommand("find", "construct an immersion and write its certificate");
  find->add_option("--pattern", fa.pattern, "tt or f")->check(CLI::IsMember({"tt", "f"}));
  find->add_option("--k", fa.k, "pattern size")->required();
  find->add_option("--l", fa.l, "parallel arcs per chain level (f only)");
  find->add_option("--input", fa.input, "digraph file")->required()->check(CLI::ExistingFile);
  find->add_option("--cert", fa.cert, "certificate output")->required();
  find->add_flag("--force", fa.force, "skip degree checks (best effort)");
  find->add_flag("--relaxed", fa.relaxed, "accept up to c1 low-outdegree vertices (f only)");
  find->add_option("--inner", fa.inner, "start from this F(K-1,l) certificate (f only)")
      ->check(CLI::ExistingFile);
  find->add_option("--jobs", fa.jobs, "threads for Menger queries")->check(CLI::PositiveNumber);
  find->add_option("--dot", fa.dot, "write a Graphviz drawing");
  find->add_option("--dump", fa.dump, "directory for diagnostic dumps")->capture_default_str();

  std::string input, cert, pattern = "tt", model = "regular", name, out;
  int k = 0, l = 0, n = 0, d = 0;
  std::uint64_t seed = 0;

  auto* ver = app.add_subcommand("verify", "check a certificate against a digraph");
  ver->add_option("--input", input)->required()->check(CLI::ExistingFile);
  ver->add_option("--cert", cert)->required()->check(CLI::ExistingFile);

  auto* orc = app.add_subcommand("oracle", "exhaustive search on small digraphs");
  orc->add_option("--input", input)->required()->check(CLI::ExistingFile);
  orc->add_option("--pattern", pattern)->check(CLI::IsMember({"tt", "f"}));
  orc->add_option("--k", k)->required();
  orc->add_option("--l", l);
  orc->add_option("--cert", cert, "certificate output (default: stdout)");

  auto* gen = app.add_subcommand("gen", "generate instances");
  gen->add_option("--model", model)->check(CLI::IsMember({"regular", "fixture"}));
  gen->add_option("--n", n);
  gen->add_option("--d", d);
  gen->add_option("--seed", seed);
  gen->add_option("--name", name, "fixture name");
  gen->add_option("--out", out, "output file (regular) or directory (fixture)")->required();

  auto* st = app.add_subcommand("stats", "basic digraph statistics");
  st->add_option("--input", input)->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : precondition;
  }

  try {
    if (*find) return run_find(fa);
    if (*ver) return run_verify(input, cert);
    if (*orc) return run_oracle(input, pattern, k, l, cert);
    if (*gen) return run_gen(model, n, d, seed, name, out);
    if (*st) return run_stats(input);
  } catch (const InternalInvariantBroken& e) {
    std::cerr << e.what() << '\n';
    write_dump(fa.dump, e);
    return invariant;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return precondition;
  }
  return ok;
}
