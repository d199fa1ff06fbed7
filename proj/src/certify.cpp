#include "immersion/certify.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "immersion/error.hpp"

namespace immersion {

std::size_t ImmersionCertificate::total_arcs() const {
  return std::accumulate(arc_paths.begin(), arc_paths.end(), std::size_t{0},
                         [](std::size_t acc, const ArcPath& p) { return acc + p.size(); });
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::not_injective: return "NotInjective";
    case ViolationKind::broken_path: return "BrokenPath";
    case ViolationKind::vertex_repeat: return "VertexRepeat";
    case ViolationKind::duplicate_arc: return "DuplicateArc";
    case ViolationKind::missing_arc: return "MissingArc";
    case ViolationKind::endpoint_mismatch: return "EndpointMismatch";
    case ViolationKind::unknown_vertex: return "UnknownVertex";
  }
  return "Violation";
}

namespace {

using u32 = std::uint32_t;

u32 raw(VertexId v) { return static_cast<u32>(v); }
u32 raw(ArcId a) { return static_cast<u32>(a); }

}  // namespace

std::vector<Violation> verify(const MultiDigraph& host, const ImmersionCertificate& cert) {
  std::vector<Violation> out;
  auto report = [&out](ViolationKind kind, std::vector<u32> ids, std::string detail) {
    out.push_back({kind, std::move(ids), std::move(detail)});
  };

  const MultiDigraph& pattern = cert.pattern.graph;
  const std::size_t pattern_vertices = pattern.vertex_bound();

  // Image of every pattern vertex, or nothing when unusable.
  std::vector<bool> image_ok(pattern_vertices, false);
  if (cert.vertex_map.size() != pattern_vertices) {
    report(ViolationKind::unknown_vertex,
           {static_cast<u32>(cert.vertex_map.size()), static_cast<u32>(pattern_vertices)},
           "vertex map has " + std::to_string(cert.vertex_map.size()) + " entries, pattern has " +
               std::to_string(pattern_vertices) + " vertices");
  }
  std::unordered_map<u32, u32> owner;
  for (std::size_t p = 0; p < std::min(pattern_vertices, cert.vertex_map.size()); ++p) {
    const VertexId image = cert.vertex_map[p];
    if (!host.has_vertex(image)) {
      report(ViolationKind::unknown_vertex, {static_cast<u32>(p), raw(image)},
             "pattern vertex " + std::to_string(p) + " maps to missing host vertex " +
                 std::to_string(raw(image)));
      continue;
    }
    image_ok[p] = true;
    auto [it, fresh] = owner.emplace(raw(image), static_cast<u32>(p));
    if (!fresh) {
      report(ViolationKind::not_injective, {it->second, static_cast<u32>(p), raw(image)},
             "pattern vertices " + std::to_string(it->second) + " and " + std::to_string(p) +
                 " share host vertex " + std::to_string(raw(image)));
    }
  }

  const std::size_t pattern_arcs = pattern.arc_bound();
  if (cert.arc_paths.size() != pattern_arcs) {
    report(ViolationKind::endpoint_mismatch,
           {static_cast<u32>(cert.arc_paths.size()), static_cast<u32>(pattern_arcs)},
           "certificate has " + std::to_string(cert.arc_paths.size()) +
               " paths, pattern has " + std::to_string(pattern_arcs) + " arcs");
  }

  std::unordered_map<u32, u32> arc_user;
  for (std::size_t i = 0; i < std::min(pattern_arcs, cert.arc_paths.size()); ++i) {
    const ArcPath& path = cert.arc_paths[i];
    const u32 pi = static_cast<u32>(i);
    const VertexId from = pattern.tail(arc_id(i));
    const VertexId to = pattern.head(arc_id(i));
    if (path.empty()) {
      report(ViolationKind::endpoint_mismatch, {pi}, "path " + std::to_string(i) + " is empty");
      continue;
    }
    bool missing = false;
    for (ArcId a : path) {
      if (!host.has_arc(a)) {
        report(ViolationKind::missing_arc, {pi, raw(a)},
               "path " + std::to_string(i) + " uses missing host arc " + std::to_string(raw(a)));
        missing = true;
        continue;
      }
      auto [it, fresh] = arc_user.emplace(raw(a), pi);
      if (!fresh) {
        report(ViolationKind::duplicate_arc, {it->second, pi, raw(a)},
               "host arc " + std::to_string(raw(a)) + " used by paths " +
                   std::to_string(it->second) + " and " + std::to_string(i));
      }
    }
    if (missing) continue;

    bool chained = true;
    for (std::size_t j = 0; j + 1 < path.size(); ++j) {
      if (host.head(path[j]) != host.tail(path[j + 1])) {
        report(ViolationKind::broken_path, {pi, static_cast<u32>(j)},
               "path " + std::to_string(i) + " breaks after position " + std::to_string(j));
        chained = false;
      }
    }
    if (image_ok[index(from)] && host.tail(path.front()) != cert.vertex_map[index(from)]) {
      report(ViolationKind::endpoint_mismatch, {pi, raw(host.tail(path.front()))},
             "path " + std::to_string(i) + " starts at the wrong vertex");
    }
    if (image_ok[index(to)] && host.head(path.back()) != cert.vertex_map[index(to)]) {
      report(ViolationKind::endpoint_mismatch, {pi, raw(host.head(path.back()))},
             "path " + std::to_string(i) + " ends at the wrong vertex");
    }
    if (!chained) continue;
    std::vector<u32> walk{raw(host.tail(path.front()))};
    for (ArcId a : path) walk.push_back(raw(host.head(a)));
    std::sort(walk.begin(), walk.end());
    for (std::size_t j = 0; j + 1 < walk.size(); ++j) {
      if (walk[j] == walk[j + 1]) {
        report(ViolationKind::vertex_repeat, {pi, walk[j]},
               "path " + std::to_string(i) + " revisits host vertex " + std::to_string(walk[j]));
        while (j + 1 < walk.size() && walk[j] == walk[j + 1]) ++j;
      }
    }
  }
  return out;
}

bool has_violation(std::span<const Violation> violations, ViolationKind kind) {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

std::string describe(std::span<const Violation> violations) {
  std::string text;
  for (const Violation& v : violations) {
    text += to_string(v.kind);
    text += ": ";
    text += v.detail;
    text += '\n';
  }
  return text;
}

ArcPath excise_cycles(const MultiDigraph& g, std::span<const ArcId> walk) {
  ArcPath path;
  if (walk.empty()) return path;
  // position[v] = number of arcs on `path` before it reaches v
  std::unordered_map<u32, std::size_t> position;
  position[raw(g.tail(walk.front()))] = 0;
  for (ArcId a : walk) {
    const u32 next = raw(g.head(a));
    const auto found = position.find(next);
    if (found == position.end()) {
      path.push_back(a);
      position[next] = path.size();
      continue;
    }
    const std::size_t keep = found->second;
    for (std::size_t j = keep; j < path.size(); ++j) position.erase(raw(g.head(path[j])));
    path.resize(keep);
    position[next] = keep;
  }
  return path;
}

ImmersionCertificate compose(const MultiDigraph& host, const ImmersionCertificate& outer,
                             const ImmersionCertificate& inner) {
  if (const auto bad = verify(outer.pattern.graph, inner); !bad.empty()) {
    throw Error(ErrorKind::host_mismatch,
                "inner certificate does not live in the outer pattern:\n" + describe(bad));
  }
  if (const auto bad = verify(host, outer); !bad.empty()) {
    throw Error(ErrorKind::host_mismatch, "outer certificate does not verify:\n" + describe(bad));
  }

  ImmersionCertificate result;
  result.pattern = inner.pattern;
  result.vertex_map.reserve(inner.vertex_map.size());
  for (VertexId q : inner.vertex_map) result.vertex_map.push_back(outer.vertex_map[index(q)]);

  std::unordered_map<u32, std::size_t> user;
  for (std::size_t i = 0; i < inner.arc_paths.size(); ++i) {
    ArcPath walk;
    for (ArcId q : inner.arc_paths[i]) {
      const ArcPath& expansion = outer.arc_paths[index(q)];
      walk.insert(walk.end(), expansion.begin(), expansion.end());
    }
    ArcPath path = excise_cycles(host, walk);
    for (ArcId a : path) {
      if (!user.emplace(raw(a), i).second) {
        throw Error(ErrorKind::compose_overlap,
                    "host arc " + std::to_string(raw(a)) + " claimed twice after composition");
      }
    }
    result.arc_paths.push_back(std::move(path));
  }
  return result;
}

std::int64_t level_load(std::int64_t k, std::int64_t t) { return t * (k - t); }

ImmersionCertificate route_tt_in_f(int k) {
  const int l = tt_chain_multiplicity(k);
  ImmersionCertificate cert;
  cert.pattern = build_tournament(k);
  for (int i = 0; i < k; ++i) cert.vertex_map.push_back(vertex_id(i));

  std::vector<std::vector<bool>> taken(static_cast<std::size_t>(std::max(k - 1, 0)),
                                       std::vector<bool>(static_cast<std::size_t>(l), false));
  for (ArcId a : cert.pattern.graph.arcs()) {
    const int from = static_cast<int>(index(cert.pattern.graph.tail(a)));
    const int to = static_cast<int>(index(cert.pattern.graph.head(a)));
    ArcPath path;
    for (int level = from; level < to; ++level) {
      auto& copies = taken[static_cast<std::size_t>(level)];
      const auto free = std::find(copies.begin(), copies.end(), false);
      if (free == copies.end()) {
        throw Error(ErrorKind::internal_invariant_broken,
                    "level " + std::to_string(level) + " of F(" + std::to_string(k) + ", " +
                        std::to_string(l) + ") is oversubscribed");
      }
      *free = true;
      path.push_back(arc_id(static_cast<std::size_t>(level) * static_cast<std::size_t>(l) +
                            static_cast<std::size_t>(free - copies.begin())));
    }
    cert.arc_paths.push_back(std::move(path));
  }
  return cert;
}

void write_certificate(std::ostream& out, const ImmersionCertificate& cert) {
  out << "c immersion " << to_string(cert.pattern.kind) << ' ' << cert.pattern.k << ' '
      << cert.pattern.l << '\n';
  for (std::size_t p = 0; p < cert.vertex_map.size(); ++p) {
    out << "v " << p << ' ' << index(cert.vertex_map[p]) << '\n';
  }
  for (std::size_t i = 0; i < cert.arc_paths.size(); ++i) {
    out << "p " << i;
    for (ArcId a : cert.arc_paths[i]) out << ' ' << index(a);
    out << '\n';
  }
}

void write_certificate_file(const std::filesystem::path& path, const ImmersionCertificate& cert) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::parse_error, "cannot write " + path.string());
  write_certificate(out, cert);
}

std::string to_text(const ImmersionCertificate& cert) {
  std::ostringstream out;
  write_certificate(out, cert);
  return out.str();
}

ImmersionCertificate read_certificate(std::istream& in) {
  auto fail = [](std::size_t line_no, const std::string& what) {
    throw Error(ErrorKind::parse_error, "line " + std::to_string(line_no) + ": " + what);
  };
  ImmersionCertificate cert;
  bool have_header = false;
  std::vector<bool> vertex_seen;
  std::vector<bool> path_seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (!have_header) {
      std::string word;
      std::string kind;
      int k = 0;
      int l = 0;
      fields >> word >> kind >> k >> l;
      if (tag != "c" || word != "immersion" || !fields) {
        fail(line_no, "expected 'c immersion <kind> <k> <l>'");
      }
      try {
        cert.pattern = build_pattern(parse_pattern_kind(kind), k, l);
      } catch (const Error& e) {
        fail(line_no, e.what());
      }
      if (cert.pattern.kind == PatternKind::transitive_tournament && l != 0) {
        fail(line_no, "tournament certificates carry l = 0");
      }
      cert.vertex_map.assign(cert.pattern.graph.vertex_bound(), VertexId{});
      cert.arc_paths.assign(cert.pattern.graph.arc_bound(), {});
      vertex_seen.assign(cert.vertex_map.size(), false);
      path_seen.assign(cert.arc_paths.size(), false);
      have_header = true;
      continue;
    }
    if (tag == "v") {
      long long p = -1;
      long long h = -1;
      fields >> p >> h;
      if (!fields || p < 0 || h < 0 || p >= static_cast<long long>(vertex_seen.size())) {
        fail(line_no, "bad vertex line");
      }
      if (vertex_seen[static_cast<std::size_t>(p)]) fail(line_no, "vertex mapped twice");
      vertex_seen[static_cast<std::size_t>(p)] = true;
      cert.vertex_map[static_cast<std::size_t>(p)] = vertex_id(static_cast<std::size_t>(h));
    } else if (tag == "p") {
      long long i = -1;
      fields >> i;
      if (!fields || i < 0 || i >= static_cast<long long>(path_seen.size())) {
        fail(line_no, "bad path line");
      }
      if (path_seen[static_cast<std::size_t>(i)]) fail(line_no, "path given twice");
      path_seen[static_cast<std::size_t>(i)] = true;
      long long a = 0;
      while (fields >> a) {
        if (a < 0) fail(line_no, "negative arc id");
        cert.arc_paths[static_cast<std::size_t>(i)].push_back(arc_id(static_cast<std::size_t>(a)));
      }
      if (!fields.eof()) fail(line_no, "bad arc id");
    } else {
      fail(line_no, "unknown line tag '" + tag + "'");
    }
  }
  if (!have_header) fail(line_no, "missing certificate header");
  for (std::size_t p = 0; p < vertex_seen.size(); ++p) {
    if (!vertex_seen[p]) fail(line_no, "pattern vertex " + std::to_string(p) + " is unmapped");
  }
  return cert;
}

ImmersionCertificate read_certificate_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse_error, "cannot open " + path.string());
  return read_certificate(in);
}

}  // namespace immersion
