#include "immersion/digraph_io.hpp"

#include <fstream>
#include <sstream>

#include "immersion/error.hpp"

namespace immersion {

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  throw Error(ErrorKind::parse_error, "line " + std::to_string(line_no) + ": " + what);
}

bool is_skippable(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

}  // namespace

MultiDigraph read_digraph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  long long n = -1;
  long long m = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    std::istringstream fields(line);
    std::string tag;
    std::string kind;
    fields >> tag >> kind >> n >> m;
    if (!fields || tag != "p" || kind != "dgr" || n < 0 || m < 0) {
      parse_fail(line_no, "expected 'p dgr <n> <m>'");
    }
    std::string extra;
    if (fields >> extra) parse_fail(line_no, "trailing tokens");
    break;
  }
  if (n < 0) parse_fail(line_no, "missing problem line");

  MultiDigraph g(static_cast<std::size_t>(n));
  long long seen = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    std::istringstream fields(line);
    std::string tag;
    long long tail = -1;
    long long head = -1;
    fields >> tag >> tail >> head;
    if (!fields || tag != "a") parse_fail(line_no, "expected 'a <tail> <head>'");
    std::string extra;
    if (fields >> extra) parse_fail(line_no, "trailing tokens");
    if (tail < 0 || head < 0 || tail >= n || head >= n) {
      parse_fail(line_no, "vertex out of range");
    }
    if (tail == head) parse_fail(line_no, "loop arc");
    if (seen == m) parse_fail(line_no, "more arcs than announced");
    g.add_arc(vertex_id(static_cast<std::size_t>(tail)), vertex_id(static_cast<std::size_t>(head)));
    ++seen;
  }
  if (seen != m) {
    parse_fail(line_no, "expected " + std::to_string(m) + " arcs, found " + std::to_string(seen));
  }
  return g;
}

MultiDigraph read_digraph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse_error, "cannot open " + path.string());
  return read_digraph(in);
}

void write_digraph(std::ostream& out, const MultiDigraph& g) {
  out << "p dgr " << g.vertex_bound() << ' ' << g.arc_count() << '\n';
  for (ArcId a : g.arcs()) {
    out << "a " << index(g.tail(a)) << ' ' << index(g.head(a)) << '\n';
  }
}

void write_digraph_file(const std::filesystem::path& path, const MultiDigraph& g) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::parse_error, "cannot write " + path.string());
  write_digraph(out, g);
}

std::string to_text(const MultiDigraph& g) {
  std::ostringstream out;
  write_digraph(out, g);
  return out.str();
}

}  // namespace immersion
