#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

namespace immersion {

enum class ErrorKind {
  unknown_id,
  loop_arc,
  out_of_range,
  parse_error,
  host_mismatch,
  compose_overlap,
  same_endpoints,
  not_simple,
  insufficient_outdegree,
  precondition_violated,
  search_failed,
  unknown_fixture,
  internal_invariant_broken,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class MultiDigraph;
struct ImmersionCertificate;

/// Everything needed to replay a failed reduction offline.
struct DiagnosticDump {
  std::shared_ptr<const MultiDigraph> graph;
  std::shared_ptr<const ImmersionCertificate> certificate;
  std::string reduction;  // contents of reduction.dump
};

/// Raised when the solver observes a state the construction says cannot
/// happen. Always carries a dump.
class InternalInvariantBroken : public Error {
 public:
  InternalInvariantBroken(const std::string& what, DiagnosticDump dump)
      : Error(ErrorKind::internal_invariant_broken, what),
        dump_(std::make_shared<DiagnosticDump>(std::move(dump))) {}

  const DiagnosticDump& dump() const noexcept { return *dump_; }

 private:
  std::shared_ptr<const DiagnosticDump> dump_;
};

}  // namespace immersion
