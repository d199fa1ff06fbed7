#include "immersion/error.hpp"

namespace immersion {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::unknown_id: return "UnknownId";
    case ErrorKind::loop_arc: return "LoopArc";
    case ErrorKind::out_of_range: return "OutOfRange";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::host_mismatch: return "HostMismatch";
    case ErrorKind::compose_overlap: return "ComposeOverlap";
    case ErrorKind::same_endpoints: return "SameEndpoints";
    case ErrorKind::not_simple: return "NotSimple";
    case ErrorKind::insufficient_outdegree: return "InsufficientOutdegree";
    case ErrorKind::precondition_violated: return "PreconditionViolated";
    case ErrorKind::search_failed: return "SearchFailed";
    case ErrorKind::unknown_fixture: return "UnknownFixture";
    case ErrorKind::internal_invariant_broken: return "InternalInvariantBroken";
  }
  return "Error";
}

}  // namespace immersion
