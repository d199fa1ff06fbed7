#pragma once

#include <string>

#include "immersion/error.hpp"
#include "immersion/solver.hpp"

namespace immersion::detail {

[[noreturn]] void invariant_broken(const std::string& what, const MultiDigraph* graph,
                                   const ImmersionCertificate* cert, std::string reduction = {});

/// A check that only the degree hypotheses guarantee: broken invariant in
/// strict/relaxed mode, search failure in fixture mode.
[[noreturn]] void degree_check_failed(Mode mode, const std::string& what,
                                      const MultiDigraph* graph,
                                      const ImmersionCertificate* cert,
                                      std::string reduction = {});

}  // namespace immersion::detail
