#pragma once

#include <cstdint>
#include <optional>

#include "immersion/certify.hpp"

namespace immersion {

struct SearchLimits {
  std::size_t max_host_vertices = 12;
  std::size_t max_host_arcs = 40;
  std::uint64_t node_budget = 10'000'000;
};

enum class SearchStatus { found, not_present, resource_exceeded };

const char* to_string(SearchStatus status);

struct SearchResult {
  SearchStatus status = SearchStatus::not_present;
  std::optional<ImmersionCertificate> certificate;
  std::uint64_t nodes = 0;
};

/// Complete backtracking search for an immersion of `pattern` in `host`.
/// Hosts beyond the limits, or searches that exhaust the node budget, report
/// resource_exceeded rather than a possibly wrong answer.
SearchResult exhaustive_immersion(const MultiDigraph& host, const Pattern& pattern,
                                  const SearchLimits& limits = {});

}  // namespace immersion
