#pragma once

#include <cstddef>
#include <iosfwd>

#include "immersion/certify.hpp"

namespace immersion {

/// Graphviz drawing of `host` with the certificate's branch vertices and path
/// arcs highlighted (one colour per pattern arc). Hosts with more than
/// `full_limit` arcs are cut down to the arcs the certificate uses.
void write_dot(std::ostream& out, const MultiDigraph& host, const ImmersionCertificate* cert,
               std::size_t full_limit = 400);

}  // namespace immersion
