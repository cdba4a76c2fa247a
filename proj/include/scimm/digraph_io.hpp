#pragma once

#include <iosfwd>
#include <string>

#include "scimm/digraph.hpp"

namespace scimm {

// Text format:
//   - comment lines start with '#'
//   - first non-comment line: "n m"
//   - exactly m lines "u v" (0-indexed arc tail u, head v)
// Serialization sorts arcs lexicographically and ends with a newline.
Digraph parse_digraph(std::istream& in);
Digraph parse_digraph(const std::string& text);
Digraph load_digraph(const std::string& path);

std::string serialize_digraph(const Digraph& d);

}  // namespace scimm
