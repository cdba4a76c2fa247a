#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scimm/digraph.hpp"
#include "scimm/ordering.hpp"

namespace scimm {

// Pairwise arc-disjoint directed paths, stored as vertex sequences. Paths are
// simple in arcs; vertices may repeat across paths.
struct PathSystem {
    std::vector<std::vector<int>> paths;
};

// Maximum number of pairwise arc-disjoint paths from sources to sinks
// (unit capacity on every arc, endpoints uncapacitated).
int max_flow_value(const Digraph& d, const std::vector<int>& sources,
                   const std::vector<int>& sinks);

// t arc-disjoint source->sink paths, or nullopt when fewer exist. A vertex in
// both sets contributes a zero-length path only when allow_zero_length is set.
std::optional<PathSystem> max_arc_disjoint_paths(const Digraph& d,
                                                 const std::vector<int>& sources,
                                                 const std::vector<int>& sinks, int t,
                                                 bool allow_zero_length = false);

// t arc-disjoint paths for the cut pair (i, j), i <= j, where the path at
// position s starts with eps_j's position-s arc and ends with eps_i's
// position-s arc. Requires |eps_i| == |eps_j|.
std::optional<PathSystem> endpoint_matched_paths(const Digraph& d, const VertexOrdering& pi,
                                                 int i, int j, const std::vector<Arc>& eps_i,
                                                 const std::vector<Arc>& eps_j);

// Throws Error unless the system consists of pairwise arc-disjoint directed
// paths of d running from a source to a sink.
void validate_path_system(const Digraph& d, const std::vector<int>& sources,
                          const std::vector<int>& sinks, const PathSystem& sys);

std::string serialize_path_system(const PathSystem& sys);

}  // namespace scimm
