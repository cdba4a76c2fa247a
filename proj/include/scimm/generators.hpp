#pragma once

#include <cstdint>

#include "scimm/digraph.hpp"

namespace scimm {

// Cycle on 2k vertices with arcs alternately oriented along the cycle:
// vertex i is adjacent to (i+1) mod 2k, the arc pointing i -> i+1 for even i
// and i+1 -> i for odd i. Every vertex ends up a source or a sink.
Digraph gen_alternating_cycle(int k);

Digraph gen_random_tournament(int n, std::uint64_t seed);

// Every pair gets at least one arc; with probability sym_prob it gets both.
Digraph gen_random_semicomplete(int n, std::uint64_t seed, double sym_prob);

// Starts from the transitive tournament and inserts feedback / symmetric arcs
// only while every prefix cut of the identity ordering stays <= c, so the
// result has cutwidth at most c.
Digraph gen_random_bounded_ctw(int n, int c, std::uint64_t seed);

}  // namespace scimm
