#pragma once

#include <utility>

#include "scimm/cutwidth.hpp"
#include "scimm/digraph.hpp"
#include "scimm/ordering.hpp"

namespace scimm {

struct LinkedCheck {
    bool linked = false;
    std::pair<int, int> witness{-1, -1};  // first failing cut pair when !linked
};

// An ordering is linked when every pair of equal-size cuts with no smaller
// cut between them is joined by that many arc-disjoint suffix-to-prefix
// paths. Checks all qualifying pairs via max-flow.
LinkedCheck check_linked_ordering(const Digraph& d, const VertexOrdering& pi);

// Width-optimal ordering minimizing the total cut sum over all prefix-feasible
// orderings; such orderings are linked, and the result is re-checked (with an
// exhaustive fallback over width-optimal orderings that is not expected to
// run).
VertexOrdering build_linked_ordering(const Digraph& d, int limit_n = kCutwidthDefaultLimit);

// Numbers every cut so that the path systems between qualifying pairs can
// respect positions: sweeps left to right, propagating numbers along the
// bijection induced by a path system to the previous equal-size cut, and
// numbering fresh cuts in serialization order.
OrderedCutSequence build_linked_ordered_cuts(const Digraph& d, const VertexOrdering& pi);

// Verifies the position-respecting variant for every qualifying pair, by
// backtracking over endpoint-matched path systems.
LinkedCheck check_linked_ordered_cuts(const Digraph& d, const VertexOrdering& pi,
                                      const OrderedCutSequence& sigma);

}  // namespace scimm
