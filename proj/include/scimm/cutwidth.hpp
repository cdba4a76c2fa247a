#pragma once

#include "scimm/digraph.hpp"
#include "scimm/ordering.hpp"

namespace scimm {

inline constexpr int kCutwidthDefaultLimit = 22;
inline constexpr int kBruteforceOrderingLimit = 9;

struct CutwidthResult {
    int ctw = 0;
    VertexOrdering ordering;
};

// Exact cutwidth by subset dynamic programming over prefixes:
//   value[A] = max(|E(V\A, A)|, min over v in A of value[A\{v}]),
// reconstructed lowest-vertex-first. Parallel version processes subsets one
// popcount layer at a time with OpenMP; the serial reference walks masks in
// increasing order. Both are exact and agree.
CutwidthResult cutwidth_exact(const Digraph& d, int limit_n = kCutwidthDefaultLimit);
CutwidthResult cutwidth_exact_serial(const Digraph& d, int limit_n = kCutwidthDefaultLimit);

// Oracle: minimum width over all n! orderings.
int cutwidth_bruteforce(const Digraph& d, int limit_n = kBruteforceOrderingLimit);

}  // namespace scimm
