#include "scimm/cutwidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

namespace scimm {

namespace {

struct AdjacencyMasks {
    std::vector<std::uint32_t> in_mask;   // in_mask[v]: tails of arcs into v
    std::vector<std::uint32_t> out_mask;  // out_mask[v]: heads of arcs out of v
};

AdjacencyMasks build_masks(const Digraph& d) {
    AdjacencyMasks m;
    const int n = d.vertex_count();
    m.in_mask.assign(n, 0);
    m.out_mask.assign(n, 0);
    for (const Arc& a : d.arcs()) {
        m.out_mask[a.tail] |= 1u << a.head;
        m.in_mask[a.head] |= 1u << a.tail;
    }
    return m;
}

// cut(A) = |E(V\A, A)| for prefix set A, from cut(A without its lowest bit).
std::uint16_t cut_of(const AdjacencyMasks& m, const std::vector<std::uint16_t>& cut,
                     std::uint32_t mask) {
    const int v = std::countr_zero(mask);
    const std::uint32_t rest = mask & (mask - 1);
    int c = cut[rest];
    c -= std::popcount(m.out_mask[v] & rest);
    c += std::popcount(m.in_mask[v] & ~mask);
    return static_cast<std::uint16_t>(c);
}

std::uint16_t best_pred(const std::vector<std::uint16_t>& value, std::uint32_t mask) {
    std::uint16_t best = UINT16_MAX;
    for (std::uint32_t rem = mask; rem;) {
        const std::uint32_t bit = rem & -rem;
        rem ^= bit;
        best = std::min(best, value[mask ^ bit]);
    }
    return best;
}

VertexOrdering reconstruct(const Digraph& d, const std::vector<std::uint16_t>& value,
                           const std::vector<std::uint16_t>& cut) {
    const int n = d.vertex_count();
    std::vector<int> order(n);
    std::uint32_t mask = (1u << n) - 1;
    for (int pos = n; pos >= 1; --pos) {
        int chosen = -1;
        for (int v = 0; v < n && chosen < 0; ++v) {
            if (!(mask & (1u << v))) continue;
            const std::uint16_t rest = value[mask ^ (1u << v)];
            if (std::max(rest, cut[mask]) == value[mask]) chosen = v;
        }
        if (chosen < 0) throw Error("internal: cutwidth reconstruction failed");
        order[pos - 1] = chosen;
        mask ^= 1u << chosen;
    }
    return VertexOrdering(std::move(order));
}

void check_limit(const Digraph& d, int limit_n) {
    if (limit_n > 30) throw Error("cutwidth subset DP limit capped at 30");
    if (d.vertex_count() > limit_n)
        throw Error("digraph has " + std::to_string(d.vertex_count()) +
                    " vertices, exceeding the limit of " + std::to_string(limit_n));
}

}  // namespace

CutwidthResult cutwidth_exact_serial(const Digraph& d, int limit_n) {
    check_limit(d, limit_n);
    const int n = d.vertex_count();
    if (n == 0) return {0, VertexOrdering::identity(0)};
    const AdjacencyMasks m = build_masks(d);
    const std::uint32_t full = (1u << n) - 1;
    std::vector<std::uint16_t> value(full + 1, 0), cut(full + 1, 0);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        cut[mask] = cut_of(m, cut, mask);
        value[mask] = std::max(cut[mask], best_pred(value, mask));
    }
    return {value[full], reconstruct(d, value, cut)};
}

CutwidthResult cutwidth_exact(const Digraph& d, int limit_n) {
    check_limit(d, limit_n);
    const int n = d.vertex_count();
    if (n == 0) return {0, VertexOrdering::identity(0)};
    const AdjacencyMasks m = build_masks(d);
    const std::uint32_t full = (1u << n) - 1;
    std::vector<std::uint16_t> value(full + 1, 0), cut(full + 1, 0);

    // Layer k depends only on layer k-1 (the cut recurrence drops the lowest
    // bit, the value recurrence any bit), so subsets within a layer are
    // independent.
    for (int k = 1; k <= n; ++k) {
#pragma omp parallel for schedule(static)
        for (std::int64_t mask = 1; mask <= static_cast<std::int64_t>(full); ++mask) {
            const auto mk = static_cast<std::uint32_t>(mask);
            if (std::popcount(mk) != k) continue;
            cut[mk] = cut_of(m, cut, mk);
            value[mk] = std::max(cut[mk], best_pred(value, mk));
        }
    }
    return {value[full], reconstruct(d, value, cut)};
}

int cutwidth_bruteforce(const Digraph& d, int limit_n) {
    if (d.vertex_count() > limit_n)
        throw Error("digraph has " + std::to_string(d.vertex_count()) +
                    " vertices, exceeding the brute-force limit of " + std::to_string(limit_n));
    const int n = d.vertex_count();
    if (n == 0) return 0;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    int best = INT32_MAX;
    do {
        std::vector<int> pos(n);
        for (int k = 0; k < n; ++k) pos[perm[k]] = k + 1;
        std::vector<int> cuts(n + 1, 0);
        for (const Arc& a : d.arcs())
            for (int i = pos[a.head]; i < pos[a.tail]; ++i) ++cuts[i];
        best = std::min(best, *std::max_element(cuts.begin(), cuts.end()));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace scimm
