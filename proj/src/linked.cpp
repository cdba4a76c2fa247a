#include "scimm/linked.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>

#include "scimm/flows.hpp"

namespace scimm {

namespace {

// Qualifying pairs i < j: |E^i| = |E^j| = t > 0 and no cut in [i,j] smaller
// than t. Visits pairs in lexicographic order.
template <typename Fn>
bool for_each_qualifying_pair(const CutSequence& cuts, Fn&& fn) {
    const int n = cuts.n();
    for (int i = 0; i <= n; ++i) {
        const int t = cuts.size(i);
        if (t == 0) continue;
        int lo = t;
        for (int j = i + 1; j <= n; ++j) {
            lo = std::min(lo, cuts.size(j));
            if (lo < t) break;
            if (cuts.size(j) == t) {
                if (!fn(i, j, t)) return false;
            }
        }
    }
    return true;
}

}  // namespace

LinkedCheck check_linked_ordering(const Digraph& d, const VertexOrdering& pi) {
    const CutSequence cuts = cut_sequence(d, pi);
    LinkedCheck result{true, {-1, -1}};
    for_each_qualifying_pair(cuts, [&](int i, int j, int t) {
        std::vector<int> sources, sinks;
        for (int v : pi.suffix(j)) sources.push_back(v);
        for (int v : pi.prefix(i)) sinks.push_back(v);
        if (max_flow_value(d, sources, sinks) < t) {
            result = {false, {i, j}};
            return false;
        }
        return true;
    });
    return result;
}

namespace {

// Total-cut-sum DP restricted to prefixes whose cut stays within the width
// bound; reconstruction breaks ties toward the lowest vertex index.
std::optional<VertexOrdering> min_cut_sum_ordering(const Digraph& d, int width_bound) {
    const int n = d.vertex_count();
    if (n == 0) return VertexOrdering::identity(0);
    std::vector<std::uint32_t> in_mask(n, 0), out_mask(n, 0);
    for (const Arc& a : d.arcs()) {
        out_mask[a.tail] |= 1u << a.head;
        in_mask[a.head] |= 1u << a.tail;
    }
    const std::uint32_t full = (1u << n) - 1;
    constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> sum(full + 1, kInf);
    std::vector<std::uint16_t> cut(full + 1, 0);
    sum[0] = 0;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const int v = std::countr_zero(mask);
        const std::uint32_t rest = mask & (mask - 1);
        int c = cut[rest];
        c -= std::popcount(out_mask[v] & rest);
        c += std::popcount(in_mask[v] & ~mask);
        cut[mask] = static_cast<std::uint16_t>(c);
        if (c > width_bound) continue;
        std::uint32_t best = kInf;
        for (std::uint32_t rem = mask; rem;) {
            const std::uint32_t bit = rem & -rem;
            rem ^= bit;
            best = std::min(best, sum[mask ^ bit]);
        }
        if (best != kInf) sum[mask] = best + static_cast<std::uint32_t>(c);
    }
    if (sum[full] == kInf) return std::nullopt;

    std::vector<int> order(n);
    std::uint32_t mask = full;
    for (int pos = n; pos >= 1; --pos) {
        int chosen = -1;
        for (int v = 0; v < n && chosen < 0; ++v) {
            if (!(mask & (1u << v))) continue;
            const std::uint32_t rest = sum[mask ^ (1u << v)];
            if (rest != kInf && rest + cut[mask] == sum[mask]) chosen = v;
        }
        if (chosen < 0) throw Error("internal: cut-sum reconstruction failed");
        order[pos - 1] = chosen;
        mask ^= 1u << chosen;
    }
    return VertexOrdering(std::move(order));
}

}  // namespace

VertexOrdering build_linked_ordering(const Digraph& d, int limit_n) {
    const CutwidthResult cw = cutwidth_exact(d, limit_n);
    auto pi = min_cut_sum_ordering(d, cw.ctw);
    if (!pi) throw Error("internal: no ordering within its own cutwidth");
    if (check_linked_ordering(d, *pi).linked) return *pi;

    // Not expected to be reachable; enumerate width-optimal orderings until
    // one passes.
    const int n = d.vertex_count();
    if (n > 9) throw Error("internal: cut-sum ordering not linked and instance too large "
                           "for exhaustive fallback");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        VertexOrdering candidate{std::vector<int>(perm)};
        if (cut_sequence(d, candidate).width() != cw.ctw) continue;
        if (check_linked_ordering(d, candidate).linked) return candidate;
    } while (std::next_permutation(perm.begin(), perm.end()));
    throw Error("internal: no linked width-optimal ordering found");
}

namespace {

// Previous partner of cut i: largest j < i with |E^j| = |E^i| and no smaller
// cut between.
int previous_partner(const CutSequence& cuts, int i) {
    const int t = cuts.size(i);
    for (int j = i - 1; j >= 0; --j) {
        if (cuts.size(j) < t) return -1;
        if (cuts.size(j) == t) return j;
    }
    return -1;
}

std::optional<OrderedCutSequence> sweep_ordered_cuts(const Digraph& d, const VertexOrdering& pi,
                                                     const CutSequence& cuts) {
    const int n = cuts.n();
    std::vector<std::vector<Arc>> eps(n + 1);
    for (int i = 0; i <= n; ++i) {
        const int t = cuts.size(i);
        if (t == 0) continue;
        const int j = previous_partner(cuts, i);
        if (j < 0) {
            eps[i] = cuts.cut(i);  // fresh numbering in serialization order
            continue;
        }
        auto sys = max_arc_disjoint_paths(d, pi.suffix(i), pi.prefix(j), t);
        if (!sys) return std::nullopt;  // pi is not linked at (j, i)
        // Each path crosses each end cut exactly once; read off the bijection.
        eps[i].assign(t, Arc{});
        std::vector<char> filled(t, 0);
        for (const auto& path : sys->paths) {
            Arc in_i{-1, -1}, in_j{-1, -1};
            for (std::size_t k = 0; k + 1 < path.size(); ++k) {
                const Arc a{path[k], path[k + 1]};
                const int ph = pi.position_of(a.head), pt = pi.position_of(a.tail);
                if (ph <= i && pt > i) in_i = a;
                if (ph <= j && pt > j) in_j = a;
            }
            if (in_i.tail < 0 || in_j.tail < 0)
                throw Error("internal: path misses an end cut");
            int s = 0;
            for (int k = 0; k < t; ++k)
                if (eps[j][k] == in_j) s = k + 1;
            if (s == 0 || filled[s - 1]) throw Error("internal: broken cut bijection");
            filled[s - 1] = 1;
            eps[i][s - 1] = in_i;
        }
    }
    return OrderedCutSequence(std::move(eps));
}

// Exhaustive fallback: assign each cut's numbering, left to right, checking
// all qualifying pairs among completed cuts.
bool assign_cuts_exhaustive(const Digraph& d, const VertexOrdering& pi, const CutSequence& cuts,
                            std::vector<std::vector<Arc>>& eps, int i) {
    const int n = cuts.n();
    if (i > n) return true;
    std::vector<Arc> perm = cuts.cut(i);
    std::sort(perm.begin(), perm.end());
    do {
        eps[i] = perm;
        bool ok = true;
        for (int j = 0; j < i && ok; ++j) {
            const int t = cuts.size(j);
            if (t != cuts.size(i) || t == 0) continue;
            bool qualifying = true;
            for (int h = j; h <= i; ++h)
                if (cuts.size(h) < t) qualifying = false;
            if (!qualifying) continue;
            ok = endpoint_matched_paths(d, pi, j, i, eps[j], eps[i]).has_value();
        }
        if (ok && assign_cuts_exhaustive(d, pi, cuts, eps, i + 1)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

OrderedCutSequence build_linked_ordered_cuts(const Digraph& d, const VertexOrdering& pi) {
    const CutSequence cuts = cut_sequence(d, pi);
    auto sigma = sweep_ordered_cuts(d, pi, cuts);
    if (sigma && check_linked_ordered_cuts(d, pi, *sigma).linked) return *sigma;
    if (!check_linked_ordering(d, pi).linked)
        throw Error("ordering is not linked; linked ordered cuts require a linked ordering");

    // Not expected to be reachable for linked orderings.
    if (d.vertex_count() > 8)
        throw Error("internal: sweep failed and instance too large for exhaustive fallback");
    std::vector<std::vector<Arc>> eps(cuts.n() + 1);
    if (!assign_cuts_exhaustive(d, pi, cuts, eps, 0))
        throw Error("internal: no linked sequence of ordered cuts found");
    return OrderedCutSequence(std::move(eps));
}

LinkedCheck check_linked_ordered_cuts(const Digraph& d, const VertexOrdering& pi,
                                      const OrderedCutSequence& sigma) {
    const CutSequence cuts = cut_sequence(d, pi);
    sigma.validate_against(cuts);
    LinkedCheck result{true, {-1, -1}};
    for_each_qualifying_pair(cuts, [&](int i, int j, int) {
        if (!endpoint_matched_paths(d, pi, i, j, sigma.ordered_cut(i), sigma.ordered_cut(j))) {
            result = {false, {i, j}};
            return false;
        }
        return true;
    });
    return result;
}

}  // namespace scimm
