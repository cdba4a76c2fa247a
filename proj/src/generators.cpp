#include "scimm/generators.hpp"

#include <algorithm>
#include <random>

namespace scimm {

namespace {

// mt19937_64 output is pinned by the standard; draws below avoid
// std::uniform_int_distribution so sequences are identical across toolchains.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

bool coin(std::mt19937_64& rng, double p) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

}  // namespace

Digraph gen_alternating_cycle(int k) {
    if (k < 2) throw Error("alternating cycle needs k >= 2");
    const int n = 2 * k;
    Digraph d(n);
    for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        if (i % 2 == 0)
            d.add_arc(i, j);
        else
            d.add_arc(j, i);
    }
    return d;
}

Digraph gen_random_tournament(int n, std::uint64_t seed) {
    return gen_random_semicomplete(n, seed, 0.0);
}

Digraph gen_random_semicomplete(int n, std::uint64_t seed, double sym_prob) {
    if (n < 1) throw Error("vertex count must be positive");
    if (sym_prob < 0.0 || sym_prob > 1.0) throw Error("sym_prob must lie in [0,1]");
    std::mt19937_64 rng(seed);
    Digraph d(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng, sym_prob)) {
                d.add_arc(u, v);
                d.add_arc(v, u);
            } else if (draw(rng, 2) == 0) {
                d.add_arc(u, v);
            } else {
                d.add_arc(v, u);
            }
        }
    }
    return d;
}

Digraph gen_random_bounded_ctw(int n, int c, std::uint64_t seed) {
    if (n < 1) throw Error("vertex count must be positive");
    if (c < 0) throw Error("cutwidth bound must be nonnegative");
    std::mt19937_64 rng(seed);

    Digraph d(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) d.add_arc(u, v);

    // load[p] = size of cut p (1-indexed, between positions p and p+1) of the
    // identity ordering. A feedback arc (j,i) with i < j crosses cuts i+1..j.
    std::vector<int> load(n, 0);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    for (std::size_t k = pairs.size(); k > 1; --k)
        std::swap(pairs[k - 1], pairs[draw(rng, k)]);

    for (auto [i, j] : pairs) {
        if (!coin(rng, 0.75)) continue;
        bool fits = true;
        for (int p = i + 1; p <= j && fits; ++p) fits = load[p] < c;
        if (!fits) continue;
        for (int p = i + 1; p <= j; ++p) ++load[p];
        if (draw(rng, 2) == 0) {
            d.add_arc(j, i);  // symmetric pair
        } else {
            d.remove_arc(i, j);  // flip the pair's orientation
            d.add_arc(j, i);
        }
    }
    return d;
}

}  // namespace scimm
