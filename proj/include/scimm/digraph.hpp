#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace scimm {

// Input/contract violations (bad files, broken preconditions, exceeded limits).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Arc {
    int tail = 0;
    int head = 0;
    auto operator<=>(const Arc&) const = default;
};

// Simple digraph on vertices 0..n-1: no loops, no duplicate arcs.
// Both (u,v) and (v,u) may be present (a symmetric pair).
// Dense adjacency matrix; instances stay small.
class Digraph {
public:
    explicit Digraph(int n);

    int vertex_count() const noexcept { return n_; }
    int arc_count() const noexcept { return m_; }

    bool has_arc(int u, int v) const;
    bool has_arc(Arc a) const { return has_arc(a.tail, a.head); }

    void add_arc(int u, int v);     // throws Error on loop, duplicate, or bad index
    void remove_arc(int u, int v);  // throws Error if absent

    std::vector<Arc> arcs() const;  // lexicographic by (tail, head)
    std::vector<int> out_neighbors(int u) const;
    std::vector<int> in_neighbors(int v) const;
    int out_degree(int u) const;
    int in_degree(int v) const;

    bool operator==(const Digraph&) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<std::uint8_t> adj_;  // row-major n*n
};

struct SemiCompleteness {
    bool semi_complete = false;
    bool tournament = false;
    // A pair {u,v} with neither arc present, when not semi-complete.
    std::optional<std::pair<int, int>> missing_pair;
};

// Semi-complete: every unordered pair carries at least one arc.
// Tournament: exactly one arc per pair.
SemiCompleteness validate_semi_complete(const Digraph& d);

// Unordered pairs {u,v}, u < v, with both directions present.
std::vector<std::pair<int, int>> symmetric_pairs(const Digraph& d);

}  // namespace scimm
