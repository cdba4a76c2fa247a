#pragma once

#include <string>
#include <vector>

#include "scimm/digraph.hpp"

namespace scimm {

// A permutation of V(d). Positions are 1-indexed (position arithmetic runs
// 1..n internally); vertices stay 0-indexed everywhere, including all
// serialized forms.
class VertexOrdering {
public:
    explicit VertexOrdering(std::vector<int> order);  // order[k] = vertex at position k+1
    static VertexOrdering identity(int n);

    int size() const noexcept { return static_cast<int>(order_.size()); }
    int vertex_at(int pos) const;   // pos in [1,n]
    int position_of(int v) const;   // result in [1,n]
    const std::vector<int>& vertices() const noexcept { return order_; }

    std::vector<int> prefix(int i) const;  // vertices at positions 1..i
    std::vector<int> suffix(int i) const;  // vertices at positions i+1..n

    bool operator==(const VertexOrdering&) const = default;

private:
    std::vector<int> order_;
    std::vector<int> pos_;  // vertex -> position (1-indexed)
};

// Cuts E^0..E^n of an ordering: E^i holds the arcs from the suffix after
// position i into the prefix up to position i (all feedback arcs).
class CutSequence {
public:
    CutSequence(int n, std::vector<std::vector<Arc>> cuts);

    int n() const noexcept { return n_; }
    const std::vector<Arc>& cut(int i) const;  // i in [0,n], arcs in lex order
    int size(int i) const { return static_cast<int>(cut(i).size()); }
    std::vector<int> cut_vector() const;
    int width() const;

private:
    int n_ = 0;
    std::vector<std::vector<Arc>> cuts_;
};

CutSequence cut_sequence(const Digraph& d, const VertexOrdering& pi);

bool is_feedback_arc(const VertexOrdering& pi, Arc a);

// Per cut index i, a numbering of the arcs of E^i: ordered_cut(i)[s-1] is the
// arc at position s.
class OrderedCutSequence {
public:
    explicit OrderedCutSequence(std::vector<std::vector<Arc>> cuts);

    int n() const noexcept { return static_cast<int>(cuts_.size()) - 1; }
    const std::vector<Arc>& ordered_cut(int i) const;
    int size(int i) const { return static_cast<int>(ordered_cut(i).size()); }
    int position_of(int i, Arc a) const;  // 1-indexed position, 0 if absent
    Arc arc_at(int i, int pos) const;     // pos in [1, size(i)]

    // Throws unless every ordered_cut(i) is a permutation of cuts.cut(i).
    void validate_against(const CutSequence& cuts) const;

private:
    std::vector<std::vector<Arc>> cuts_;
};

// Partition of a semi-complete digraph's arcs relative to an ordering:
// e1 is a tournament on V, e2 holds the surplus forward arc of every
// symmetric pair (its reverse, the feedback one, lands in e1).
struct ArcPartition {
    std::vector<Arc> e1;
    std::vector<Arc> e2;
    VertexOrdering ordering;

    Digraph tournament(int n) const;
};

ArcPartition partition_arcs(const Digraph& s, const VertexOrdering& pi);

std::string serialize_ordering(const VertexOrdering& pi);
std::string serialize_ordered_cuts(const OrderedCutSequence& sigma);

}  // namespace scimm
