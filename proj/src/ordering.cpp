#include "scimm/ordering.hpp"

#include <algorithm>
#include <sstream>

namespace scimm {

VertexOrdering::VertexOrdering(std::vector<int> order) : order_(std::move(order)) {
    const int n = static_cast<int>(order_.size());
    pos_.assign(n, 0);
    for (int k = 0; k < n; ++k) {
        const int v = order_[k];
        if (v < 0 || v >= n) throw Error("ordering mentions vertex " + std::to_string(v));
        if (pos_[v] != 0) throw Error("ordering repeats vertex " + std::to_string(v));
        pos_[v] = k + 1;
    }
}

VertexOrdering VertexOrdering::identity(int n) {
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    return VertexOrdering(std::move(order));
}

int VertexOrdering::vertex_at(int pos) const {
    if (pos < 1 || pos > size()) throw Error("position " + std::to_string(pos) + " out of range");
    return order_[pos - 1];
}

int VertexOrdering::position_of(int v) const {
    if (v < 0 || v >= size()) throw Error("vertex " + std::to_string(v) + " out of range");
    return pos_[v];
}

std::vector<int> VertexOrdering::prefix(int i) const {
    i = std::clamp(i, 0, size());
    return {order_.begin(), order_.begin() + i};
}

std::vector<int> VertexOrdering::suffix(int i) const {
    i = std::clamp(i, 0, size());
    return {order_.begin() + i, order_.end()};
}

CutSequence::CutSequence(int n, std::vector<std::vector<Arc>> cuts)
    : n_(n), cuts_(std::move(cuts)) {
    if (static_cast<int>(cuts_.size()) != n_ + 1) throw Error("cut sequence must have n+1 cuts");
}

const std::vector<Arc>& CutSequence::cut(int i) const {
    if (i < 0 || i > n_) throw Error("cut index " + std::to_string(i) + " out of range");
    return cuts_[i];
}

std::vector<int> CutSequence::cut_vector() const {
    std::vector<int> v(n_ + 1);
    for (int i = 0; i <= n_; ++i) v[i] = static_cast<int>(cuts_[i].size());
    return v;
}

int CutSequence::width() const {
    int w = 0;
    for (const auto& c : cuts_) w = std::max(w, static_cast<int>(c.size()));
    return w;
}

CutSequence cut_sequence(const Digraph& d, const VertexOrdering& pi) {
    const int n = d.vertex_count();
    if (pi.size() != n) throw Error("ordering size does not match digraph");
    std::vector<std::vector<Arc>> cuts(n + 1);
    for (const Arc& a : d.arcs()) {
        const int pt = pi.position_of(a.tail);
        const int ph = pi.position_of(a.head);
        // Arc lies in E^i exactly when ph <= i < pt.
        for (int i = ph; i < pt; ++i) cuts[i].push_back(a);
    }
    for (auto& c : cuts) std::sort(c.begin(), c.end());
    return CutSequence(n, std::move(cuts));
}

bool is_feedback_arc(const VertexOrdering& pi, Arc a) {
    return pi.position_of(a.tail) > pi.position_of(a.head);
}

OrderedCutSequence::OrderedCutSequence(std::vector<std::vector<Arc>> cuts)
    : cuts_(std::move(cuts)) {
    if (cuts_.empty()) throw Error("ordered cut sequence must have at least one cut");
}

const std::vector<Arc>& OrderedCutSequence::ordered_cut(int i) const {
    if (i < 0 || i > n()) throw Error("cut index " + std::to_string(i) + " out of range");
    return cuts_[i];
}

int OrderedCutSequence::position_of(int i, Arc a) const {
    const auto& c = ordered_cut(i);
    for (int s = 0; s < static_cast<int>(c.size()); ++s)
        if (c[s] == a) return s + 1;
    return 0;
}

Arc OrderedCutSequence::arc_at(int i, int pos) const {
    const auto& c = ordered_cut(i);
    if (pos < 1 || pos > static_cast<int>(c.size()))
        throw Error("cut position " + std::to_string(pos) + " out of range");
    return c[pos - 1];
}

void OrderedCutSequence::validate_against(const CutSequence& cuts) const {
    if (n() != cuts.n()) throw Error("ordered cuts: length mismatch");
    for (int i = 0; i <= n(); ++i) {
        std::vector<Arc> a = cuts_[i];
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            throw Error("ordered cut " + std::to_string(i) + " repeats an arc");
        if (a != cuts.cut(i))
            throw Error("ordered cut " + std::to_string(i) + " is not a permutation of E^" +
                        std::to_string(i));
    }
}

Digraph ArcPartition::tournament(int n) const {
    Digraph t(n);
    for (const Arc& a : e1) t.add_arc(a.tail, a.head);
    return t;
}

ArcPartition partition_arcs(const Digraph& s, const VertexOrdering& pi) {
    if (pi.size() != s.vertex_count()) throw Error("ordering size does not match digraph");
    ArcPartition part{{}, {}, pi};
    for (const Arc& a : s.arcs()) {
        if (!s.has_arc(a.head, a.tail)) {
            part.e1.push_back(a);
        } else if (pi.position_of(a.tail) < pi.position_of(a.head)) {
            // Symmetric pair: the forward arc goes to e2, its reverse (handled
            // when iteration reaches it) goes to e1.
            part.e2.push_back(a);
        } else {
            part.e1.push_back(a);
        }
    }
    return part;
}

std::string serialize_ordering(const VertexOrdering& pi) {
    std::ostringstream out;
    for (int k = 0; k < pi.size(); ++k) {
        if (k) out << ' ';
        out << pi.vertices()[k];
    }
    out << '\n';
    return out.str();
}

std::string serialize_ordered_cuts(const OrderedCutSequence& sigma) {
    std::ostringstream out;
    for (int i = 0; i <= sigma.n(); ++i) {
        out << i << ':';
        for (const Arc& a : sigma.ordered_cut(i)) out << " (" << a.tail << ',' << a.head << ')';
        out << '\n';
    }
    return out.str();
}

}  // namespace scimm
