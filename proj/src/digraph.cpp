#include "scimm/digraph.hpp"

namespace scimm {

Digraph::Digraph(int n) : n_(n) {
    if (n < 0) throw Error("vertex count must be nonnegative");
    adj_.assign(static_cast<std::size_t>(n) * n, 0);
}

void Digraph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw Error("vertex index " + std::to_string(v) + " out of range [0," +
                    std::to_string(n_ - 1) + "]");
}

bool Digraph::has_arc(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
}

void Digraph::add_arc(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw Error("loop arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
    auto& cell = adj_[static_cast<std::size_t>(u) * n_ + v];
    if (cell) throw Error("duplicate arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
    cell = 1;
    ++m_;
}

void Digraph::remove_arc(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    auto& cell = adj_[static_cast<std::size_t>(u) * n_ + v];
    if (!cell) throw Error("cannot remove absent arc (" + std::to_string(u) + "," +
                           std::to_string(v) + ")");
    cell = 0;
    --m_;
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (adj_[static_cast<std::size_t>(u) * n_ + v]) out.push_back({u, v});
    return out;
}

std::vector<int> Digraph::out_neighbors(int u) const {
    check_vertex(u);
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (adj_[static_cast<std::size_t>(u) * n_ + v]) out.push_back(v);
    return out;
}

std::vector<int> Digraph::in_neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (adj_[static_cast<std::size_t>(u) * n_ + v]) out.push_back(u);
    return out;
}

int Digraph::out_degree(int u) const {
    check_vertex(u);
    int deg = 0;
    for (int v = 0; v < n_; ++v) deg += adj_[static_cast<std::size_t>(u) * n_ + v];
    return deg;
}

int Digraph::in_degree(int v) const {
    check_vertex(v);
    int deg = 0;
    for (int u = 0; u < n_; ++u) deg += adj_[static_cast<std::size_t>(u) * n_ + v];
    return deg;
}

SemiCompleteness validate_semi_complete(const Digraph& d) {
    SemiCompleteness r;
    r.semi_complete = true;
    r.tournament = true;
    for (int u = 0; u < d.vertex_count() && r.semi_complete; ++u) {
        for (int v = u + 1; v < d.vertex_count(); ++v) {
            const bool uv = d.has_arc(u, v), vu = d.has_arc(v, u);
            if (!uv && !vu) {
                r.semi_complete = false;
                r.tournament = false;
                r.missing_pair = {u, v};
                break;
            }
            if (uv && vu) r.tournament = false;
        }
    }
    return r;
}

std::vector<std::pair<int, int>> symmetric_pairs(const Digraph& d) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < d.vertex_count(); ++u)
        for (int v = u + 1; v < d.vertex_count(); ++v)
            if (d.has_arc(u, v) && d.has_arc(v, u)) out.emplace_back(u, v);
    return out;
}

}  // namespace scimm
