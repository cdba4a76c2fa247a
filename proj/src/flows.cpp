#include "scimm/flows.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_set>

namespace scimm {

namespace {

// Dinic on the split graph: vertex v becomes v_in = 2v and v_out = 2v+1 with
// an uncapacitated internal arc, so super-source/sink attachments can never
// route flow without using a real arc.
class FlowNet {
public:
    explicit FlowNet(int nodes) : head_(nodes, -1) {}

    int add_edge(int from, int to, int cap) {
        const int id = static_cast<int>(to_.size());
        to_.push_back(to);
        cap_.push_back(cap);
        next_.push_back(head_[from]);
        head_[from] = id;
        to_.push_back(from);
        cap_.push_back(0);
        next_.push_back(head_[to]);
        head_[to] = id + 1;
        return id;
    }

    int max_flow(int s, int t, int limit) {
        int flow = 0;
        while (flow < limit && bfs(s, t)) {
            iter_ = head_;
            int pushed;
            while (flow < limit && (pushed = dfs(s, t, limit - flow)) > 0) flow += pushed;
        }
        return flow;
    }

    int edge_flow(int id) const { return cap_[id ^ 1]; }

private:
    bool bfs(int s, int t) {
        level_.assign(head_.size(), -1);
        std::queue<int> q;
        level_[s] = 0;
        q.push(s);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int e = head_[v]; e != -1; e = next_[e]) {
                if (cap_[e] > 0 && level_[to_[e]] < 0) {
                    level_[to_[e]] = level_[v] + 1;
                    q.push(to_[e]);
                }
            }
        }
        return level_[t] >= 0;
    }

    int dfs(int v, int t, int budget) {
        if (v == t) return budget;
        for (int& e = iter_[v]; e != -1; e = next_[e]) {
            const int w = to_[e];
            if (cap_[e] > 0 && level_[w] == level_[v] + 1) {
                const int got = dfs(w, t, std::min(budget, cap_[e]));
                if (got > 0) {
                    cap_[e] -= got;
                    cap_[e ^ 1] += got;
                    return got;
                }
            }
        }
        level_[v] = -1;
        return 0;
    }

    std::vector<int> head_, to_, cap_, next_, level_, iter_;
};

struct BuiltNet {
    FlowNet net;
    int src, dst;
    std::vector<std::pair<Arc, int>> arc_edges;  // original arc -> edge id
};

BuiltNet build_net(const Digraph& d, const std::vector<int>& sources,
                   const std::vector<int>& sinks) {
    const int n = d.vertex_count();
    const int src = 2 * n, dst = 2 * n + 1;
    const int big = d.arc_count() + 1;
    BuiltNet b{FlowNet(2 * n + 2), src, dst, {}};
    for (int v = 0; v < n; ++v) b.net.add_edge(2 * v, 2 * v + 1, big);
    for (const Arc& a : d.arcs()) {
        const int id = b.net.add_edge(2 * a.tail + 1, 2 * a.head, 1);
        b.arc_edges.emplace_back(a, id);
    }
    for (int s : sources) b.net.add_edge(src, 2 * s + 1, big);
    for (int t : sinks) b.net.add_edge(2 * t, dst, big);
    return b;
}

void check_endpoint_sets(const Digraph& d, const std::vector<int>& sources,
                         const std::vector<int>& sinks) {
    auto check = [&](const std::vector<int>& vs, const char* what) {
        std::set<int> seen;
        for (int v : vs) {
            if (v < 0 || v >= d.vertex_count())
                throw Error(std::string(what) + " vertex out of range");
            if (!seen.insert(v).second) throw Error(std::string(what) + " set repeats a vertex");
        }
    };
    check(sources, "source");
    check(sinks, "sink");
}

}  // namespace

int max_flow_value(const Digraph& d, const std::vector<int>& sources,
                   const std::vector<int>& sinks) {
    check_endpoint_sets(d, sources, sinks);
    if (sources.empty() || sinks.empty()) return 0;
    BuiltNet b = build_net(d, sources, sinks);
    return b.net.max_flow(b.src, b.dst, d.arc_count() + 1);
}

std::optional<PathSystem> max_arc_disjoint_paths(const Digraph& d,
                                                 const std::vector<int>& sources,
                                                 const std::vector<int>& sinks, int t,
                                                 bool allow_zero_length) {
    check_endpoint_sets(d, sources, sinks);
    if (t < 0) throw Error("path count must be nonnegative");

    PathSystem sys;
    int needed = t;
    if (allow_zero_length) {
        for (int s : sources)
            if (needed > 0 && std::find(sinks.begin(), sinks.end(), s) != sinks.end()) {
                sys.paths.push_back({s});
                --needed;
            }
    }
    if (needed == 0) return sys;
    if (sources.empty() || sinks.empty()) return std::nullopt;

    BuiltNet b = build_net(d, sources, sinks);
    if (b.net.max_flow(b.src, b.dst, needed) < needed) return std::nullopt;

    // Strip the flow into paths. flow_out[v] lists flow-carrying arcs leaving
    // v; walking from a source and excising loops yields simple paths.
    const int n = d.vertex_count();
    std::vector<std::vector<int>> flow_out(n);
    std::vector<Arc> arcs;
    for (auto [a, id] : b.arc_edges)
        if (b.net.edge_flow(id) > 0) {
            flow_out[a.tail].push_back(static_cast<int>(arcs.size()));
            arcs.push_back(a);
        }
    std::vector<char> used(arcs.size(), 0);

    // Recover per-source / per-sink flow from the super edges, which were
    // added right after the n internal and m arc edges.
    std::vector<int> source_credit(n, 0), sink_credit(n, 0);
    {
        int edge_id = 2 * (n + static_cast<int>(b.arc_edges.size()));
        for (int s : sources) {
            source_credit[s] = b.net.edge_flow(edge_id);
            edge_id += 2;
        }
        for (int snk : sinks) {
            sink_credit[snk] = b.net.edge_flow(edge_id);
            edge_id += 2;
        }
    }

    for (int s : sources) {
        while (source_credit[s] > 0) {
            --source_credit[s];
            std::vector<int> walk{s};
            std::vector<int> walk_arcs;
            int cur = s;
            while (true) {
                if (sink_credit[cur] > 0) {
                    --sink_credit[cur];
                    break;
                }
                int chosen = -1;
                for (int id : flow_out[cur])
                    if (!used[id]) {
                        chosen = id;
                        break;
                    }
                if (chosen < 0) throw Error("internal: flow decomposition stuck");
                used[chosen] = 1;
                cur = arcs[chosen].head;
                auto seen = std::find(walk.begin(), walk.end(), cur);
                if (seen != walk.end()) {
                    // Excise the loop: free its arcs and rewind.
                    const auto idx = seen - walk.begin();
                    for (std::size_t k = idx; k < walk_arcs.size(); ++k) used[walk_arcs[k]] = 0;
                    walk.resize(idx + 1);
                    walk_arcs.resize(idx);
                } else {
                    walk.push_back(cur);
                    walk_arcs.push_back(chosen);
                }
            }
            sys.paths.push_back(std::move(walk));
        }
    }
    if (static_cast<int>(sys.paths.size()) < t) throw Error("internal: lost flow paths");
    sys.paths.resize(t);
    return sys;
}

namespace {

// Backtracking search for position-respecting path systems. Every arc of
// either end cut is some path's designated first or last arc, so routes must
// keep off all of them; a completed route therefore never strays across the
// end cuts.
class MatchedSearch {
public:
    MatchedSearch(const Digraph& d, std::vector<Arc> firsts, std::vector<Arc> lasts)
        : d_(d), firsts_(std::move(firsts)), lasts_(std::move(lasts)) {
        for (const Arc& a : d_.arcs()) {
            arc_index_[key(a)] = static_cast<int>(arcs_.size());
            arcs_.push_back(a);
        }
        used_.assign(arcs_.size(), 0);
        reserved_.assign(arcs_.size(), 0);
        for (const Arc& a : firsts_) reserved_[id(a)] = 1;
        for (const Arc& a : lasts_) reserved_[id(a)] = 1;
    }

    std::optional<PathSystem> run() {
        paths_.assign(firsts_.size(), {});
        if (solve(0)) {
            PathSystem sys;
            sys.paths = paths_;
            return sys;
        }
        return std::nullopt;
    }

private:
    long key(Arc a) const { return static_cast<long>(a.tail) * d_.vertex_count() + a.head; }
    int id(Arc a) const { return arc_index_.at(key(a)); }

    std::string memo_key(int s) const {
        std::string k(used_.begin(), used_.end());
        k.push_back(static_cast<char>(s));
        return k;
    }

    // Relaxed check: ignore the pairing, ask for enough arc-disjoint flow
    // among the remaining route endpoints in the unused, unreserved graph.
    bool feasible_remaining(int s) const {
        const int t = static_cast<int>(firsts_.size());
        std::vector<int> from, to;
        for (int r = s; r < t; ++r) {
            if (firsts_[r] == lasts_[r]) continue;
            if (firsts_[r].head == lasts_[r].tail) continue;
            from.push_back(firsts_[r].head);
            to.push_back(lasts_[r].tail);
        }
        if (from.empty()) return true;
        const int n = d_.vertex_count();
        FlowNet net(2 * n + 2);
        const int big = static_cast<int>(arcs_.size()) + 1;
        for (int v = 0; v < n; ++v) net.add_edge(2 * v, 2 * v + 1, big);
        for (std::size_t k = 0; k < arcs_.size(); ++k)
            if (!used_[k] && !reserved_[k])
                net.add_edge(2 * arcs_[k].tail + 1, 2 * arcs_[k].head, 1);
        const int src = 2 * n, dst = src + 1;
        for (int v : from) net.add_edge(src, 2 * v + 1, 1);
        for (int v : to) net.add_edge(2 * v, dst, 1);
        return net.max_flow(src, dst, static_cast<int>(from.size())) ==
               static_cast<int>(from.size());
    }

    bool solve(int s) {
        if (s == static_cast<int>(firsts_.size())) return true;
        const std::string mk = memo_key(s);
        if (failed_.count(mk)) return false;
        bool ok = solve_inner(s);
        if (!ok) failed_.insert(mk);
        return ok;
    }

    bool solve_inner(int s) {
        const Arc first = firsts_[s], last = lasts_[s];
        const int fid = id(first), lid = id(last);
        if (first == last) {
            if (used_[fid]) return false;
            used_[fid] = 1;
            paths_[s] = {first.tail, first.head};
            if (solve(s + 1)) return true;
            used_[fid] = 0;
            return false;
        }
        if (used_[fid] || used_[lid]) return false;
        used_[fid] = used_[lid] = 1;
        if (feasible_remaining(s)) {
            std::vector<char> on_route(d_.vertex_count(), 0);
            on_route[first.head] = 1;
            std::vector<int> route{first.head};
            if (extend_route(s, route, on_route)) return true;
        }
        used_[fid] = used_[lid] = 0;
        return false;
    }

    // Vertex-simple route from route.back() to lasts_[s].tail avoiding used
    // and reserved arcs; on reaching the target, recurse into the next path.
    bool extend_route(int s, std::vector<int>& route, std::vector<char>& on_route) {
        const int cur = route.back();
        if (cur == lasts_[s].tail) {
            // Vertex-simple routes cannot revisit the target, so finishing
            // here is the only continuation.
            paths_[s].clear();
            paths_[s].push_back(firsts_[s].tail);
            for (int v : route) paths_[s].push_back(v);
            paths_[s].push_back(lasts_[s].head);
            return solve(s + 1);
        }
        for (int w : d_.out_neighbors(cur)) {
            if (on_route[w]) continue;
            const auto it = arc_index_.find(key({cur, w}));
            const int aid = it->second;
            if (reserved_[aid] || used_[aid]) continue;
            used_[aid] = 1;
            on_route[w] = 1;
            route.push_back(w);
            if (extend_route(s, route, on_route)) return true;
            route.pop_back();
            on_route[w] = 0;
            used_[aid] = 0;
        }
        return false;
    }

    const Digraph& d_;
    std::vector<Arc> firsts_, lasts_;
    std::vector<Arc> arcs_;
    std::map<long, int> arc_index_;
    std::vector<char> reserved_, used_;
    std::vector<std::vector<int>> paths_;
    std::unordered_set<std::string> failed_;
};

}  // namespace

std::optional<PathSystem> endpoint_matched_paths(const Digraph& d, const VertexOrdering& pi,
                                                 int i, int j, const std::vector<Arc>& eps_i,
                                                 const std::vector<Arc>& eps_j) {
    if (i > j) throw Error("cut pair must satisfy i <= j");
    if (eps_i.size() != eps_j.size()) throw Error("endpoint-matched cuts differ in size");
    const int t = static_cast<int>(eps_i.size());
    for (int s = 0; s < t; ++s) {
        if (pi.position_of(eps_j[s].tail) <= j || pi.position_of(eps_j[s].head) > j)
            throw Error("arc does not cross cut " + std::to_string(j));
        if (pi.position_of(eps_i[s].tail) <= i || pi.position_of(eps_i[s].head) > i)
            throw Error("arc does not cross cut " + std::to_string(i));
    }
    if (i == j) {
        // Degenerate pair: every position's arc is its own one-arc path.
        PathSystem sys;
        for (int s = 0; s < t; ++s) {
            if (eps_i[s] != eps_j[s]) return std::nullopt;
            sys.paths.push_back({eps_i[s].tail, eps_i[s].head});
        }
        return sys;
    }
    MatchedSearch search(d, eps_j, eps_i);
    return search.run();
}

void validate_path_system(const Digraph& d, const std::vector<int>& sources,
                          const std::vector<int>& sinks, const PathSystem& sys) {
    std::set<std::pair<int, int>> seen;
    for (const auto& p : sys.paths) {
        if (p.empty()) throw Error("path system contains an empty path");
        if (std::find(sources.begin(), sources.end(), p.front()) == sources.end())
            throw Error("path does not start at a source");
        if (std::find(sinks.begin(), sinks.end(), p.back()) == sinks.end())
            throw Error("path does not end at a sink");
        for (std::size_t k = 0; k + 1 < p.size(); ++k) {
            if (!d.has_arc(p[k], p[k + 1]))
                throw Error("path uses absent arc (" + std::to_string(p[k]) + "," +
                            std::to_string(p[k + 1]) + ")");
            if (!seen.insert({p[k], p[k + 1]}).second)
                throw Error("paths share arc (" + std::to_string(p[k]) + "," +
                            std::to_string(p[k + 1]) + ")");
        }
    }
}

std::string serialize_path_system(const PathSystem& sys) {
    std::ostringstream out;
    for (const auto& p : sys.paths) {
        for (std::size_t k = 0; k < p.size(); ++k) {
            if (k) out << ' ';
            out << p[k];
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace scimm
