#include "recolor/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <string>

namespace recolor {

Graph::Graph(int vertices) : n(vertices), adj(static_cast<std::size_t>(vertices)) {
    if (vertices < 0) throw input_error("vertex count must be non-negative");
}

Graph Graph::from_edges(int vertices, const std::vector<std::pair<int, int>>& edges) {
    Graph g(vertices);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw input_error("edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v) throw input_error("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v)) throw input_error("parallel edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    adj[u].insert(std::lower_bound(adj[u].begin(), adj[u].end(), v), v);
    adj[v].insert(std::lower_bound(adj[v].begin(), adj[v].end(), u), u);
}

bool Graph::has_edge(int u, int v) const {
    const auto& a = adj[u].size() <= adj[v].size() ? adj[u] : adj[v];
    int target = adj[u].size() <= adj[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), target);
}

int Graph::edge_count() const {
    std::size_t total = 0;
    for (const auto& a : adj) total += a.size();
    return static_cast<int>(total / 2);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

DegeneracyOrdering degeneracy_ordering(const Graph& g) {
    DegeneracyOrdering ord;
    ord.order.reserve(g.n);
    ord.position.assign(g.n, -1);
    ord.outdeg.assign(g.n, 0);

    std::vector<int> deg(g.n);
    std::set<std::pair<int, int>> queue; // (current degree, vertex)
    for (int v = 0; v < g.n; ++v) {
        deg[v] = g.degree(v);
        queue.emplace(deg[v], v);
    }
    std::vector<char> removed(g.n, 0);
    while (!queue.empty()) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        removed[v] = 1;
        ord.position[v] = static_cast<int>(ord.order.size());
        ord.order.push_back(v);
        ord.outdeg[v] = d; // neighbours still present are exactly the later ones
        ord.degeneracy = std::max(ord.degeneracy, d);
        for (int u : g.adj[v]) {
            if (removed[u]) continue;
            queue.erase({deg[u], u});
            --deg[u];
            queue.emplace(deg[u], u);
        }
    }
    return ord;
}

std::vector<int> out_neighbours(const Graph& g, const DegeneracyOrdering& ord, int v) {
    std::vector<int> out;
    for (int u : g.adj[v])
        if (ord.position[u] > ord.position[v]) out.push_back(u);
    return out;
}

std::vector<int> ListInstance::palette() const {
    std::vector<int> all;
    for (const auto& l : lists) all.insert(all.end(), l.begin(), l.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

int ListInstance::colour_count() const { return static_cast<int>(palette().size()); }

bool ListInstance::in_list(int v, int colour) const {
    const auto& l = lists[v];
    return std::binary_search(l.begin(), l.end(), colour);
}

ListInstance make_instance(Graph g, std::vector<std::vector<int>> lists, int slack) {
    if (static_cast<int>(lists.size()) != g.n)
        throw input_error("list count does not match vertex count");
    if (slack < 0) throw input_error("slack must be non-negative");
    for (auto& l : lists) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
        if (!l.empty() && l.front() < 0) throw input_error("colours must be non-negative");
    }
    ListInstance inst;
    inst.ordering = degeneracy_ordering(g);
    inst.graph = std::move(g);
    inst.lists = std::move(lists);
    inst.slack = slack;
    return inst;
}

ListInstance make_uniform_instance(Graph g, int k, int slack) {
    if (k < 1) throw input_error("colour count must be positive");
    std::vector<int> full(k);
    std::iota(full.begin(), full.end(), 0);
    std::vector<std::vector<int>> lists(g.n, full);
    auto ord = degeneracy_ordering(g);
    if (slack < 0) slack = std::max(0, k - 1 - ord.degeneracy);
    ListInstance inst;
    inst.graph = std::move(g);
    inst.ordering = std::move(ord);
    inst.lists = std::move(lists);
    inst.slack = slack;
    return inst;
}

bool is_feasible(const ListInstance& inst) {
    for (int v = 0; v < inst.graph.n; ++v)
        if (static_cast<int>(inst.lists[v].size()) < inst.ordering.outdeg[v] + inst.slack + 1)
            return false;
    return true;
}

bool is_proper(const Graph& g, const Colouring& c) {
    if (static_cast<int>(c.size()) != g.n)
        throw input_error("colouring length does not match vertex count");
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            if (u < v && c[u] == c[v]) return false;
    return true;
}

bool is_list_colouring(const ListInstance& inst, const Colouring& c) {
    if (!is_proper(inst.graph, c)) return false;
    for (int v = 0; v < inst.graph.n; ++v)
        if (!inst.in_list(v, c[v])) return false;
    return true;
}

Colouring greedy_colouring(const ListInstance& inst, const std::vector<int>& preference) {
    const Graph& g = inst.graph;
    {
        std::vector<int> sorted = preference;
        std::sort(sorted.begin(), sorted.end());
        for (int colour : inst.palette())
            if (!std::binary_search(sorted.begin(), sorted.end(), colour))
                throw precondition_error("greedy preference misses colour " + std::to_string(colour));
    }
    Colouring c(g.n, -1);
    for (int pos = g.n - 1; pos >= 0; --pos) {
        int v = inst.ordering.order[pos];
        int chosen = -1;
        for (int colour : preference) {
            if (!inst.in_list(v, colour)) continue;
            bool blocked = false;
            for (int u : g.adj[v]) {
                if (c[u] == colour) {
                    blocked = true;
                    break;
                }
            }
            if (!blocked) {
                chosen = colour;
                break;
            }
        }
        if (chosen < 0)
            throw precondition_error("greedy colouring stuck at vertex " + std::to_string(v) +
                                     ": no admissible colour (instance infeasible?)");
        c[v] = chosen;
    }
    return c;
}

std::vector<int> RecoloringSequence::per_vertex_counts(int n) const {
    std::vector<int> counts(n, 0);
    for (const Step& s : steps)
        if (s.v >= 0 && s.v < n) ++counts[s.v];
    return counts;
}

int RecoloringSequence::max_per_vertex(int n) const {
    auto counts = per_vertex_counts(n);
    return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

RecoloringSequence RecoloringSequence::reversed() const {
    RecoloringSequence rev;
    rev.steps.reserve(steps.size());
    for (auto it = steps.rbegin(); it != steps.rend(); ++it)
        rev.steps.push_back({it->v, it->from, it->to});
    return rev;
}

void RecoloringSequence::append(const RecoloringSequence& tail) {
    steps.insert(steps.end(), tail.steps.begin(), tail.steps.end());
}

Colouring apply_sequence(const Colouring& start, const RecoloringSequence& seq) {
    Colouring c = start;
    for (const Step& s : seq.steps) c[s.v] = s.to;
    return c;
}

ValidationReport validate_sequence(const ListInstance& inst, const Colouring& start,
                                   const RecoloringSequence& seq, const Colouring& target) {
    const Graph& g = inst.graph;
    ValidationReport report;
    report.total_length = seq.length();
    report.per_vertex = seq.per_vertex_counts(g.n);
    report.start_ok = static_cast<int>(start.size()) == g.n && is_list_colouring(inst, start);
    if (!report.start_ok) return report;

    Colouring cur = start;
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        const Step& s = seq.steps[i];
        bool ok = s.v >= 0 && s.v < g.n && s.to != cur[s.v] && inst.in_list(s.v, s.to);
        if (ok) {
            for (int u : g.adj[s.v]) {
                if (cur[u] == s.to) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) {
            report.first_bad_step = static_cast<long>(i);
            return report;
        }
        cur[s.v] = s.to;
    }
    report.valid = true;
    report.reaches_target = static_cast<int>(target.size()) == g.n &&
                            std::equal(cur.begin(), cur.end(), target.begin());
    return report;
}

namespace {

SubInstance build_sub(const ListInstance& inst, const std::vector<int>& keep,
                      std::vector<std::vector<int>> sub_lists) {
    const Graph& g = inst.graph;
    std::vector<int> to_sub(g.n, -1);
    for (std::size_t i = 0; i < keep.size(); ++i) to_sub[keep[i]] = static_cast<int>(i);

    Graph sub(static_cast<int>(keep.size()));
    for (int v : keep)
        for (int u : g.adj[v])
            if (u > v && to_sub[u] >= 0) sub.add_edge(to_sub[v], to_sub[u]);

    // The ordering is inherited, not re-peeled: feasibility guarantees are
    // stated against the parent's order.
    DegeneracyOrdering ord;
    ord.position.assign(sub.n, -1);
    ord.outdeg.assign(sub.n, 0);
    std::vector<int> kept_by_pos = keep;
    std::sort(kept_by_pos.begin(), kept_by_pos.end(),
              [&](int a, int b) { return inst.ordering.position[a] < inst.ordering.position[b]; });
    for (int v : kept_by_pos) {
        ord.position[to_sub[v]] = static_cast<int>(ord.order.size());
        ord.order.push_back(to_sub[v]);
    }
    for (int v = 0; v < sub.n; ++v) {
        int later = 0;
        for (int u : sub.adj[v])
            if (ord.position[u] > ord.position[v]) ++later;
        ord.outdeg[v] = later;
        ord.degeneracy = std::max(ord.degeneracy, later);
    }

    SubInstance out;
    out.instance.graph = std::move(sub);
    out.instance.ordering = std::move(ord);
    out.instance.lists = std::move(sub_lists);
    out.instance.slack = inst.slack;
    out.to_parent = keep;
    return out;
}

std::vector<int> checked_keep(const ListInstance& inst, std::vector<int> keep) {
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (int v : keep)
        if (v < 0 || v >= inst.graph.n) throw input_error("kept vertex out of range");
    return keep;
}

} // namespace

SubInstance restrict_instance(const ListInstance& inst, const Colouring& c,
                              const std::vector<int>& keep_in) {
    auto keep = checked_keep(inst, keep_in);
    if (static_cast<int>(c.size()) != inst.graph.n)
        throw input_error("colouring length does not match vertex count");
    std::vector<char> kept(inst.graph.n, 0);
    for (int v : keep) kept[v] = 1;

    std::vector<std::vector<int>> sub_lists;
    sub_lists.reserve(keep.size());
    for (int v : keep) {
        std::vector<int> l = inst.lists[v];
        for (int u : inst.graph.adj[v]) {
            if (kept[u]) continue;
            auto it = std::lower_bound(l.begin(), l.end(), c[u]);
            if (it != l.end() && *it == c[u]) l.erase(it);
        }
        sub_lists.push_back(std::move(l));
    }
    return build_sub(inst, keep, std::move(sub_lists));
}

SubInstance induced_instance(const ListInstance& inst, const std::vector<int>& keep_in,
                             const std::vector<int>& removed_colours) {
    auto keep = checked_keep(inst, keep_in);
    std::vector<int> removed = removed_colours;
    std::sort(removed.begin(), removed.end());

    std::vector<std::vector<int>> sub_lists;
    sub_lists.reserve(keep.size());
    for (int v : keep) {
        std::vector<int> l;
        for (int colour : inst.lists[v])
            if (!std::binary_search(removed.begin(), removed.end(), colour)) l.push_back(colour);
        sub_lists.push_back(std::move(l));
    }
    return build_sub(inst, keep, std::move(sub_lists));
}

RecoloringSequence lift_sequence(const RecoloringSequence& seq, const std::vector<int>& to_parent) {
    RecoloringSequence out;
    out.steps.reserve(seq.steps.size());
    for (const Step& s : seq.steps) out.steps.push_back({to_parent[s.v], s.to, s.from});
    return out;
}

std::optional<std::vector<int>> two_colour_sides(const Graph& g) {
    std::vector<int> side(g.n, -1);
    std::queue<int> bfs;
    for (int start = 0; start < g.n; ++start) {
        if (side[start] >= 0) continue;
        side[start] = 0;
        bfs.push(start);
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop();
            for (int u : g.adj[v]) {
                if (side[u] < 0) {
                    side[u] = 1 - side[v];
                    bfs.push(u);
                } else if (side[u] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

std::vector<int> component_ids(const Graph& g) {
    std::vector<int> comp(g.n, -1);
    int next = 0;
    std::queue<int> bfs;
    for (int start = 0; start < g.n; ++start) {
        if (comp[start] >= 0) continue;
        comp[start] = next;
        bfs.push(start);
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop();
            for (int u : g.adj[v])
                if (comp[u] < 0) {
                    comp[u] = next;
                    bfs.push(u);
                }
        }
        ++next;
    }
    return comp;
}

} // namespace recolor
