#include "recolor/generators.hpp"

#include <algorithm>
#include <numeric>

namespace recolor {

namespace {

GeneratedGraph make_path(int n) {
    GeneratedGraph out;
    out.graph = Graph(n);
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v + 1 < n; ++v) out.graph.add_edge(v, v + 1);
    for (int v = 0; v < n; ++v) rot[v] = out.graph.adj[v];
    out.rotation = std::move(rot);
    return out;
}

GeneratedGraph make_cycle(int n) {
    if (n < 3) throw input_error("cycle needs at least 3 vertices");
    GeneratedGraph out;
    out.graph = Graph(n);
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) out.graph.add_edge(v, (v + 1) % n);
    for (int v = 0; v < n; ++v) rot[v] = {(v + n - 1) % n, (v + 1) % n};
    out.rotation = std::move(rot);
    return out;
}

GeneratedGraph make_tree(int n, std::uint64_t seed) {
    GeneratedGraph out;
    out.graph = Graph(n);
    SplitMix64 rng(seed);
    for (int v = 1; v < n; ++v)
        out.graph.add_edge(v, static_cast<int>(rng.below(static_cast<std::uint64_t>(v))));
    return out;
}

GeneratedGraph make_grid(int rows, int cols) {
    if (rows < 1 || cols < 1) throw input_error("grid needs positive dimensions");
    const int n = rows * cols;
    GeneratedGraph out;
    out.graph = Graph(n);
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) out.graph.add_edge(id(r, c), id(r, c + 1));
            if (r + 1 < rows) out.graph.add_edge(id(r, c), id(r + 1, c));
        }
    // clockwise: up, right, down, left
    std::vector<std::vector<int>> rot(n);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            auto& order = rot[id(r, c)];
            if (r > 0) order.push_back(id(r - 1, c));
            if (c + 1 < cols) order.push_back(id(r, c + 1));
            if (r + 1 < rows) order.push_back(id(r + 1, c));
            if (c > 0) order.push_back(id(r, c - 1));
        }
    out.rotation = std::move(rot);
    return out;
}

GeneratedGraph make_random_degenerate(int n, int d, std::uint64_t seed) {
    if (d < 1) throw input_error("attachment degree must be positive");
    GeneratedGraph out;
    out.graph = Graph(n);
    SplitMix64 rng(seed);
    for (int v = 1; v < n; ++v) {
        int want = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(d)));
        want = std::min(want, v);
        std::vector<int> targets;
        while (static_cast<int>(targets.size()) < want) {
            int t = static_cast<int>(rng.below(static_cast<std::uint64_t>(v)));
            if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
        }
        for (int t : targets) out.graph.add_edge(v, t);
    }
    return out;
}

GeneratedGraph make_prism(int n) {
    // prism over an even cycle: outer ring 0..m-1, inner ring m..2m-1
    if (n < 8 || n % 4 != 0) throw input_error("prism needs n divisible by 4, at least 8");
    const int m = n / 2;
    GeneratedGraph out;
    out.graph = Graph(n);
    std::vector<std::vector<int>> rot(n);
    for (int i = 0; i < m; ++i) {
        int next = (i + 1) % m, prev = (i + m - 1) % m;
        out.graph.add_edge(i, next);
        out.graph.add_edge(m + i, m + next);
        out.graph.add_edge(i, m + i);
        rot[i] = {next, prev, m + i};
        rot[m + i] = {m + next, i, m + prev};
    }
    out.rotation = std::move(rot);
    return out;
}

// Replace edge (u,v) by the path u - z1 - z2 - v, keeping parity and the
// rotation consistent; z1 and z2 are new vertices.
void subdivide_edge(Graph& g, std::vector<std::vector<int>>& rot, int u, int v) {
    const int z1 = g.n, z2 = g.n + 1;
    g.n += 2;
    g.adj.resize(g.n);
    rot.resize(g.n);
    auto& au = g.adj[u];
    au.erase(std::find(au.begin(), au.end(), v));
    auto& av = g.adj[v];
    av.erase(std::find(av.begin(), av.end(), u));
    g.add_edge(u, z1);
    g.add_edge(z1, z2);
    g.add_edge(z2, v);
    *std::find(rot[u].begin(), rot[u].end(), v) = z1;
    *std::find(rot[v].begin(), rot[v].end(), u) = z2;
    rot[z1] = {u, z2};
    rot[z2] = {z1, v};
}

GeneratedGraph make_random_planar_bipartite(int rows, int cols, int subdivisions,
                                            std::uint64_t seed) {
    GeneratedGraph grid = make_grid(rows, cols);
    SplitMix64 rng(seed);

    // random induced subgraph of the grid (keep roughly 4 in 5 vertices)
    std::vector<int> keep;
    for (int v = 0; v < grid.graph.n; ++v)
        if (rng.below(5) != 0) keep.push_back(v);
    if (keep.empty()) keep.push_back(0);
    std::vector<int> to_sub(grid.graph.n, -1);
    for (std::size_t i = 0; i < keep.size(); ++i) to_sub[keep[i]] = static_cast<int>(i);

    GeneratedGraph out;
    out.graph = Graph(static_cast<int>(keep.size()));
    std::vector<std::vector<int>> rot(keep.size());
    for (int v : keep)
        for (int u : (*grid.rotation)[v])
            if (to_sub[u] >= 0) {
                rot[to_sub[v]].push_back(to_sub[u]);
                if (to_sub[u] > to_sub[v]) out.graph.add_edge(to_sub[v], to_sub[u]);
            }

    for (int i = 0; i < subdivisions; ++i) {
        auto edges = out.graph.edges();
        if (edges.empty()) break;
        auto [u, v] = edges[rng.below(edges.size())];
        subdivide_edge(out.graph, rot, u, v);
    }
    out.rotation = std::move(rot);
    return out;
}

} // namespace

Family family_from_name(const std::string& name) {
    if (name == "path") return Family::Path;
    if (name == "cycle") return Family::Cycle;
    if (name == "tree") return Family::Tree;
    if (name == "grid") return Family::Grid;
    if (name == "random-d-degenerate") return Family::RandomDegenerate;
    if (name == "random-planar-bipartite") return Family::RandomPlanarBipartite;
    if (name == "prism") return Family::Prism;
    throw input_error("unknown family: " + name);
}

std::string family_name(Family family) {
    switch (family) {
        case Family::Path: return "path";
        case Family::Cycle: return "cycle";
        case Family::Tree: return "tree";
        case Family::Grid: return "grid";
        case Family::RandomDegenerate: return "random-d-degenerate";
        case Family::RandomPlanarBipartite: return "random-planar-bipartite";
        case Family::Prism: return "prism";
    }
    throw input_error("unknown family");
}

GeneratedGraph generate_graph(const GenSpec& spec) {
    switch (spec.family) {
        case Family::Path:
            if (spec.n < 0) throw input_error("path needs n >= 0");
            return make_path(spec.n);
        case Family::Cycle: return make_cycle(spec.n);
        case Family::Tree:
            if (spec.n < 1) throw input_error("tree needs n >= 1");
            return make_tree(spec.n, spec.seed);
        case Family::Grid: return make_grid(spec.rows, spec.cols);
        case Family::RandomDegenerate:
            if (spec.n < 1) throw input_error("random-d-degenerate needs n >= 1");
            return make_random_degenerate(spec.n, spec.d, spec.seed);
        case Family::RandomPlanarBipartite:
            return make_random_planar_bipartite(spec.rows, spec.cols, spec.subdivisions, spec.seed);
        case Family::Prism: return make_prism(spec.n);
    }
    throw input_error("unknown family");
}

Colouring random_colouring(const ListInstance& inst, std::uint64_t seed) {
    if (!is_feasible(inst))
        throw precondition_error("random_colouring: instance is not feasible");
    std::vector<int> preference = inst.palette();
    SplitMix64 rng(seed);
    rng.shuffle(preference);
    return greedy_colouring(inst, preference);
}

Colouring perturb_colouring(const ListInstance& inst, Colouring c, int steps, std::uint64_t seed) {
    if (inst.graph.n == 0) return c;
    SplitMix64 rng(seed);
    for (int step = 0; step < steps; ++step) {
        for (int attempt = 0; attempt < 8; ++attempt) {
            int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(inst.graph.n)));
            const auto& list = inst.lists[v];
            if (list.size() < 2) continue;
            int colour = list[rng.below(list.size())];
            if (colour == c[v]) continue;
            bool blocked = false;
            for (int u : inst.graph.adj[v])
                if (c[u] == colour) {
                    blocked = true;
                    break;
                }
            if (blocked) continue;
            c[v] = colour;
            break;
        }
    }
    return c;
}

std::vector<std::vector<int>> random_feasible_lists(const Graph& g, const DegeneracyOrdering& ord,
                                                    int k, int a, std::uint64_t seed) {
    if (a < 0 || k < 1) throw input_error("random lists need k >= 1 and a >= 0");
    SplitMix64 rng(seed);
    std::vector<std::vector<int>> lists(g.n);
    std::vector<int> palette(k);
    std::iota(palette.begin(), palette.end(), 0);
    for (int v = 0; v < g.n; ++v) {
        int need = ord.outdeg[v] + a + 1;
        int size = std::min(k, need + static_cast<int>(rng.below(2)));
        if (size < need)
            throw precondition_error("random lists infeasible: vertex " + std::to_string(v) +
                                     " needs " + std::to_string(need) + " colours, palette has " +
                                     std::to_string(k));
        std::vector<int> shuffled = palette;
        rng.shuffle(shuffled);
        lists[v].assign(shuffled.begin(), shuffled.begin() + size);
        std::sort(lists[v].begin(), lists[v].end());
    }
    // pad stray colours into random vertices so the union is the palette
    for (int colour = 0; colour < k && g.n > 0; ++colour) {
        bool present = false;
        for (const auto& l : lists)
            if (std::binary_search(l.begin(), l.end(), colour)) {
                present = true;
                break;
            }
        if (present) continue;
        auto& l = lists[rng.below(static_cast<std::uint64_t>(g.n))];
        l.insert(std::lower_bound(l.begin(), l.end(), colour), colour);
    }
    return lists;
}

} // namespace recolor
