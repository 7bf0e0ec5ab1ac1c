#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "recolor/generators.hpp"
#include "recolor/graph.hpp"
#include "recolor/oracle.hpp"

namespace testutil {

using namespace recolor;

inline ListInstance instance_from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                                        const std::vector<int>& shared_list, int a) {
    std::vector<std::vector<int>> lists(n, shared_list);
    return make_instance(Graph::from_edges(n, edges), std::move(lists), a);
}

// Seeded walk through the reconfiguration graph; `c` ends at the walk's end.
inline RecoloringSequence random_walk(const ListInstance& inst, Colouring& c, int steps,
                                      std::uint64_t seed) {
    SplitMix64 rng(seed);
    RecoloringSequence seq;
    for (int i = 0; i < steps; ++i) {
        auto moves = recolour_neighbours(inst, c);
        if (moves.empty()) break;
        const Colouring& next = moves[rng.below(moves.size())];
        for (int v = 0; v < inst.graph.n; ++v) {
            if (next[v] != c[v]) {
                seq.steps.push_back({v, next[v], c[v]});
                break;
            }
        }
        c = next;
    }
    return seq;
}

inline ListInstance random_list_instance(Family family, int n, int d, int k, int a,
                                         std::uint64_t seed) {
    GenSpec spec;
    spec.family = family;
    spec.n = n;
    spec.d = d;
    spec.seed = seed;
    Graph g = generate_graph(spec).graph;
    auto ord = degeneracy_ordering(g);
    auto lists = random_feasible_lists(g, ord, k, a, seed ^ 0xABCDEFULL);
    return make_instance(std::move(g), std::move(lists), a);
}

} // namespace testutil
