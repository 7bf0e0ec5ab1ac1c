#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "recolor/errors.hpp"

namespace recolor {

/// Simple undirected graph on vertices 0..n-1. No loops, no parallel edges.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj; // sorted neighbour lists, symmetric

    Graph() = default;
    explicit Graph(int vertices);
    static Graph from_edges(int vertices, const std::vector<std::pair<int, int>>& edges);

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const; // u < v, lexicographic
};

/// Peeling order v_1..v_n: repeatedly remove a minimum-degree vertex
/// (lowest id on ties). outdeg(v) counts neighbours later in the order;
/// its maximum is the degeneracy.
struct DegeneracyOrdering {
    std::vector<int> order;    // order[i] = vertex at position i, v_1 first
    std::vector<int> position; // inverse of order
    std::vector<int> outdeg;   // per vertex, neighbours later in order
    int degeneracy = 0;
};

DegeneracyOrdering degeneracy_ordering(const Graph& g);

/// Neighbours of v that come later in the ordering.
std::vector<int> out_neighbours(const Graph& g, const DegeneracyOrdering& ord, int v);

using Colouring = std::vector<int>;

/// Graph + ordering + per-vertex colour lists. `slack` is the declared
/// parameter a: the instance is feasible when every list has at least
/// outdeg(v) + a + 1 colours. The total colour count k is always derived
/// from the union of the lists, never stored.
struct ListInstance {
    Graph graph;
    DegeneracyOrdering ordering;
    std::vector<std::vector<int>> lists; // sorted, unique, colours >= 0
    int slack = 0;

    std::vector<int> palette() const; // sorted union of all lists
    int colour_count() const;         // k
    bool in_list(int v, int colour) const;
};

ListInstance make_instance(Graph g, std::vector<std::vector<int>> lists, int slack);

/// Classical k-colouring as lists {0..k-1} everywhere. When slack < 0 it
/// defaults to k - 1 - degeneracy, clamped at 0.
ListInstance make_uniform_instance(Graph g, int k, int slack = -1);

bool is_feasible(const ListInstance& inst);

bool is_proper(const Graph& g, const Colouring& c);
bool is_list_colouring(const ListInstance& inst, const Colouring& c); // proper + list-respecting

/// Greedy colouring from v_n down to v_1: each vertex takes the earliest
/// colour of `preference` that is in its list and unused by its already
/// coloured neighbours (exactly its out-neighbours at that point).
/// If the last s colours of `preference` satisfy s <= a on a feasible
/// instance, none of them is ever used.
Colouring greedy_colouring(const ListInstance& inst, const std::vector<int>& preference);

struct Step {
    int v;    // vertex recoloured
    int to;   // new colour
    int from; // colour before the step; enables exact reversal
};

struct RecoloringSequence {
    std::vector<Step> steps;

    std::size_t length() const { return steps.size(); }
    std::vector<int> per_vertex_counts(int n) const;
    int max_per_vertex(int n) const;
    RecoloringSequence reversed() const;
    void append(const RecoloringSequence& tail);
};

/// Replays a sequence with no validity checking.
Colouring apply_sequence(const Colouring& start, const RecoloringSequence& seq);

struct ValidationReport {
    bool valid = false;
    bool start_ok = false;
    long first_bad_step = -1; // -1: none (or the start itself is bad)
    std::size_t total_length = 0;
    std::vector<int> per_vertex;
    bool reaches_target = false;
};

/// Checks that every prefix of `seq` applied to `start` stays proper and
/// list-respecting, that no step is a null recolouring, and that the final
/// colouring equals `target`. Problems are reported, never thrown.
ValidationReport validate_sequence(const ListInstance& inst, const Colouring& start,
                                   const RecoloringSequence& seq, const Colouring& target);

/// Induced sub-instance with a mapping back to the parent's vertex ids.
struct SubInstance {
    ListInstance instance;
    std::vector<int> to_parent; // sub id -> parent id
};

/// Induced instance on `keep` where each kept vertex loses the colours `c`
/// assigns to its deleted neighbours. Sequences valid on the restriction
/// replay verbatim on the parent with deleted vertices frozen at `c`.
SubInstance restrict_instance(const ListInstance& inst, const Colouring& c,
                              const std::vector<int>& keep);

/// Induced instance on `keep` with a fixed colour set removed from every list.
SubInstance induced_instance(const ListInstance& inst, const std::vector<int>& keep,
                             const std::vector<int>& removed_colours);

/// Translates sub-instance vertex ids back to the parent's.
RecoloringSequence lift_sequence(const RecoloringSequence& seq, const std::vector<int>& to_parent);

/// Proper 2-colouring (side 0/1 per vertex), or nothing if odd cycles exist.
std::optional<std::vector<int>> two_colour_sides(const Graph& g);

/// Connected component id per vertex, numbered from 0 by lowest member.
std::vector<int> component_ids(const Graph& g);

} // namespace recolor
