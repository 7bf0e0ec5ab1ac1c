#pragma once

#include <vector>

#include "recolor/graph.hpp"

namespace recolor {

/// Combinatorial embedding: a cyclic neighbour order per vertex plus the
/// face walks it induces. Each directed edge lies on exactly one walk, so
/// face sizes sum to twice the edge count.
struct Embedding {
    std::vector<std::vector<int>> rotation;
    std::vector<std::vector<int>> faces; // closed walks as cyclic vertex lists

    int face_size(int f) const { return static_cast<int>(faces[f].size()); }
};

/// Validates the rotation (a permutation of each neighbourhood) and traces
/// the faces: after arriving at v along (u,v), leave along the neighbour
/// following u in rotation(v).
Embedding build_embedding(const Graph& g, std::vector<std::vector<int>> rotation);

/// Planarity consistency check, per connected component: Euler's relation
/// n - m + f = 2 and the equivalent weight identity
/// sum_v (deg-4) + sum_f (size-4) = -8. Edgeless components pass trivially.
bool euler_audit(const Graph& g, const Embedding& emb);

/// Strata of iterated degree-<=3 peeling: level-1 vertices have degree <= 3,
/// level-i vertices have degree <= 3 once all lower levels are removed.
/// Throws if some vertex is never peeled (graph not 3-degenerate).
std::vector<int> compute_levels(const Graph& g);

/// One of the two reducible shapes every planar bipartite graph contains:
/// either a vertex of degree at most two, or a degree-3 vertex on a 4-face
/// whose three neighbours all have level at most two.
struct Configuration {
    enum class Kind { LowDegree, FourFace };
    Kind kind = Kind::LowDegree;
    int v = -1;
    // FourFace only: the 4-face walk is (v, v1, w, v2); u is the neighbour
    // of v off the face (-1 when v has degree two, as in hand-built tests).
    int u = -1, w = -1, v1 = -1, v2 = -1, face = -1;
};

Configuration find_configuration(const Graph& g, const Embedding& emb);

/// From a proper 5-colouring, reach one where the two opposite corners v
/// and w of the configuration's 4-face share a colour. Each vertex moves at
/// most twice, and only v, u and u's degree-<=3 neighbours are touched.
struct EqualizeResult {
    Colouring colouring;
    RecoloringSequence seq;
};
EqualizeResult equalize_opposite(const Graph& g, const Configuration& cfg, const Colouring& alpha);

/// Contracts v and w across their shared 4-face into one vertex, splicing
/// the two rotations at the face corners and collapsing duplicate edges.
/// The result must pass euler_audit, stay simple and stay bipartite.
struct ContractionResult {
    Graph graph;
    Embedding embedding;
    std::vector<int> old_to_new; // v and w map to the same vertex
    int merged = -1;             // new id carrying both v and w
};
ContractionResult contract_pair(const Graph& g, const Embedding& emb, const Configuration& cfg);

/// Transform between two proper 5-colourings of a planar bipartite graph
/// given by its rotation system. Every vertex is recoloured at most 4n
/// times, so the sequence length is at most 4n^2.
RecoloringSequence transform_planar_bipartite(const Graph& g, const Embedding& emb,
                                              const Colouring& alpha, const Colouring& beta);

} // namespace recolor
