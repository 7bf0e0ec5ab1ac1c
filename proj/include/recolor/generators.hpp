#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "recolor/graph.hpp"

namespace recolor {

/// SplitMix64: a fixed, portable generator so identical seeds give
/// byte-identical instances on every platform.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i)
            std::swap(values[i - 1], values[below(i)]);
    }
};

enum class Family {
    Path,
    Cycle,
    Tree,
    Grid,
    RandomDegenerate,
    RandomPlanarBipartite,
    Prism,
};

Family family_from_name(const std::string& name);
std::string family_name(Family family);

struct GenSpec {
    Family family = Family::Path;
    int n = 0;           // vertex count (path, cycle, tree, random-d-degenerate, prism)
    int rows = 0;        // grid / random-planar-bipartite
    int cols = 0;
    int d = 2;           // attachment degree for random-d-degenerate
    int subdivisions = 0; // extra even-length edge subdivisions (planar families)
    std::uint64_t seed = 0;
};

struct GeneratedGraph {
    Graph graph;
    std::optional<std::vector<std::vector<int>>> rotation; // planar families only
};

/// Deterministic for a fixed spec and seed. Planar families ship a rotation
/// system that passes euler_audit; random-d-degenerate attaches each vertex
/// to at most d earlier ones, so its degeneracy never exceeds d.
GeneratedGraph generate_graph(const GenSpec& spec);

/// Proper list colouring from a seeded random preference permutation fed to
/// the greedy colouring; identical seeds give identical colourings.
Colouring random_colouring(const ListInstance& inst, std::uint64_t seed);

/// Scrambles a colouring by a seeded walk of single-vertex recolourings,
/// staying proper and list-respecting throughout. Greedy colourings cluster
/// around few patterns; this spreads endpoint pairs over the state space.
Colouring perturb_colouring(const ListInstance& inst, Colouring c, int steps, std::uint64_t seed);

/// Random feasible lists over the palette {0..k-1}: each vertex gets
/// outdeg + a + 1 colours (plus jitter), and the palette is padded into
/// random lists so the union is exactly {0..k-1}.
std::vector<std::vector<int>> random_feasible_lists(const Graph& g, const DegeneracyOrdering& ord,
                                                    int k, int a, std::uint64_t seed);

} // namespace recolor
