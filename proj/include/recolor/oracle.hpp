#pragma once

#include <cstdint>
#include <vector>

#include "recolor/graph.hpp"

namespace recolor {

/// Exact search over the reconfiguration graph: vertices are the proper
/// list colourings, edges join colourings differing on one vertex. Only
/// viable at desk scale; every search carries a visited-state cap.
enum class SearchStatus { Found, Disconnected, CapExceeded };

struct SearchResult {
    SearchStatus status = SearchStatus::CapExceeded;
    std::int64_t value = -1; // distance or diameter when status == Found
};

struct ConnectivityResult {
    SearchStatus status = SearchStatus::CapExceeded;
    bool connected = false;
    std::uint64_t colourings = 0; // total proper list colourings when counted
};

constexpr std::uint64_t kDefaultStateCap = 10'000'000;

/// Exact shortest transformation length between two colourings, by
/// bidirectional breadth-first search.
SearchResult bfs_distance(const ListInstance& inst, const Colouring& alpha, const Colouring& beta,
                          std::uint64_t state_cap = kDefaultStateCap);

/// Max shortest-path distance over all ordered pairs of colourings;
/// Disconnected when the reconfiguration graph is.
SearchResult exact_diameter(const ListInstance& inst, std::uint64_t state_cap = kDefaultStateCap);

/// One search from any colouring, compared against the full count of
/// proper list colourings found by backtracking enumeration.
ConnectivityResult is_connected(const ListInstance& inst, std::uint64_t state_cap = kDefaultStateCap);

/// Backtracking count of proper list colourings, stopping at the cap.
struct CountResult {
    bool capped = false;
    std::uint64_t count = 0;
};
CountResult count_colourings(const ListInstance& inst, std::uint64_t state_cap = kDefaultStateCap);

/// All proper single-vertex recolourings of c, for tests and searches.
std::vector<Colouring> recolour_neighbours(const ListInstance& inst, const Colouring& c);

} // namespace recolor
