#include "recolor/oracle.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>
#include <unordered_set>

namespace recolor {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

// Mixed-radix key over per-vertex list indices. Tight: the key space is
// the product of the list sizes, not of the raw colour values.
struct StateCodec {
    const ListInstance& inst;
    std::vector<std::uint64_t> mul;
    bool fits = true;

    explicit StateCodec(const ListInstance& instance) : inst(instance) {
        mul.resize(inst.graph.n, 1);
        std::uint64_t acc = 1;
        for (int v = 0; v < inst.graph.n; ++v) {
            mul[v] = acc;
            std::uint64_t size = std::max<std::uint64_t>(1, inst.lists[v].size());
            if (acc > (std::uint64_t{1} << 62) / size) {
                fits = false;
                return;
            }
            acc *= size;
        }
    }

    std::uint64_t encode(const Colouring& c) const {
        std::uint64_t key = 0;
        for (int v = 0; v < inst.graph.n; ++v) {
            const auto& l = inst.lists[v];
            auto it = std::lower_bound(l.begin(), l.end(), c[v]);
            key += mul[v] * static_cast<std::uint64_t>(it - l.begin());
        }
        return key;
    }
};

// Calls fn(next) for every proper single-vertex recolouring of c;
// `next` is c with one entry changed and is restored afterwards.
template <typename Fn>
void for_each_move(const ListInstance& inst, Colouring& c, Fn&& fn) {
    for (int v = 0; v < inst.graph.n; ++v) {
        const int old = c[v];
        for (int colour : inst.lists[v]) {
            if (colour == old) continue;
            bool blocked = false;
            for (int u : inst.graph.adj[v])
                if (c[u] == colour) {
                    blocked = true;
                    break;
                }
            if (blocked) continue;
            c[v] = colour;
            fn(c);
            c[v] = old;
        }
    }
}

std::uint64_t count_rec(const ListInstance& inst, Colouring& c, int v, std::uint64_t cap) {
    if (v == inst.graph.n) return 1;
    std::uint64_t total = 0;
    for (int colour : inst.lists[v]) {
        bool blocked = false;
        for (int u : inst.graph.adj[v])
            if (u < v && c[u] == colour) {
                blocked = true;
                break;
            }
        if (blocked) continue;
        c[v] = colour;
        total += count_rec(inst, c, v + 1, cap - total);
        if (total > cap) return total;
    }
    c[v] = -1;
    return total;
}

// First proper list colouring in lexicographic list-index order, if any.
bool first_colouring(const ListInstance& inst, Colouring& c, int v) {
    if (v == inst.graph.n) return true;
    for (int colour : inst.lists[v]) {
        bool blocked = false;
        for (int u : inst.graph.adj[v])
            if (u < v && c[u] == colour) {
                blocked = true;
                break;
            }
        if (blocked) continue;
        c[v] = colour;
        if (first_colouring(inst, c, v + 1)) return true;
    }
    c[v] = -1;
    return false;
}

} // namespace

std::vector<Colouring> recolour_neighbours(const ListInstance& inst, const Colouring& c) {
    std::vector<Colouring> out;
    Colouring work = c;
    for_each_move(inst, work, [&](const Colouring& next) { out.push_back(next); });
    return out;
}

SearchResult bfs_distance(const ListInstance& inst, const Colouring& alpha, const Colouring& beta,
                          std::uint64_t state_cap) {
    if (!is_list_colouring(inst, alpha) || !is_list_colouring(inst, beta))
        throw precondition_error("bfs_distance: endpoints must be proper list colourings");
    if (alpha == beta) return {SearchStatus::Found, 0};

    StateCodec codec(inst);
    if (!codec.fits) return {SearchStatus::CapExceeded, -1};

    // Bidirectional level-synchronous BFS. `best` is exact once it is at
    // most the sum of the two expanded depths.
    std::unordered_map<std::uint64_t, std::int64_t> dist[2];
    std::vector<Colouring> frontier[2];
    std::int64_t depth[2] = {0, 0};
    dist[0].emplace(codec.encode(alpha), 0);
    dist[1].emplace(codec.encode(beta), 0);
    frontier[0].push_back(alpha);
    frontier[1].push_back(beta);
    std::int64_t best = kInf;

    while (true) {
        if (best != kInf && best <= depth[0] + depth[1]) return {SearchStatus::Found, best};
        int side;
        if (frontier[0].empty() && frontier[1].empty())
            return best == kInf ? SearchResult{SearchStatus::Disconnected, -1}
                                : SearchResult{SearchStatus::Found, best};
        if (frontier[0].empty())
            side = 1;
        else if (frontier[1].empty())
            side = 0;
        else
            side = frontier[0].size() <= frontier[1].size() ? 0 : 1;

        std::vector<Colouring> next;
        const std::int64_t next_depth = depth[side] + 1;
        for (Colouring& state : frontier[side]) {
            for_each_move(inst, state, [&](const Colouring& moved) {
                std::uint64_t key = codec.encode(moved);
                auto [it, fresh] = dist[side].try_emplace(key, next_depth);
                if (!fresh) return;
                auto other = dist[1 - side].find(key);
                if (other != dist[1 - side].end())
                    best = std::min(best, next_depth + other->second);
                next.push_back(moved);
            });
        }
        frontier[side] = std::move(next);
        depth[side] = next_depth;
        if (dist[0].size() + dist[1].size() > state_cap) return {SearchStatus::CapExceeded, -1};
    }
}

CountResult count_colourings(const ListInstance& inst, std::uint64_t state_cap) {
    Colouring work(inst.graph.n, -1);
    std::uint64_t total = count_rec(inst, work, 0, state_cap);
    if (total > state_cap) return {true, total};
    return {false, total};
}

ConnectivityResult is_connected(const ListInstance& inst, std::uint64_t state_cap) {
    ConnectivityResult result;
    CountResult count = count_colourings(inst, state_cap);
    if (count.capped) return result; // CapExceeded
    result.colourings = count.count;
    if (count.count <= 1) {
        result.status = SearchStatus::Found;
        result.connected = true;
        return result;
    }

    StateCodec codec(inst);
    if (!codec.fits) return result;

    Colouring start(inst.graph.n, -1);
    first_colouring(inst, start, 0);
    std::unordered_set<std::uint64_t> visited{codec.encode(start)};
    std::vector<Colouring> frontier{start};
    while (!frontier.empty()) {
        std::vector<Colouring> next;
        for (Colouring& state : frontier) {
            for_each_move(inst, state, [&](const Colouring& moved) {
                if (visited.insert(codec.encode(moved)).second) next.push_back(moved);
            });
        }
        if (visited.size() > state_cap) return result;
        frontier = std::move(next);
    }
    result.status = SearchStatus::Found;
    result.connected = visited.size() == count.count;
    return result;
}

SearchResult exact_diameter(const ListInstance& inst, std::uint64_t state_cap) {
    StateCodec codec(inst);
    if (!codec.fits) return {SearchStatus::CapExceeded, -1};

    // Materialise the whole state space, then BFS from every state.
    std::vector<Colouring> states;
    bool capped = false;
    Colouring work(inst.graph.n, -1);
    auto descend = [&](auto&& self, int v) -> void {
        if (capped) return;
        if (v == inst.graph.n) {
            states.push_back(work);
            if (states.size() > state_cap) capped = true;
            return;
        }
        for (int colour : inst.lists[v]) {
            bool blocked = false;
            for (int u : inst.graph.adj[v])
                if (u < v && work[u] == colour) {
                    blocked = true;
                    break;
                }
            if (blocked) continue;
            work[v] = colour;
            self(self, v + 1);
            work[v] = -1;
            if (capped) return;
        }
    };
    descend(descend, 0);
    if (capped) return {SearchStatus::CapExceeded, -1};
    if (states.empty()) return {SearchStatus::Found, 0};

    std::unordered_map<std::uint64_t, int> index;
    index.reserve(states.size());
    for (std::size_t i = 0; i < states.size(); ++i)
        index.emplace(codec.encode(states[i]), static_cast<int>(i));

    std::int64_t diameter = 0;
    std::vector<int> dist(states.size());
    std::vector<int> queue;
    for (std::size_t src = 0; src < states.size(); ++src) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        queue.push_back(static_cast<int>(src));
        dist[src] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int at = queue[head];
            Colouring state = states[at];
            for_each_move(inst, state, [&](const Colouring& moved) {
                int to = index.at(codec.encode(moved));
                if (dist[to] < 0) {
                    dist[to] = dist[at] + 1;
                    queue.push_back(to);
                }
            });
        }
        if (queue.size() != states.size()) return {SearchStatus::Disconnected, -1};
        diameter = std::max<std::int64_t>(diameter, *std::max_element(dist.begin(), dist.end()));
    }
    return {SearchStatus::Found, diameter};
}

} // namespace recolor
