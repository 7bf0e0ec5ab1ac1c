#include "recolor/planar.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace recolor {

namespace {

constexpr int kColours = 5; // this module is specifically about 5-colourings

int index_of(const std::vector<int>& rotation, int target) {
    for (std::size_t i = 0; i < rotation.size(); ++i)
        if (rotation[i] == target) return static_cast<int>(i);
    return -1;
}

} // namespace

Embedding build_embedding(const Graph& g, std::vector<std::vector<int>> rotation) {
    if (static_cast<int>(rotation.size()) != g.n)
        throw input_error("rotation size does not match vertex count");
    for (int v = 0; v < g.n; ++v) {
        std::vector<int> sorted = rotation[v];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != g.adj[v])
            throw input_error("rotation at vertex " + std::to_string(v) +
                              " is not a permutation of its neighbourhood");
    }

    Embedding emb;
    emb.rotation = std::move(rotation);

    // next directed edge of (u,v) is (v, w) with w following u in rotation(v)
    std::map<std::pair<int, int>, char> used;
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u]) used[{u, v}] = 0;

    for (auto& [edge, seen] : used) {
        if (seen) continue;
        std::vector<int> walk;
        int u = edge.first, v = edge.second;
        while (!used[{u, v}]) {
            used[{u, v}] = 1;
            walk.push_back(v);
            const auto& rot = emb.rotation[v];
            int at = index_of(rot, u);
            int w = rot[(at + 1) % rot.size()];
            u = v;
            v = w;
        }
        emb.faces.push_back(std::move(walk));
    }
    return emb;
}

bool euler_audit(const Graph& g, const Embedding& emb) {
    auto comp = component_ids(g);
    int comps = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<long> verts(comps, 0), edges(comps, 0), faces(comps, 0), weight(comps, 0);
    for (int v = 0; v < g.n; ++v) {
        verts[comp[v]] += 1;
        edges[comp[v]] += g.degree(v);
        weight[comp[v]] += g.degree(v) - 4;
    }
    for (const auto& walk : emb.faces) {
        if (walk.empty()) continue;
        faces[comp[walk.front()]] += 1;
        weight[comp[walk.front()]] += static_cast<long>(walk.size()) - 4;
    }
    for (int c = 0; c < comps; ++c) {
        edges[c] /= 2;
        if (edges[c] == 0) continue; // a bare vertex has no traced face
        if (verts[c] - edges[c] + faces[c] != 2) return false;
        if (weight[c] != -8) return false;
    }
    return true;
}

std::vector<int> compute_levels(const Graph& g) {
    std::vector<int> level(g.n, 0);
    std::vector<int> deg(g.n);
    for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
    int assigned = 0, current = 0;
    while (assigned < g.n) {
        ++current;
        std::vector<int> stratum;
        for (int v = 0; v < g.n; ++v)
            if (level[v] == 0 && deg[v] <= 3) stratum.push_back(v);
        if (stratum.empty())
            throw precondition_error("levels undefined: graph is not 3-degenerate");
        for (int v : stratum) level[v] = current;
        for (int v : stratum)
            for (int u : g.adj[v])
                if (level[u] == 0) --deg[u];
        assigned += static_cast<int>(stratum.size());
    }
    return level;
}

Configuration find_configuration(const Graph& g, const Embedding& emb) {
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) <= 2) {
            Configuration cfg;
            cfg.kind = Configuration::Kind::LowDegree;
            cfg.v = v;
            return cfg;
        }
    }

    auto level = compute_levels(g);
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) != 3) continue;
        bool low_levels = true;
        for (int u : g.adj[v])
            if (level[u] > 2) {
                low_levels = false;
                break;
            }
        if (!low_levels) continue;
        for (std::size_t f = 0; f < emb.faces.size(); ++f) {
            const auto& walk = emb.faces[f];
            if (walk.size() != 4) continue;
            int at = index_of(walk, v);
            if (at < 0) continue;
            Configuration cfg;
            cfg.kind = Configuration::Kind::FourFace;
            cfg.v = v;
            cfg.face = static_cast<int>(f);
            cfg.v1 = walk[(at + 1) % 4];
            cfg.w = walk[(at + 2) % 4];
            cfg.v2 = walk[(at + 3) % 4];
            for (int u : g.adj[v])
                if (u != cfg.v1 && u != cfg.v2) cfg.u = u;
            if (g.has_edge(cfg.v, cfg.w))
                throw internal_error("four-face corners are adjacent; graph is not bipartite");
            return cfg;
        }
    }
    throw internal_error("no reducible configuration found; input is not planar bipartite");
}

EqualizeResult equalize_opposite(const Graph& g, const Configuration& cfg, const Colouring& alpha) {
    if (cfg.kind != Configuration::Kind::FourFace)
        throw precondition_error("equalize_opposite needs a four-face configuration");
    if (!is_proper(g, alpha)) throw precondition_error("equalize_opposite: colouring is not proper");
    for (int c : alpha)
        if (c < 0 || c >= kColours) throw precondition_error("equalize_opposite: colour out of range");

    const int v = cfg.v, u = cfg.u, w = cfg.w;
    EqualizeResult result;
    result.colouring = alpha;
    Colouring& cur = result.colouring;
    RecoloringSequence& seq = result.seq;
    const int target = alpha[w];

    if (cur[v] == target) return result;

    if (u < 0 || cur[u] != target) {
        // v's face neighbours border w, so only u can block this move
        seq.steps.push_back({v, target, cur[v]});
        cur[v] = target;
        return result;
    }

    // u blocks the move. Free a colour c for u that no high-degree
    // neighbour of u holds (u has level <= 2, so there are at most three),
    // clear it from u's low-degree neighbours, then shift u onto it.
    std::vector<char> forbidden(kColours, 0);
    forbidden[target] = 1;
    int high = 0;
    for (int x : g.adj[u])
        if (g.degree(x) > 3) {
            forbidden[cur[x]] = 1;
            ++high;
        }
    if (high > 3)
        throw precondition_error("equalize_opposite: u has more than three high-degree neighbours");
    int fresh = -1;
    for (int c = 0; c < kColours; ++c)
        if (!forbidden[c]) {
            fresh = c;
            break;
        }
    if (fresh < 0) throw internal_error("equalize_opposite: no colour available for u");

    for (int x : g.adj[u]) {
        if (g.degree(x) > 3 || cur[x] != fresh) continue;
        int replacement = -1;
        for (int c = 0; c < kColours; ++c) {
            if (c == fresh) continue;
            bool blocked = false;
            for (int y : g.adj[x])
                if (cur[y] == c) {
                    blocked = true;
                    break;
                }
            if (!blocked) {
                replacement = c;
                break;
            }
        }
        if (replacement < 0) throw internal_error("equalize_opposite: cascade vertex is stuck");
        seq.steps.push_back({x, replacement, cur[x]});
        cur[x] = replacement;
    }
    seq.steps.push_back({u, fresh, cur[u]});
    cur[u] = fresh;
    if (cur[v] != target) {
        seq.steps.push_back({v, target, cur[v]});
        cur[v] = target;
    }

    if (cur[v] != cur[w]) throw internal_error("equalize_opposite: corners still differ");
    if (seq.max_per_vertex(g.n) > 2)
        throw internal_error("equalize_opposite: a vertex moved more than twice");
    return result;
}

ContractionResult contract_pair(const Graph& g, const Embedding& emb, const Configuration& cfg) {
    if (cfg.kind != Configuration::Kind::FourFace)
        throw precondition_error("contract_pair needs a four-face configuration");
    const int v = cfg.v, w = cfg.w, v1 = cfg.v1, v2 = cfg.v2;
    if (g.has_edge(v, w)) throw precondition_error("contract_pair: corners are adjacent");
    auto sides = two_colour_sides(g);
    if (!sides) throw precondition_error("contract_pair: graph is not bipartite");
    if ((*sides)[v] != (*sides)[w])
        throw precondition_error("contract_pair: corners are on different sides");

    // Arc of v from v1 round to v2, then the strict interior of w's arc
    // from v2 round to v1: the two boundaries of the contracted face.
    auto arc = [&](int centre, int from, int to) {
        const auto& rot = emb.rotation[centre];
        int at = index_of(rot, from);
        if (at < 0) throw internal_error("contract_pair: face corner missing from rotation");
        std::vector<int> out;
        for (std::size_t i = 0; i < rot.size(); ++i) {
            int x = rot[(at + i) % rot.size()];
            out.push_back(x);
            if (x == to && i > 0) break;
        }
        if (out.back() != to) throw internal_error("contract_pair: face corner missing from rotation");
        return out;
    };
    std::vector<int> spliced = arc(v, v1, v2);
    std::vector<int> warc = arc(w, v2, v1); // at least {v2, v1}
    spliced.insert(spliced.end(), warc.begin() + 1, warc.end() - 1);
    // keep first occurrence of every neighbour (drops the duplicate corner
    // entries and the w-side copy of any shared neighbour)
    {
        std::vector<int> dedup;
        for (int x : spliced)
            if (std::find(dedup.begin(), dedup.end(), x) == dedup.end()) dedup.push_back(x);
        spliced = std::move(dedup);
    }

    ContractionResult result;
    result.old_to_new.assign(g.n, -1);
    int next = 0;
    for (int x = 0; x < g.n; ++x) {
        if (x == w) continue;
        result.old_to_new[x] = next++;
    }
    result.old_to_new[w] = result.old_to_new[v];
    result.merged = result.old_to_new[v];

    std::vector<std::vector<int>> rotation(g.n - 1);
    for (int x = 0; x < g.n; ++x) {
        if (x == v || x == w) continue;
        std::vector<int> rot;
        bool near_both = g.has_edge(x, v) && g.has_edge(x, w);
        for (int y : emb.rotation[x]) {
            if (near_both && y == w) continue; // drop the w-side copy of the doubled edge
            rot.push_back(result.old_to_new[y]);
        }
        rotation[result.old_to_new[x]] = std::move(rot);
    }
    std::vector<int> merged_rot;
    for (int y : spliced) merged_rot.push_back(result.old_to_new[y]);
    rotation[result.merged] = std::move(merged_rot);

    Graph contracted(g.n - 1);
    for (int x = 0; x < static_cast<int>(rotation.size()); ++x)
        for (int y : rotation[x])
            if (x < y) contracted.add_edge(x, y);

    result.embedding = build_embedding(contracted, std::move(rotation));
    result.graph = std::move(contracted);
    if (!euler_audit(result.graph, result.embedding))
        throw internal_error("contract_pair: merged embedding failed the planarity audit");
    if (!two_colour_sides(result.graph))
        throw internal_error("contract_pair: merged graph lost bipartiteness");
    return result;
}

namespace {

RecoloringSequence transform_rec(const Graph& g, const Embedding& emb, const Colouring& alpha,
                                 const Colouring& beta) {
    const int n = g.n;
    RecoloringSequence seq;
    if (n == 0) return seq;
    if (n == 1) {
        if (alpha[0] != beta[0]) seq.steps.push_back({0, beta[0], alpha[0]});
        return seq;
    }

    Configuration cfg = find_configuration(g, emb);
    if (cfg.kind == Configuration::Kind::LowDegree) {
        const int v = cfg.v;
        std::vector<int> keep;
        for (int x = 0; x < n; ++x)
            if (x != v) keep.push_back(x);
        Graph sub(n - 1);
        std::vector<std::vector<int>> rotation(n - 1);
        auto renum = [&](int x) { return x < v ? x : x - 1; };
        for (int x = 0; x < n; ++x) {
            if (x == v) continue;
            for (int y : emb.rotation[x])
                if (y != v) rotation[renum(x)].push_back(renum(y));
        }
        for (int x = 0; x < n - 1; ++x)
            for (int y : rotation[x])
                if (x < y) sub.add_edge(x, y);
        Embedding sub_emb = build_embedding(sub, std::move(rotation));
        if (!euler_audit(sub, sub_emb))
            throw internal_error("vertex deletion broke the planarity audit");

        Colouring sub_alpha, sub_beta;
        for (int x : keep) {
            sub_alpha.push_back(alpha[x]);
            sub_beta.push_back(beta[x]);
        }
        RecoloringSequence inner = transform_rec(sub, sub_emb, sub_alpha, sub_beta);

        // Interleave v: whenever a neighbour wants v's colour, park v on a
        // colour chosen against the next neighbour move, so v pays at most
        // one step per two neighbour steps.
        std::vector<char> is_nbr(n, 0);
        for (int x : g.adj[v]) is_nbr[x] = 1;
        Colouring cur = alpha;
        std::vector<std::size_t> nbr_steps;
        std::vector<Step> parent_steps;
        parent_steps.reserve(inner.steps.size());
        for (const Step& s : inner.steps) {
            int pv = keep[s.v];
            parent_steps.push_back({pv, s.to, s.from});
        }
        for (std::size_t j = 0; j < parent_steps.size(); ++j)
            if (is_nbr[parent_steps[j].v]) nbr_steps.push_back(j);

        std::size_t cursor = 0;
        for (std::size_t j = 0; j < parent_steps.size(); ++j) {
            const Step& s = parent_steps[j];
            while (cursor < nbr_steps.size() && nbr_steps[cursor] <= j) ++cursor;
            if (is_nbr[s.v] && s.to == cur[v]) {
                int avoid = cursor < nbr_steps.size() ? parent_steps[nbr_steps[cursor]].to : -1;
                int pick = -1;
                for (int c = 0; c < kColours; ++c) {
                    if (c == cur[v] || c == avoid) continue;
                    bool blocked = false;
                    for (int x : g.adj[v])
                        if (cur[x] == c) {
                            blocked = true;
                            break;
                        }
                    if (!blocked) {
                        pick = c;
                        break;
                    }
                }
                if (pick < 0) throw internal_error("degree-two vertex has no parking colour");
                seq.steps.push_back({v, pick, cur[v]});
                cur[v] = pick;
            }
            seq.steps.push_back(s);
            cur[s.v] = s.to;
        }
        if (cur[v] != beta[v]) seq.steps.push_back({v, beta[v], cur[v]});
    } else {
        EqualizeResult from_alpha = equalize_opposite(g, cfg, alpha);
        EqualizeResult from_beta = equalize_opposite(g, cfg, beta);
        ContractionResult merged = contract_pair(g, emb, cfg);

        auto push_down = [&](const Colouring& c) {
            Colouring out(n - 1, -1);
            for (int x = 0; x < n; ++x) out[merged.old_to_new[x]] = c[x];
            return out;
        };
        RecoloringSequence inner = transform_rec(merged.graph, merged.embedding,
                                                 push_down(from_alpha.colouring),
                                                 push_down(from_beta.colouring));

        std::vector<int> new_to_old(n - 1, -1);
        for (int x = 0; x < n; ++x)
            if (x != cfg.w) new_to_old[merged.old_to_new[x]] = x;

        seq = std::move(from_alpha.seq);
        for (const Step& s : inner.steps) {
            if (s.v == merged.merged) {
                // a move of the merged vertex replays on both corners
                seq.steps.push_back({cfg.v, s.to, s.from});
                seq.steps.push_back({cfg.w, s.to, s.from});
            } else {
                seq.steps.push_back({new_to_old[s.v], s.to, s.from});
            }
        }
        seq.append(from_beta.seq.reversed());
    }

    if (seq.max_per_vertex(n) > 4 * n)
        throw internal_error("planar transform exceeded its per-vertex budget");
    return seq;
}

} // namespace

RecoloringSequence transform_planar_bipartite(const Graph& g, const Embedding& emb,
                                              const Colouring& alpha, const Colouring& beta) {
    if (static_cast<int>(alpha.size()) != g.n || static_cast<int>(beta.size()) != g.n)
        throw input_error("colouring length does not match vertex count");
    for (int v = 0; v < g.n; ++v)
        if (alpha[v] < 0 || alpha[v] >= kColours || beta[v] < 0 || beta[v] >= kColours)
            throw precondition_error("transform_planar_bipartite: colours must lie in 0..4");
    if (!is_proper(g, alpha) || !is_proper(g, beta))
        throw precondition_error("transform_planar_bipartite: endpoints must be proper");
    if (!two_colour_sides(g))
        throw precondition_error("transform_planar_bipartite: graph is not bipartite");
    if (!euler_audit(g, emb))
        throw precondition_error("transform_planar_bipartite: embedding failed the planarity audit");
    return transform_rec(g, emb, alpha, beta);
}

} // namespace recolor
