#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "recolor/list_transform.hpp"
#include "recolor/oracle.hpp"
#include "recolor/planar.hpp"

using namespace recolor;

namespace {

struct PlanarInstance {
    Graph graph;
    Embedding emb;
};

PlanarInstance generated(Family family, int n_or_rows, int cols = 0, std::uint64_t seed = 0,
                         int subdivisions = 0) {
    GenSpec spec;
    spec.family = family;
    spec.n = n_or_rows;
    spec.rows = n_or_rows;
    spec.cols = cols;
    spec.seed = seed;
    spec.subdivisions = subdivisions;
    GeneratedGraph g = generate_graph(spec);
    REQUIRE(g.rotation.has_value());
    Embedding emb = build_embedding(g.graph, *g.rotation);
    return {std::move(g.graph), std::move(emb)};
}

PlanarInstance cube() { return generated(Family::Prism, 8); }

void check_planar_transform(const PlanarInstance& pi, const Colouring& alpha,
                            const Colouring& beta) {
    auto seq = transform_planar_bipartite(pi.graph, pi.emb, alpha, beta);
    auto inst = make_uniform_instance(pi.graph, 5);
    auto report = validate_sequence(inst, alpha, seq, beta);
    CHECK(report.valid);
    CHECK(report.reaches_target);
    CHECK(static_cast<std::int64_t>(seq.length()) <=
          4ll * pi.graph.n * pi.graph.n);
    CHECK(seq.max_per_vertex(pi.graph.n) <= 4 * pi.graph.n);
}

} // namespace

TEST_CASE("faces of the quadrilateral") {
    auto pi = generated(Family::Grid, 2, 2);
    CHECK(pi.emb.faces.size() == 2);
    for (const auto& walk : pi.emb.faces) CHECK(walk.size() == 4);
    CHECK(euler_audit(pi.graph, pi.emb));
}

TEST_CASE("faces of the cube: six quadrilaterals") {
    auto pi = cube();
    CHECK(pi.emb.faces.size() == 6);
    for (const auto& walk : pi.emb.faces) CHECK(walk.size() == 4);
    CHECK(euler_audit(pi.graph, pi.emb));
}

TEST_CASE("a single edge has one face of size two") {
    Graph g = Graph::from_edges(2, {{0, 1}});
    Embedding emb = build_embedding(g, {{1}, {0}});
    REQUIRE(emb.faces.size() == 1);
    CHECK(emb.faces[0].size() == 2);
    CHECK(euler_audit(g, emb));
}

TEST_CASE("face sizes sum to twice the edge count") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto pi = generated(Family::RandomPlanarBipartite, 5, 6, seed, 3);
        std::size_t total = 0;
        for (const auto& walk : pi.emb.faces) total += walk.size();
        CHECK(total == 2 * static_cast<std::size_t>(pi.graph.edge_count()));
        CHECK(euler_audit(pi.graph, pi.emb));
    }
}

TEST_CASE("rotation must permute the neighbourhood") {
    Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(build_embedding(g, {{1}, {0, 0}, {1}}), input_error);
    CHECK_THROWS_AS(build_embedding(g, {{1}, {2, 0}, {2}}), input_error);
}

TEST_CASE("euler audit rejects K5 under any rotation") {
    Graph g(5);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) g.add_edge(u, v);
    Embedding emb = build_embedding(g, g.adj);
    CHECK_FALSE(euler_audit(g, emb));
}

TEST_CASE("euler audit handles disconnected graphs per component") {
    // two disjoint quadrilaterals plus an isolated vertex
    Graph g(9);
    std::vector<std::vector<int>> rot(9);
    auto add_square = [&](int base) {
        int a = base, b = base + 1, c = base + 2, d = base + 3;
        g.add_edge(a, b);
        g.add_edge(b, c);
        g.add_edge(c, d);
        g.add_edge(d, a);
        rot[a] = {d, b};
        rot[b] = {a, c};
        rot[c] = {b, d};
        rot[d] = {c, a};
    };
    add_square(0);
    add_square(4);
    Embedding emb = build_embedding(g, rot);
    CHECK(euler_audit(g, emb));
}

TEST_CASE("levels: cubic graphs are all level one") {
    auto pi = cube();
    auto level = compute_levels(pi.graph);
    for (int v = 0; v < pi.graph.n; ++v) CHECK(level[v] == 1);
}

TEST_CASE("levels of the 3x3 grid: boundary one, centre two") {
    auto pi = generated(Family::Grid, 3, 3);
    auto level = compute_levels(pi.graph);
    for (int v = 0; v < 9; ++v) CHECK(level[v] == (v == 4 ? 2 : 1));
}

TEST_CASE("levels of a star") {
    Graph g(6);
    for (int leaf = 1; leaf <= 5; ++leaf) g.add_edge(0, leaf);
    auto level = compute_levels(g);
    CHECK(level[0] == 2);
    for (int leaf = 1; leaf <= 5; ++leaf) CHECK(level[leaf] == 1);
}

TEST_CASE("levels reject graphs that are not 3-degenerate") {
    Graph g(6);
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) g.add_edge(u, v);
    CHECK_THROWS_AS(compute_levels(g), precondition_error);
}

TEST_CASE("levels are characterised by peeling degrees") {
    // level(v) = j iff v has degree <= 3 among {level >= j} and, for j > 1,
    // degree >= 4 among {level >= j-1}: the stratum is always maximal
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        auto pi = generated(Family::RandomPlanarBipartite, 6, 6, seed, 2);
        auto level = compute_levels(pi.graph);
        for (int v = 0; v < pi.graph.n; ++v) {
            int at_or_above = 0, above_prev = 0;
            for (int u : pi.graph.adj[v]) {
                if (level[u] >= level[v]) ++at_or_above;
                if (level[u] >= level[v] - 1) ++above_prev;
            }
            CHECK(at_or_above <= 3);
            if (level[v] > 1) CHECK(above_prev >= 4);
        }
    }
}

TEST_CASE("configuration on C4 is the lowest-id low-degree vertex") {
    auto pi = generated(Family::Grid, 2, 2);
    auto cfg = find_configuration(pi.graph, pi.emb);
    CHECK(cfg.kind == Configuration::Kind::LowDegree);
    CHECK(cfg.v == 0);
}

TEST_CASE("configuration on a single vertex") {
    Graph g(1);
    Embedding emb = build_embedding(g, {{}});
    auto cfg = find_configuration(g, emb);
    CHECK(cfg.kind == Configuration::Kind::LowDegree);
    CHECK(cfg.v == 0);
}

TEST_CASE("configuration on the cube is a four-face around a cubic vertex") {
    auto pi = cube();
    auto cfg = find_configuration(pi.graph, pi.emb);
    REQUIRE(cfg.kind == Configuration::Kind::FourFace);
    CHECK(pi.graph.degree(cfg.v) == 3);
    CHECK_FALSE(pi.graph.has_edge(cfg.v, cfg.w));
    CHECK(pi.graph.has_edge(cfg.v, cfg.v1));
    CHECK(pi.graph.has_edge(cfg.v, cfg.v2));
    CHECK(pi.graph.has_edge(cfg.v, cfg.u));
    CHECK(pi.graph.has_edge(cfg.w, cfg.v1));
    CHECK(pi.graph.has_edge(cfg.w, cfg.v2));
    CHECK(pi.emb.faces[cfg.face].size() == 4);
    auto level = compute_levels(pi.graph);
    for (int u : pi.graph.adj[cfg.v]) CHECK(level[u] <= 2);
}

TEST_CASE("equalize: no obstruction means a single step") {
    auto pi = cube();
    auto cfg = find_configuration(pi.graph, pi.emb);
    REQUIRE(cfg.kind == Configuration::Kind::FourFace);
    auto sides = two_colour_sides(pi.graph);
    REQUIRE(sides.has_value());
    Colouring alpha(8);
    for (int v = 0; v < 8; ++v) alpha[v] = (*sides)[v];
    alpha[cfg.w] = 2; // u keeps its side colour, so it cannot block
    REQUIRE(is_proper(pi.graph, alpha));
    auto r = equalize_opposite(pi.graph, cfg, alpha);
    CHECK(r.seq.length() == 1);
    CHECK(r.colouring[cfg.v] == r.colouring[cfg.w]);
}

TEST_CASE("equalize: already equal corners need nothing") {
    auto pi = cube();
    auto cfg = find_configuration(pi.graph, pi.emb);
    auto sides = two_colour_sides(pi.graph);
    Colouring alpha(8);
    for (int v = 0; v < 8; ++v) alpha[v] = (*sides)[v];
    REQUIRE(alpha[cfg.v] == alpha[cfg.w]); // opposite corners share a side
    auto r = equalize_opposite(pi.graph, cfg, alpha);
    CHECK(r.seq.length() == 0);
}

TEST_CASE("equalize: blocked corner forces the cascade") {
    auto pi = cube();
    auto cfg = find_configuration(pi.graph, pi.emb);
    auto sides = two_colour_sides(pi.graph);
    Colouring alpha(8);
    for (int v = 0; v < 8; ++v) alpha[v] = (*sides)[v];
    alpha[cfg.w] = 2;
    alpha[cfg.u] = 2; // u and w non-adjacent: legal, and it blocks the move
    REQUIRE(is_proper(pi.graph, alpha));

    auto r = equalize_opposite(pi.graph, cfg, alpha);
    auto inst = make_uniform_instance(pi.graph, 5);
    auto report = validate_sequence(inst, alpha, r.seq, r.colouring);
    CHECK(report.valid);
    CHECK(report.reaches_target);
    CHECK(r.colouring[cfg.v] == r.colouring[cfg.w]);
    CHECK(r.seq.max_per_vertex(8) <= 2);

    // only u, v and u's low-degree neighbours may move
    std::set<int> allowed{cfg.u, cfg.v};
    for (int x : pi.graph.adj[cfg.u])
        if (pi.graph.degree(x) <= 3) allowed.insert(x);
    for (const Step& s : r.seq.steps) CHECK(allowed.count(s.v) == 1);
}

TEST_CASE("contracting opposite corners of C4 yields a path") {
    auto pi = generated(Family::Grid, 2, 2);
    // hand-built configuration straight from a face walk
    const auto& walk = pi.emb.faces[0];
    REQUIRE(walk.size() == 4);
    Configuration cfg;
    cfg.kind = Configuration::Kind::FourFace;
    cfg.face = 0;
    cfg.v = walk[0];
    cfg.v1 = walk[1];
    cfg.w = walk[2];
    cfg.v2 = walk[3];
    auto merged = contract_pair(pi.graph, pi.emb, cfg);
    CHECK(merged.graph.n == 3);
    CHECK(merged.graph.edge_count() == 2);
    CHECK(merged.graph.degree(merged.merged) == 2);
    CHECK(euler_audit(merged.graph, merged.embedding));
    CHECK(two_colour_sides(merged.graph).has_value());
    CHECK(merged.old_to_new[cfg.v] == merged.old_to_new[cfg.w]);
}

TEST_CASE("contracting across a cube face keeps a clean planar bipartite graph") {
    auto pi = cube();
    auto cfg = find_configuration(pi.graph, pi.emb);
    REQUIRE(cfg.kind == Configuration::Kind::FourFace);
    auto merged = contract_pair(pi.graph, pi.emb, cfg);
    CHECK(merged.graph.n == 7);
    CHECK(euler_audit(merged.graph, merged.embedding));
    CHECK(two_colour_sides(merged.graph).has_value());
    // simplicity: adjacency lists have no duplicates
    for (int v = 0; v < merged.graph.n; ++v) {
        auto a = merged.graph.adj[v];
        CHECK(std::adjacent_find(a.begin(), a.end()) == a.end());
    }
}

TEST_CASE("contracting the hubs of K23 collapses every doubled edge") {
    // both hubs see all three rim vertices: after the contraction each
    // rim edge appears twice and must collapse consistently
    Graph g = Graph::from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    Embedding emb = build_embedding(
        g, {{2, 3, 4}, {4, 3, 2}, {0, 1}, {0, 1}, {0, 1}});
    REQUIRE(euler_audit(g, emb));

    int face = -1, at = -1;
    for (std::size_t f = 0; f < emb.faces.size() && face < 0; ++f) {
        if (emb.faces[f].size() == 4) {
            at = [&] {
                for (int i = 0; i < 4; ++i)
                    if (emb.faces[f][i] == 0) return i;
                return -1;
            }();
            if (at >= 0) face = static_cast<int>(f);
        }
    }
    REQUIRE(face >= 0);
    const auto& walk = emb.faces[face];
    Configuration cfg;
    cfg.kind = Configuration::Kind::FourFace;
    cfg.face = face;
    cfg.v = 0;
    cfg.v1 = walk[(at + 1) % 4];
    cfg.w = walk[(at + 2) % 4];
    cfg.v2 = walk[(at + 3) % 4];
    for (int u : g.adj[0])
        if (u != cfg.v1 && u != cfg.v2) cfg.u = u;
    REQUIRE(cfg.w == 1);
    REQUIRE(g.has_edge(cfg.u, cfg.w)); // the off-face neighbour touches both corners

    auto merged = contract_pair(g, emb, cfg);
    CHECK(merged.graph.n == 4);
    CHECK(merged.graph.edge_count() == 3);
    CHECK(merged.graph.degree(merged.merged) == 3);
    CHECK(euler_audit(merged.graph, merged.embedding));
    CHECK(two_colour_sides(merged.graph).has_value());
}

TEST_CASE("steps on a merged vertex replay as paired steps on both corners") {
    auto pi = cube();
    auto cfg = find_configuration(pi.graph, pi.emb);
    auto sides = two_colour_sides(pi.graph);
    Colouring alpha(8);
    for (int v = 0; v < 8; ++v) alpha[v] = (*sides)[v];
    REQUIRE(alpha[cfg.v] == alpha[cfg.w]);

    auto merged = contract_pair(pi.graph, pi.emb, cfg);
    Colouring down(merged.graph.n);
    for (int v = 0; v < 8; ++v) down[merged.old_to_new[v]] = alpha[v];
    REQUIRE(is_proper(merged.graph, down));

    // any proper recolouring of the merged vertex lifts to two valid steps
    auto minst = make_uniform_instance(merged.graph, 5);
    int fresh = -1;
    for (int c = 0; c < 5 && fresh < 0; ++c) {
        if (c == down[merged.merged]) continue;
        bool blocked = false;
        for (int u : merged.graph.adj[merged.merged])
            if (down[u] == c) blocked = true;
        if (!blocked) fresh = c;
    }
    REQUIRE(fresh >= 0);
    RecoloringSequence lifted;
    lifted.steps.push_back({cfg.v, fresh, alpha[cfg.v]});
    lifted.steps.push_back({cfg.w, fresh, alpha[cfg.w]});
    Colouring target = alpha;
    target[cfg.v] = target[cfg.w] = fresh;
    auto inst = make_uniform_instance(pi.graph, 5);
    auto report = validate_sequence(inst, alpha, lifted, target);
    CHECK(report.valid);
    CHECK(report.reaches_target);
    (void)minst;
}

TEST_CASE("planar transform on a single vertex") {
    Graph g(1);
    Embedding emb = build_embedding(g, {{}});
    auto seq = transform_planar_bipartite(g, emb, {0}, {3});
    CHECK(seq.length() == 1);
}

TEST_CASE("planar transform on C4, sandwiched by the oracle") {
    auto pi = generated(Family::Grid, 2, 2);
    auto inst = make_uniform_instance(pi.graph, 5);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Colouring alpha = random_colouring(inst, seed * 2);
        Colouring beta = random_colouring(inst, seed * 2 + 1);
        check_planar_transform(pi, alpha, beta);
        auto seq = transform_planar_bipartite(pi.graph, pi.emb, alpha, beta);
        auto oracle = bfs_distance(inst, alpha, beta);
        REQUIRE(oracle.status == SearchStatus::Found);
        CHECK(oracle.value <= static_cast<std::int64_t>(seq.length()));
    }
}

TEST_CASE("planar transform on the 4x4 grid: 100 random pairs") {
    auto pi = generated(Family::Grid, 4, 4);
    auto inst = make_uniform_instance(pi.graph, 5);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Colouring alpha = perturb_colouring(inst, random_colouring(inst, seed * 2), 32, seed);
        Colouring beta = perturb_colouring(inst, random_colouring(inst, seed * 2 + 1), 32, ~seed);
        check_planar_transform(pi, alpha, beta);
    }
}

TEST_CASE("planar transform on prisms goes through the contraction case") {
    for (int n : {8, 12, 16}) {
        auto pi = generated(Family::Prism, n);
        auto cfg = find_configuration(pi.graph, pi.emb);
        CHECK(cfg.kind == Configuration::Kind::FourFace);
        auto inst = make_uniform_instance(pi.graph, 5);
        for (std::uint64_t seed = 0; seed < 6; ++seed) {
            Colouring alpha = random_colouring(inst, seed * 2 + n);
            Colouring beta = random_colouring(inst, seed * 2 + n + 1);
            check_planar_transform(pi, alpha, beta);
        }
    }
}

TEST_CASE("planar transform against the oracle on the 2x3 grid") {
    auto pi = generated(Family::Grid, 2, 3);
    auto inst = make_uniform_instance(pi.graph, 5);
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        Colouring alpha = random_colouring(inst, seed + 40);
        Colouring beta = random_colouring(inst, seed + 80);
        auto seq = transform_planar_bipartite(pi.graph, pi.emb, alpha, beta);
        auto report = validate_sequence(inst, alpha, seq, beta);
        CHECK(report.valid);
        CHECK(report.reaches_target);
        auto oracle = bfs_distance(inst, alpha, beta);
        REQUIRE(oracle.status == SearchStatus::Found);
        CHECK(oracle.value <= static_cast<std::int64_t>(seq.length()));
    }
}

TEST_CASE("planar transform handles disconnected graphs and isolated vertices") {
    Graph g(9);
    std::vector<std::vector<int>> rot(9);
    auto add_square = [&](int base) {
        g.add_edge(base, base + 1);
        g.add_edge(base + 1, base + 2);
        g.add_edge(base + 2, base + 3);
        g.add_edge(base + 3, base);
        rot[base] = {base + 3, base + 1};
        rot[base + 1] = {base, base + 2};
        rot[base + 2] = {base + 1, base + 3};
        rot[base + 3] = {base + 2, base};
    };
    add_square(0);
    add_square(4);
    Embedding emb = build_embedding(g, rot);
    Colouring alpha{0, 1, 0, 1, 2, 3, 2, 3, 4};
    Colouring beta{1, 0, 1, 0, 3, 2, 3, 2, 0};
    auto seq = transform_planar_bipartite(g, emb, alpha, beta);
    auto inst = make_uniform_instance(g, 5);
    auto report = validate_sequence(inst, alpha, seq, beta);
    CHECK(report.valid);
    CHECK(report.reaches_target);
}

TEST_CASE("planar transform rejects bad inputs") {
    auto pi = generated(Family::Grid, 2, 2);
    CHECK_THROWS_AS(transform_planar_bipartite(pi.graph, pi.emb, {0, 1, 0, 9}, {0, 1, 0, 1}),
                    precondition_error);
    CHECK_THROWS_AS(transform_planar_bipartite(pi.graph, pi.emb, {0, 0, 0, 0}, {0, 1, 0, 1}),
                    precondition_error);
    auto odd = generated(Family::Cycle, 5);
    Colouring a{0, 1, 0, 1, 2}, b{1, 0, 1, 0, 2};
    CHECK_THROWS_AS(transform_planar_bipartite(odd.graph, odd.emb, a, b), precondition_error);
}
