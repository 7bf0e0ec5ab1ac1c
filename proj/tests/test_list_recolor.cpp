#include <doctest.h>

#include <algorithm>
#include <limits>

#include "helpers.hpp"
#include "recolor/list_transform.hpp"
#include "recolor/oracle.hpp"

using namespace recolor;
using testutil::instance_from_edges;

namespace {

// end-to-end check used by most engine tests
void check_transform(const ListInstance& inst, const Colouring& alpha, const Colouring& beta,
                     const RecoloringSequence& seq) {
    auto report = validate_sequence(inst, alpha, seq, beta);
    CHECK(report.valid);
    CHECK(report.reaches_target);
}

} // namespace

TEST_CASE("full set conditions on tiny instances") {
    auto single = instance_from_edges(1, {}, {1, 2}, 1);
    CHECK(is_full(single, {1}, {1}));

    auto edge = instance_from_edges(2, {{0, 1}}, {1, 2, 3}, 1);
    REQUIRE(edge.ordering.order == std::vector<int>{0, 1});
    CHECK(is_full(edge, {2, 1}, {1}));      // 0 sees 1 on its out-neighbour, 1 wears it
    CHECK_FALSE(is_full(edge, {2, 3}, {1})); // 0 fails all three conditions
    CHECK(full_up_to(edge, {2, 3}, {1}, 0));
}

TEST_CASE("length bound: known values") {
    CHECK(length_bound(10, 4, 2) == 40);
    CHECK(length_bound(0, 5, 1) == 0);
    // 6 > 2*2, so one unfolding: ceil(20/2+3)*B(10,4,2) + 10*100
    CHECK(length_bound(10, 6, 2) == 13 * 40 + 1000);
    CHECK(length_bound(10, 6, 2) == 1520);
    CHECK_THROWS_AS(length_bound(3, 4, 0), precondition_error);
}

TEST_CASE("length bound saturates instead of overflowing") {
    CHECK(length_bound(1'000'000, 40, 1) == std::numeric_limits<std::int64_t>::max());
}

TEST_CASE("length bound monotonicity over a grid") {
    for (int a = 1; a <= 4; ++a)
        for (int k = 1; k <= 9; ++k)
            for (int n = 0; n <= 30; n += 3) {
                CHECK(length_bound(n, k, a) <= length_bound(n + 1, k, a));
                CHECK(length_bound(n, k, a) <= length_bound(n, k + 1, a));
                CHECK(length_bound(n, k, a) >= length_bound(n, k, a + 1));
            }
}

TEST_CASE("bound classification") {
    BoundParams trees;
    trees.n = 10;
    trees.k = 3;
    trees.d = 1;
    auto r = classify_bound(trees);
    CHECK(r.label == "k=d+2");
    CHECK(r.exponent == 1);
    CHECK(r.value == length_bound(10, 3, 1));

    BoundParams mid;
    mid.n = 10;
    mid.k = 9;
    mid.d = 5;
    CHECK(classify_bound(mid).label == "quadratic");

    BoundParams lin;
    lin.n = 10;
    lin.k = 4;
    lin.a = 2;
    auto l = classify_bound(lin);
    CHECK(l.label == "linear");
    CHECK(l.value == 40);

    BoundParams eps;
    eps.n = 10;
    eps.k = 14;
    eps.d = 9;
    eps.epsilon = 0.25;
    CHECK(classify_bound(eps).label == "epsilon");

    BoundParams low;
    low.n = 10;
    low.k = 3;
    low.d = 3;
    CHECK(classify_bound(low).label == "unsupported");
}

TEST_CASE("linear transform on one vertex") {
    auto inst = instance_from_edges(1, {}, {1, 2}, 1);
    auto seq = linear_transform(inst, {1}, {2});
    CHECK(seq.length() == 1);
    check_transform(inst, {1}, {2}, seq);
}

TEST_CASE("linear transform with equal endpoints is empty") {
    auto inst = instance_from_edges(2, {{0, 1}}, {1, 2, 3, 4}, 2);
    CHECK(linear_transform(inst, {1, 2}, {1, 2}).length() == 0);
}

TEST_CASE("linear transform swap matches the exact oracle lower bound") {
    auto inst = instance_from_edges(2, {{0, 1}}, {1, 2, 3, 4}, 2);
    Colouring alpha{1, 2}, beta{2, 1};
    auto oracle = bfs_distance(inst, alpha, beta);
    REQUIRE(oracle.status == SearchStatus::Found);
    CHECK(oracle.value == 3);

    auto seq = linear_transform(inst, alpha, beta);
    check_transform(inst, alpha, beta, seq);
    CHECK(seq.length() >= 3);
    CHECK(seq.length() <= 8);
    CHECK(seq.max_per_vertex(2) <= 4);
}

TEST_CASE("linear transform rejects k > 2a") {
    auto inst = instance_from_edges(2, {{0, 1}}, {1, 2, 3}, 1);
    CHECK_THROWS_AS(linear_transform(inst, {1, 2}, {2, 1}), precondition_error);
}

TEST_CASE("linear transform: random instances stay within the per-vertex budget") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        int a = 2 + static_cast<int>(seed % 2);
        int k = 2 * a;
        auto inst = testutil::random_list_instance(Family::RandomDegenerate, 15, a - 1, k, a, seed);
        REQUIRE(is_feasible(inst));
        Colouring alpha = random_colouring(inst, seed * 2);
        Colouring beta = random_colouring(inst, seed * 2 + 1);
        auto seq = linear_transform(inst, alpha, beta);
        check_transform(inst, alpha, beta, seq);
        CHECK(seq.max_per_vertex(inst.graph.n) <= k);
        CHECK(static_cast<std::int64_t>(seq.length()) <= static_cast<std::int64_t>(k) * inst.graph.n);
    }
}

TEST_CASE("replace_full_set with an unchanged target can return immediately") {
    auto inst = instance_from_edges(1, {}, {1, 2}, 1);
    auto change = replace_full_set(inst, {1}, {1}, {1});
    CHECK(change.seq.length() == 0);
    CHECK(change.colouring == Colouring{1});
}

TEST_CASE("replace_full_set on a single vertex is one forced step") {
    auto inst = instance_from_edges(1, {}, {1, 2}, 1);
    auto change = replace_full_set(inst, {1}, {1}, {2});
    CHECK(change.colouring == Colouring{2});
    CHECK(change.seq.length() == 1);
    CHECK(is_full(inst, change.colouring, {2}));
}

TEST_CASE("replace_full_set on a path lands on a full target set") {
    auto inst = instance_from_edges(3, {{0, 1}, {1, 2}}, {1, 2, 3}, 1);
    Colouring alpha{1, 2, 1};
    REQUIRE(is_full(inst, alpha, {1}));
    auto change = replace_full_set(inst, alpha, {1}, {2});
    check_transform(inst, alpha, change.colouring, change.seq);
    CHECK(is_full(inst, change.colouring, {2}));
    CHECK(static_cast<std::int64_t>(change.seq.length()) <= length_bound(3, 2, 1) + 4 * 3);
}

TEST_CASE("replace_full_set demands a full starting set") {
    auto inst = instance_from_edges(2, {{0, 1}}, {1, 2, 3}, 1);
    CHECK_THROWS_AS(replace_full_set(inst, {2, 3}, {1}, {2}), precondition_error);
}

TEST_CASE("build_full_set is free when n <= a") {
    auto inst = instance_from_edges(2, {{0, 1}}, {1, 2, 3, 4, 5}, 2);
    auto found = build_full_set(inst, {1, 2});
    CHECK(found.seq.length() == 0);
    CHECK(found.full_set.size() == 2);
    CHECK(is_full(inst, found.colouring, found.full_set));
}

TEST_CASE("build_full_set on a single vertex") {
    auto inst = instance_from_edges(1, {}, {1, 2}, 1);
    auto found = build_full_set(inst, {1});
    CHECK(found.seq.length() == 0);
    CHECK(found.full_set == std::vector<int>{1});
}

TEST_CASE("build_full_set on C4 returns validated full sets") {
    auto inst = instance_from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {1, 2, 3, 4}, 1);
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        Colouring alpha = random_colouring(inst, seed);
        auto found = build_full_set(inst, alpha);
        check_transform(inst, alpha, found.colouring, found.seq);
        CHECK(is_full(inst, found.colouring, found.full_set));
        CHECK(static_cast<std::int64_t>(found.seq.length()) <=
              4 * (length_bound(4, 3, 1) + 4 * 4));
    }
}

TEST_CASE("transform_list with equal endpoints") {
    auto inst = instance_from_edges(2, {{0, 1}}, {1, 2, 3}, 1);
    CHECK(transform_list(inst, {1, 2}, {1, 2}).length() == 0);
}

TEST_CASE("transform_list swap on an edge with three colours") {
    auto inst = instance_from_edges(2, {{0, 1}}, {1, 2, 3}, 1);
    Colouring alpha{1, 2}, beta{2, 1};
    auto oracle = bfs_distance(inst, alpha, beta);
    REQUIRE(oracle.status == SearchStatus::Found);
    CHECK(oracle.value == 3);
    auto seq = transform_list(inst, alpha, beta);
    check_transform(inst, alpha, beta, seq);
    CHECK(static_cast<std::int64_t>(seq.length()) >= 3);
    CHECK(static_cast<std::int64_t>(seq.length()) <= length_bound(2, 3, 1));
}

TEST_CASE("transform_list on random 2-degenerate instances stays within the bound") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        auto inst = testutil::random_list_instance(Family::RandomDegenerate, 12, 2, 4, 1, seed);
        Colouring alpha = random_colouring(inst, seed * 5 + 1);
        Colouring beta = random_colouring(inst, seed * 5 + 2);
        auto seq = transform_list(inst, alpha, beta);
        check_transform(inst, alpha, beta, seq);
        CHECK(static_cast<std::int64_t>(seq.length()) <=
              length_bound(inst.graph.n, inst.colour_count(), inst.slack));
    }
}

TEST_CASE("transform_list on 2-degenerate instances with identical four-colour lists") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        GenSpec spec;
        spec.family = Family::RandomDegenerate;
        spec.n = 12;
        spec.d = 2;
        spec.seed = seed;
        Graph g = generate_graph(spec).graph;
        auto inst = make_instance(std::move(g), std::vector<std::vector<int>>(12, {1, 2, 3, 4}), 1);
        REQUIRE(is_feasible(inst));
        Colouring alpha = random_colouring(inst, seed + 1);
        Colouring beta = random_colouring(inst, seed + 50);
        auto seq = transform_list(inst, alpha, beta);
        check_transform(inst, alpha, beta, seq);
        CHECK(static_cast<std::int64_t>(seq.length()) <= length_bound(12, 4, 1));
    }
}

TEST_CASE("deleting a full set of colours keeps the remainder feasible") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto inst = testutil::random_list_instance(Family::RandomDegenerate, 14, 2, 5, 1, seed);
        Colouring alpha = random_colouring(inst, seed + 7);
        auto found = build_full_set(inst, alpha);
        std::vector<int> keep;
        for (int v = 0; v < inst.graph.n; ++v)
            if (!std::binary_search(found.full_set.begin(), found.full_set.end(),
                                    found.colouring[v]))
                keep.push_back(v);
        auto sub = induced_instance(inst, keep, found.full_set);
        CHECK(is_feasible(sub.instance));
    }
}

TEST_CASE("transform_list survives a four-level colour recursion") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        GenSpec spec;
        spec.family = Family::RandomDegenerate;
        spec.n = 10;
        spec.d = 2;
        spec.seed = seed;
        Graph g = generate_graph(spec).graph;
        // declared slack 1 with six colours: the engine sheds one colour
        // block per level until the linear regime
        auto inst = make_instance(std::move(g),
                                  std::vector<std::vector<int>>(10, {0, 1, 2, 3, 4, 5}), 1);
        Colouring alpha = random_colouring(inst, seed + 3);
        Colouring beta = perturb_colouring(inst, random_colouring(inst, seed + 9), 40, seed);
        auto seq = transform_list(inst, alpha, beta);
        check_transform(inst, alpha, beta, seq);
        CHECK(static_cast<std::int64_t>(seq.length()) <= length_bound(10, 6, 1));
    }
}

TEST_CASE("oracle sandwich on small instances") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto inst = testutil::random_list_instance(Family::RandomDegenerate, 7, 2, 4, 1, seed);
        Colouring alpha = random_colouring(inst, seed + 100);
        Colouring beta = random_colouring(inst, seed + 200);
        auto seq = transform_list(inst, alpha, beta);
        check_transform(inst, alpha, beta, seq);
        auto oracle = bfs_distance(inst, alpha, beta);
        REQUIRE(oracle.status == SearchStatus::Found);
        CHECK(oracle.value <= static_cast<std::int64_t>(seq.length()));
    }
}

TEST_CASE("transform_k on trees with three colours") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        GenSpec spec;
        spec.family = Family::Tree;
        spec.n = 15;
        spec.seed = seed;
        Graph g = generate_graph(spec).graph;
        auto inst = make_uniform_instance(g, 3);
        Colouring alpha = random_colouring(inst, seed * 2);
        Colouring beta = random_colouring(inst, seed * 2 + 1);
        auto seq = transform_k(g, 3, alpha, beta);
        check_transform(inst, alpha, beta, seq);
        CHECK(static_cast<std::int64_t>(seq.length()) <= length_bound(g.n, 3, 1));
    }
}

TEST_CASE("transform_k single edge with four colours") {
    Graph g = Graph::from_edges(2, {{0, 1}});
    Colouring alpha{1, 2}, beta{2, 1};
    auto seq = transform_k(g, 4, alpha, beta);
    auto inst = make_uniform_instance(g, 4);
    auto report = validate_sequence(inst, alpha, seq, beta);
    CHECK(report.valid);
    CHECK(report.reaches_target);
    auto oracle = bfs_distance(inst, alpha, beta);
    REQUIRE(oracle.status == SearchStatus::Found);
    CHECK(oracle.value == 3);
    CHECK(static_cast<std::int64_t>(seq.length()) >= 3);
}

TEST_CASE("transform_k with equal endpoints is empty") {
    Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(transform_k(g, 3, {0, 1, 0}, {0, 1, 0}).length() == 0);
}

TEST_CASE("transform_k rejects too few colours") {
    Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK_THROWS_AS(transform_k(g, 3, {0, 1, 0, 1}, {1, 0, 1, 0}), precondition_error);
}

TEST_CASE("transform_k above d+2 exercises the forgetting route") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        GenSpec spec;
        spec.family = Family::RandomDegenerate;
        spec.n = 14;
        spec.d = 2;
        spec.seed = seed;
        Graph g = generate_graph(spec).graph;
        for (int k : {5, 6}) {
            auto inst = make_uniform_instance(g, k);
            Colouring alpha = random_colouring(inst, seed * 17 + k);
            Colouring beta = random_colouring(inst, seed * 19 + k);
            auto seq = transform_k(g, k, alpha, beta);
            auto report = validate_sequence(inst, alpha, seq, beta);
            CHECK(report.valid);
            CHECK(report.reaches_target);
        }
    }
}
