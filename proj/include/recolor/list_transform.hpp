#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "recolor/graph.hpp"

namespace recolor {

/// True when every vertex v and colour s of S satisfies one of:
/// c(v) is in S, some out-neighbour of v is coloured s, or s is not in
/// v's list. Such a set can be deleted (vertices coloured in it, colours
/// everywhere) without losing feasibility.
bool is_full(const ListInstance& inst, const Colouring& c, const std::vector<int>& S);

/// Same conditions restricted to the first `upto` vertices of the ordering.
bool full_up_to(const ListInstance& inst, const Colouring& c, const std::vector<int>& S, int upto);

/// Worst-case sequence length the engine guarantees: k*n when k <= 2a,
/// otherwise ceil(2n/a + 3) * bound(n, k-a, a) + 10*n^2. Saturates at the
/// int64 maximum instead of overflowing.
std::int64_t length_bound(std::int64_t n, std::int64_t k, std::int64_t a);

struct BoundParams {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t a = -1; // derived from d when negative
    std::int64_t d = -1; // optional degeneracy, for classical colouring
    std::optional<double> epsilon;
};

struct BoundReport {
    std::string label; // "linear" | "k=d+2" | "quadratic" | "epsilon" | "general" | "unsupported"
    std::int64_t value = 0;
    std::int64_t exponent = 0; // ceil(k/a) - 2, clamped at 0
};

/// Classifies which diameter regime applies and evaluates the explicit
/// bound. The value is always length_bound(n, k, a): the recursion unwound
/// with concrete constants, no opaque multiplier.
BoundReport classify_bound(const BoundParams& params);

/// Transform between two list colourings when k <= 2a. Every vertex moves
/// at most k times, so the sequence has length at most k*n.
RecoloringSequence linear_transform(const ListInstance& inst, const Colouring& alpha,
                                    const Colouring& beta);

/// From a colouring with full set S, reach one where `Sprime` is full.
/// Sequence length at most length_bound(n, k-a, a) + (2a+2)*n.
struct FullSetChange {
    Colouring colouring;
    RecoloringSequence seq;
};
FullSetChange replace_full_set(const ListInstance& inst, const Colouring& alpha,
                               const std::vector<int>& S, const std::vector<int>& Sprime);

/// Reach a colouring with some full set of size a, built by fixing the
/// ordering prefix a vertices at a time. Needs k >= 2a. Length at most
/// ceil(n/a) * (length_bound(n, k-a, a) + (2a+2)*n).
struct FullSetSearch {
    Colouring colouring;
    std::vector<int> full_set;
    RecoloringSequence seq;
};
FullSetSearch build_full_set(const ListInstance& inst, const Colouring& alpha);

/// Transform between any two list colourings of a feasible instance with
/// slack a >= 1. Length at most length_bound(n, k, a).
RecoloringSequence transform_list(const ListInstance& inst, const Colouring& alpha,
                                  const Colouring& beta);

/// Transform between two classical k-colourings of a graph of degeneracy d,
/// for k >= d+2. For k > d+2 both sides are routed through a fixed greedy
/// (d+1)-colouring so the length depends on d, not k.
RecoloringSequence transform_k(const Graph& g, int k, const Colouring& alpha,
                               const Colouring& beta);

/// Length guarantee matching transform_k's route: length_bound(n, k, 1)
/// at k == d+2, otherwise 2*length_bound(n, d+2, 1) + 2n for the two
/// walks through the reference colouring.
std::int64_t transform_k_bound(std::int64_t n, std::int64_t k, std::int64_t d);

} // namespace recolor
