#include "recolor/list_transform.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace recolor {

namespace {

constexpr std::int64_t kSaturated = std::numeric_limits<std::int64_t>::max();

std::int64_t sat_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) return kSaturated;
    return out;
}

std::int64_t sat_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) return kSaturated;
    return out;
}

std::int64_t ceil_div(std::int64_t num, std::int64_t den) { return (num + den - 1) / den; }

bool contains(const std::vector<int>& sorted, int value) {
    return std::binary_search(sorted.begin(), sorted.end(), value);
}

std::vector<int> sorted_copy(std::vector<int> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

// a \ b, both sorted
std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Does v satisfy the full-set conditions for every colour of S?
bool vertex_covered(const ListInstance& inst, const Colouring& c, const std::vector<int>& S, int v) {
    if (contains(S, c[v])) return true;
    std::vector<int> out_colours;
    for (int u : inst.graph.adj[v])
        if (inst.ordering.position[u] > inst.ordering.position[v]) out_colours.push_back(c[u]);
    std::sort(out_colours.begin(), out_colours.end());
    for (int s : S) {
        if (!inst.in_list(v, s)) continue;
        if (!contains(out_colours, s)) return false;
    }
    return true;
}

// Number of leading ordering positions whose vertices satisfy the
// conditions; the conditions are per-vertex, so this determines every
// full_up_to query at once.
int covered_prefix(const ListInstance& inst, const Colouring& c, const std::vector<int>& S) {
    for (int pos = 0; pos < inst.graph.n; ++pos)
        if (!vertex_covered(inst, c, S, inst.ordering.order[pos])) return pos;
    return inst.graph.n;
}

Colouring project(const Colouring& c, const std::vector<int>& keep) {
    Colouring out;
    out.reserve(keep.size());
    for (int v : keep) out.push_back(c[v]);
    return out;
}

void check_pair(const ListInstance& inst, const Colouring& alpha, const Colouring& beta,
                const char* where) {
    if (!is_list_colouring(inst, alpha) || !is_list_colouring(inst, beta))
        throw precondition_error(std::string(where) + ": endpoints must be proper list colourings");
}

} // namespace

bool full_up_to(const ListInstance& inst, const Colouring& c, const std::vector<int>& S, int upto) {
    if (static_cast<int>(c.size()) != inst.graph.n)
        throw input_error("colouring length does not match vertex count");
    auto sorted = sorted_copy(S);
    upto = std::min(upto, inst.graph.n);
    for (int pos = 0; pos < upto; ++pos)
        if (!vertex_covered(inst, c, sorted, inst.ordering.order[pos])) return false;
    return true;
}

bool is_full(const ListInstance& inst, const Colouring& c, const std::vector<int>& S) {
    return full_up_to(inst, c, S, inst.graph.n);
}

std::int64_t length_bound(std::int64_t n, std::int64_t k, std::int64_t a) {
    if (n < 0 || k < 1 || a < 1) throw precondition_error("length_bound needs n >= 0, k >= 1, a >= 1");
    if (n == 0) return 0;
    if (k <= 2 * a) return sat_mul(k, n);
    std::int64_t multiplier = ceil_div(2 * n, a) + 3;
    std::int64_t inner = length_bound(n, k - a, a);
    return sat_add(sat_mul(multiplier, inner), sat_mul(10, sat_mul(n, n)));
}

BoundReport classify_bound(const BoundParams& params) {
    std::int64_t n = params.n, k = params.k;
    if (n < 0 || k < 1) throw precondition_error("bound needs n >= 0 and k >= 1");
    std::int64_t a = params.a;
    std::int64_t d = params.d;
    if (a < 0) {
        if (d < 0) throw precondition_error("bound needs either slack a or degeneracy d");
        a = k - d - 1;
    }
    if (a < 1) {
        if (d >= 0 && k < d + 2) return {"unsupported", 0, 0};
        throw precondition_error("slack must be at least 1");
    }

    BoundReport report;
    report.exponent = std::max<std::int64_t>(0, ceil_div(k, a) - 2);
    report.value = length_bound(n, k, a);
    if (k <= 2 * a) {
        report.label = "linear";
    } else if (d >= 0 && k == d + 2) {
        report.label = "k=d+2";
    } else if (k <= 3 * a) {
        report.label = "quadratic";
    } else if (params.epsilon && *params.epsilon > 0.0 && *params.epsilon < 1.0 &&
               (d >= 0 ? static_cast<double>(k) + 1e-9 >= (1.0 + *params.epsilon) * static_cast<double>(d + 2)
                       : static_cast<double>(k) * *params.epsilon <=
                             (1.0 + *params.epsilon) * static_cast<double>(a) + 1e-9)) {
        report.label = "epsilon";
    } else {
        report.label = "general";
    }
    return report;
}

RecoloringSequence linear_transform(const ListInstance& inst, const Colouring& alpha,
                                    const Colouring& beta) {
    const Graph& g = inst.graph;
    const int n = g.n;
    if (n == 0) return {};
    check_pair(inst, alpha, beta, "linear_transform");
    const int a = inst.slack;
    const int k = inst.colour_count();
    if (!is_feasible(inst)) throw precondition_error("linear_transform: instance is not feasible");
    if (k > 2 * a) throw precondition_error("linear_transform needs k <= 2a");

    const auto& order = inst.ordering.order;
    const auto& position = inst.ordering.position;

    // Build the sequence suffix by suffix. At level i the sequence moves
    // the vertices at positions i..n-1 from alpha to beta; the vertex at
    // position i is woven into the level-(i+1) sequence with a look-ahead
    // choice whenever a neighbour wants its current colour.
    RecoloringSequence seq;
    {
        int last = order[n - 1];
        if (alpha[last] != beta[last]) seq.steps.push_back({last, beta[last], alpha[last]});
    }
    for (int i = n - 2; i >= 0; --i) {
        const int v = order[i];
        std::vector<char> is_nbr(n, 0);
        int d = 0;
        for (int u : g.adj[v])
            if (position[u] > i) {
                is_nbr[u] = 1;
                ++d;
            }
        std::vector<std::size_t> nbr_steps; // indices into seq touching N(v)
        for (std::size_t j = 0; j < seq.steps.size(); ++j)
            if (is_nbr[seq.steps[j].v]) nbr_steps.push_back(j);

        RecoloringSequence next;
        next.steps.reserve(seq.steps.size() + static_cast<std::size_t>(k));
        Colouring cur = alpha;
        std::size_t nbr_cursor = 0;
        for (std::size_t j = 0; j < seq.steps.size(); ++j) {
            const Step& s = seq.steps[j];
            while (nbr_cursor < nbr_steps.size() && nbr_steps[nbr_cursor] < j) ++nbr_cursor;
            if (is_nbr[s.v] && s.to == cur[v]) {
                // The next d+1 recolourings of v's neighbours, this one
                // included, fix the window the new colour must avoid.
                std::vector<int> upcoming;
                for (std::size_t t = nbr_cursor; t < nbr_steps.size() && upcoming.size() < static_cast<std::size_t>(d) + 1; ++t)
                    upcoming.push_back(seq.steps[nbr_steps[t]].to);
                std::sort(upcoming.begin(), upcoming.end());

                int pick = -1;
                for (int colour : inst.lists[v]) {
                    if (colour == cur[v] || contains(upcoming, colour)) continue;
                    bool blocked = false;
                    for (int u : g.adj[v])
                        if (position[u] > i && cur[u] == colour) {
                            blocked = true;
                            break;
                        }
                    if (!blocked) {
                        pick = colour;
                        break;
                    }
                }
                if (pick < 0) throw internal_error("linear_transform: look-ahead found no colour");
                next.steps.push_back({v, pick, cur[v]});
                cur[v] = pick;
            }
            next.steps.push_back(s);
            cur[s.v] = s.to;
        }
        if (cur[v] != beta[v]) next.steps.push_back({v, beta[v], cur[v]});
        seq = std::move(next);
    }

    auto counts = seq.per_vertex_counts(n);
    for (int v = 0; v < n; ++v)
        if (counts[v] > k) throw internal_error("linear_transform: vertex recoloured more than k times");
    return seq;
}

FullSetChange replace_full_set(const ListInstance& inst, const Colouring& alpha,
                               const std::vector<int>& S_in, const std::vector<int>& Sprime_in) {
    const Graph& g = inst.graph;
    const int n = g.n;
    const int a = inst.slack;
    const auto S = sorted_copy(S_in);
    const auto Sprime = sorted_copy(Sprime_in);
    if (static_cast<int>(S.size()) != a || static_cast<int>(Sprime.size()) != a)
        throw precondition_error("replace_full_set: colour sets must have size a");
    if (a < 1) throw precondition_error("replace_full_set needs slack >= 1");
    if (!is_list_colouring(inst, alpha))
        throw precondition_error("replace_full_set: colouring must be a proper list colouring");
    if (!is_feasible(inst)) throw precondition_error("replace_full_set: instance is not feasible");
    if (!is_full(inst, alpha, S)) throw precondition_error("replace_full_set: S is not full");

    if (is_full(inst, alpha, Sprime)) return {alpha, {}};

    FullSetChange result;
    result.colouring = alpha;
    if (n <= 1) {
        // Single vertex: it must take a colour of Sprime directly.
        for (int s : Sprime) {
            if (inst.in_list(0, s)) {
                result.seq.steps.push_back({0, s, alpha[0]});
                result.colouring[0] = s;
                return result;
            }
        }
        throw internal_error("replace_full_set: single vertex has no target colour");
    }

    const auto palette = inst.palette();
    const int k = static_cast<int>(palette.size());
    Colouring& cur = result.colouring;
    RecoloringSequence& seq = result.seq;

    // Move everything off S first: greedily colour with S last so the
    // result avoids S entirely, and walk the S-free subgraph there.
    const auto both = set_union(S, Sprime);
    std::vector<int> pref = set_minus(palette, both);
    for (int s : set_minus(Sprime, S)) pref.push_back(s);
    for (int s : S) pref.push_back(s);
    const Colouring gamma = greedy_colouring(inst, pref);
    for (int v = 0; v < n; ++v)
        if (contains(S, gamma[v])) throw internal_error("replace_full_set: greedy used a colour of S");

    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
        if (!contains(S, alpha[v])) keep.push_back(v);
    SubInstance sub = induced_instance(inst, keep, S);
    RecoloringSequence walk =
        lift_sequence(transform_list(sub.instance, project(alpha, keep), project(gamma, keep)),
                      sub.to_parent);
    cur = apply_sequence(cur, walk);
    seq.append(walk);
    for (int v = 0; v < n; ++v) {
        if (cur[v] != gamma[v]) {
            seq.steps.push_back({v, gamma[v], cur[v]});
            cur[v] = gamma[v];
        }
    }

    // The colours outside S and Sprime are now full: each vertex either
    // wears one or was blocked into its own colour by later neighbours.
    // That keeps the Sprime-coloured cluster feasible on <= 2a colours.
    if (!is_full(inst, cur, set_minus(palette, both)))
        throw internal_error("replace_full_set: residual colours are not full after the greedy walk");

    // Empty Sprime out of the <=2a-colour cluster it still occupies.
    std::vector<int> cluster;
    for (int v = 0; v < n; ++v)
        if (contains(Sprime, cur[v])) cluster.push_back(v);
    if (!cluster.empty()) {
        SubInstance subK = induced_instance(inst, cluster, set_minus(palette, both));
        std::vector<int> prefK = set_minus(S, Sprime);
        for (int s : Sprime) prefK.push_back(s);
        const Colouring delta = greedy_colouring(subK.instance, prefK);
        for (std::size_t i = 0; i < cluster.size(); ++i)
            if (contains(Sprime, delta[i]))
                throw internal_error("replace_full_set: cluster greedy used a colour of Sprime");
        RecoloringSequence drain = lift_sequence(
            linear_transform(subK.instance, project(cur, cluster), delta), subK.to_parent);
        cur = apply_sequence(cur, drain);
        seq.append(drain);
    }

    // Final sweep from v_n to v_1: grab a colour of Sprime wherever one is
    // free. Earlier vertices only ever see finalised out-neighbours in
    // Sprime, which is what makes the result full.
    for (int pos = n - 1; pos >= 0; --pos) {
        int v = inst.ordering.order[pos];
        for (int s : Sprime) {
            if (s == cur[v] || !inst.in_list(v, s)) continue;
            bool blocked = false;
            for (int u : g.adj[v])
                if (cur[u] == s) {
                    blocked = true;
                    break;
                }
            if (!blocked) {
                seq.steps.push_back({v, s, cur[v]});
                cur[v] = s;
                break;
            }
        }
    }

    if (!is_full(inst, cur, Sprime)) throw internal_error("replace_full_set: target set is not full");
    std::int64_t cap = sat_add(length_bound(n, k - a, a),
                               sat_mul(2 * static_cast<std::int64_t>(a) + 2, n));
    if (static_cast<std::int64_t>(seq.length()) > cap)
        throw internal_error("replace_full_set: sequence exceeds its length bound");
    return result;
}

FullSetSearch build_full_set(const ListInstance& inst, const Colouring& alpha) {
    const int n = inst.graph.n;
    const int a = inst.slack;
    if (a < 1) throw precondition_error("build_full_set needs slack >= 1");
    if (!is_feasible(inst)) throw precondition_error("build_full_set: instance is not feasible");
    const auto palette = inst.palette();
    const int k = static_cast<int>(palette.size());
    if (k < 2 * a) throw precondition_error("build_full_set needs k >= 2a");
    if (n > 0 && !is_list_colouring(inst, alpha))
        throw precondition_error("build_full_set: colouring must be a proper list colouring");

    auto pad_to_a = [&](std::vector<int> set) {
        set = sorted_copy(std::move(set));
        for (int colour : palette) {
            if (static_cast<int>(set.size()) >= a) break;
            if (!contains(set, colour))
                set.insert(std::lower_bound(set.begin(), set.end(), colour), colour);
        }
        return set;
    };

    FullSetSearch result;
    result.colouring = alpha;
    Colouring& cur = result.colouring;

    std::vector<int> first;
    for (int pos = 0; pos < std::min(a, n); ++pos) first.push_back(cur[inst.ordering.order[pos]]);
    result.full_set = pad_to_a(std::move(first));

    int covered = covered_prefix(inst, cur, result.full_set);
    int rounds = 0;
    while (covered < n) {
        const int take = std::min(a, n - covered);
        std::vector<int> next_set;
        for (int pos = covered; pos < covered + take; ++pos)
            next_set.push_back(cur[inst.ordering.order[pos]]);
        next_set = pad_to_a(std::move(next_set));

        std::vector<int> keep(inst.ordering.order.begin(), inst.ordering.order.begin() + covered);
        SubInstance sub = restrict_instance(inst, cur, keep);
        FullSetChange change =
            replace_full_set(sub.instance, project(cur, sub.to_parent), result.full_set, next_set);
        RecoloringSequence lifted = lift_sequence(change.seq, sub.to_parent);
        cur = apply_sequence(cur, lifted);
        result.seq.append(lifted);
        result.full_set = next_set;

        int now = covered_prefix(inst, cur, result.full_set);
        if (now < covered + take) throw internal_error("build_full_set: prefix did not advance");
        covered = now;
        ++rounds;
    }

    if (rounds > std::max(0, static_cast<int>(ceil_div(n, a)) - 1))
        throw internal_error("build_full_set: too many rounds");
    if (!is_full(inst, cur, result.full_set)) throw internal_error("build_full_set: set is not full");
    std::int64_t per_round = sat_add(length_bound(n, k - a, a),
                                     sat_mul(2 * static_cast<std::int64_t>(a) + 2, n));
    if (static_cast<std::int64_t>(result.seq.length()) > sat_mul(ceil_div(n, a), per_round))
        throw internal_error("build_full_set: sequence exceeds its length bound");
    return result;
}

RecoloringSequence transform_list(const ListInstance& inst, const Colouring& alpha,
                                  const Colouring& beta) {
    const Graph& g = inst.graph;
    const int n = g.n;
    if (n == 0) return {};
    check_pair(inst, alpha, beta, "transform_list");
    if (alpha == beta) return {};
    if (n == 1) {
        RecoloringSequence seq;
        seq.steps.push_back({0, beta[0], alpha[0]});
        return seq;
    }
    const int a = inst.slack;
    if (a < 1) throw precondition_error("transform_list needs slack >= 1");
    if (!is_feasible(inst)) throw precondition_error("transform_list: instance is not feasible");
    const auto palette = inst.palette();
    const int k = static_cast<int>(palette.size());

    RecoloringSequence seq;
    if (k <= 2 * a) {
        seq = linear_transform(inst, alpha, beta);
    } else {
        FullSetSearch from_alpha = build_full_set(inst, alpha);
        FullSetSearch from_beta = build_full_set(inst, beta);
        FullSetChange aligned =
            replace_full_set(inst, from_beta.colouring, from_beta.full_set, from_alpha.full_set);
        const std::vector<int>& anchor = from_alpha.full_set;

        std::vector<int> pref = set_minus(palette, anchor);
        for (int s : anchor) pref.push_back(s);
        const Colouring gamma = greedy_colouring(inst, pref);
        for (int v = 0; v < n; ++v)
            if (contains(anchor, gamma[v]))
                throw internal_error("transform_list: meeting colouring uses an anchor colour");

        // Walk one side to gamma: drop the anchor-coloured vertices, recurse
        // with one fewer block of colours, then land the dropped vertices.
        auto to_gamma = [&](Colouring cur, RecoloringSequence head) {
            std::vector<int> keep;
            for (int v = 0; v < n; ++v)
                if (!contains(anchor, cur[v])) keep.push_back(v);
            SubInstance sub = induced_instance(inst, keep, anchor);
            RecoloringSequence walk = lift_sequence(
                transform_list(sub.instance, project(cur, keep), project(gamma, keep)),
                sub.to_parent);
            cur = apply_sequence(cur, walk);
            head.append(walk);
            for (int v = 0; v < n; ++v) {
                if (cur[v] != gamma[v]) {
                    head.steps.push_back({v, gamma[v], cur[v]});
                    cur[v] = gamma[v];
                }
            }
            if (cur != gamma) throw internal_error("transform_list: side did not reach gamma");
            return head;
        };

        seq = to_gamma(from_alpha.colouring, std::move(from_alpha.seq));
        RecoloringSequence beta_head = std::move(from_beta.seq);
        beta_head.append(aligned.seq);
        RecoloringSequence beta_side = to_gamma(aligned.colouring, std::move(beta_head));
        seq.append(beta_side.reversed());
    }

    if (static_cast<std::int64_t>(seq.length()) > length_bound(n, k, a))
        throw internal_error("transform_list: sequence exceeds its length bound");
    return seq;
}

std::int64_t transform_k_bound(std::int64_t n, std::int64_t k, std::int64_t d) {
    if (k < d + 2) throw precondition_error("transform_k_bound needs k >= d+2");
    if (k == d + 2) return length_bound(n, k, 1);
    return sat_add(sat_mul(2, length_bound(n, d + 2, 1)), 2 * n);
}

RecoloringSequence transform_k(const Graph& g, int k, const Colouring& alpha,
                               const Colouring& beta) {
    const int n = g.n;
    if (static_cast<int>(alpha.size()) != n || static_cast<int>(beta.size()) != n)
        throw input_error("colouring length does not match vertex count");
    auto ord = degeneracy_ordering(g);
    const int d = ord.degeneracy;
    if (k < d + 2)
        throw precondition_error("transform_k needs k >= degeneracy + 2 (got k=" +
                                 std::to_string(k) + ", d=" + std::to_string(d) + ")");
    for (int v = 0; v < n; ++v)
        if (alpha[v] < 0 || alpha[v] >= k || beta[v] < 0 || beta[v] >= k)
            throw precondition_error("transform_k: colour out of range");
    if (!is_proper(g, alpha) || !is_proper(g, beta))
        throw precondition_error("transform_k: endpoints must be proper colourings");
    if (alpha == beta) return {};

    if (k == d + 2) return transform_list(make_uniform_instance(g, k), alpha, beta);

    // Reference colouring on d+1 colours by first-fit against the ordering.
    std::vector<int> firstfit_pref(d + 1);
    for (int c = 0; c <= d; ++c) firstfit_pref[c] = c;
    const Colouring landmark = greedy_colouring(make_uniform_instance(g, d + 1, 0), firstfit_pref);

    ListInstance whole = make_uniform_instance(g, k);
    std::vector<int> high_colours;
    for (int c = d + 2; c < k; ++c) high_colours.push_back(c);

    auto to_landmark = [&](const Colouring& start) {
        std::vector<int> keep;
        for (int v = 0; v < n; ++v)
            if (start[v] <= d + 1) keep.push_back(v);
        SubInstance sub = induced_instance(whole, keep, high_colours);
        int max_outdeg = 0;
        for (int v = 0; v < sub.instance.graph.n; ++v)
            max_outdeg = std::max(max_outdeg, sub.instance.ordering.outdeg[v]);
        sub.instance.slack = d + 1 - max_outdeg;

        RecoloringSequence seq = lift_sequence(
            transform_list(sub.instance, project(start, keep), project(landmark, keep)),
            sub.to_parent);
        Colouring cur = apply_sequence(start, seq);
        for (int v = 0; v < n; ++v) {
            if (cur[v] != landmark[v]) {
                seq.steps.push_back({v, landmark[v], cur[v]});
                cur[v] = landmark[v];
            }
        }
        return seq;
    };

    RecoloringSequence seq = to_landmark(alpha);
    seq.append(to_landmark(beta).reversed());
    if (static_cast<std::int64_t>(seq.length()) > transform_k_bound(n, k, d))
        throw internal_error("transform_k: sequence exceeds its length bound");
    return seq;
}

} // namespace recolor
