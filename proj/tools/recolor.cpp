// Command-line front end: transform / verify / bound / oracle / gen /
// inspect / bench over the JSON formats documented in json_io.hpp.
//
// Exit codes: 0 success, 1 invalid input, 2 unsatisfied precondition,
// 3 internal invariant violation.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "recolor/generators.hpp"
#include "recolor/graph.hpp"
#include "recolor/json_io.hpp"
#include "recolor/list_transform.hpp"
#include "recolor/oracle.hpp"
#include "recolor/planar.hpp"

using json = nlohmann::ordered_json;
using namespace recolor;

namespace {

struct TransformOptions {
    std::string graph_path, from_path, to_path, out_path;
    std::string mode = "degenerate";
    int colors = 0;
    int slack = 1;
    bool bound_only = false;
};

struct VerifyOptions {
    std::string graph_path, start_path, seq_path, target_path;
    int colors = 0;
};

struct BoundOptions {
    std::int64_t n = 0, k = 0, a = -1, d = -1;
    double epsilon = 0.0;
};

struct OracleOptions {
    std::string graph_path, from_path, to_path;
    int colors = 0;
    int slack = 1;
    std::uint64_t cap = kDefaultStateCap;
};

struct GenOptions {
    std::string family = "path";
    int n = 0, rows = 0, cols = 0, d = 2, subdivisions = 0;
    std::uint64_t seed = 0;
    std::string out_path;
    int colors = 0;
    std::string alpha_out, beta_out;
    std::uint64_t alpha_seed = 1, beta_seed = 2;
};

struct BenchOptions {
    std::string family = "tree";
    std::vector<int> sizes;
    int seeds = 3;
    std::string mode = "degenerate";
    int colors = 3;
    int d = 2;
    int subdivisions = 0;
    std::uint64_t oracle_cap = 0; // 0: skip the oracle column
    int jobs = 0;
    std::string out_path;
    std::string format = "csv";
};

ListInstance instance_for(const GraphFile& file, int colors, int slack, const char* what) {
    if (colors > 0 && file.lists)
        throw input_error(std::string(what) + ": --colors conflicts with lists in the graph file");
    if (colors > 0) return make_uniform_instance(file.graph, colors);
    if (file.lists) return make_instance(file.graph, *file.lists, slack);
    throw input_error(std::string(what) + ": needs --colors or a graph file with lists");
}

std::string search_status_name(SearchStatus status) {
    switch (status) {
        case SearchStatus::Found: return "found";
        case SearchStatus::Disconnected: return "disconnected";
        case SearchStatus::CapExceeded: return "cap-exceeded";
    }
    return "unknown";
}

int run_transform(const TransformOptions& opt) {
    GraphFile file = load_graph_file(opt.graph_path);
    const int n = file.graph.n;
    if (opt.colors > 0 && file.lists)
        throw input_error("transform: --colors conflicts with lists in the graph file");

    std::string engine;
    std::int64_t bound = 0;
    ListInstance check_inst;

    if (opt.mode == "planar-bipartite") {
        if (opt.colors > 0) throw input_error("planar-bipartite mode always uses 5 colours");
        if (!file.rotation) throw input_error("planar-bipartite mode needs a rotation field");
        engine = "planar-bipartite";
        bound = 4ll * n * n;
        check_inst = make_uniform_instance(file.graph, 5);
    } else if (opt.mode == "degenerate") {
        if (opt.colors > 0) {
            engine = "k-colour";
            int d = degeneracy_ordering(file.graph).degeneracy;
            if (opt.colors < d + 2)
                throw precondition_error("k must be at least degeneracy + 2 (d = " +
                                         std::to_string(d) + ")");
            bound = transform_k_bound(n, opt.colors, d);
            check_inst = make_uniform_instance(file.graph, opt.colors);
        } else {
            engine = "list";
            check_inst = instance_for(file, 0, opt.slack, "transform");
            bound = length_bound(n, check_inst.colour_count(), check_inst.slack);
        }
    } else {
        throw input_error("unknown mode: " + opt.mode);
    }

    json summary;
    summary["engine"] = engine;
    summary["n"] = n;
    summary["bound"] = bound;
    if (opt.bound_only) {
        std::cout << summary.dump() << "\n";
        return 0;
    }

    if (opt.from_path.empty() || opt.to_path.empty())
        throw input_error("transform needs --from and --to");
    Colouring alpha = load_colouring_file(opt.from_path);
    Colouring beta = load_colouring_file(opt.to_path);

    RecoloringSequence seq;
    if (engine == "planar-bipartite") {
        Embedding emb = build_embedding(file.graph, *file.rotation);
        seq = transform_planar_bipartite(file.graph, emb, alpha, beta);
    } else if (engine == "k-colour") {
        seq = transform_k(file.graph, opt.colors, alpha, beta);
    } else {
        seq = transform_list(check_inst, alpha, beta);
    }

    auto report = validate_sequence(check_inst, alpha, seq, beta);
    if (!report.valid || !report.reaches_target)
        throw internal_error("emitted sequence failed self-verification");
    if (!opt.out_path.empty()) write_file(opt.out_path, sequence_to_json(seq, n));

    summary["length"] = seq.length();
    summary["per_vertex_max"] = seq.max_per_vertex(n);
    summary["valid"] = true;
    std::cout << summary.dump() << "\n";
    return 0;
}

int run_verify(const VerifyOptions& opt) {
    GraphFile file = load_graph_file(opt.graph_path);
    ListInstance inst = instance_for(file, opt.colors, 0, "verify");
    Colouring start = load_colouring_file(opt.start_path);
    Colouring target = load_colouring_file(opt.target_path);
    if (static_cast<int>(start.size()) != file.graph.n)
        throw input_error("start colouring length does not match the graph");
    RecoloringSequence seq = load_sequence_file(opt.seq_path, &start);

    auto report = validate_sequence(inst, start, seq, target);
    json out;
    out["valid"] = report.valid;
    out["start_ok"] = report.start_ok;
    out["first_bad_step"] = report.first_bad_step;
    out["length"] = report.total_length;
    out["per_vertex"] = report.per_vertex;
    out["reaches_target"] = report.reaches_target;
    std::cout << out.dump() << "\n";
    return report.valid && report.reaches_target ? 0 : 2;
}

int run_bound(const BoundOptions& opt) {
    BoundParams params;
    params.n = opt.n;
    params.k = opt.k;
    params.a = opt.a;
    params.d = opt.d;
    if (opt.epsilon > 0.0) params.epsilon = opt.epsilon;
    BoundReport report = classify_bound(params);
    json out;
    out["case"] = report.label;
    out["value"] = report.value;
    out["exponent"] = report.exponent;
    std::cout << out.dump() << "\n";
    return 0;
}

int run_oracle(const std::string& kind, const OracleOptions& opt) {
    GraphFile file = load_graph_file(opt.graph_path);
    ListInstance inst = instance_for(file, opt.colors, opt.slack, "oracle");
    json out;
    if (kind == "distance") {
        Colouring alpha = load_colouring_file(opt.from_path);
        Colouring beta = load_colouring_file(opt.to_path);
        auto r = bfs_distance(inst, alpha, beta, opt.cap);
        out["status"] = search_status_name(r.status);
        out["distance"] = r.value;
    } else if (kind == "diameter") {
        auto r = exact_diameter(inst, opt.cap);
        out["status"] = search_status_name(r.status);
        out["diameter"] = r.value;
    } else {
        auto r = is_connected(inst, opt.cap);
        out["status"] = search_status_name(r.status);
        out["connected"] = r.connected;
        out["colourings"] = r.colourings;
    }
    std::cout << out.dump() << "\n";
    return 0;
}

int run_gen(const GenOptions& opt) {
    GenSpec spec;
    spec.family = family_from_name(opt.family);
    spec.n = opt.n;
    spec.rows = opt.rows;
    spec.cols = opt.cols;
    spec.d = opt.d;
    spec.subdivisions = opt.subdivisions;
    spec.seed = opt.seed;
    GeneratedGraph gen = generate_graph(spec);

    std::string text = graph_to_json(gen.graph, std::nullopt, gen.rotation);
    if (opt.out_path.empty())
        std::cout << text << "\n";
    else
        write_file(opt.out_path, text);

    if (!opt.alpha_out.empty() || !opt.beta_out.empty()) {
        if (opt.colors <= 0) throw input_error("gen needs --colors to emit colourings");
        ListInstance inst = make_uniform_instance(gen.graph, opt.colors);
        if (!opt.alpha_out.empty())
            write_file(opt.alpha_out, colouring_to_json(random_colouring(inst, opt.alpha_seed)));
        if (!opt.beta_out.empty())
            write_file(opt.beta_out, colouring_to_json(random_colouring(inst, opt.beta_seed)));
    }
    return 0;
}

int run_inspect(const std::string& graph_path) {
    GraphFile file = load_graph_file(graph_path);
    const Graph& g = file.graph;
    auto ord = degeneracy_ordering(g);
    json out;
    out["n"] = g.n;
    out["m"] = g.edge_count();
    auto comp = component_ids(g);
    out["components"] = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    out["bipartite"] = two_colour_sides(g).has_value();
    out["degeneracy"] = ord.degeneracy;
    out["order"] = ord.order;
    out["outdeg"] = ord.outdeg;
    try {
        out["levels"] = compute_levels(g);
    } catch (const precondition_error&) {
        out["levels"] = nullptr;
    }
    if (file.rotation) {
        Embedding emb = build_embedding(g, *file.rotation);
        out["faces"] = emb.faces;
        out["euler_audit"] = euler_audit(g, emb);
    }
    std::cout << out.dump() << "\n";
    return 0;
}

struct BenchRow {
    std::string family;
    int n = 0, k = 0, param = 0;
    std::uint64_t seed = 0;
    std::string engine;
    std::size_t length = 0;
    std::int64_t bound = 0;
    int per_vertex_max = 0;
    double wall_ms = 0.0;
    std::int64_t oracle = -1;
    bool pass = false;
};

BenchRow bench_one(const BenchOptions& opt, int size, std::uint64_t seed) {
    BenchRow row;
    row.family = opt.family;
    row.seed = seed;
    row.k = opt.mode == "planar-bipartite" ? 5 : opt.colors;

    GenSpec spec;
    spec.family = family_from_name(opt.family);
    spec.n = size;
    spec.rows = std::max(2, size / 4);
    spec.cols = std::max(2, (size + spec.rows - 1) / spec.rows);
    spec.d = opt.d;
    spec.subdivisions = opt.subdivisions;
    spec.seed = seed;
    GeneratedGraph gen = generate_graph(spec);
    row.n = gen.graph.n;

    ListInstance inst = make_uniform_instance(gen.graph, row.k);
    Colouring alpha = random_colouring(inst, seed * 2 + 1);
    Colouring beta = perturb_colouring(inst, random_colouring(inst, seed * 2 + 2),
                                       2 * row.n, seed * 2 + 3);

    auto start = std::chrono::steady_clock::now();
    RecoloringSequence seq;
    if (opt.mode == "planar-bipartite") {
        row.engine = "planar-bipartite";
        row.param = 5;
        row.bound = 4ll * row.n * row.n;
        Embedding emb = build_embedding(gen.graph, *gen.rotation);
        seq = transform_planar_bipartite(gen.graph, emb, alpha, beta);
    } else {
        row.engine = "k-colour";
        int d = degeneracy_ordering(gen.graph).degeneracy;
        row.param = d;
        row.bound = transform_k_bound(row.n, row.k, d);
        seq = transform_k(gen.graph, row.k, alpha, beta);
    }
    auto end = std::chrono::steady_clock::now();
    row.wall_ms = std::chrono::duration<double, std::milli>(end - start).count();

    row.length = seq.length();
    row.per_vertex_max = seq.max_per_vertex(row.n);
    auto report = validate_sequence(inst, alpha, seq, beta);
    row.pass = report.valid && report.reaches_target &&
               static_cast<std::int64_t>(row.length) <= row.bound;

    if (opt.oracle_cap > 0) {
        auto r = bfs_distance(inst, alpha, beta, opt.oracle_cap);
        if (r.status == SearchStatus::Found) {
            row.oracle = r.value;
            row.pass = row.pass && r.value <= static_cast<std::int64_t>(row.length);
        }
    }
    return row;
}

int run_bench(const BenchOptions& opt) {
    std::vector<std::pair<int, std::uint64_t>> tasks;
    for (int size : opt.sizes)
        for (int s = 0; s < opt.seeds; ++s)
            tasks.emplace_back(size, static_cast<std::uint64_t>(s) + 1);

    int jobs = opt.jobs;
    if (jobs <= 0) {
        if (const char* env = std::getenv("RECOLOR_JOBS")) jobs = std::atoi(env);
        if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
        if (jobs <= 0) jobs = 1;
    }

    std::vector<BenchRow> rows(tasks.size());
    std::atomic<std::size_t> cursor{0};
    std::mutex failure_lock;
    std::optional<std::string> hard_failure;
    auto worker = [&]() {
        while (true) {
            std::size_t at = cursor.fetch_add(1);
            if (at >= tasks.size()) return;
            try {
                rows[at] = bench_one(opt, tasks[at].first, tasks[at].second);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> hold(failure_lock);
                if (!hard_failure)
                    hard_failure = std::string(e.what()) + " (reproduce: family=" + opt.family +
                                   " size=" + std::to_string(tasks[at].first) +
                                   " seed=" + std::to_string(tasks[at].second) + ")";
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::min<int>(jobs, static_cast<int>(tasks.size())); ++t)
        pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (hard_failure) throw internal_error("bench row failed: " + *hard_failure);

    std::size_t passed = 0;
    for (const auto& row : rows) passed += row.pass;

    std::ostringstream out;
    if (opt.format == "json") {
        json all = json::array();
        for (const auto& row : rows) {
            json r;
            r["family"] = row.family;
            r["n"] = row.n;
            r["k"] = row.k;
            r["param"] = row.param;
            r["seed"] = row.seed;
            r["engine"] = row.engine;
            r["length"] = row.length;
            r["bound"] = row.bound;
            r["per_vertex_max"] = row.per_vertex_max;
            r["wall_ms"] = row.wall_ms;
            r["oracle"] = row.oracle;
            r["pass"] = row.pass;
            all.push_back(std::move(r));
        }
        out << all.dump() << "\n";
    } else {
        out << "family,n,k,param,seed,engine,length,bound,per_vertex_max,wall_ms,oracle,pass\n";
        for (const auto& row : rows)
            out << row.family << ',' << row.n << ',' << row.k << ',' << row.param << ','
                << row.seed << ',' << row.engine << ',' << row.length << ',' << row.bound << ','
                << row.per_vertex_max << ',' << row.wall_ms << ',' << row.oracle << ','
                << (row.pass ? "true" : "false") << "\n";
    }
    if (opt.out_path.empty())
        std::cout << out.str();
    else
        write_file(opt.out_path, out.str());

    std::cerr << "bench: " << passed << "/" << rows.size() << " rows passed\n";
    return passed == rows.size() ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"recolouring sequences between proper list colourings of sparse graphs"};
    app.require_subcommand(1);

    TransformOptions topt;
    auto* transform = app.add_subcommand("transform", "build a recolouring sequence");
    transform->add_option("--graph", topt.graph_path)->required();
    transform->add_option("--from", topt.from_path);
    transform->add_option("--to", topt.to_path);
    transform->add_option("--mode", topt.mode)
        ->check(CLI::IsMember({"degenerate", "planar-bipartite"}));
    transform->add_option("--colors", topt.colors);
    transform->add_option("--a", topt.slack);
    transform->add_option("--out", topt.out_path);
    transform->add_flag("--bound-only", topt.bound_only);

    VerifyOptions vopt;
    auto* verify = app.add_subcommand("verify", "replay and check a sequence");
    verify->add_option("--graph", vopt.graph_path)->required();
    verify->add_option("--start", vopt.start_path)->required();
    verify->add_option("--seq", vopt.seq_path)->required();
    verify->add_option("--target", vopt.target_path)->required();
    verify->add_option("--colors", vopt.colors);

    BoundOptions bopt;
    auto* bound = app.add_subcommand("bound", "evaluate the length guarantee");
    bound->add_option("--n", bopt.n)->required();
    bound->add_option("--k", bopt.k)->required();
    bound->add_option("--a", bopt.a);
    bound->add_option("--d", bopt.d);
    bound->add_option("--epsilon", bopt.epsilon);

    OracleOptions oopt;
    auto* oracle = app.add_subcommand("oracle", "exact search over the reconfiguration graph");
    oracle->require_subcommand(1);
    std::string oracle_kind;
    for (const char* kind : {"distance", "diameter", "connected"}) {
        auto* sub = oracle->add_subcommand(kind);
        sub->add_option("--graph", oopt.graph_path)->required();
        if (std::string(kind) == "distance") {
            sub->add_option("--from", oopt.from_path)->required();
            sub->add_option("--to", oopt.to_path)->required();
        }
        sub->add_option("--colors", oopt.colors);
        sub->add_option("--a", oopt.slack);
        sub->add_option("--cap", oopt.cap);
        sub->callback([&oracle_kind, kind]() { oracle_kind = kind; });
    }

    GenOptions gopt;
    auto* gen = app.add_subcommand("gen", "deterministic instance generator");
    gen->add_option("--family", gopt.family)->required();
    gen->add_option("--n", gopt.n);
    gen->add_option("--rows", gopt.rows);
    gen->add_option("--cols", gopt.cols);
    gen->add_option("--d", gopt.d);
    gen->add_option("--subdivide", gopt.subdivisions);
    gen->add_option("--seed", gopt.seed);
    gen->add_option("--out", gopt.out_path);
    gen->add_option("--colors", gopt.colors);
    gen->add_option("--alpha-out", gopt.alpha_out);
    gen->add_option("--alpha-seed", gopt.alpha_seed);
    gen->add_option("--beta-out", gopt.beta_out);
    gen->add_option("--beta-seed", gopt.beta_seed);

    std::string inspect_path;
    auto* inspect = app.add_subcommand("inspect", "orderings, levels and faces of a graph file");
    inspect->add_option("--graph", inspect_path)->required();

    BenchOptions benchopt;
    auto* bench = app.add_subcommand("bench", "run a seeded instance matrix");
    bench->add_option("--family", benchopt.family)->required();
    bench->add_option("--sizes", benchopt.sizes)->required()->delimiter(',');
    bench->add_option("--seeds", benchopt.seeds);
    bench->add_option("--mode", benchopt.mode)
        ->check(CLI::IsMember({"degenerate", "planar-bipartite"}));
    bench->add_option("--colors", benchopt.colors);
    bench->add_option("--d", benchopt.d);
    bench->add_option("--subdivide", benchopt.subdivisions);
    bench->add_option("--oracle-cap", benchopt.oracle_cap);
    bench->add_option("--jobs", benchopt.jobs);
    bench->add_option("--out", benchopt.out_path);
    bench->add_option("--format", benchopt.format)->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*transform) return run_transform(topt);
        if (*verify) return run_verify(vopt);
        if (*bound) return run_bound(bopt);
        if (*oracle) return run_oracle(oracle_kind, oopt);
        if (*gen) return run_gen(gopt);
        if (*inspect) return run_inspect(inspect_path);
        if (*bench) return run_bench(benchopt);
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const precondition_error& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 2;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
