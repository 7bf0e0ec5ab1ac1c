#include "recolor/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace recolor {

namespace {

using json = nlohmann::ordered_json;

json parse(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw input_error(std::string("malformed JSON in ") + what);
    return j;
}

std::vector<std::vector<int>> int_lists(const json& j, const char* what, std::size_t expected) {
    if (!j.is_array() || j.size() != expected)
        throw input_error(std::string(what) + " must be an array with one entry per vertex");
    std::vector<std::vector<int>> out;
    out.reserve(j.size());
    for (const auto& row : j) {
        if (!row.is_array()) throw input_error(std::string(what) + " entries must be arrays");
        std::vector<int> values;
        for (const auto& x : row) {
            if (!x.is_number_integer()) throw input_error(std::string(what) + " entries must be integers");
            values.push_back(x.get<int>());
        }
        out.push_back(std::move(values));
    }
    return out;
}

} // namespace

GraphFile parse_graph_json(const std::string& text) {
    json j = parse(text, "graph file");
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw input_error("graph file needs fields \"n\" and \"edges\"");
    if (!j["n"].is_number_integer()) throw input_error("\"n\" must be an integer");
    GraphFile out;
    out.graph = Graph(j["n"].get<int>());
    if (!j["edges"].is_array()) throw input_error("\"edges\" must be an array of pairs");
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw input_error("each edge must be a pair of vertex ids");
        out.graph.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    if (j.contains("lists")) out.lists = int_lists(j["lists"], "\"lists\"", out.graph.n);
    if (j.contains("rotation")) out.rotation = int_lists(j["rotation"], "\"rotation\"", out.graph.n);
    return out;
}

std::string graph_to_json(const Graph& g, const std::optional<std::vector<std::vector<int>>>& lists,
                          const std::optional<std::vector<std::vector<int>>>& rotation) {
    json j;
    j["n"] = g.n;
    j["edges"] = json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    if (lists) j["lists"] = *lists;
    if (rotation) j["rotation"] = *rotation;
    return j.dump();
}

Colouring parse_colouring_json(const std::string& text) {
    json j = parse(text, "colouring file");
    if (!j.is_array()) throw input_error("colouring file must be an array of integers");
    Colouring c;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw input_error("colouring entries must be integers");
        c.push_back(x.get<int>());
    }
    return c;
}

std::string colouring_to_json(const Colouring& c) { return json(c).dump(); }

RecoloringSequence parse_sequence_json(const std::string& text, const Colouring* start) {
    json j = parse(text, "sequence file");
    if (!j.is_object() || !j.contains("steps") || !j["steps"].is_array())
        throw input_error("sequence file needs a \"steps\" array");
    RecoloringSequence seq;
    Colouring cur = start ? *start : Colouring{};
    for (const auto& s : j["steps"]) {
        if (!s.is_object() || !s.contains("v") || !s.contains("c") ||
            !s["v"].is_number_integer() || !s["c"].is_number_integer())
            throw input_error("each step needs integer fields \"v\" and \"c\"");
        int v = s["v"].get<int>();
        int to = s["c"].get<int>();
        int from = -1;
        if (start) {
            if (v < 0 || v >= static_cast<int>(cur.size()))
                throw input_error("step vertex out of range");
            from = cur[v];
            cur[v] = to;
        }
        seq.steps.push_back({v, to, from});
    }
    return seq;
}

std::string sequence_to_json(const RecoloringSequence& seq, int n) {
    json j;
    j["steps"] = json::array();
    for (const Step& s : seq.steps) j["steps"].push_back({{"v", s.v}, {"c", s.to}});
    j["meta"] = {{"length", seq.length()}, {"per_vertex", seq.per_vertex_counts(n)}};
    return j.dump();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write file: " + path);
    out << content;
    if (!out.flush()) throw input_error("failed writing file: " + path);
}

GraphFile load_graph_file(const std::string& path) { return parse_graph_json(read_file(path)); }

Colouring load_colouring_file(const std::string& path) {
    return parse_colouring_json(read_file(path));
}

RecoloringSequence load_sequence_file(const std::string& path, const Colouring* start) {
    return parse_sequence_json(read_file(path), start);
}

} // namespace recolor
