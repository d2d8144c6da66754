#include "mweb/io.hpp"

#include <fstream>
#include <sstream>

namespace mweb {

namespace {

void require_fields(const json& j, std::initializer_list<const char*> fields,
                    const char* schema) {
    if (!j.is_object()) throw ParseError(std::string("expected a JSON object for ") + schema);
    for (const char* f : fields)
        if (!j.contains(f))
            throw ParseError(std::string(schema) + " is missing required field \"" + f + "\"");
}

std::vector<std::size_t> index_list(const json& j, const char* field) {
    if (!j.is_array()) throw ParseError(std::string("field \"") + field + "\" must be an array");
    std::vector<std::size_t> out;
    for (const auto& v : j) {
        if (!v.is_number_unsigned())
            throw ParseError(std::string("field \"") + field + "\" must hold nonnegative integers");
        out.push_back(v.get<std::size_t>());
    }
    return out;
}

}  // namespace

json graph_to_json(const WeightedBipartiteGraph& g) {
    return {{"n1", g.n1()}, {"n2", g.n2()}, {"weights", g.weights()}};
}

WeightedBipartiteGraph graph_from_json(const json& j) {
    require_fields(j, {"n1", "n2", "weights"}, "graph");
    try {
        return WeightedBipartiteGraph(j["n1"].get<std::size_t>(), j["n2"].get<std::size_t>(),
                                      j["weights"].get<std::vector<double>>());
    } catch (const json::exception& e) {
        throw ParseError(std::string("graph schema error: ") + e.what());
    }
}

json biclique_to_json(const Biclique& b) {
    return {{"u1", b.u1}, {"u2", b.u2}};
}

Biclique biclique_from_json(const json& j) {
    require_fields(j, {"u1", "u2"}, "biclique");
    return Biclique(index_list(j["u1"], "u1"), index_list(j["u2"], "u2"));
}

json opt_result_to_json(const OptResult& r) {
    json j = biclique_to_json(r.witness);
    j["value"] = r.value;
    j["explored"] = r.explored;
    j["optimal"] = r.optimal;
    j["objective"] = r.objective == Objective::EdgeWeight ? "edge-weight" : "node-plus-edge";
    return j;
}

json simple_graph_to_json(const SimpleGraph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges) edges.push_back({u, v});
    return {{"n", g.n}, {"edges", edges}};
}

SimpleGraph simple_graph_from_json(const json& j) {
    require_fields(j, {"n", "edges"}, "simple graph");
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw ParseError("each edge must be a two-element array");
        edges.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>()});
    }
    return SimpleGraph(j["n"].get<std::size_t>(), edges);
}

json summary_to_json(const Summary& s) {
    json regions = json::array();
    for (const auto& r : s.regions) {
        switch (r.kind) {
            case Region::Kind::Row: regions.push_back({{"kind", "row"}, {"i", r.i}}); break;
            case Region::Kind::Col: regions.push_back({{"kind", "col"}, {"j", r.j}}); break;
            case Region::Kind::Cell:
                regions.push_back({{"kind", "cell"}, {"i", r.i}, {"j", r.j}});
                break;
            case Region::Kind::All: regions.push_back({{"kind", "all"}}); break;
        }
    }
    json holes = json::array();
    for (auto [i, j] : s.holes) holes.push_back({i, j});
    return {{"regions", regions}, {"holes", holes}, {"length", s.length()}};
}

Summary summary_from_json(const json& j) {
    require_fields(j, {"regions", "holes"}, "summary");
    Summary s;
    for (const auto& r : j["regions"]) {
        require_fields(r, {"kind"}, "region");
        std::string kind = r["kind"].get<std::string>();
        if (kind == "row")
            s.regions.push_back(Region::row(r["i"].get<std::size_t>()));
        else if (kind == "col")
            s.regions.push_back(Region::col(r["j"].get<std::size_t>()));
        else if (kind == "cell")
            s.regions.push_back(Region::cell(r["i"].get<std::size_t>(), r["j"].get<std::size_t>()));
        else if (kind == "all")
            s.regions.push_back(Region::all());
        else
            throw ParseError("unknown region kind \"" + kind + "\"");
    }
    for (const auto& h : j["holes"]) {
        if (!h.is_array() || h.size() != 2) throw ParseError("each hole must be a [i,j] pair");
        s.holes.push_back({h[0].get<std::size_t>(), h[1].get<std::size_t>()});
    }
    return s;
}

json report_to_json(const VerificationReport& r) {
    json trials = json::array();
    for (const auto& t : r.trials)
        trials.push_back({{"lhs", t.lhs}, {"rhs", t.rhs}, {"pass", t.pass}});
    json j = {{"kind", r.kind}, {"relation", r.relation}, {"pass", r.pass}, {"trials", trials}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

SambaRefinedParams refined_params_from_json(const json& j) {
    require_fields(j, {"p", "p_c"}, "refined params");
    SambaRefinedParams r;
    try {
        r.p = j["p"].get<std::vector<double>>();
        r.p_c = j["p_c"].get<double>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("refined params schema error: ") + e.what());
    }
    return r;
}

BinaryMatrix binary_matrix_from_tsv(const std::string& text) {
    std::vector<std::uint8_t> data;
    std::size_t cols = 0, rows = 0, lineno = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::uint8_t> row;
        std::istringstream ls(line);
        std::string field;
        std::size_t col = 0;
        while (std::getline(ls, field, '\t')) {
            ++col;
            if (field == "0")
                row.push_back(0);
            else if (field == "1")
                row.push_back(1);
            else
                throw ParseError("line " + std::to_string(lineno) + ", column " +
                                 std::to_string(col) + ": expected 0 or 1, got \"" + field + "\"");
        }
        if (cols == 0)
            cols = row.size();
        else if (row.size() != cols)
            throw ParseError("line " + std::to_string(lineno) + ": expected " +
                             std::to_string(cols) + " fields, got " + std::to_string(row.size()));
        data.insert(data.end(), row.begin(), row.end());
        ++rows;
    }
    if (rows == 0 || cols == 0) throw ParseError("empty binary matrix");
    return BinaryMatrix(rows, cols, std::move(data));
}

std::string binary_matrix_to_tsv(const BinaryMatrix& m) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.n1(); ++i) {
        for (std::size_t j = 0; j < m.n2(); ++j) {
            if (j) out << '\t';
            out << static_cast<int>(m.at(i, j));
        }
        out << '\n';
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write file: " + path);
    out << content;
}

json parse_json_file(const std::string& path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw ParseError("in " + path + ": " + e.what());
    }
}

}  // namespace mweb
