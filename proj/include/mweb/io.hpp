#pragma once

#include <string>

#include <json.hpp>

#include "mweb/core.hpp"
#include "mweb/mdlh.hpp"
#include "mweb/reduce.hpp"
#include "mweb/samba.hpp"

namespace mweb {

// Malformed file content (JSON syntax, schema mismatch, bad TSV).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using json = nlohmann::json;

// Graph JSON: {"n1": int, "n2": int, "weights": [row-major numbers]}
json graph_to_json(const WeightedBipartiteGraph& g);
WeightedBipartiteGraph graph_from_json(const json& j);

// Biclique JSON: {"u1": [sorted ints], "u2": [sorted ints]}
json biclique_to_json(const Biclique& b);
Biclique biclique_from_json(const json& j);

// OptResult JSON adds {"value", "explored", "optimal"} plus the witness.
json opt_result_to_json(const OptResult& r);

// SimpleGraph JSON: {"n": int, "edges": [[u,v], ...]}
json simple_graph_to_json(const SimpleGraph& g);
SimpleGraph simple_graph_from_json(const json& j);

json summary_to_json(const Summary& s);
Summary summary_from_json(const json& j);

json report_to_json(const VerificationReport& r);

// Refined params JSON: {"p": [row-major reals], "p_c": real}
SambaRefinedParams refined_params_from_json(const json& j);

// TSV binary matrix: one row per line, 0/1 fields separated by tabs.
// Lines starting with '#' are ignored.
BinaryMatrix binary_matrix_from_tsv(const std::string& text);
std::string binary_matrix_to_tsv(const BinaryMatrix& m);

json parse_json_file(const std::string& path);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace mweb
