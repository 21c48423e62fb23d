#pragma once

#include "feyngraph/cobar.hpp"
#include "feyngraph/feynman.hpp"
#include "feyngraph/graph.hpp"
#include "feyngraph/graph_vector.hpp"
#include "feyngraph/poly.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace feyngraph {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int l, int col)
        : std::runtime_error(msg + " at line " + std::to_string(l) + ", column " + std::to_string(col)),
          line(l),
          column(col) {}
};

struct NamedTerm {
    std::string name;
    GraphTerm term;
};

// Graph text format, one graph per block:
//   graph W2 { n=1; m=2; v1: b1 b2; }
std::vector<NamedTerm> parse_graph_file(const std::string& text);

// Inverse of canonical_key: "1,2;[b1 b2]" -> canonical graph. Rejects
// non-canonical keys.
DirectedGraph parse_canonical_key(const std::string& key);

nlohmann::json graph_vector_json(const GraphVector& v);
nlohmann::json tensor_vector_json(const TensorVector& v);
nlohmann::json cobar_vector_json(const CobarVector& v);
std::string word_key(const CobarWord& w);  // "key1 | key2 | ..."

WeightFunctional parse_weights_json(const nlohmann::json& j);

Polynomial parse_polynomial_json(const nlohmann::json& j, int dim);
nlohmann::json polynomial_json(const Polynomial& p);

PolyVectorField parse_pvf_json(const nlohmann::json& j, int dim);
nlohmann::json pvf_json(const PolyVectorField& f);

// {"dimension": d, "states": [pvf, ...]}
VertexState parse_state_json(const nlohmann::json& j);
// {"dimension": d, "args": [poly, ...]}
std::vector<Polynomial> parse_args_json(const nlohmann::json& j, int expected_dim);

nlohmann::json polydiff_json(const PolyDiffOperator& op);

} // namespace feyngraph
