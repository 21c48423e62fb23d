#pragma once

#include "feyngraph/cobar.hpp"
#include "feyngraph/graph.hpp"
#include "feyngraph/graph_vector.hpp"

#include <string>
#include <vector>

namespace feyngraph {

struct AxiomResult {
    std::string name;
    long instances = 0;
    long failed = 0;
    bool passed = true;
    std::string witness;  // first failing instance, if any

    void fail(const std::string& w) {
        if (passed) witness = w;
        passed = false;
        ++failed;
    }
};

struct HopfSuiteOptions {
    int max_n = 3;
    int max_m = 3;
    int min_l = -1;
    int max_l = 1;
    // pair-instance caps: both factors from the box, sums bounded
    int pair_max_n = 3;
    int pair_max_m = 4;
};

// d^2, graded commutativity, Leibniz, coassociativity, coderivation,
// coproduct multiplicativity, counit laws, antipode convolution identities.
std::vector<AxiomResult> hopf_axiom_suite(const HopfSuiteOptions& opt, const ClassPredicate& c);

// d^2 = 0 alone over the same universe.
AxiomResult d_squared_suite(const HopfSuiteOptions& opt, const ClassPredicate& c);

struct CobarSuiteOptions {
    int letter_edge_max = 4;
    int letter_bd_max = 3;
    int word_len_max = 3;
    int word_edge_max = 4;
    int word_bd_max = 4;
};

// D^2 = 0 over all words within the bounds.
AxiomResult cobar_d_squared_suite(const CobarSuiteOptions& opt, const ClassPredicate& c);

// The graphs of the suite universe (single graphs, no products).
std::vector<DirectedGraph> suite_universe(const HopfSuiteOptions& opt, const ClassPredicate& c);

} // namespace feyngraph
