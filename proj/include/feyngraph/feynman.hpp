#pragma once

#include "feyngraph/cobar.hpp"
#include "feyngraph/graph.hpp"
#include "feyngraph/polydiff.hpp"
#include "feyngraph/polyvector.hpp"

#include <map>
#include <vector>

namespace feyngraph {

// Ordered vertex states; gammas[i] sits at internal vertex i+1 and must be
// arity-homogeneous with arity equal to that vertex's out-degree.
struct VertexState {
    int dim = 0;
    std::vector<PolyVectorField> gammas;

    std::vector<int> signature() const;
};

// State sum over all edge colorings of the labeled representative: at each
// internal vertex the signed coefficient of its field on the out-edge index
// tuple, differentiated by the incoming edge indices; incoming indices at
// boundary vertex j become the j-th derivative multi-index. Multiplied by
// the sign of t. Works on any labeled representative, not only canonical
// ones.
PolyDiffOperator feynman_rule(const GraphTerm& t, const VertexState& s);

// Skew extension: sum over vertex assignments sigma with matching
// signature, weighted by the arity-graded Koszul sign.
PolyDiffOperator feynman_rule_skew(const GraphTerm& t, const VertexState& s);

// State-sum compatibility with contracting an internal edge: the direct
// evaluation against the quotient evaluation whose merged vertex amplitude
// is assembled from d/dpsi_k of the source field and d/dx_k of the target
// field, summed over the contracted edge's index.
bool lemma_bullet_check(const GraphTerm& t, int edge_index, const VertexState& s);

// Sum over all one-edge extensions of q (with contraction signs) equals
// the sum of bullet insertions over ordered vertex pairs.
bool corollary_bullet_check(const GraphTerm& q, const VertexState& s, const ClassPredicate& c);

// Factorization through a normal subgraph: direct evaluation against the
// quotient-times-subgraph evaluation with the collapsed vertex's incoming
// derivatives routed to their original targets.
bool lemma_pp_check(const GraphTerm& t, const std::vector<int>& w, const VertexState& s,
                    const ClassPredicate& c);

struct ObstructionReport {
    Polynomial lhs_resummed;  // (F1)+(F2) via the per-graph resummation
    Polynomial lhs_direct;    // (F1)+(F2) from bullet insertions and wedge compositions
    Polynomial rhs;           // sum of deltaW(G) U_G over excess -1 graphs
    std::map<DirectedGraph, std::pair<Rational, Rational>> coefficients;  // c_G, deltaW(G)
    bool paths_agree = false;
    bool matches_delta = false;
};

ObstructionReport assemble_obstruction(int n, int m, const WeightFunctional& w, const VertexState& s,
                                       const std::vector<Polynomial>& args, const ClassPredicate& c);

} // namespace feyngraph
