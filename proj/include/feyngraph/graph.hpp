#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace feyngraph {

// Directed graph with n internal and m boundary vertices. Internally a
// vertex id is 0..n-1 (internal) or n..n+m-1 (boundary), so sorted
// out-lists place internal targets before boundary ones. Only internal
// vertices have out-edges; the global edge order is the concatenation of
// the per-vertex out-lists in label order.
struct DirectedGraph {
    int n = 0;
    int m = 0;
    std::vector<std::vector<int>> out;  // size n

    bool operator==(const DirectedGraph& o) const = default;
    bool operator<(const DirectedGraph& o) const {
        if (n != o.n) return n < o.n;
        if (m != o.m) return m < o.m;
        return out < o.out;
    }

    int vertex_count() const { return n + m; }
    bool is_internal(int v) const { return v < n; }
    int edge_count() const {
        int e = 0;
        for (const auto& row : out) e += static_cast<int>(row.size());
        return e;
    }
    // (source, target) of the k-th edge in the global order
    std::pair<int, int> edge(int k) const;
    std::vector<int> out_degrees() const;
    // incoming edge indices per vertex id
    std::vector<std::vector<int>> incoming() const;
};

// Orientation class: canonical representative and a sign. Sign 0 encodes
// the degenerate class (odd automorphism), which vanishes in H.
struct GraphTerm {
    DirectedGraph graph;
    int sign = 1;

    bool is_zero() const { return sign == 0; }
};

struct ClassPredicate {
    bool forbid_loops = true;
    bool forbid_parallel_edges = true;
    bool require_out_edges = true;  // internal out-degree >= 1

    bool admits(const DirectedGraph& g) const;
};

inline bool is_in_class(const DirectedGraph& g, const ClassPredicate& c) { return c.admits(g); }

inline DirectedGraph empty_graph() { return {}; }

int permutation_parity(const std::vector<int>& seq);

void validate_graph(const DirectedGraph& g);

// Lexicographically minimal representative over internal relabelings and
// per-vertex edge sorts; sign is the parity of the induced permutation of
// the global edge sequence. The adjacent-edge-swap and adjacent-vertex-swap
// sign rules (-1 and (-1)^{ab}) are instances of this parity.
GraphTerm canonicalize(const DirectedGraph& g);

// Targets in signed 1-based user encoding: +j = internal vertex j,
// -j = boundary vertex j.
GraphTerm make_graph(int n, int m, const std::vector<std::vector<int>>& signed_targets);

DirectedGraph disjoint_union(const DirectedGraph& a, const DirectedGraph& b);

// |E| - (2n + m - 2)
int excess(const DirectedGraph& g);
inline int excess(const GraphTerm& t) { return excess(t.graph); }

// Contract the k-th edge of the canonical representative (both endpoints
// internal). Returns a zero term when the quotient leaves the class; a
// loop edge also contracts to zero.
GraphTerm contract_edge(const GraphTerm& t, int edge_index, const ClassPredicate& c);

// Collapse of a normal subgraph: W is a set of vertex ids whose boundary
// part must be a nonempty consecutive run, |W| >= 2, W proper. Returns
// nullopt when W is not normal (an edge leaves W, or a factor leaves the
// class). Otherwise sub.sign carries t.sign times the edge-partition
// parity times the subgraph canonicalization sign, quot.sign the quotient
// canonicalization sign; the coefficient of the coproduct term is their
// product.
struct CollapsePair {
    GraphTerm sub;
    GraphTerm quot;
};
std::optional<CollapsePair> collapse_normal_subgraph(const GraphTerm& t, const std::vector<int>& w,
                                                     const ClassPredicate& c);

std::vector<std::vector<int>> enumerate_normal_subsets(const GraphTerm& t, const ClassPredicate& c);

// All canonical admissible classes with given (n, m) and excess l, sign +1,
// degenerate classes dropped; deterministic order.
std::vector<DirectedGraph> enumerate_graphs(int n, int m, int l, const ClassPredicate& c);

// Canonical key string, e.g. "2,2;[v2 b1|b2]".
std::string canonical_key(const DirectedGraph& g);

// Factor into connected components (isolated boundary vertices count as
// components). Returns the edge-partition sign relating the canonical edge
// order to the component-block order, and each component canonicalized.
struct ComponentFactorization {
    int sign = 1;
    std::vector<DirectedGraph> components;  // canonical, in discovery order
};
ComponentFactorization factor_components(const DirectedGraph& g);

} // namespace feyngraph
