#include "feyngraph/graph.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace feyngraph;

namespace {

const ClassPredicate kDefault;

GraphTerm W2() { return make_graph(1, 2, {{-1, -2}}); }
GraphTerm B2() { return make_graph(0, 2, {}); }
GraphTerm P1() { return make_graph(1, 2, {{-1}}); }
GraphTerm L1() { return make_graph(1, 1, {{-1}}); }
GraphTerm E3() { return make_graph(2, 2, {{2, -1}, {-2}}); }

DirectedGraph random_graph(std::mt19937& rng, int max_n = 4, int max_m = 3, int max_deg = 3) {
    std::uniform_int_distribution<int> nd(0, max_n), md(0, max_m), dd(0, max_deg);
    DirectedGraph g;
    g.n = nd(rng);
    g.m = md(rng);
    g.out.resize(g.n);
    if (g.n + g.m == 0) g.m = 1;
    std::uniform_int_distribution<int> td(0, g.n + g.m - 1);
    for (int v = 0; v < g.n; ++v) {
        int k = dd(rng);
        for (int i = 0; i < k; ++i) g.out[v].push_back(td(rng));
    }
    return g;
}

} // namespace

TEST_CASE("make_graph canonical examples") {
    GraphTerm w2 = W2();
    CHECK(w2.sign == 1);
    CHECK(canonical_key(w2.graph) == "1,2;[b1 b2]");

    GraphTerm w2_swapped = make_graph(1, 2, {{-2, -1}});
    CHECK(w2_swapped.sign == -1);
    CHECK(w2_swapped.graph == w2.graph);

    GraphTerm b2 = B2();
    CHECK(b2.sign == 1);
    CHECK(canonical_key(b2.graph) == "0,2;[]");
}

TEST_CASE("make_graph rejects malformed input") {
    CHECK_THROWS(make_graph(1, 2, {{-3}}));   // dangling boundary target
    CHECK_THROWS(make_graph(1, 2, {{2}}));    // dangling internal target
    CHECK_THROWS(make_graph(2, 0, {{2}}));    // wrong out-list count
}

TEST_CASE("canonicalize vertex swap sign") {
    // v1:[b2], v2:[b1] relabels to v1:[b1], v2:[b2] with sign (-1)^{1*1}
    GraphTerm t = make_graph(2, 2, {{-2}, {-1}});
    CHECK(t.sign == -1);
    CHECK(canonical_key(t.graph) == "2,2;[b1|b2]");
}

TEST_CASE("identical stars give a degenerate class") {
    GraphTerm t = make_graph(2, 1, {{-1}, {-1}});
    CHECK(t.sign == 0);

    // oracle: the two labelings canonicalize to the same graph with
    // opposite parities
    DirectedGraph g{2, 1, {{2}, {2}}};
    std::vector<int> order_id{0, 1}, order_swap{1, 0};
    CHECK(permutation_parity(order_id) != permutation_parity(order_swap));
    GraphTerm c1 = canonicalize(g);
    CHECK(c1.sign == 0);
}

TEST_CASE("canonicalize is idempotent") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        DirectedGraph g = random_graph(rng);
        GraphTerm t = canonicalize(g);
        GraphTerm again = canonicalize(t.graph);
        CHECK(again.graph == t.graph);
        if (t.sign != 0) CHECK(again.sign == 1);
    }
}

TEST_CASE("relabeling equivariance") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 200; ++trial) {
        DirectedGraph g = random_graph(rng);
        GraphTerm base = canonicalize(g);
        if (g.n < 2) continue;

        std::vector<int> perm(g.n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);

        DirectedGraph h{g.n, g.m, {}};
        h.out.resize(g.n);
        std::vector<int> order;
        {
            // relabel v -> perm[v], keeping per-vertex edge order
            std::vector<std::vector<int>> idx(g.n);
            int e = 0;
            for (int v = 0; v < g.n; ++v)
                for (int t : g.out[v]) {
                    h.out[perm[v]].push_back(t < g.n ? perm[t] : t);
                    idx[perm[v]].push_back(e++);
                }
            for (int v = 0; v < g.n; ++v) order.insert(order.end(), idx[v].begin(), idx[v].end());
        }
        GraphTerm relabeled = canonicalize(h);
        CHECK(relabeled.graph == base.graph);
        if (base.sign == 0) {
            CHECK(relabeled.sign == 0);
        } else {
            CHECK(relabeled.sign * permutation_parity(order) == base.sign);
        }
    }
}

TEST_CASE("class predicate") {
    CHECK(is_in_class(W2().graph, kDefault));
    DirectedGraph loop{1, 1, {{0}}};
    CHECK_FALSE(is_in_class(loop, kDefault));
    DirectedGraph par{1, 2, {{1, 1}}};
    CHECK_FALSE(is_in_class(par, kDefault));
    ClassPredicate relaxed;
    relaxed.forbid_parallel_edges = false;
    CHECK(is_in_class(par, relaxed));
}

TEST_CASE("excess") {
    CHECK(excess(W2().graph) == 0);
    CHECK(excess(B2().graph) == 0);
    CHECK(excess(P1().graph) == -1);
}

TEST_CASE("contract_edge examples") {
    GraphTerm e3 = E3();
    REQUIRE(e3.sign == 1);
    // the internal edge of E3 is v1 -> v2
    int internal = -1;
    for (int k = 0; k < e3.graph.edge_count(); ++k)
        if (e3.graph.edge(k).second < e3.graph.n) internal = k;
    REQUIRE(internal >= 0);
    GraphTerm r = contract_edge(e3, internal, kDefault);
    CHECK(r.sign == 1);
    CHECK(r.graph == W2().graph);

    // E4 contracts onto parallel edges and vanishes
    GraphTerm e4 = make_graph(2, 2, {{2, -1}, {-1, -2}});
    REQUIRE(e4.sign != 0);
    int e4_internal = -1;
    for (int k = 0; k < e4.graph.edge_count(); ++k)
        if (e4.graph.edge(k).second < e4.graph.n) e4_internal = k;
    REQUIRE(e4_internal >= 0);
    CHECK(contract_edge(e4, e4_internal, kDefault).sign == 0);

    // boundary edge -> error
    GraphTerm w2 = W2();
    CHECK_THROWS(contract_edge(w2, 0, kDefault));
}

TEST_CASE("contract_edge is representative independent") {
    std::mt19937 rng(4242);
    int done = 0;
    for (int trial = 0; trial < 600 && done < 80; ++trial) {
        DirectedGraph g = random_graph(rng, 4, 2, 2);
        GraphTerm t = canonicalize(g);
        if (t.sign == 0 || !kDefault.admits(t.graph) || t.graph.n < 2) continue;

        // random relabeled representative; [h] = rho [t.graph]
        std::vector<int> perm(t.graph.n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        DirectedGraph h{t.graph.n, t.graph.m, {}};
        h.out.resize(h.n);
        std::vector<std::vector<int>> orig_idx(h.n);
        {
            int e = 0;
            for (int v = 0; v < h.n; ++v)
                for (int u : t.graph.out[v]) {
                    h.out[perm[v]].push_back(u < h.n ? perm[u] : u);
                    orig_idx[perm[v]].push_back(e++);
                }
        }
        std::vector<int> order;
        std::vector<int> new_index_of(t.graph.edge_count());
        for (int v = 0; v < h.n; ++v)
            for (int oi : orig_idx[v]) {
                new_index_of[oi] = static_cast<int>(order.size());
                order.push_back(oi);
            }
        const int rho = permutation_parity(order);

        const int E = t.graph.edge_count();
        for (int k = 0; k < E; ++k) {
            if (t.graph.edge(k).second >= t.graph.n) continue;
            GraphTerm direct = contract_edge(GraphTerm{t.graph, 1}, k, kDefault);
            GraphTerm via = contract_edge(GraphTerm{h, 1}, new_index_of[k], kDefault);
            CHECK(via.sign == rho * direct.sign);
            if (direct.sign != 0) CHECK(via.graph == direct.graph);
            ++done;
        }
    }
    CHECK(done > 0);
}

TEST_CASE("collapse_normal_subgraph on P1") {
    GraphTerm p1 = P1();
    // W = {v1, b1}: ids 0 and 1
    auto r1 = collapse_normal_subgraph(p1, {0, 1}, kDefault);
    REQUIRE(r1.has_value());
    CHECK(r1->sub.graph == L1().graph);
    CHECK(r1->sub.sign == 1);
    CHECK(r1->quot.graph == B2().graph);
    CHECK(r1->quot.sign == 1);

    // W = {b1, b2}: ids 1 and 2
    auto r2 = collapse_normal_subgraph(p1, {1, 2}, kDefault);
    REQUIRE(r2.has_value());
    CHECK(r2->sub.graph == B2().graph);
    CHECK(r2->quot.graph == L1().graph);
    CHECK(r2->sub.sign == 1);
    CHECK(r2->quot.sign == 1);

    // W = {v1, b2} leaves the edge to b1 outside: not normal
    CHECK_FALSE(collapse_normal_subgraph(p1, {0, 2}, kDefault).has_value());
}

TEST_CASE("collapse_normal_subgraph on W2 is never normal") {
    GraphTerm w2 = W2();
    CHECK_FALSE(collapse_normal_subgraph(w2, {0, 1}, kDefault).has_value());
    CHECK(enumerate_normal_subsets(w2, kDefault).empty());
}

TEST_CASE("collapse precondition errors") {
    GraphTerm p1 = P1();
    CHECK_THROWS(collapse_normal_subgraph(p1, {1}, kDefault));         // too small
    CHECK_THROWS(collapse_normal_subgraph(p1, {0, 1, 2}, kDefault));   // improper
    CHECK_THROWS(collapse_normal_subgraph(p1, {0, 0}, kDefault));      // not two distinct
    GraphTerm b3 = make_graph(0, 3, {});
    CHECK_THROWS(collapse_normal_subgraph(b3, {0, 2}, kDefault));      // run not consecutive
}

TEST_CASE("enumerate_normal_subsets on P1 and B2") {
    auto subs = enumerate_normal_subsets(P1(), kDefault);
    REQUIRE(subs.size() == 2);
    CHECK(subs[0] == std::vector<int>{0, 1});
    CHECK(subs[1] == std::vector<int>{1, 2});

    CHECK(enumerate_normal_subsets(B2(), kDefault).empty());
}

TEST_CASE("grading compatibility of the collapse") {
    std::mt19937 rng(999);
    for (int trial = 0; trial < 200; ++trial) {
        DirectedGraph g = random_graph(rng);
        GraphTerm t = canonicalize(g);
        if (t.sign == 0 || !kDefault.admits(t.graph)) continue;
        for (const auto& w : enumerate_normal_subsets(t, kDefault)) {
            auto r = collapse_normal_subgraph(t, w, kDefault);
            REQUIRE(r.has_value());
            CHECK(r->sub.graph.edge_count() + r->quot.graph.edge_count() == t.graph.edge_count());
        }
    }
}

TEST_CASE("enumerate_graphs examples") {
    auto b = enumerate_graphs(0, 2, 0, kDefault);
    REQUIRE(b.size() == 1);
    CHECK(b[0] == B2().graph);

    auto w = enumerate_graphs(1, 2, 0, kDefault);
    CHECK(std::find(w.begin(), w.end(), W2().graph) != w.end());

    CHECK(enumerate_graphs(1, 1, 0, kDefault).size() == 1);
}

TEST_CASE("enumerate_graphs has no duplicate classes") {
    for (int n = 0; n <= 2; ++n)
        for (int m = 0; m <= 3; ++m)
            for (int l = -1; l <= 1; ++l) {
                auto gs = enumerate_graphs(n, m, l, kDefault);
                for (size_t i = 0; i + 1 < gs.size(); ++i) CHECK(gs[i] < gs[i + 1]);
                for (const auto& g : gs) {
                    CHECK(excess(g) == l);
                    GraphTerm t = canonicalize(g);
                    CHECK(t.graph == g);
                    CHECK(t.sign == 1);
                }
            }
}

TEST_CASE("component factorization") {
    // L1 * W2 has two components
    GraphTerm t = make_graph(2, 3, {{-1}, {-2, -3}});
    auto f = factor_components(t.graph);
    REQUIRE(f.components.size() == 2);
    CHECK(f.sign == 1);
    CHECK(f.components[0] == L1().graph);
    CHECK(f.components[1] == W2().graph);

    auto fb = factor_components(B2().graph);
    CHECK(fb.components.size() == 2);
}
