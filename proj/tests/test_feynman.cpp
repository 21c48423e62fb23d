#include "feyngraph/feynman.hpp"

#include "feyngraph/graph_vector.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace feyngraph;

namespace {

const ClassPredicate kDefault;

GraphTerm W2() { return make_graph(1, 2, {{-1, -2}}); }
GraphTerm B2() { return make_graph(0, 2, {}); }
GraphTerm P1() { return make_graph(1, 2, {{-1}}); }
GraphTerm L1() { return make_graph(1, 1, {{-1}}); }
GraphTerm E3() { return make_graph(2, 2, {{2, -1}, {-2}}); }

Polynomial rand_poly(std::mt19937& rng, int dim, int max_deg = 2) {
    std::uniform_int_distribution<int> nterms(1, 3), expd(0, max_deg), coeff(-3, 3);
    Polynomial p(dim);
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        std::vector<int> e(dim);
        int budget = max_deg;
        for (int j = 0; j < dim; ++j) {
            e[j] = std::min(budget, expd(rng));
            budget -= e[j];
        }
        p.add_term(e, rat(coeff(rng)));
    }
    return p;
}

// random arity-homogeneous field
PolyVectorField rand_field(std::mt19937& rng, int dim, int arity) {
    PolyVectorField f(dim);
    std::uniform_int_distribution<int> pick(0, dim - 1);
    for (int t = 0; t < 2; ++t) {
        std::vector<int> tuple;
        for (int i = 0; i < arity; ++i) tuple.push_back(pick(rng));
        f.add_term(tuple, rand_poly(rng, dim));
    }
    if (f.is_zero() && arity <= dim) {
        std::vector<int> tuple(arity);
        std::iota(tuple.begin(), tuple.end(), 0);
        f.add_term(tuple, Polynomial::constant(dim, 1));
    }
    return f;
}

VertexState rand_state(std::mt19937& rng, int dim, const DirectedGraph& g) {
    VertexState s{dim, {}};
    for (int v = 0; v < g.n; ++v) s.gammas.push_back(rand_field(rng, dim, (int)g.out[v].size()));
    return s;
}

} // namespace

TEST_CASE("feynman rule base cases") {
    const int d = 2;
    Polynomial x = Polynomial::variable(d, 0), y = Polynomial::variable(d, 1);

    // B2 with the empty state is the multiplication
    PolyDiffOperator b2 = feynman_rule(B2(), VertexState{d, {}});
    CHECK(b2 == PolyDiffOperator::multiplication(d));

    // W2 with psi1 psi2: (f,g) -> d1 f d2 g - d2 f d1 g
    PolyVectorField pi = PolyVectorField::term(d, {0, 1}, Polynomial::constant(d, 1));
    PolyDiffOperator w2 = feynman_rule(W2(), VertexState{d, {pi}});
    Polynomial f = x * x * y, g = x * y + y * y;
    CHECK(w2.apply({f, g}) ==
          f.derivative(0) * g.derivative(1) - f.derivative(1) * g.derivative(0));

    // L1 with x1 psi1: f -> x1 d1 f
    PolyVectorField xi = PolyVectorField::term(d, {0}, x);
    PolyDiffOperator l1 = feynman_rule(L1(), VertexState{d, {xi}});
    CHECK(l1.apply({f}) == x * f.derivative(0));
}

TEST_CASE("feynman rule output arity bookkeeping") {
    // m = 2 - n - l + sum k_i on matching-signature graphs
    std::mt19937 rng(31);
    for (int n = 1; n <= 2; ++n)
        for (int m = 1; m <= 3; ++m)
            for (int l = -1; l <= 1; ++l)
                for (const auto& g : enumerate_graphs(n, m, l, kDefault)) {
                    bool fits = true;
                    for (int v = 0; v < g.n; ++v)
                        if ((int)g.out[v].size() > 2) fits = false;
                    if (!fits) continue;  // arity > d has only the zero field
                    VertexState s = rand_state(rng, 2, g);
                    // shifted degrees k_i = arity - 1
                    int sumk = 0;
                    for (const auto& f : s.gammas) sumk += f.arity() - 1;
                    CHECK(m == 2 - n - l + sumk);
                    CHECK(feynman_rule(GraphTerm{g, 1}, s).arity() == m);
                }
}

TEST_CASE("signature mismatch is rejected") {
    const int d = 2;
    PolyVectorField xi = PolyVectorField::term(d, {0}, Polynomial::variable(d, 0));
    CHECK_THROWS(feynman_rule(W2(), VertexState{d, {xi}}));  // arity 1 vs out-degree 2
}

TEST_CASE("equivariance under state permutations") {
    const int d = 2;
    std::mt19937 rng(71);
    for (int n = 2; n <= 3; ++n)
        for (const auto& g : enumerate_graphs(n, 2, 0, kDefault)) {
            VertexState s = rand_state(rng, d, g);
            const auto arities = s.signature();
            PolyDiffOperator base = feynman_rule_skew(GraphTerm{g, 1}, s);

            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                VertexState ps{d, {}};
                for (int i = 0; i < n; ++i) ps.gammas.push_back(s.gammas[perm[i]]);
                PolyDiffOperator lhs = feynman_rule_skew(GraphTerm{g, 1}, ps);
                PolyDiffOperator rhs = base;
                if (koszul_sign(perm, arities) < 0) rhs *= Rational(-1);
                CHECK(lhs == rhs);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
}

TEST_CASE("representative independence of the skew rule") {
    const int d = 2;
    std::mt19937 rng(72);
    for (const auto& g : enumerate_graphs(2, 2, 0, kDefault)) {
        VertexState s = rand_state(rng, d, g);
        PolyDiffOperator base = feynman_rule_skew(GraphTerm{g, 1}, s);

        // relabel internal vertices cyclically; [h] = rho [g]
        DirectedGraph h{g.n, g.m, {}};
        h.out.resize(g.n);
        std::vector<int> perm(g.n);
        for (int v = 0; v < g.n; ++v) perm[v] = (v + 1) % g.n;
        std::vector<int> order;
        {
            std::vector<std::vector<int>> idx(g.n);
            int e = 0;
            for (int v = 0; v < g.n; ++v)
                for (int u : g.out[v]) {
                    h.out[perm[v]].push_back(u < g.n ? perm[u] : u);
                    idx[perm[v]].push_back(e++);
                }
            for (int v = 0; v < g.n; ++v) order.insert(order.end(), idx[v].begin(), idx[v].end());
        }
        const int rho = permutation_parity(order);
        PolyDiffOperator via = feynman_rule_skew(GraphTerm{h, 1}, s);
        PolyDiffOperator expect = base;
        if (rho < 0) expect *= Rational(-1);
        CHECK(via == expect);
    }
}

TEST_CASE("basis independence for constant states") {
    const int d = 2;
    std::mt19937 rng(2718);
    std::uniform_int_distribution<int> entry(-3, 3);

    auto random_invertible = [&]() {
        while (true) {
            Rational a = rat(entry(rng)), b = rat(entry(rng)), c = rat(entry(rng)), e = rat(entry(rng));
            if (a * e - b * c != 0) return std::array<std::array<Rational, 2>, 2>{{{a, b}, {c, e}}};
        }
    };

    // constant random state for W2 and E3
    for (const auto& t : {W2(), E3()}) {
        VertexState s{d, {}};
        std::uniform_int_distribution<int> pick(0, d - 1);
        for (int v = 0; v < t.graph.n; ++v) {
            PolyVectorField f(d);
            for (int tr = 0; tr < 2; ++tr) {
                std::vector<int> tuple;
                for (size_t i = 0; i < t.graph.out[v].size(); ++i) tuple.push_back(pick(rng));
                f.add_term(tuple, Polynomial::constant(d, rat(entry(rng))));
            }
            if (f.is_zero()) f.add_term({0, 1}, Polynomial::constant(d, 1));
            s.gammas.push_back(f);
        }
        std::vector<Polynomial> args;
        for (int j = 0; j < t.graph.m; ++j) args.push_back(rand_poly(rng, d));

        for (int trial = 0; trial < 10; ++trial) {
            auto B = random_invertible();
            Rational det = B[0][0] * B[1][1] - B[0][1] * B[1][0];
            // inverse of B
            std::array<std::array<Rational, 2>, 2> Binv{
                {{B[1][1] / det, -B[0][1] / det}, {-B[1][0] / det, B[0][0] / det}}};

            // transform states: psi_i -> sum_j B[j][i] psi_j
            std::vector<PolyVectorField> psis;
            for (int i = 0; i < d; ++i) {
                PolyVectorField p(d);
                for (int j = 0; j < d; ++j)
                    p += PolyVectorField::term(d, {j}, Polynomial::constant(d, B[j][i]));
                psis.push_back(p);
            }
            VertexState ts{d, {}};
            for (const auto& f : s.gammas) {
                PolyVectorField tf(d);
                for (const auto& [tuple, coeff] : f.terms()) {
                    PolyVectorField w = PolyVectorField::term(d, {}, coeff);
                    for (int i : tuple) w = w * psis[i];
                    tf += w;
                }
                ts.gammas.push_back(tf);
            }

            // transform arguments: f'(x) = f(B^{-1} x)
            std::vector<Polynomial> linforms;
            for (int i = 0; i < d; ++i) {
                Polynomial lf(d);
                for (int j = 0; j < d; ++j)
                    lf += Polynomial::variable(d, j) * Binv[i][j];
                linforms.push_back(lf);
            }
            std::vector<Polynomial> targs;
            for (const auto& a : args) targs.push_back(a.substitute(linforms));

            Polynomial lhs = feynman_rule(t, ts).apply(targs);
            Polynomial rhs = feynman_rule(t, s).apply(args).substitute(linforms);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("lemma_bullet_check on E3 and random contractions") {
    const int d = 2;
    std::mt19937 rng(5150);

    // the two-vertex chain with a fork
    for (int trial = 0; trial < 5; ++trial) {
        VertexState s = rand_state(rng, d, E3().graph);
        int internal = -1;
        for (int k = 0; k < E3().graph.edge_count(); ++k)
            if (E3().graph.edge(k).second < E3().graph.n) internal = k;
        CHECK(lemma_bullet_check(E3(), internal, s));
    }

    // boundary edge is rejected
    VertexState w2s{d, {PolyVectorField::term(d, {0, 1}, Polynomial::constant(d, 1))}};
    CHECK_THROWS(lemma_bullet_check(W2(), 0, w2s));

    // every admissible contraction for n <= 2, m <= 2
    for (int m = 1; m <= 2; ++m)
        for (int l = -1; l <= 1; ++l)
            for (const auto& g : enumerate_graphs(2, m, l, kDefault))
                for (int k = 0; k < g.edge_count(); ++k) {
                    auto [src, tgt] = g.edge(k);
                    if (tgt >= g.n || src == tgt) continue;
                    VertexState s = rand_state(rng, d, g);
                    CHECK(lemma_bullet_check(GraphTerm{g, 1}, k, s));
                }
}

TEST_CASE("corollary_bullet_check over excess-0 bases") {
    const int d = 2;
    std::mt19937 rng(6174);
    for (int m = 1; m <= 3; ++m)
        for (const auto& gq : enumerate_graphs(1, m, 0, kDefault)) {
            // states: two fields whose arities sum to out-degree + 1
            const int total = gq.out[0].empty() ? 0 : (int)gq.out[0].size();
            for (int a1 = 1; a1 <= total; ++a1) {
                VertexState s{d, {rand_field(rng, d, a1), rand_field(rng, d, total + 1 - a1)}};
                CHECK(corollary_bullet_check(GraphTerm{gq, 1}, s, kDefault));
            }
        }
}

TEST_CASE("corollary_bullet_check with three states") {
    const int d = 2;
    std::mt19937 rng(31415);
    // E4 in G^0_{2,2}: v1:[v2,b1], v2:[b1,b2]
    GraphTerm q = make_graph(2, 2, {{2, -1}, {-1, -2}});
    REQUIRE(excess(q.graph) == 0);
    // arities summing to 5 over three fields
    for (auto arities : std::vector<std::array<int, 3>>{{1, 2, 2}, {2, 2, 1}, {1, 1, 3}}) {
        VertexState s{d, {rand_field(rng, d, arities[0]), rand_field(rng, d, arities[1]),
                          rand_field(rng, d, arities[2])}};
        CHECK(corollary_bullet_check(q, s, kDefault));
    }
}

TEST_CASE("lemma_pp_check on P1 and random normal subsets") {
    const int d = 2;
    std::mt19937 rng(999);

    VertexState s{d, {rand_field(rng, d, 1)}};
    CHECK(lemma_pp_check(P1(), {1, 2}, s, kDefault));
    CHECK(lemma_pp_check(P1(), {0, 1}, s, kDefault));

    // every normal subset of every excess -1 graph in range
    for (int n = 1; n <= 2; ++n)
        for (int m = 1; m <= 3; ++m)
            for (const auto& g : enumerate_graphs(n, m, -1, kDefault)) {
                GraphTerm t{g, 1};
                for (const auto& w : enumerate_normal_subsets(t, kDefault)) {
                    VertexState st = rand_state(rng, d, g);
                    CHECK(lemma_pp_check(t, w, st, kDefault));
                }
            }

    // non-normal subset is rejected
    VertexState w2s{d, {rand_field(rng, d, 2)}};
    CHECK_THROWS(lemma_pp_check(W2(), {0, 1}, w2s, kDefault));
}

TEST_CASE("assemble_obstruction paths agree") {
    const int d = 2;
    std::mt19937 rng(123321);

    auto random_weights = [&](int max_n, int max_m) {
        WeightFunctional w;
        std::uniform_int_distribution<int> coeff(-3, 3);
        for (int n = 0; n <= max_n; ++n)
            for (int m = 0; m <= max_m; ++m)
                for (int l = -1; l <= 1; ++l)
                    for (const auto& g : enumerate_graphs(n, m, l, kDefault)) {
                        auto f = factor_components(g);
                        if (f.components.size() != 1) continue;
                        w.set(g, rat(coeff(rng)));
                    }
        return w;
    };

    for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 2}, {0, 3}, {2, 2}}) {
        for (int trial = 0; trial < 3; ++trial) {
            WeightFunctional w = random_weights(2, 3);
            // states with arities matching some excess -1 profile
            auto graphs = enumerate_graphs(n, m, -1, kDefault);
            if (graphs.empty()) continue;
            VertexState s{d, {}};
            for (int v = 0; v < graphs[0].n; ++v)
                s.gammas.push_back(rand_field(rng, d, (int)graphs[0].out[v].size()));
            std::vector<Polynomial> args;
            for (int j = 0; j < m; ++j) args.push_back(rand_poly(rng, d));

            ObstructionReport rep = assemble_obstruction(n, m, w, s, args, kDefault);
            CHECK(rep.paths_agree);
            CHECK(rep.matches_delta);
            for (const auto& [g, cw] : rep.coefficients) CHECK(cw.first == cw.second);
        }
    }
}

TEST_CASE("assemble_obstruction vanishes for cocycles") {
    const int d = 2;
    std::mt19937 rng(55555);
    // the zero weight (only the empty graph contributes) is a cocycle
    WeightFunctional w;
    REQUIRE(is_cocycle(w, 2, 3, kDefault).ok);

    auto graphs = enumerate_graphs(1, 2, -1, kDefault);
    REQUIRE(!graphs.empty());
    VertexState s{d, {rand_field(rng, d, 1)}};
    std::vector<Polynomial> args{rand_poly(rng, d), rand_poly(rng, d)};
    ObstructionReport rep = assemble_obstruction(1, 2, w, s, args, kDefault);
    CHECK(rep.lhs_resummed.is_zero());
    CHECK(rep.lhs_direct.is_zero());
    CHECK(rep.rhs.is_zero());
}
