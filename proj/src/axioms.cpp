#include "feyngraph/axioms.hpp"

#include <functional>

namespace feyngraph {

std::vector<DirectedGraph> suite_universe(const HopfSuiteOptions& opt, const ClassPredicate& c) {
    std::vector<DirectedGraph> all;
    for (int n = 0; n <= opt.max_n; ++n)
        for (int m = 0; m <= opt.max_m; ++m)
            for (int l = opt.min_l; l <= opt.max_l; ++l)
                for (const auto& g : enumerate_graphs(n, m, l, c)) all.push_back(g);
    return all;
}

namespace {

std::vector<std::pair<DirectedGraph, DirectedGraph>> suite_pairs(const HopfSuiteOptions& opt,
                                                                 const std::vector<DirectedGraph>& all) {
    std::vector<std::pair<DirectedGraph, DirectedGraph>> pairs;
    for (const auto& a : all)
        for (const auto& b : all)
            if (a.n + b.n <= opt.pair_max_n && a.m + b.m <= opt.pair_max_m) pairs.push_back({a, b});
    return pairs;
}

GraphVector vec(const DirectedGraph& g) { return GraphVector::of(GraphTerm{g, 1}); }

} // namespace

std::vector<AxiomResult> hopf_axiom_suite(const HopfSuiteOptions& opt, const ClassPredicate& c) {
    const auto all = suite_universe(opt, c);
    const auto pairs = suite_pairs(opt, all);

    AxiomResult d2;
    d2.name = "d_squared";
    AxiomResult comm;
    comm.name = "graded_commutativity";
    AxiomResult leibniz;
    leibniz.name = "leibniz";
    AxiomResult coassoc;
    coassoc.name = "coassociativity";
    AxiomResult coder;
    coder.name = "coderivation";
    AxiomResult mult;
    mult.name = "coproduct_multiplicative";
    AxiomResult counit_law;
    counit_law.name = "counit_laws";
    AxiomResult antip_l;
    antip_l.name = "antipode_convolution_left";
    AxiomResult antip_r;
    antip_r.name = "antipode_convolution_right";

    auto check_unary = [&](const GraphVector& v, const std::string& label) {
        // d^2
        ++d2.instances;
        if (!differential(differential(v, c), c).is_zero()) d2.fail(label);

        // coassociativity
        ++coassoc.instances;
        TensorVector cp = coproduct(v, c);
        if (!(tensor_coproduct_factor(cp, 0, c) == tensor_coproduct_factor(cp, 1, c))) coassoc.fail(label);

        // coderivation for the reduced coproduct
        ++coder.instances;
        TensorVector red = reduced_coproduct(v, c);
        TensorVector lhs = reduced_coproduct(differential(v, c), c);
        TensorVector rhs = tensor_differential_factor(red, 0, c) + tensor_differential_factor(red, 1, c);
        if (!(lhs == rhs)) coder.fail(label);

        // counit laws
        ++counit_law.instances;
        TensorVector left = tensor_counit_factor(cp, 0);
        TensorVector right = tensor_counit_factor(cp, 1);
        TensorVector id_word;
        for (const auto& [g, q] : v.terms()) id_word.add({g}, q);
        if (!(left == id_word) || !(right == id_word)) counit_law.fail(label);

        // antipode convolution, both sides
        ++antip_l.instances;
        ++antip_r.instances;
        GraphVector conv_l, conv_r;
        for (const auto& [pair, q] : cp.terms()) {
            GraphVector sl = product(antipode(vec(pair[0]), c), vec(pair[1]));
            sl *= q;
            conv_l += sl;
            GraphVector sr = product(vec(pair[0]), antipode(vec(pair[1]), c));
            sr *= q;
            conv_r += sr;
        }
        GraphVector eta = GraphVector::unit();
        eta *= counit(v);
        if (!(conv_l == eta)) antip_l.fail(label);
        if (!(conv_r == eta)) antip_r.fail(label);
    };

    for (const auto& g : all) check_unary(vec(g), canonical_key(g));

    for (const auto& [a, b] : pairs) {
        const GraphVector va = vec(a), vb = vec(b);
        const GraphVector ab = product(va, vb);
        const std::string label = canonical_key(a) + " , " + canonical_key(b);

        // unary axioms on the product graph vector
        check_unary(ab, "product " + label);

        // graded commutativity
        ++comm.instances;
        GraphVector ba = product(vb, va);
        if ((a.edge_count() * b.edge_count()) % 2) ba *= Rational(-1);
        if (!(ab == ba)) comm.fail(label);

        // Leibniz
        ++leibniz.instances;
        GraphVector dl = differential(ab, c);
        GraphVector dr = product(differential(va, c), vb);
        GraphVector second = product(va, differential(vb, c));
        if (a.edge_count() % 2) second *= Rational(-1);
        dr += second;
        if (!(dl == dr)) leibniz.fail(label);

        // coproduct multiplicativity
        ++mult.instances;
        TensorVector cl = coproduct(ab, c);
        TensorVector cr = tensor_product(coproduct(va, c), coproduct(vb, c));
        if (!(cl == cr)) mult.fail(label);
    }

    // restricted commutativity variant: factors with no shared boundary
    AxiomResult comm0;
    comm0.name = "graded_commutativity_m0";
    for (const auto& [a, b] : pairs) {
        if (a.m != 0 && b.m != 0) continue;
        ++comm0.instances;
        GraphVector ab = product(vec(a), vec(b));
        GraphVector ba = product(vec(b), vec(a));
        if ((a.edge_count() * b.edge_count()) % 2) ba *= Rational(-1);
        if (!(ab == ba)) comm0.fail(canonical_key(a) + " , " + canonical_key(b));
    }

    return {d2, comm, comm0, leibniz, coassoc, coder, mult, counit_law, antip_l, antip_r};
}

AxiomResult d_squared_suite(const HopfSuiteOptions& opt, const ClassPredicate& c) {
    AxiomResult d2;
    d2.name = "d_squared";
    for (const auto& g : suite_universe(opt, c)) {
        ++d2.instances;
        if (!differential(differential(vec(g), c), c).is_zero()) d2.fail(canonical_key(g));
    }
    return d2;
}

AxiomResult cobar_d_squared_suite(const CobarSuiteOptions& opt, const ClassPredicate& c) {
    AxiomResult r;
    r.name = "cobar_d_squared";
    auto letters = cobar_letters(opt.letter_edge_max, opt.letter_bd_max, c);

    std::vector<CobarWord> words;
    CobarWord cur;
    std::function<void(int, int)> build = [&](int edges, int bd) {
        if (!cur.empty()) words.push_back(cur);
        if (static_cast<int>(cur.size()) == opt.word_len_max) return;
        for (const auto& g : letters) {
            const int e = g.edge_count();
            if (edges + e > opt.word_edge_max || bd + g.m > opt.word_bd_max) continue;
            cur.push_back(g);
            build(edges + e, bd + g.m);
            cur.pop_back();
        }
    };
    build(0, 0);

    for (const auto& w : words) {
        ++r.instances;
        CobarVector dd = cobar_differential(cobar_differential(CobarVector::of(w), c), c);
        if (!dd.is_zero()) r.fail(canonical_key(w[0]) + " word len " + std::to_string(w.size()));
    }
    return r;
}

} // namespace feyngraph
