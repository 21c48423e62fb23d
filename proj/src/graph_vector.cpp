#include "feyngraph/graph_vector.hpp"

#include <stdexcept>

namespace feyngraph {

GraphVector GraphVector::of(const GraphTerm& t, const Rational& coeff) {
    GraphVector v;
    v.add(t, coeff);
    return v;
}

void GraphVector::add(const GraphTerm& t, const Rational& coeff) {
    if (t.sign == 0) return;
    add_canonical(t.graph, t.sign < 0 ? Rational(-coeff) : coeff);
}

void GraphVector::add_canonical(const DirectedGraph& g, const Rational& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(g);
    if (it == terms_.end()) {
        terms_.emplace(g, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational GraphVector::coefficient(const DirectedGraph& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Rational(0) : it->second;
}

GraphVector& GraphVector::operator+=(const GraphVector& o) {
    for (const auto& [g, q] : o.terms_) add_canonical(g, q);
    return *this;
}

GraphVector& GraphVector::operator-=(const GraphVector& o) {
    for (const auto& [g, q] : o.terms_) add_canonical(g, -q);
    return *this;
}

GraphVector& GraphVector::operator*=(const Rational& q) {
    if (q == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [g, v] : terms_) v *= q;
    return *this;
}

void TensorVector::add(const Word& w, const Rational& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

TensorVector& TensorVector::operator+=(const TensorVector& o) {
    for (const auto& [w, q] : o.terms_) add(w, q);
    return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& o) {
    for (const auto& [w, q] : o.terms_) add(w, -q);
    return *this;
}

TensorVector& TensorVector::operator*=(const Rational& q) {
    if (q == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= q;
    return *this;
}

GraphVector product(const GraphVector& a, const GraphVector& b) {
    GraphVector r;
    for (const auto& [g1, q1] : a.terms())
        for (const auto& [g2, q2] : b.terms()) r.add(canonicalize(disjoint_union(g1, g2)), q1 * q2);
    return r;
}

GraphVector differential(const GraphVector& a, const ClassPredicate& c) {
    GraphVector r;
    for (const auto& [g, q] : a.terms()) {
        GraphTerm t{g, 1};
        const int E = g.edge_count();
        for (int k = 0; k < E; ++k) {
            auto [src, tgt] = g.edge(k);
            if (tgt >= g.n) continue;
            r.add(contract_edge(t, k, c), q);
        }
    }
    return r;
}

TensorVector reduced_coproduct(const GraphVector& a, const ClassPredicate& c) {
    TensorVector r;
    for (const auto& [g, q] : a.terms()) {
        GraphTerm t{g, 1};
        for (const auto& w : enumerate_normal_subsets(t, c)) {
            auto cp = collapse_normal_subgraph(t, w, c);
            if (!cp || cp->sub.sign == 0 || cp->quot.sign == 0) continue;
            r.add({cp->sub.graph, cp->quot.graph}, q * cp->sub.sign * cp->quot.sign);
        }
    }
    return r;
}

TensorVector coproduct(const GraphVector& a, const ClassPredicate& c) {
    TensorVector r = reduced_coproduct(a, c);
    const DirectedGraph e = empty_graph();
    for (const auto& [g, q] : a.terms()) {
        if (g == e) {
            r.add({e, e}, q);  // Delta(1) = 1 (x) 1
            continue;
        }
        r.add({g, e}, q);
        r.add({e, g}, q);
    }
    return r;
}

Rational counit(const GraphVector& a) { return a.coefficient(empty_graph()); }

namespace {

int predicate_bits(const ClassPredicate& c) {
    return (c.forbid_loops ? 1 : 0) | (c.forbid_parallel_edges ? 2 : 0) | (c.require_out_edges ? 4 : 0);
}

// S(G) = -G - sum S(sub) quot over the reduced coproduct; memoized per
// predicate on canonical graphs.
const GraphVector& antipode_of(const DirectedGraph& g, const ClassPredicate& c) {
    static std::map<std::pair<int, DirectedGraph>, GraphVector> memo;
    auto key = std::make_pair(predicate_bits(c), g);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    GraphVector s;
    if (g == empty_graph()) {
        s = GraphVector::unit();
    } else {
        s.add_canonical(g, -1);
        GraphTerm t{g, 1};
        for (const auto& w : enumerate_normal_subsets(t, c)) {
            auto cp = collapse_normal_subgraph(t, w, c);
            if (!cp || cp->sub.sign == 0 || cp->quot.sign == 0) continue;
            GraphVector rest = product(antipode_of(cp->sub.graph, c), GraphVector::of(cp->quot));
            rest *= Rational(cp->sub.sign);
            s -= rest;
        }
    }
    return memo.emplace(std::move(key), std::move(s)).first->second;
}

} // namespace

GraphVector antipode(const GraphVector& a, const ClassPredicate& c) {
    GraphVector r;
    for (const auto& [g, q] : a.terms()) {
        GraphVector s = antipode_of(g, c);
        s *= q;
        r += s;
    }
    return r;
}

TensorVector tensor_of(const GraphVector& a, const GraphVector& b) {
    TensorVector r;
    for (const auto& [g1, q1] : a.terms())
        for (const auto& [g2, q2] : b.terms()) r.add({g1, g2}, q1 * q2);
    return r;
}

TensorVector tensor_product(const TensorVector& a, const TensorVector& b) {
    TensorVector r;
    for (const auto& [w1, q1] : a.terms())
        for (const auto& [w2, q2] : b.terms()) {
            if (w1.size() != w2.size()) throw std::invalid_argument("tensor arity mismatch");
            Rational coeff = q1 * q2;
            std::vector<DirectedGraph> w;
            bool dead = false;
            for (size_t i = 0; i < w1.size() && !dead; ++i) {
                // Koszul: factor i of b crosses factors i+1.. of a
                int cross = 0;
                for (size_t j = i + 1; j < w1.size(); ++j) cross += w1[j].edge_count();
                if ((cross * w2[i].edge_count()) % 2) coeff = -coeff;
                GraphTerm t = canonicalize(disjoint_union(w1[i], w2[i]));
                if (t.sign == 0)
                    dead = true;
                else {
                    if (t.sign < 0) coeff = -coeff;
                    w.push_back(t.graph);
                }
            }
            if (!dead) r.add(w, coeff);
        }
    return r;
}

TensorVector tensor_differential_factor(const TensorVector& a, int slot, const ClassPredicate& c) {
    TensorVector r;
    for (const auto& [w, q] : a.terms()) {
        if (slot >= static_cast<int>(w.size())) throw std::out_of_range("tensor slot");
        int cross = 0;
        for (int j = 0; j < slot; ++j) cross += w[j].edge_count();
        Rational coeff = (cross % 2) ? -q : q;
        GraphVector dv = differential(GraphVector::of(GraphTerm{w[slot], 1}), c);
        for (const auto& [g, qq] : dv.terms()) {
            auto nw = w;
            nw[slot] = g;
            r.add(nw, coeff * qq);
        }
    }
    return r;
}

TensorVector tensor_coproduct_factor(const TensorVector& a, int slot, const ClassPredicate& c) {
    TensorVector r;
    for (const auto& [w, q] : a.terms()) {
        if (slot >= static_cast<int>(w.size())) throw std::out_of_range("tensor slot");
        TensorVector cp = coproduct(GraphVector::of(GraphTerm{w[slot], 1}), c);
        for (const auto& [pair, qq] : cp.terms()) {
            std::vector<DirectedGraph> nw;
            nw.reserve(w.size() + 1);
            for (int j = 0; j < slot; ++j) nw.push_back(w[j]);
            nw.push_back(pair[0]);
            nw.push_back(pair[1]);
            for (size_t j = slot + 1; j < w.size(); ++j) nw.push_back(w[j]);
            r.add(nw, q * qq);
        }
    }
    return r;
}

TensorVector tensor_counit_factor(const TensorVector& a, int slot) {
    TensorVector r;
    for (const auto& [w, q] : a.terms()) {
        if (slot >= static_cast<int>(w.size())) throw std::out_of_range("tensor slot");
        if (!(w[slot] == empty_graph())) continue;
        std::vector<DirectedGraph> nw;
        for (size_t j = 0; j < w.size(); ++j)
            if (static_cast<int>(j) != slot) nw.push_back(w[j]);
        r.add(nw, q);
    }
    return r;
}

} // namespace feyngraph
