#include "feyngraph/cobar.hpp"

#include "feyngraph/linalg.hpp"

#include <algorithm>

namespace feyngraph {

int cobar_degree(const CobarWord& w) {
    int d = 0;
    for (const auto& g : w) d += g.edge_count() - 1;
    return d;
}

CobarVector CobarVector::of(const CobarWord& w, const Rational& coeff) {
    CobarVector v;
    v.add(w, coeff);
    return v;
}

void CobarVector::add(const CobarWord& w, const Rational& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

CobarVector& CobarVector::operator+=(const CobarVector& o) {
    for (const auto& [w, q] : o.terms_) add(w, q);
    return *this;
}

CobarVector& CobarVector::operator-=(const CobarVector& o) {
    for (const auto& [w, q] : o.terms_) add(w, -q);
    return *this;
}

CobarVector cobar_differential(const CobarVector& v, const ClassPredicate& c) {
    CobarVector r;
    for (const auto& [w, q] : v.terms()) {
        int prefix = 0;  // shifted degree of letters to the left
        for (size_t i = 0; i < w.size(); ++i) {
            const Rational outer = (prefix % 2) ? -q : q;
            GraphTerm letter{w[i], 1};

            GraphVector dl = differential(GraphVector::of(letter), c);
            for (const auto& [g, qq] : dl.terms()) {
                CobarWord nw = w;
                nw[i] = g;
                r.add(nw, outer * qq);
            }

            TensorVector cp = reduced_coproduct(GraphVector::of(letter), c);
            for (const auto& [pair, qq] : cp.terms()) {
                // suspension sign of the left output letter
                const int s = pair[0].edge_count() - 1;
                CobarWord nw;
                nw.reserve(w.size() + 1);
                for (size_t j = 0; j < i; ++j) nw.push_back(w[j]);
                nw.push_back(pair[0]);
                nw.push_back(pair[1]);
                for (size_t j = i + 1; j < w.size(); ++j) nw.push_back(w[j]);
                Rational coeff = outer * qq;
                if (((s % 2) + 2) % 2) coeff = -coeff;
                r.add(nw, coeff);
            }

            prefix += w[i].edge_count() - 1;
        }
    }
    return r;
}

Rational pair_cochain(const DualCochain& phi, const CobarVector& v) {
    Rational r = 0;
    for (const auto& [w, q] : v.terms()) {
        auto it = phi.find(w);
        if (it != phi.end()) r += q * it->second;
    }
    return r;
}

void WeightFunctional::set(const DirectedGraph& g, const Rational& value) {
    GraphTerm t = canonicalize(g);
    if (t.sign == 0) throw std::invalid_argument("weight on a degenerate class");
    auto f = factor_components(t.graph);
    if (f.components.size() != 1)
        throw std::invalid_argument("weight generators must be connected: " + canonical_key(t.graph));
    values_[t.graph] = value;
}

Rational WeightFunctional::eval(const DirectedGraph& g) const {
    if (g == empty_graph()) return 1;
    auto f = factor_components(g);
    Rational r = f.sign;
    for (const auto& comp : f.components) {
        auto it = values_.find(comp);
        if (it == values_.end()) return 0;
        r *= it->second;
    }
    return r;
}

Rational WeightFunctional::eval(const GraphVector& v) const {
    Rational r = 0;
    for (const auto& [g, q] : v.terms()) r += q * eval(g);
    return r;
}

Rational WeightFunctional::eval_word_product(const TensorVector& v) const {
    Rational r = 0;
    for (const auto& [w, q] : v.terms()) {
        Rational p = q;
        for (const auto& g : w) {
            if (p == 0) break;
            p *= eval(g);
        }
        r += p;
    }
    return r;
}

DualCochain weight_cochain(const WeightFunctional& w, const std::vector<CobarWord>& support) {
    DualCochain phi;
    for (const auto& word : support) {
        Rational v = 1;
        int twist = 0;
        // split words sample the graph expansion, which runs over excess-0
        // graphs only
        if (word.size() >= 2)
            for (const auto& g : word)
                if (excess(g) != 0) v = 0;
        for (size_t i = 0; i < word.size() && v != 0; ++i) {
            v *= w.eval(word[i]);
            if (i + 1 < word.size()) twist += word[i].edge_count() - 1;
        }
        // match the suspension signs carried by the coalgebra part of D
        if (((twist % 2) + 2) % 2) v = -v;
        if (v != 0) phi[word] = v;
    }
    return phi;
}

Rational delta_on_weight(const WeightFunctional& w, const GraphTerm& t, const ClassPredicate& c) {
    GraphVector v = GraphVector::of(t);
    Rational r = w.eval(differential(v, c));
    // coproduct legs pair through the expansion, which carries weights on
    // excess-0 graphs only; other splits have no Feynman-rule counterpart
    TensorVector red = reduced_coproduct(v, c);
    for (const auto& [word, q] : red.terms()) {
        if (excess(word[0]) != 0 || excess(word[1]) != 0) continue;
        r += q * w.eval(word[0]) * w.eval(word[1]);
    }
    return r;
}

CocycleReport is_cocycle(const WeightFunctional& w, int n_max, int m_max, const ClassPredicate& c) {
    CocycleReport rep;
    for (int n = 0; n <= n_max; ++n)
        for (int m = 0; m <= m_max; ++m)
            for (const auto& g : enumerate_graphs(n, m, -1, c))
                if (delta_on_weight(w, GraphTerm{g, 1}, c) != 0) {
                    rep.ok = false;
                    rep.witnesses.push_back(g);
                }
    return rep;
}

std::vector<DirectedGraph> cobar_letters(int edge_max, int bd_max, const ClassPredicate& c) {
    std::vector<DirectedGraph> letters;
    const int n_cap = c.require_out_edges ? edge_max : edge_max + 2;
    for (int e = 0; e <= edge_max; ++e)
        for (int n = 0; n <= n_cap; ++n)
            for (int m = 0; m <= bd_max; ++m) {
                if (n == 0 && m == 0) continue;
                const int l = e - (2 * n + m - 2);
                for (const auto& g : enumerate_graphs(n, m, l, c))
                    if (g.edge_count() == e) letters.push_back(g);
            }
    std::sort(letters.begin(), letters.end());
    return letters;
}

namespace {

void build_words(const std::vector<DirectedGraph>& letters, int len_max, int edge_max, int bd_max,
                 CobarWord& cur, int edges, int bd, std::vector<CobarWord>& out, long cap) {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<long>(out.size()) > cap)
        throw ResourceError("truncation too large: over " + std::to_string(cap) + " basis words");
    if (static_cast<int>(cur.size()) == len_max) return;
    for (const auto& g : letters) {
        const int e = g.edge_count();
        if (edges + e > edge_max || bd + g.m > bd_max) continue;
        cur.push_back(g);
        build_words(letters, len_max, edge_max, bd_max, cur, edges + e, bd + g.m, out, cap);
        cur.pop_back();
    }
}

} // namespace

RankTable truncated_cohomology_ranks(int edge_max, int len_max, int bd_max, const ClassPredicate& c,
                                     long basis_cap) {
    auto letters = cobar_letters(edge_max, bd_max, c);
    std::vector<CobarWord> words;
    CobarWord cur;
    build_words(letters, len_max, edge_max, bd_max, cur, 0, 0, words, basis_cap);

    std::map<CobarWord, size_t> index;
    std::map<int, std::vector<size_t>> by_degree;
    for (size_t i = 0; i < words.size(); ++i) {
        index[words[i]] = i;
        by_degree[cobar_degree(words[i])].push_back(i);
    }

    // D images; escapes flagged per source word
    std::vector<CobarVector> image(words.size());
    std::vector<bool> escaped(words.size(), false);
    for (size_t i = 0; i < words.size(); ++i) {
        image[i] = cobar_differential(CobarVector::of(words[i]), c);
        for (const auto& [w, q] : image[i].terms())
            if (!index.count(w)) escaped[i] = true;
    }

    RankTable table;
    table.basis_size = static_cast<long>(words.size());
    for (size_t i = 0; i < words.size(); ++i)
        if (escaped[i]) table.closed = false;

    // per-degree matrices of D: F_g -> F_{g-1}
    std::map<int, std::vector<std::vector<Rational>>> mats;
    std::map<int, long> ranks;
    for (const auto& [deg, cols] : by_degree) {
        auto lower = by_degree.find(deg - 1);
        const size_t nrows = (lower == by_degree.end()) ? 0 : lower->second.size();
        std::vector<std::vector<Rational>> m(nrows, std::vector<Rational>(cols.size(), Rational(0)));
        if (nrows) {
            std::map<size_t, size_t> rowpos;
            for (size_t r = 0; r < nrows; ++r) rowpos[lower->second[r]] = r;
            for (size_t cidx = 0; cidx < cols.size(); ++cidx)
                for (const auto& [w, q] : image[cols[cidx]].terms()) {
                    auto it = index.find(w);
                    if (it == index.end()) continue;
                    m[rowpos[it->second]][cidx] = q;
                }
        }
        ranks[deg] = rank_exact(m);
        mats[deg] = std::move(m);
    }

    if (table.closed) {
        // D_{g} . D_{g+1} = 0 exactly
        for (const auto& [deg, m] : mats) {
            auto up = mats.find(deg + 1);
            if (up == mats.end() || m.empty() || up->second.empty()) continue;
            if (!mat_is_zero(mat_mul(m, up->second))) table.d_squared_zero = false;
        }
    }

    for (const auto& [deg, cols] : by_degree) {
        RankRow row;
        row.degree = deg;
        row.dim = static_cast<long>(cols.size());
        row.rank = ranks[deg];
        row.nullity = row.dim - row.rank;
        for (size_t i : cols)
            if (escaped[i]) ++row.escaped;
        auto upr = ranks.find(deg + 1);
        if (upr != ranks.end() && row.rank + upr->second > row.dim) table.im_in_ker = false;
        table.rows.push_back(row);
    }
    return table;
}

} // namespace feyngraph
