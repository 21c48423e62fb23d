#include "feyngraph/feynman.hpp"

#include "feyngraph/graph_vector.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace feyngraph {

std::vector<int> VertexState::signature() const {
    std::vector<int> sig;
    sig.reserve(gammas.size());
    for (const auto& g : gammas) sig.push_back(g.arity());
    return sig;
}

namespace {

struct EdgeInfo {
    int src;
    int tgt;
};

std::vector<EdgeInfo> edge_list(const DirectedGraph& g) {
    std::vector<EdgeInfo> edges;
    for (int v = 0; v < g.n; ++v)
        for (int t : g.out[v]) edges.push_back({v, t});
    return edges;
}

void check_signature(const DirectedGraph& g, const VertexState& s) {
    if (static_cast<int>(s.gammas.size()) != g.n)
        throw std::invalid_argument("state has wrong number of vertex fields");
    for (int v = 0; v < g.n; ++v) {
        if (s.gammas[v].dim() != s.dim) throw std::invalid_argument("state dimension mismatch");
        if (s.gammas[v].is_zero()) continue;  // zero field matches any slot
        if (s.gammas[v].arity() != static_cast<int>(g.out[v].size()))
            throw std::invalid_argument("state signature does not match out-degrees");
    }
}

bool has_zero_field(const VertexState& s) {
    for (const auto& f : s.gammas)
        if (f.is_zero()) return true;
    return false;
}

} // namespace

PolyDiffOperator feynman_rule(const GraphTerm& t, const VertexState& s) {
    const DirectedGraph& g = t.graph;
    check_signature(g, s);
    const int d = s.dim;
    PolyDiffOperator result(d, g.m);
    if (t.sign == 0 || has_zero_field(s)) return result;

    const auto edges = edge_list(g);
    const int E = static_cast<int>(edges.size());
    const auto in = g.incoming();

    // out-edge index ranges per vertex
    std::vector<int> offset(g.n + 1, 0);
    for (int v = 0; v < g.n; ++v) offset[v + 1] = offset[v] + static_cast<int>(g.out[v].size());

    std::vector<int> color(E, 0);
    while (true) {
        Polynomial coeff = Polynomial::constant(d, t.sign);
        for (int v = 0; v < g.n && !coeff.is_zero(); ++v) {
            std::vector<int> tuple(color.begin() + offset[v], color.begin() + offset[v + 1]);
            Polynomial amp = s.gammas[v].coefficient(tuple);
            for (int e : in[v]) amp = amp.derivative(color[e]);
            coeff = coeff * amp;
        }
        if (!coeff.is_zero()) {
            PolyDiffOperator::Derivs derivs(g.m, std::vector<int>(d, 0));
            for (int j = 0; j < g.m; ++j)
                for (int e : in[g.n + j]) derivs[j][color[e]] += 1;
            result.add_term(derivs, coeff);
        }
        int p = E - 1;
        for (; p >= 0; --p) {
            if (++color[p] < d) break;
            color[p] = 0;
        }
        if (p < 0) break;
    }
    return result;
}

// relabelings fixing the graph, per-vertex edge order ignored
static int automorphism_count(const DirectedGraph& g) {
    const int n = g.n;
    std::vector<std::vector<int>> sorted = g.out;
    for (auto& row : sorted) std::sort(row.begin(), row.end());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    int count = 0;
    do {
        std::vector<std::vector<int>> h(n);
        for (int v = 0; v < n; ++v) {
            for (int u : sorted[v]) h[perm[v]].push_back(u < n ? perm[u] : u);
            std::sort(h[perm[v]].begin(), h[perm[v]].end());
        }
        if (h == sorted) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

PolyDiffOperator feynman_rule_skew(const GraphTerm& t, const VertexState& s) {
    const DirectedGraph& g = t.graph;
    const int n = g.n;
    if (static_cast<int>(s.gammas.size()) != n)
        throw std::invalid_argument("state has wrong number of vertex fields");
    PolyDiffOperator result(s.dim, g.m);
    if (t.sign == 0) return result;
    for (const auto& f : s.gammas)
        if (f.is_zero()) return result;

    std::vector<int> arities = s.signature();
    const auto deg = g.out_degrees();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (int v = 0; v < n && match; ++v) match = (arities[perm[v]] == deg[v]);
        if (!match) continue;
        VertexState ps{s.dim, {}};
        ps.gammas.reserve(n);
        for (int v = 0; v < n; ++v) ps.gammas.push_back(s.gammas[perm[v]]);
        PolyDiffOperator term = feynman_rule(t, ps);
        if (koszul_sign(perm, arities) < 0) term *= Rational(-1);
        result += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    // orbit sum over distinct labelings: the assignment sum hits each
    // labeling once per label-fixing relabeling
    const int aut = automorphism_count(g);
    if (aut > 1) result *= Rational(1, aut);
    return result;
}

bool lemma_bullet_check(const GraphTerm& t, int edge_index, const VertexState& s) {
    const DirectedGraph& g = t.graph;
    check_signature(g, s);
    auto [src, tgt] = g.edge(edge_index);
    if (tgt >= g.n) throw std::invalid_argument("contracted edge must be internal");
    if (src == tgt) throw std::invalid_argument("loop edges are not contractible");

    const PolyDiffOperator direct = feynman_rule(t, s);

    // position of the edge inside src's out-list
    int base = 0;
    for (int v = 0; v < src; ++v) base += static_cast<int>(g.out[v].size());
    const int pos = edge_index - base;

    const int d = s.dim;
    const auto edges = edge_list(g);
    const auto in = g.incoming();
    const int E = static_cast<int>(edges.size());

    // surviving edges keep their global indices; the contracted one is summed
    std::vector<int> kept;
    for (int e = 0; e < E; ++e)
        if (e != edge_index) kept.push_back(e);

    std::vector<int> offset(g.n + 1, 0);
    for (int v = 0; v < g.n; ++v) offset[v + 1] = offset[v] + static_cast<int>(g.out[v].size());

    // precompute bullet ingredients
    std::vector<PolyVectorField> psi_src, x_tgt;
    for (int k = 0; k < d; ++k) {
        psi_src.push_back(s.gammas[src].psi_derivative(k));
        x_tgt.push_back(s.gammas[tgt].x_derivative(k));
    }

    PolyDiffOperator routed(d, g.m);
    std::vector<int> color(kept.size(), 0);
    std::map<int, int> colof;  // global edge index -> color
    while (true) {
        colof.clear();
        for (size_t i = 0; i < kept.size(); ++i) colof[kept[i]] = color[i];

        Polynomial coeff = Polynomial::constant(d, t.sign);
        for (int v = 0; v < g.n && !coeff.is_zero(); ++v) {
            if (v == src || v == tgt) continue;
            std::vector<int> tuple;
            for (int e = offset[v]; e < offset[v + 1]; ++e) tuple.push_back(colof[e]);
            Polynomial amp = s.gammas[v].coefficient(tuple);
            for (int e : in[v]) amp = amp.derivative(colof[e]);
            coeff = coeff * amp;
        }
        if (!coeff.is_zero()) {
            // merged amplitude: sum over the contracted edge's color
            std::vector<int> src_tuple, tgt_tuple;
            for (int e = offset[src]; e < offset[src + 1]; ++e)
                if (e != edge_index) src_tuple.push_back(colof[e]);
            for (int e = offset[tgt]; e < offset[tgt + 1]; ++e) tgt_tuple.push_back(colof[e]);
            Polynomial merged(d);
            for (int k = 0; k < d; ++k) {
                Polynomial a = psi_src[k].coefficient(src_tuple);
                for (int e : in[src]) a = a.derivative(colof[e]);
                if (a.is_zero()) continue;
                Polynomial b = x_tgt[k].coefficient(tgt_tuple);
                for (int e : in[tgt])
                    if (e != edge_index) b = b.derivative(colof[e]);
                merged += a * b;
            }
            if (pos % 2) merged *= Rational(-1);  // the edge slot sits pos steps from the front
            coeff = coeff * merged;
        }
        if (!coeff.is_zero()) {
            PolyDiffOperator::Derivs derivs(g.m, std::vector<int>(d, 0));
            for (int j = 0; j < g.m; ++j)
                for (int e : in[g.n + j]) derivs[j][colof[e]] += 1;
            routed.add_term(derivs, coeff);
        }

        int p = static_cast<int>(kept.size()) - 1;
        for (; p >= 0; --p) {
            if (++color[p] < d) break;
            color[p] = 0;
        }
        if (p < 0) break;
    }
    return direct == routed;
}

bool corollary_bullet_check(const GraphTerm& q, const VertexState& s, const ClassPredicate& c) {
    const DirectedGraph& gq = q.graph;
    const int n = static_cast<int>(s.gammas.size());
    if (n != gq.n + 1) throw std::invalid_argument("state must have one more field than the base graph");
    const auto arities = s.signature();

    PolyDiffOperator lhs(s.dim, gq.m);
    for (const auto& g : enumerate_graphs(gq.n + 1, gq.m, excess(gq) - 1, c)) {
        GraphTerm ext{g, 1};
        const int E = g.edge_count();
        for (int e = 0; e < E; ++e) {
            auto [src, tgt] = g.edge(e);
            if (tgt >= g.n) continue;
            GraphTerm r = contract_edge(ext, e, c);
            if (r.sign == 0 || !(r.graph == gq)) continue;
            PolyDiffOperator u = feynman_rule_skew(ext, s);
            if (r.sign < 0) u *= Rational(-1);
            lhs += u;
        }
    }

    PolyDiffOperator rhs(s.dim, gq.m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            PolyVectorField b = bullet(s.gammas[i], s.gammas[j]);
            if (b.is_zero()) continue;
            std::vector<int> perm{i, j};
            VertexState word{s.dim, {b}};
            for (int p = 0; p < n; ++p)
                if (p != i && p != j) {
                    perm.push_back(p);
                    word.gammas.push_back(s.gammas[p]);
                }
            PolyDiffOperator u = feynman_rule_skew(q, word);
            if (koszul_sign(perm, arities) < 0) u *= Rational(-1);
            rhs += u;
        }

    return lhs == rhs;
}

bool lemma_pp_check(const GraphTerm& t, const std::vector<int>& w, const VertexState& s,
                    const ClassPredicate& c) {
    const DirectedGraph& g = t.graph;
    check_signature(g, s);
    auto cp = collapse_normal_subgraph(t, w, c);
    if (!cp) throw std::invalid_argument("subset is not normal");

    const PolyDiffOperator direct = feynman_rule(t, s);

    std::set<int> ws(w.begin(), w.end());
    std::vector<int> wint;
    int run_start = -1, run_len = 0;
    for (int v : ws) {
        if (v < g.n)
            wint.push_back(v);
        else {
            if (run_start < 0) run_start = v - g.n;
            ++run_len;
        }
    }
    const int ns = static_cast<int>(wint.size());
    std::map<int, int> sub_lab;
    for (int i = 0; i < ns; ++i) sub_lab[wint[i]] = i;

    // labeled subgraph on W
    DirectedGraph sub{ns, run_len, {}};
    sub.out.resize(ns);
    for (int i = 0; i < ns; ++i)
        for (int u : g.out[wint[i]])
            sub.out[i].push_back(u < g.n ? sub_lab[u] : ns + (u - g.n - run_start));

    const auto edges = edge_list(g);
    const int E = static_cast<int>(edges.size());
    const int d = s.dim;
    const auto in = g.incoming();
    std::vector<int> offset(g.n + 1, 0);
    for (int v = 0; v < g.n; ++v) offset[v + 1] = offset[v] + static_cast<int>(g.out[v].size());

    // quotient-side edges: everything not sourced in W
    std::vector<int> qedges;
    for (int e = 0; e < E; ++e)
        if (!ws.count(edges[e].src)) qedges.push_back(e);

    PolyDiffOperator routed(d, g.m);
    std::vector<int> color(qedges.size(), 0);
    while (true) {
        std::map<int, int> colof;
        for (size_t i = 0; i < qedges.size(); ++i) colof[qedges[i]] = color[i];

        Polynomial coeff = Polynomial::constant(d, t.sign);
        for (int v = 0; v < g.n && !coeff.is_zero(); ++v) {
            if (ws.count(v)) continue;
            std::vector<int> tuple;
            for (int e = offset[v]; e < offset[v + 1]; ++e) tuple.push_back(colof[e]);
            Polynomial amp = s.gammas[v].coefficient(tuple);
            for (int e : in[v]) amp = amp.derivative(colof[e]);  // in-edges never come from W
            coeff = coeff * amp;
        }

        if (!coeff.is_zero()) {
            // subgraph evaluation with external derivatives routed inside
            VertexState sub_state{d, {}};
            sub_state.gammas.reserve(ns);
            for (int i = 0; i < ns; ++i) {
                PolyVectorField f = s.gammas[wint[i]];
                for (int e : in[wint[i]])
                    if (!ws.count(edges[e].src)) f = f.x_derivative(colof[e]);
                sub_state.gammas.push_back(std::move(f));
            }
            PolyDiffOperator sub_op = feynman_rule(GraphTerm{sub, 1}, sub_state);

            // external edges into the collapsed boundary run augment slots
            std::vector<std::vector<int>> run_extra(run_len, std::vector<int>(d, 0));
            for (int e : qedges) {
                int u = edges[e].tgt;
                if (u >= g.n && ws.count(u)) run_extra[u - g.n - run_start][colof[e]] += 1;
            }

            for (const auto& [dsub, csub] : sub_op.terms()) {
                PolyDiffOperator::Derivs derivs(g.m, std::vector<int>(d, 0));
                for (int j = 0; j < g.m; ++j) {
                    if (j >= run_start && j < run_start + run_len) {
                        for (int x = 0; x < d; ++x)
                            derivs[j][x] = dsub[j - run_start][x] + run_extra[j - run_start][x];
                    } else {
                        for (int e : in[g.n + j]) derivs[j][colof[e]] += 1;
                    }
                }
                routed.add_term(derivs, coeff * csub);
            }
        }

        int p = static_cast<int>(qedges.size()) - 1;
        for (; p >= 0; --p) {
            if (++color[p] < d) break;
            color[p] = 0;
        }
        if (p < 0) break;
    }
    return direct == routed;
}

namespace {

Rational resummed_coefficient(const DirectedGraph& g, const WeightFunctional& w, const ClassPredicate& c) {
    GraphVector v = GraphVector::of(GraphTerm{g, 1});
    Rational r = w.eval(differential(v, c));
    TensorVector red = reduced_coproduct(v, c);
    for (const auto& [word, q] : red.terms()) {
        if (excess(word[0]) != 0 || excess(word[1]) != 0) continue;
        r += q * w.eval(word[0]) * w.eval(word[1]);
    }
    return r;
}

} // namespace

ObstructionReport assemble_obstruction(int n, int m, const WeightFunctional& w, const VertexState& s,
                                       const std::vector<Polynomial>& args, const ClassPredicate& c) {
    if (static_cast<int>(s.gammas.size()) != n) throw std::invalid_argument("state must carry n fields");
    if (static_cast<int>(args.size()) != m) throw std::invalid_argument("argument tuple must have length m");
    const int d = s.dim;
    const auto arities = s.signature();

    ObstructionReport rep;
    rep.lhs_resummed = Polynomial(d);
    rep.lhs_direct = Polynomial(d);
    rep.rhs = Polynomial(d);

    // resummed path and the per-graph coefficient table
    for (const auto& g : enumerate_graphs(n, m, -1, c)) {
        GraphTerm t{g, 1};
        const Rational c_g = resummed_coefficient(g, w, c);
        const Rational dw = delta_on_weight(w, t, c);
        rep.coefficients[g] = {c_g, dw};
        if (c_g == 0 && dw == 0) continue;
        Polynomial val = feynman_rule_skew(t, s).apply(args);
        rep.lhs_resummed += val * c_g;
        rep.rhs += val * dw;
    }

    // (F1) direct: bullet insertions over excess-0 graphs with n-1 vertices
    if (n >= 1) {
        for (const auto& gq : enumerate_graphs(n - 1, m, 0, c)) {
            const Rational wq = w.eval(gq);
            if (wq == 0) continue;
            GraphTerm q{gq, 1};
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (i == j) continue;
                    PolyVectorField b = bullet(s.gammas[i], s.gammas[j]);
                    if (b.is_zero()) continue;
                    std::vector<int> perm{i, j};
                    VertexState word{d, {b}};
                    for (int p = 0; p < n; ++p)
                        if (p != i && p != j) {
                            perm.push_back(p);
                            word.gammas.push_back(s.gammas[p]);
                        }
                    Polynomial val = feynman_rule_skew(q, word).apply(args);
                    if (koszul_sign(perm, arities) < 0) val *= Rational(-1);
                    rep.lhs_direct += val * wq;
                }
        }
    }

    // (F2) direct: weighted wedge compositions over ordered pairs of
    // excess-0 graphs, boundary counts p + r = m + 1
    for (int k = 0; k <= n; ++k) {
        const int l = n - k;
        for (int p = 1; p <= m; ++p) {
            const int r = m + 1 - p;
            auto outers = enumerate_graphs(k, p, 0, c);
            auto inners = enumerate_graphs(l, r, 0, c);
            if (outers.empty() || inners.empty()) continue;

            // split the state word over ordered (outer, inner) with
            // extraction Koszul signs
            std::vector<int> idx(k);
            std::function<void(int, int)> choose = [&](int from, int got) {
                if (got == k) {
                    std::vector<int> perm;
                    std::vector<bool> taken(n, false);
                    for (int i = 0; i < k; ++i) {
                        perm.push_back(idx[i]);
                        taken[idx[i]] = true;
                    }
                    for (int i = 0; i < n; ++i)
                        if (!taken[i]) perm.push_back(i);
                    const int eps = koszul_sign(perm, arities);
                    VertexState left{d, {}}, right{d, {}};
                    for (int i = 0; i < k; ++i) left.gammas.push_back(s.gammas[perm[i]]);
                    for (int i = k; i < n; ++i) right.gammas.push_back(s.gammas[perm[i]]);
                    for (const auto& go : outers) {
                        PolyDiffOperator uo = feynman_rule_skew(GraphTerm{go, 1}, left);
                        if (uo.is_zero()) continue;
                        const Rational wo = w.eval(go);
                        if (wo == 0) continue;
                        for (const auto& gi : inners) {
                            const Rational wi = w.eval(gi);
                            if (wi == 0) continue;
                            PolyDiffOperator ui = feynman_rule_skew(GraphTerm{gi, 1}, right);
                            if (ui.is_zero()) continue;
                            Polynomial val = circle_unsigned(uo, ui).apply(args);
                            val *= wo * wi;
                            if (eps < 0) val *= Rational(-1);
                            // Koszul crossing of the two factors: the
                            // edge-partition sign of the matching collapse
                            if ((go.edge_count() * gi.edge_count()) % 2) val *= Rational(-1);
                            rep.lhs_direct += val;
                        }
                    }
                    return;
                }
                for (int i = from; i < n; ++i) {
                    idx[got] = i;
                    choose(i + 1, got + 1);
                }
            };
            choose(0, 0);
        }
    }

    rep.paths_agree = (rep.lhs_resummed == rep.lhs_direct);
    rep.matches_delta = (rep.lhs_resummed == rep.rhs);
    return rep;
}

} // namespace feyngraph
