#include "feyngraph/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace feyngraph {

std::pair<int, int> DirectedGraph::edge(int k) const {
    int i = k;
    for (int v = 0; v < n; ++v) {
        if (i < static_cast<int>(out[v].size())) return {v, out[v][i]};
        i -= static_cast<int>(out[v].size());
    }
    throw std::out_of_range("edge index " + std::to_string(k));
}

std::vector<int> DirectedGraph::out_degrees() const {
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(out[v].size());
    return deg;
}

std::vector<std::vector<int>> DirectedGraph::incoming() const {
    std::vector<std::vector<int>> in(n + m);
    int idx = 0;
    for (int v = 0; v < n; ++v)
        for (int t : out[v]) in[t].push_back(idx++);
    return in;
}

bool ClassPredicate::admits(const DirectedGraph& g) const {
    for (int v = 0; v < g.n; ++v) {
        const auto& row = g.out[v];
        if (require_out_edges && row.empty()) return false;
        for (size_t i = 0; i < row.size(); ++i) {
            if (forbid_loops && row[i] == v) return false;
            if (forbid_parallel_edges)
                for (size_t j = i + 1; j < row.size(); ++j)
                    if (row[i] == row[j]) return false;
        }
    }
    return true;
}

int permutation_parity(const std::vector<int>& seq) {
    int inv = 0;
    for (size_t i = 0; i < seq.size(); ++i)
        for (size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++inv;
    return (inv & 1) ? -1 : 1;
}

void validate_graph(const DirectedGraph& g) {
    if (g.n < 0 || g.m < 0) throw std::invalid_argument("negative vertex count");
    if (static_cast<int>(g.out.size()) != g.n)
        throw std::invalid_argument("out-list count does not match internal vertex count");
    for (int v = 0; v < g.n; ++v)
        for (int t : g.out[v])
            if (t < 0 || t >= g.n + g.m)
                throw std::invalid_argument("dangling edge target " + std::to_string(t));
}

GraphTerm canonicalize(const DirectedGraph& g) {
    validate_graph(g);
    const int n = g.n;

    // A repeated (source,target) pair is an odd automorphism: class is zero.
    bool degenerate = false;
    for (const auto& row : g.out) {
        auto s = row;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) degenerate = true;
    }

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);

    std::vector<std::vector<int>> best;
    int best_parity = 1;
    bool first = true, ambiguous = false;

    std::vector<std::vector<std::pair<int, int>>> rows(n);  // (target, original edge index)
    do {
        for (auto& r : rows) r.clear();
        int idx = 0;
        for (int v = 0; v < n; ++v)
            for (int t : g.out[v]) rows[perm[v]].push_back({t < n ? perm[t] : t, idx++});
        std::vector<std::vector<int>> repr(n);
        std::vector<int> order;
        order.reserve(idx);
        for (int v = 0; v < n; ++v) {
            std::stable_sort(rows[v].begin(), rows[v].end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
            repr[v].reserve(rows[v].size());
            for (auto& [t, oi] : rows[v]) {
                repr[v].push_back(t);
                order.push_back(oi);
            }
        }
        int parity = permutation_parity(order);
        if (first || repr < best) {
            best = std::move(repr);
            best_parity = parity;
            ambiguous = false;
            first = false;
        } else if (repr == best && parity != best_parity) {
            ambiguous = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    GraphTerm t;
    t.graph = DirectedGraph{g.n, g.m, std::move(best)};
    t.sign = (degenerate || ambiguous) ? 0 : best_parity;
    return t;
}

GraphTerm make_graph(int n, int m, const std::vector<std::vector<int>>& signed_targets) {
    if (n < 0 || m < 0) throw std::invalid_argument("negative vertex count");
    if (static_cast<int>(signed_targets.size()) != n)
        throw std::invalid_argument("expected " + std::to_string(n) + " out-lists");
    DirectedGraph g{n, m, {}};
    g.out.resize(n);
    for (int v = 0; v < n; ++v)
        for (int st : signed_targets[v]) {
            if (st > 0 && st <= n)
                g.out[v].push_back(st - 1);
            else if (st < 0 && -st <= m)
                g.out[v].push_back(n + (-st - 1));
            else
                throw std::invalid_argument("target out of range at v" + std::to_string(v + 1));
        }
    return canonicalize(g);
}

DirectedGraph disjoint_union(const DirectedGraph& a, const DirectedGraph& b) {
    DirectedGraph u{a.n + b.n, a.m + b.m, {}};
    u.out.resize(u.n);
    for (int v = 0; v < a.n; ++v)
        for (int t : a.out[v]) u.out[v].push_back(t < a.n ? t : t + b.n);
    for (int v = 0; v < b.n; ++v)
        for (int t : b.out[v]) u.out[a.n + v].push_back(t < b.n ? a.n + t : u.n + a.m + (t - b.n));
    return u;
}

int excess(const DirectedGraph& g) { return g.edge_count() - (2 * g.n + g.m - 2); }

GraphTerm contract_edge(const GraphTerm& t, int edge_index, const ClassPredicate& c) {
    const DirectedGraph& g = t.graph;
    auto [src, tgt] = g.edge(edge_index);
    if (tgt >= g.n) throw std::invalid_argument("contracted edge must be internal");
    if (t.sign == 0) return GraphTerm{empty_graph(), 0};
    if (src == tgt) return GraphTerm{empty_graph(), 0};  // loop contraction vanishes

    // Relabel so src -> 0, tgt -> 1, others order-preserving, and move the
    // contracted edge to the front of src's list; sign is the parity of the
    // induced permutation of the global edge sequence.
    const int n = g.n;
    std::vector<int> newlab(n);
    int next = 2;
    for (int v = 0; v < n; ++v) newlab[v] = (v == src) ? 0 : (v == tgt) ? 1 : next++;

    // position of the contracted edge within src's list
    int base = 0;
    for (int v = 0; v < src; ++v) base += static_cast<int>(g.out[v].size());
    const int pos = edge_index - base;

    std::vector<std::vector<std::pair<int, int>>> rows(n);
    int idx = 0;
    for (int v = 0; v < n; ++v)
        for (int u : g.out[v]) rows[newlab[v]].push_back({u < n ? newlab[u] : u, idx++});
    auto& srow = rows[0];
    std::rotate(srow.begin(), srow.begin() + pos, srow.begin() + pos + 1);

    std::vector<int> order;
    for (auto& r : rows)
        for (auto& [u, oi] : r) order.push_back(oi);
    const int reorder_sign = permutation_parity(order);

    // Delete the edge (now first) and merge vertex 1 into vertex 0:
    // merged out-list is src's remaining edges followed by tgt's.
    DirectedGraph q{n - 1, g.m, {}};
    q.out.resize(q.n);
    auto remap = [&](int u) {
        if (u >= n) return u - 1;           // boundary shifts down with n
        return (u <= 1) ? 0 : u - 1;        // tgt joins src as vertex 0
    };
    for (size_t i = 1; i < srow.size(); ++i) q.out[0].push_back(remap(srow[i].first));
    for (auto& [u, oi] : rows[1]) q.out[0].push_back(remap(u));
    for (int v = 2; v < n; ++v)
        for (auto& [u, oi] : rows[v]) q.out[v - 1].push_back(remap(u));

    GraphTerm r = canonicalize(q);
    if (r.sign == 0 || !c.admits(r.graph)) return GraphTerm{empty_graph(), 0};
    r.sign *= t.sign * reorder_sign;
    return r;
}

std::optional<CollapsePair> collapse_normal_subgraph(const GraphTerm& t, const std::vector<int>& w,
                                                     const ClassPredicate& c) {
    const DirectedGraph& g = t.graph;
    std::set<int> ws(w.begin(), w.end());
    if (ws.size() < 2) throw std::invalid_argument("subset must have at least two vertices");
    if (static_cast<int>(ws.size()) >= g.vertex_count())
        throw std::invalid_argument("subset must be proper");
    for (int v : ws)
        if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("subset vertex out of range");

    std::vector<int> wint, wbd;
    for (int v : ws) (v < g.n ? wint : wbd).push_back(v);
    if (wbd.empty()) throw std::invalid_argument("subset must meet the boundary");
    for (size_t i = 1; i < wbd.size(); ++i)
        if (wbd[i] != wbd[i - 1] + 1) throw std::invalid_argument("boundary part must be a consecutive run");
    const int run_start = wbd.front() - g.n;
    const int run_len = static_cast<int>(wbd.size());

    // Normality: no edge sourced in W may leave W.
    for (int v : wint)
        for (int u : g.out[v])
            if (!ws.count(u)) return std::nullopt;

    // Edge-partition sign: stable partition of the global edge order into
    // (W-sourced, rest).
    std::vector<int> order;
    {
        std::vector<int> late;
        int idx = 0;
        for (int v = 0; v < g.n; ++v)
            for (size_t i = 0; i < g.out[v].size(); ++i, ++idx)
                (ws.count(v) ? order : late).push_back(idx);
        order.insert(order.end(), late.begin(), late.end());
    }
    const int partition_sign = permutation_parity(order);

    // Subgraph on W, labels reindexed in order.
    const int ns = static_cast<int>(wint.size());
    std::map<int, int> sub_lab;
    for (int i = 0; i < ns; ++i) sub_lab[wint[i]] = i;
    DirectedGraph sub{ns, run_len, {}};
    sub.out.resize(ns);
    for (int i = 0; i < ns; ++i)
        for (int u : g.out[wint[i]])
            sub.out[i].push_back(u < g.n ? sub_lab[u] : ns + (u - g.n - run_start));

    // Quotient: W collapses to one boundary vertex at the run position.
    const int nq = g.n - ns;
    const int mq = g.m - run_len + 1;
    std::map<int, int> q_lab;
    {
        int i = 0;
        for (int v = 0; v < g.n; ++v)
            if (!ws.count(v)) q_lab[v] = i++;
    }
    auto q_target = [&](int u) {
        if (ws.count(u)) return nq + run_start;  // the collapsed vertex
        if (u < g.n) return q_lab[u];
        int b = u - g.n;
        return nq + (b < run_start ? b : b - run_len + 1);
    };
    DirectedGraph quot{nq, mq, {}};
    quot.out.resize(nq);
    for (int v = 0; v < g.n; ++v)
        if (!ws.count(v))
            for (int u : g.out[v]) quot.out[q_lab[v]].push_back(q_target(u));

    GraphTerm cs = canonicalize(sub);
    GraphTerm cq = canonicalize(quot);
    if (!c.admits(cs.graph) || !c.admits(cq.graph)) return std::nullopt;
    cs.sign *= t.sign * partition_sign;
    return CollapsePair{cs, cq};
}

std::vector<std::vector<int>> enumerate_normal_subsets(const GraphTerm& t, const ClassPredicate& c) {
    const DirectedGraph& g = t.graph;
    std::vector<std::vector<int>> result;
    const int total = g.vertex_count();
    for (int a = 0; a < g.m; ++a)
        for (int b = a; b < g.m; ++b)
            for (unsigned mask = 0; mask < (1u << g.n); ++mask) {
                std::vector<int> w;
                for (int v = 0; v < g.n; ++v)
                    if (mask & (1u << v)) w.push_back(v);
                for (int j = a; j <= b; ++j) w.push_back(g.n + j);
                if (static_cast<int>(w.size()) < 2 || static_cast<int>(w.size()) >= total) continue;
                if (collapse_normal_subgraph(t, w, c)) result.push_back(std::move(w));
            }
    return result;
}

namespace {

// Sorted target lists of size k drawn from `targets`; with repeats allowed
// these are multisets (non-decreasing sequences).
void target_choices(const std::vector<int>& targets, int k, bool allow_repeat, size_t from,
                    std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (k == 0) {
        out.push_back(cur);
        return;
    }
    for (size_t i = from; i < targets.size(); ++i) {
        cur.push_back(targets[i]);
        target_choices(targets, k - 1, allow_repeat, allow_repeat ? i : i + 1, cur, out);
        cur.pop_back();
    }
}

void compositions(int total, int parts, int lo, int hi, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
    if (parts == 0) {
        if (total == 0) out.push_back(cur);
        return;
    }
    for (int k = lo; k <= std::min(hi, total); ++k) {
        cur.push_back(k);
        compositions(total - k, parts - 1, lo, hi, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<DirectedGraph> enumerate_graphs(int n, int m, int l, const ClassPredicate& c) {
    if (n < 0 || m < 0) throw std::invalid_argument("negative vertex count");
    const int E = 2 * n + m - 2 + l;
    std::vector<DirectedGraph> result;
    if (E < 0) return result;
    if (n == 0) {
        if (E == 0) result.push_back(DirectedGraph{0, m, {}});
        return result;
    }

    std::set<DirectedGraph> seen;
    const int lo = c.require_out_edges ? 1 : 0;
    std::vector<std::vector<int>> degs;
    std::vector<int> cur;
    compositions(E, n, lo, E, cur, degs);

    for (const auto& deg : degs) {
        // per-vertex target menus
        std::vector<std::vector<std::vector<int>>> menus(n);
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            std::vector<int> targets;
            for (int u = 0; u < n + m; ++u)
                if (!(c.forbid_loops && u == v)) targets.push_back(u);
            std::vector<int> tmp;
            target_choices(targets, deg[v], !c.forbid_parallel_edges, 0, tmp, menus[v]);
            if (menus[v].empty()) ok = false;
        }
        if (!ok) continue;
        std::vector<size_t> pick(n, 0);
        while (true) {
            DirectedGraph g{n, m, {}};
            g.out.resize(n);
            for (int v = 0; v < n; ++v) g.out[v] = menus[v][pick[v]];
            GraphTerm t = canonicalize(g);
            if (t.sign != 0 && c.admits(t.graph)) seen.insert(t.graph);
            int v = n - 1;
            for (; v >= 0; --v) {
                if (++pick[v] < menus[v].size()) break;
                pick[v] = 0;
            }
            if (v < 0) break;
        }
    }
    result.assign(seen.begin(), seen.end());
    return result;
}

std::string canonical_key(const DirectedGraph& g) {
    std::string s = std::to_string(g.n) + "," + std::to_string(g.m) + ";[";
    for (int v = 0; v < g.n; ++v) {
        if (v) s += "|";
        for (size_t i = 0; i < g.out[v].size(); ++i) {
            if (i) s += " ";
            int t = g.out[v][i];
            s += (t < g.n) ? "v" + std::to_string(t + 1) : "b" + std::to_string(t - g.n + 1);
        }
    }
    s += "]";
    return s;
}

ComponentFactorization factor_components(const DirectedGraph& g) {
    const int total = g.vertex_count();
    std::vector<int> comp(total, -1);
    std::vector<std::vector<int>> adj(total);
    for (int v = 0; v < g.n; ++v)
        for (int u : g.out[v]) {
            adj[v].push_back(u);
            adj[u].push_back(v);
        }
    int ncomp = 0;
    for (int s = 0; s < total; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : adj[v])
                if (comp[u] < 0) {
                    comp[u] = ncomp;
                    stack.push_back(u);
                }
        }
        ++ncomp;
    }

    // Edge-partition sign: edges grouped by the component of their source,
    // components in discovery order.
    std::vector<int> order;
    for (int k = 0; k < ncomp; ++k) {
        int idx = 0;
        for (int v = 0; v < g.n; ++v)
            for (size_t i = 0; i < g.out[v].size(); ++i, ++idx)
                if (comp[v] == k) order.push_back(idx);
    }

    ComponentFactorization f;
    f.sign = permutation_parity(order);
    for (int k = 0; k < ncomp; ++k) {
        std::vector<int> vint, vbd;
        for (int v = 0; v < total; ++v)
            if (comp[v] == k) (v < g.n ? vint : vbd).push_back(v);
        std::map<int, int> lab;
        const int nk = static_cast<int>(vint.size());
        for (int i = 0; i < nk; ++i) lab[vint[i]] = i;
        for (size_t i = 0; i < vbd.size(); ++i) lab[vbd[i]] = nk + static_cast<int>(i);
        DirectedGraph piece{nk, static_cast<int>(vbd.size()), {}};
        piece.out.resize(nk);
        for (int i = 0; i < nk; ++i)
            for (int u : g.out[vint[i]]) piece.out[i].push_back(lab[u]);
        GraphTerm ct = canonicalize(piece);
        f.sign *= ct.sign;
        f.components.push_back(ct.graph);
    }
    return f;
}

} // namespace feyngraph
