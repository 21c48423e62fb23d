#include "feyngraph/polydiff.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace feyngraph {

PolyDiffOperator PolyDiffOperator::multiplication(int dim, int arity) {
    PolyDiffOperator op(dim, arity);
    op.add_term(Derivs(arity, std::vector<int>(dim, 0)), Polynomial::constant(dim, 1));
    return op;
}

void PolyDiffOperator::add_term(const Derivs& d, const Polynomial& coeff) {
    if (static_cast<int>(d.size()) != arity_) throw std::invalid_argument("derivative tuple arity mismatch");
    for (const auto& mi : d)
        if (static_cast<int>(mi.size()) != dim_) throw std::invalid_argument("multi-index dimension mismatch");
    if (coeff.dim() != dim_) throw std::invalid_argument("coefficient dimension mismatch");
    if (coeff.is_zero()) return;
    auto it = terms_.find(d);
    if (it == terms_.end()) {
        terms_.emplace(d, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PolyDiffOperator& PolyDiffOperator::operator+=(const PolyDiffOperator& o) {
    if (dim_ != o.dim_ || arity_ != o.arity_) throw std::invalid_argument("operator shape mismatch");
    for (const auto& [d, p] : o.terms_) add_term(d, p);
    return *this;
}

PolyDiffOperator& PolyDiffOperator::operator-=(const PolyDiffOperator& o) {
    if (dim_ != o.dim_ || arity_ != o.arity_) throw std::invalid_argument("operator shape mismatch");
    for (const auto& [d, p] : o.terms_) {
        Polynomial np = p;
        np *= Rational(-1);
        add_term(d, np);
    }
    return *this;
}

PolyDiffOperator& PolyDiffOperator::operator*=(const Rational& q) {
    if (q == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [d, p] : terms_) p *= q;
    return *this;
}

Polynomial PolyDiffOperator::apply(const std::vector<Polynomial>& args) const {
    if (static_cast<int>(args.size()) != arity_) throw std::invalid_argument("argument count mismatch");
    Polynomial r(dim_);
    for (const auto& [d, p] : terms_) {
        Polynomial t = p;
        for (int j = 0; j < arity_ && !t.is_zero(); ++j) t = t * args[j].derivative(d[j]);
        r += t;
    }
    return r;
}

bool PolyDiffOperator::reduced() const {
    for (const auto& [d, p] : terms_)
        for (const auto& mi : d)
            if (std::accumulate(mi.begin(), mi.end(), 0) == 0) return false;
    return true;
}

namespace {

// all splittings of multi-index `alpha` into `parts` pieces, with
// multinomial coefficients; callback(pieces, coeff)
void split_multi_index(const std::vector<int>& alpha, int parts,
                       const std::function<void(const std::vector<std::vector<int>>&, const Rational&)>& cb) {
    const int dim = static_cast<int>(alpha.size());
    std::vector<std::vector<int>> pieces(parts, std::vector<int>(dim, 0));

    // per coordinate: compositions of alpha[c] into `parts` parts
    std::function<void(int, Rational)> rec = [&](int c, Rational coeff) {
        if (c == dim) {
            cb(pieces, coeff);
            return;
        }
        std::function<void(int, int, Rational)> comp = [&](int part, int left, Rational acc) {
            if (part == parts - 1) {
                pieces[part][c] = left;
                rec(c + 1, acc);
                pieces[part][c] = 0;
                return;
            }
            for (int take = 0; take <= left; ++take) {
                // binomial(left, take)
                Rational bin = 1;
                for (int i = 0; i < take; ++i) bin *= Rational(left - i, i + 1);
                pieces[part][c] = take;
                comp(part + 1, left - take, acc * bin);
                pieces[part][c] = 0;
            }
        };
        comp(0, alpha[c], coeff);
    };
    rec(0, 1);
}

} // namespace

PolyDiffOperator insert_at(const PolyDiffOperator& outer, int at, const PolyDiffOperator& inner) {
    if (outer.dim() != inner.dim()) throw std::invalid_argument("operator dimension mismatch");
    const int p = outer.arity(), r = inner.arity();
    if (at < 0 || at >= p) throw std::invalid_argument("insertion slot out of range");
    PolyDiffOperator result(outer.dim(), p + r - 1);
    for (const auto& [od, oc] : outer.terms())
        for (const auto& [id, ic] : inner.terms()) {
            // distribute the slot derivative over inner coeff + r arguments
            split_multi_index(od[at], r + 1, [&](const std::vector<std::vector<int>>& d, const Rational& mult) {
                Polynomial coeff = ic.derivative(d[0]);
                if (coeff.is_zero()) return;
                coeff = oc * coeff;
                coeff *= mult;
                PolyDiffOperator::Derivs nd;
                nd.reserve(p + r - 1);
                for (int j = 0; j < at; ++j) nd.push_back(od[j]);
                for (int j = 0; j < r; ++j) {
                    std::vector<int> mi = id[j];
                    for (int cidx = 0; cidx < outer.dim(); ++cidx) mi[cidx] += d[j + 1][cidx];
                    nd.push_back(mi);
                }
                for (int j = at + 1; j < p; ++j) nd.push_back(od[j]);
                result.add_term(nd, coeff);
            });
        }
    return result;
}

PolyDiffOperator gerstenhaber_compose(const PolyDiffOperator& a, const PolyDiffOperator& b) {
    const int p = a.arity(), r = b.arity();
    PolyDiffOperator result(a.dim(), p + r - 1);
    for (int i = 0; i < p; ++i) {
        PolyDiffOperator t = insert_at(a, i, b);
        if ((i * (r - 1)) % 2) t *= Rational(-1);
        result += t;
    }
    return result;
}

PolyDiffOperator circle_unsigned(const PolyDiffOperator& a, const PolyDiffOperator& b) {
    const int p = a.arity(), r = b.arity();
    PolyDiffOperator result(a.dim(), p + r - 1);
    for (int i = 0; i < p; ++i) result += insert_at(a, i, b);
    return result;
}

PolyDiffOperator gerstenhaber_bracket(const PolyDiffOperator& a, const PolyDiffOperator& b) {
    const int k1 = a.arity() - 1, k2 = b.arity() - 1;
    PolyDiffOperator r = gerstenhaber_compose(a, b);
    PolyDiffOperator rev = gerstenhaber_compose(b, a);
    if ((k1 * k2) % 2 == 0) rev *= Rational(-1);
    r += rev;
    return r;
}

PolyDiffOperator hochschild_d(const PolyDiffOperator& a) {
    return gerstenhaber_bracket(PolyDiffOperator::multiplication(a.dim()), a);
}

namespace {

std::vector<int> arities_of(const std::vector<PolyVectorField>& gammas) {
    std::vector<int> a;
    a.reserve(gammas.size());
    for (const auto& g : gammas) {
        int k = g.arity();
        if (k < 0) throw std::invalid_argument("wedge factors must be arity-homogeneous");
        a.push_back(k);
    }
    return a;
}

} // namespace

PolyDiffOperator wedge_compose(const SkewEvaluator& u_k, int k, const SkewEvaluator& u_l, int l,
                               const std::vector<PolyVectorField>& gammas) {
    const int n = static_cast<int>(gammas.size());
    if (k + l != n) throw std::invalid_argument("wedge_compose arity mismatch");
    const auto deg = arities_of(gammas);

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    PolyDiffOperator acc;
    bool first = true;
    do {
        std::vector<PolyVectorField> left, right;
        for (int i = 0; i < k; ++i) left.push_back(gammas[perm[i]]);
        for (int i = k; i < n; ++i) right.push_back(gammas[perm[i]]);
        PolyDiffOperator t = circle_unsigned(u_k(left), u_l(right));
        if (koszul_sign(perm, deg) < 0) t *= Rational(-1);
        if (first) {
            acc = t;
            first = false;
        } else {
            acc += t;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    Rational norm = Rational(1) / (factorial(k) * factorial(l));
    acc *= norm;
    return acc;
}

PolyDiffOperator wedge_compose_subsets(const SkewEvaluator& u_k, int k, const SkewEvaluator& u_l, int l,
                                       const std::vector<PolyVectorField>& gammas) {
    const int n = static_cast<int>(gammas.size());
    if (k + l != n) throw std::invalid_argument("wedge_compose arity mismatch");
    const auto deg = arities_of(gammas);

    PolyDiffOperator acc;
    bool first = true;
    std::vector<int> idx(k);
    std::function<void(int, int)> choose = [&](int from, int got) {
        if (got == k) {
            std::vector<int> perm;
            std::vector<bool> in(n, false);
            for (int i : idx) in[i] = true;
            for (int i : idx) perm.push_back(i);
            for (int i = 0; i < n; ++i)
                if (!in[i]) perm.push_back(i);
            std::vector<PolyVectorField> left, right;
            for (int i = 0; i < k; ++i) left.push_back(gammas[perm[i]]);
            for (int i = k; i < n; ++i) right.push_back(gammas[perm[i]]);
            PolyDiffOperator t = circle_unsigned(u_k(left), u_l(right));
            if (koszul_sign(perm, deg) < 0) t *= Rational(-1);
            if (first) {
                acc = t;
                first = false;
            } else {
                acc += t;
            }
            return;
        }
        for (int i = from; i < n; ++i) {
            idx[got] = i;
            choose(i + 1, got + 1);
        }
    };
    choose(0, 0);
    if (first) return PolyDiffOperator(gammas.empty() ? 0 : gammas[0].dim(), 0);
    return acc;
}

} // namespace feyngraph
