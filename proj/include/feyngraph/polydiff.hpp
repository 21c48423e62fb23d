#pragma once

#include "feyngraph/poly.hpp"
#include "feyngraph/polyvector.hpp"

#include <functional>
#include <map>
#include <vector>

namespace feyngraph {

// m-ary polydifferential operator: finite sum of
// coeff(x) * d^{a_1} f_1 ... d^{a_m} f_m terms.
class PolyDiffOperator {
public:
    using Derivs = std::vector<std::vector<int>>;  // m multi-indices of length dim

    PolyDiffOperator(int dim = 0, int arity = 0) : dim_(dim), arity_(arity) {}
    // the multiplication operator f1...fk -> f1*...*fk; m_A is arity 2
    static PolyDiffOperator multiplication(int dim, int arity = 2);

    int dim() const { return dim_; }
    int arity() const { return arity_; }
    const std::map<Derivs, Polynomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Derivs& d, const Polynomial& coeff);

    PolyDiffOperator& operator+=(const PolyDiffOperator& o);
    PolyDiffOperator& operator-=(const PolyDiffOperator& o);
    PolyDiffOperator& operator*=(const Rational& q);
    friend PolyDiffOperator operator+(PolyDiffOperator a, const PolyDiffOperator& b) { return a += b; }
    friend PolyDiffOperator operator-(PolyDiffOperator a, const PolyDiffOperator& b) { return a -= b; }
    friend PolyDiffOperator operator*(PolyDiffOperator a, const Rational& q) { return a *= q; }
    bool operator==(const PolyDiffOperator& o) const {
        return dim_ == o.dim_ && arity_ == o.arity_ && terms_ == o.terms_;
    }

    Polynomial apply(const std::vector<Polynomial>& args) const;

    // vanishes-on-constants predicate for the reduced-cochain condition
    bool reduced() const;

private:
    int dim_;
    int arity_;
    std::map<Derivs, Polynomial> terms_;
};

// Insert `inner` into argument slot `at` (0-based) of `outer`, expanding
// the slot derivative over the inner coefficient and arguments (Leibniz
// with multinomials). Result arity p + r - 1.
PolyDiffOperator insert_at(const PolyDiffOperator& outer, int at, const PolyDiffOperator& inner);

// sum_i (-1)^{(i-1)(r-1)} insert_at(a, i, b) -- the pre-Lie circle of the
// Gerstenhaber bracket.
PolyDiffOperator gerstenhaber_compose(const PolyDiffOperator& a, const PolyDiffOperator& b);

// sum_i insert_at(a, i, b) without signs; the composition the graph-side
// coproduct resummation realizes.
PolyDiffOperator circle_unsigned(const PolyDiffOperator& a, const PolyDiffOperator& b);

// [a,b] = a o b - (-1)^{k1 k2} b o a with k = arity - 1
PolyDiffOperator gerstenhaber_bracket(const PolyDiffOperator& a, const PolyDiffOperator& b);

// ad_{m_A}
PolyDiffOperator hochschild_d(const PolyDiffOperator& a);

// Skew evaluator on wedge words of homogeneous polyvector fields.
using SkewEvaluator = std::function<PolyDiffOperator(const std::vector<PolyVectorField>&)>;

// (U_k ^o U_l)(g_1 ^ ... ^ g_n) = 1/(k! l!) sum_{sigma} eps(sigma)
// U_k(g_{s1} ^ ...) o U_l(g_{s(k+1)} ^ ...), with arity-graded Koszul signs
// and the unsigned circle.
PolyDiffOperator wedge_compose(const SkewEvaluator& u_k, int k, const SkewEvaluator& u_l, int l,
                               const std::vector<PolyVectorField>& gammas);

// Equivalent split-sum form: over k-subsets with extraction signs. Used by
// the obstruction assembly; agreement with wedge_compose is tested.
PolyDiffOperator wedge_compose_subsets(const SkewEvaluator& u_k, int k, const SkewEvaluator& u_l, int l,
                                       const std::vector<PolyVectorField>& gammas);

} // namespace feyngraph
