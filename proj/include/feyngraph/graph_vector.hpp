#pragma once

#include "feyngraph/graph.hpp"
#include "feyngraph/rational.hpp"

#include <map>
#include <vector>

namespace feyngraph {

// Element of H: finite rational combination of canonical orientation
// classes. Degenerate (sign-zero) classes never enter; zero coefficients
// are pruned.
class GraphVector {
public:
    GraphVector() = default;

    static GraphVector unit() { return of(GraphTerm{empty_graph(), 1}); }
    static GraphVector of(const GraphTerm& t, const Rational& coeff = 1);

    void add(const GraphTerm& t, const Rational& coeff);          // coeff * sign(t) * [graph]
    void add_canonical(const DirectedGraph& g, const Rational& coeff);

    const std::map<DirectedGraph, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const DirectedGraph& g) const;

    GraphVector& operator+=(const GraphVector& o);
    GraphVector& operator-=(const GraphVector& o);
    GraphVector& operator*=(const Rational& q);
    friend GraphVector operator+(GraphVector a, const GraphVector& b) { return a += b; }
    friend GraphVector operator-(GraphVector a, const GraphVector& b) { return a -= b; }
    friend GraphVector operator*(GraphVector a, const Rational& q) { return a *= q; }
    bool operator==(const GraphVector& o) const { return terms_ == o.terms_; }

private:
    std::map<DirectedGraph, Rational> terms_;
};

// Rational combination of tensor words of canonical graphs (fixed or mixed
// arity; the Hopf checks use arity 2 and 3).
class TensorVector {
public:
    using Word = std::vector<DirectedGraph>;

    TensorVector() = default;
    void add(const Word& w, const Rational& coeff);
    const std::map<Word, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    TensorVector& operator+=(const TensorVector& o);
    TensorVector& operator-=(const TensorVector& o);
    TensorVector& operator*=(const Rational& q);
    friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
    friend TensorVector operator-(TensorVector a, const TensorVector& b) { return a -= b; }
    bool operator==(const TensorVector& o) const { return terms_ == o.terms_; }

private:
    std::map<Word, Rational> terms_;
};

// Disjoint union with concatenated labelings, bilinear.
GraphVector product(const GraphVector& a, const GraphVector& b);

GraphVector differential(const GraphVector& a, const ClassPredicate& c);

// Delta a = a (x) 1 + 1 (x) a + Delta_b a
TensorVector coproduct(const GraphVector& a, const ClassPredicate& c);
TensorVector reduced_coproduct(const GraphVector& a, const ClassPredicate& c);

Rational counit(const GraphVector& a);

GraphVector antipode(const GraphVector& a, const ClassPredicate& c);

// a (x) b
TensorVector tensor_of(const GraphVector& a, const GraphVector& b);
// Componentwise product with the Koszul sign (-1)^{deg a2 * deg b1} on
// (a1 (x) a2)(b1 (x) b2); degrees are edge counts.
TensorVector tensor_product(const TensorVector& a, const TensorVector& b);
// Apply d to tensor factor `slot` with a Koszul prefix sign over the edge
// degrees of the letters to its left.
TensorVector tensor_differential_factor(const TensorVector& a, int slot, const ClassPredicate& c);
// Apply the full coproduct to factor `slot` (word length grows by one); the
// coproduct has even degree, no Koszul prefix.
TensorVector tensor_coproduct_factor(const TensorVector& a, int slot, const ClassPredicate& c);
// Apply the counit to factor `slot`, contracting the word.
TensorVector tensor_counit_factor(const TensorVector& a, int slot);

} // namespace feyngraph
