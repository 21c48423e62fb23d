#pragma once

#include "feyngraph/poly.hpp"

#include <map>
#include <vector>

namespace feyngraph {

// Koszul sign of reordering graded symbols: result[p] = input[perm[p]],
// degrees indexed like the input.
int koszul_sign(const std::vector<int>& perm, const std::vector<int>& degrees);

// Skew multivector with polynomial coefficients: sparse map from strictly
// increasing psi-index tuples (0-based) to coefficients. The coefficient
// pairing on an arbitrary tuple is signed, zero on repeats.
class PolyVectorField {
public:
    using Tuple = std::vector<int>;

    explicit PolyVectorField(int dim = 0) : dim_(dim) {}
    static PolyVectorField term(int dim, const Tuple& psis, const Polynomial& coeff);
    // basis vector field psi_i with constant coefficient 1
    static PolyVectorField basis(int dim, int i);

    int dim() const { return dim_; }
    const std::map<Tuple, Polynomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // arity if homogeneous, -1 if mixed, 0 for the zero field
    int arity() const;

    void add_term(const Tuple& psis, const Polynomial& coeff);  // tuple arbitrary; sorted with sign
    Polynomial coefficient(const Tuple& psis) const;            // signed; 0 on repeats

    PolyVectorField& operator+=(const PolyVectorField& o);
    PolyVectorField& operator-=(const PolyVectorField& o);
    PolyVectorField& operator*=(const Rational& q);
    friend PolyVectorField operator+(PolyVectorField a, const PolyVectorField& b) { return a += b; }
    friend PolyVectorField operator-(PolyVectorField a, const PolyVectorField& b) { return a -= b; }
    friend PolyVectorField operator*(PolyVectorField a, const Rational& q) { return a *= q; }
    // exterior product
    friend PolyVectorField operator*(const PolyVectorField& a, const PolyVectorField& b);
    bool operator==(const PolyVectorField& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }

    // left odd derivative d/d psi_i
    PolyVectorField psi_derivative(int i) const;
    // derivative of the polynomial coefficients
    PolyVectorField x_derivative(int i) const;

    // homogeneous pieces by arity
    std::map<int, PolyVectorField> homogeneous_pieces() const;

private:
    int dim_;
    std::map<Tuple, Polynomial> terms_;
};

// gamma1 . gamma2 = sum_i (d gamma1 / d psi_i)(d gamma2 / d x_i)
PolyVectorField bullet(const PolyVectorField& a, const PolyVectorField& b);

// [a,b] = a.b - (-1)^{(k1-1)(k2-1)} b.a, extended bilinearly over
// homogeneous pieces.
PolyVectorField schouten_bracket(const PolyVectorField& a, const PolyVectorField& b);

} // namespace feyngraph
