#pragma once

#include "feyngraph/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace feyngraph {

// Sparse multivariate polynomial over Rational; exponent vectors have
// fixed length dim.
class Polynomial {
public:
    using Monomial = std::vector<int>;

    explicit Polynomial(int dim = 0) : dim_(dim) {}
    static Polynomial constant(int dim, const Rational& c);
    static Polynomial variable(int dim, int i);  // x_i, 0-based
    static Polynomial monomial(int dim, const Monomial& exps, const Rational& c);

    int dim() const { return dim_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;

    void add_term(const Monomial& exps, const Rational& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& q);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& q) { return a *= q; }
    bool operator==(const Polynomial& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }

    Polynomial derivative(int i) const;
    Polynomial derivative(const Monomial& multi) const;
    // substitute x_i -> subs[i]
    Polynomial substitute(const std::vector<Polynomial>& subs) const;

    std::string str() const;  // deterministic human-readable form

private:
    int dim_;
    std::map<Monomial, Rational> terms_;
};

} // namespace feyngraph
