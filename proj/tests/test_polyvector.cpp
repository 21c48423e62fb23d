#include "feyngraph/polyvector.hpp"

#include <doctest.h>

#include <random>

using namespace feyngraph;

namespace {

Polynomial rand_poly(std::mt19937& rng, int dim, int max_deg = 2) {
    std::uniform_int_distribution<int> nterms(1, 3), expd(0, max_deg), coeff(-4, 4);
    Polynomial p(dim);
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        std::vector<int> e(dim);
        int budget = max_deg;
        for (int j = 0; j < dim; ++j) {
            e[j] = std::min(budget, expd(rng));
            budget -= e[j];
        }
        p.add_term(e, rat(coeff(rng)));
    }
    return p;
}

PolyVectorField rand_field(std::mt19937& rng, int dim, int arity) {
    PolyVectorField f(dim);
    std::uniform_int_distribution<int> pick(0, dim - 1);
    for (int t = 0; t < 2; ++t) {
        std::vector<int> tuple;
        for (int i = 0; i < arity; ++i) tuple.push_back(pick(rng));
        f.add_term(tuple, rand_poly(rng, dim));
    }
    return f;
}

// independent oracle: arity-1 fields as coefficient arrays, commutator of
// first-order operators [X,Y]^j = sum_i X^i d_i Y^j - Y^i d_i X^j
PolyVectorField vf_commutator(const PolyVectorField& x, const PolyVectorField& y) {
    const int d = x.dim();
    std::vector<Polynomial> xc, yc, rc;
    for (int i = 0; i < d; ++i) {
        xc.push_back(x.coefficient({i}));
        yc.push_back(y.coefficient({i}));
        rc.push_back(Polynomial(d));
    }
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) rc[j] += xc[i] * yc[j].derivative(i) - yc[i] * xc[j].derivative(i);
    PolyVectorField r(d);
    for (int j = 0; j < d; ++j) r.add_term({j}, rc[j]);
    return r;
}

} // namespace

TEST_CASE("bullet on first-order instances") {
    const int d = 2;
    Polynomial x1 = Polynomial::variable(d, 0), x2 = Polynomial::variable(d, 1);

    PolyVectorField a = PolyVectorField::term(d, {0}, x2);  // x2 psi1
    PolyVectorField b = PolyVectorField::term(d, {1}, x1);  // x1 psi2
    CHECK(bullet(a, b) == PolyVectorField::term(d, {1}, x2));
    CHECK(bullet(b, a) == PolyVectorField::term(d, {0}, x1));

    PolyVectorField c = PolyVectorField::term(d, {0, 1}, Polynomial::constant(d, 1));
    CHECK(bullet(c, c).is_zero());
}

TEST_CASE("schouten bracket on vector fields") {
    const int d = 2;
    Polynomial x1 = Polynomial::variable(d, 0), x2 = Polynomial::variable(d, 1);
    PolyVectorField a = PolyVectorField::term(d, {0}, x2);
    PolyVectorField b = PolyVectorField::term(d, {1}, x1);
    PolyVectorField expect =
        PolyVectorField::term(d, {1}, x2) - PolyVectorField::term(d, {0}, x1);
    CHECK(schouten_bracket(a, b) == expect);

    CHECK(schouten_bracket(PolyVectorField::basis(d, 0), PolyVectorField::basis(d, 1)).is_zero());

    PolyVectorField g = PolyVectorField::term(d, {0}, x1);
    CHECK(schouten_bracket(g, g).is_zero());  // odd degree, graded antisymmetry
}

TEST_CASE("bullet antisymmetrization equals the operator commutator") {
    for (int d : {2, 3}) {
        std::mt19937 rng(100 + d);
        for (int trial = 0; trial < 100; ++trial) {
            PolyVectorField x = rand_field(rng, d, 1);
            PolyVectorField y = rand_field(rng, d, 1);
            CHECK(schouten_bracket(x, y) == vf_commutator(x, y));
        }
    }
}

TEST_CASE("graded Jacobi for the Schouten bracket") {
    auto jacobi = [](const PolyVectorField& a, const PolyVectorField& b, const PolyVectorField& c) {
        const int k1 = a.arity() - 1, k2 = b.arity() - 1, k3 = c.arity() - 1;
        PolyVectorField t1 = schouten_bracket(schouten_bracket(a, b), c);
        if ((k1 * k3) % 2) t1 *= Rational(-1);
        PolyVectorField t2 = schouten_bracket(schouten_bracket(b, c), a);
        if ((k2 * k1) % 2) t2 *= Rational(-1);
        PolyVectorField t3 = schouten_bracket(schouten_bracket(c, a), b);
        if ((k3 * k2) % 2) t3 *= Rational(-1);
        return t1 + t2 + t3;
    };
    for (int d : {2, 3}) {
        std::mt19937 rng(300 + d);
        std::uniform_int_distribution<int> ar(1, 3);
        for (int trial = 0; trial < 50; ++trial) {
            PolyVectorField a = rand_field(rng, d, ar(rng));
            PolyVectorField b = rand_field(rng, d, ar(rng));
            PolyVectorField c = rand_field(rng, d, ar(rng));
            if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
            CHECK(jacobi(a, b, c).is_zero());
        }
    }
}

TEST_CASE("bullet is bilinear") {
    std::mt19937 rng(55);
    for (int trial = 0; trial < 40; ++trial) {
        const int d = 2;
        PolyVectorField a = rand_field(rng, d, 2), b = rand_field(rng, d, 1), c = rand_field(rng, d, 1);
        Rational q = rat(3, 7);
        PolyVectorField lhs = bullet(a, b * q + c);
        PolyVectorField rhs = bullet(a, b) * q + bullet(a, c);
        CHECK(lhs == rhs);
        CHECK(bullet(a * q, b) == bullet(a, b) * q);
    }
}

TEST_CASE("signed coefficient pairing") {
    const int d = 3;
    PolyVectorField f = PolyVectorField::term(d, {0, 2}, Polynomial::constant(d, rat(5)));
    CHECK(f.coefficient({0, 2}) == Polynomial::constant(d, rat(5)));
    CHECK(f.coefficient({2, 0}) == Polynomial::constant(d, rat(-5)));
    CHECK(f.coefficient({1, 1}).is_zero());
    CHECK(f.coefficient({0, 0}).is_zero());
}
