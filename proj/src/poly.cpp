#include "feyngraph/poly.hpp"

#include <numeric>
#include <stdexcept>

namespace feyngraph {

Polynomial Polynomial::constant(int dim, const Rational& c) {
    Polynomial p(dim);
    p.add_term(Monomial(dim, 0), c);
    return p;
}

Polynomial Polynomial::variable(int dim, int i) {
    if (i < 0 || i >= dim) throw std::invalid_argument("variable index out of range");
    Monomial m(dim, 0);
    m[i] = 1;
    return monomial(dim, m, 1);
}

Polynomial Polynomial::monomial(int dim, const Monomial& exps, const Rational& c) {
    Polynomial p(dim);
    p.add_term(exps, c);
    return p;
}

int Polynomial::total_degree() const {
    int d = 0;
    for (const auto& [m, q] : terms_) d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
    return d;
}

void Polynomial::add_term(const Monomial& exps, const Rational& c) {
    if (static_cast<int>(exps.size()) != dim_) throw std::invalid_argument("monomial dimension mismatch");
    for (int e : exps)
        if (e < 0) throw std::invalid_argument("negative exponent");
    if (c == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("polynomial dimension mismatch");
    for (const auto& [m, q] : o.terms_) add_term(m, q);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("polynomial dimension mismatch");
    for (const auto& [m, q] : o.terms_) add_term(m, -q);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& q) {
    if (q == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= q;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("polynomial dimension mismatch");
    Polynomial r(a.dim_);
    for (const auto& [m1, q1] : a.terms_)
        for (const auto& [m2, q2] : b.terms_) {
            Polynomial::Monomial m(a.dim_);
            for (int i = 0; i < a.dim_; ++i) m[i] = m1[i] + m2[i];
            r.add_term(m, q1 * q2);
        }
    return r;
}

Polynomial Polynomial::derivative(int i) const {
    if (i < 0 || i >= dim_) throw std::invalid_argument("derivative index out of range");
    Polynomial r(dim_);
    for (const auto& [m, q] : terms_) {
        if (m[i] == 0) continue;
        Monomial nm = m;
        nm[i] -= 1;
        r.add_term(nm, q * m[i]);
    }
    return r;
}

Polynomial Polynomial::derivative(const Monomial& multi) const {
    if (static_cast<int>(multi.size()) != dim_) throw std::invalid_argument("multi-index dimension mismatch");
    Polynomial r = *this;
    for (int i = 0; i < dim_; ++i)
        for (int k = 0; k < multi[i]; ++k) r = r.derivative(i);
    return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& subs) const {
    if (static_cast<int>(subs.size()) != dim_) throw std::invalid_argument("substitution arity mismatch");
    const int out_dim = subs.empty() ? dim_ : subs[0].dim();
    Polynomial r(out_dim);
    for (const auto& [m, q] : terms_) {
        Polynomial t = Polynomial::constant(out_dim, q);
        for (int i = 0; i < dim_; ++i)
            for (int k = 0; k < m[i]; ++k) t = t * subs[i];
        r += t;
    }
    return r;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, q] : terms_) {
        if (!s.empty()) s += " + ";
        s += rat_str(q);
        for (int i = 0; i < dim_; ++i)
            if (m[i] > 0) {
                s += "*x" + std::to_string(i + 1);
                if (m[i] > 1) s += "^" + std::to_string(m[i]);
            }
    }
    return s;
}

} // namespace feyngraph
