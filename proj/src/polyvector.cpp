#include "feyngraph/polyvector.hpp"

#include <algorithm>
#include <stdexcept>

namespace feyngraph {

int koszul_sign(const std::vector<int>& perm, const std::vector<int>& degrees) {
    int sign = 1;
    for (size_t p = 0; p < perm.size(); ++p)
        for (size_t q = p + 1; q < perm.size(); ++q)
            if (perm[p] > perm[q] && (degrees[perm[p]] * degrees[perm[q]]) % 2) sign = -sign;
    return sign;
}

PolyVectorField PolyVectorField::term(int dim, const Tuple& psis, const Polynomial& coeff) {
    PolyVectorField f(dim);
    f.add_term(psis, coeff);
    return f;
}

PolyVectorField PolyVectorField::basis(int dim, int i) {
    return term(dim, {i}, Polynomial::constant(dim, 1));
}

int PolyVectorField::arity() const {
    if (terms_.empty()) return 0;
    int k = static_cast<int>(terms_.begin()->first.size());
    for (const auto& [t, p] : terms_)
        if (static_cast<int>(t.size()) != k) return -1;
    return k;
}

void PolyVectorField::add_term(const Tuple& psis, const Polynomial& coeff) {
    if (coeff.dim() != dim_) throw std::invalid_argument("coefficient dimension mismatch");
    for (int i : psis)
        if (i < 0 || i >= dim_) throw std::invalid_argument("psi index out of range");
    // sort with sign; repeats kill the term
    Tuple s = psis;
    int sign = 1;
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j) {
            if (s[i] == s[j]) return;
            if (s[i] > s[j]) {
                std::swap(s[i], s[j]);
                sign = -sign;
            }
        }
    Polynomial c = coeff;
    if (sign < 0) c *= Rational(-1);
    auto it = terms_.find(s);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(std::move(s), std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial PolyVectorField::coefficient(const Tuple& psis) const {
    Tuple s = psis;
    int sign = 1;
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j) {
            if (s[i] == s[j]) return Polynomial(dim_);
            if (s[i] > s[j]) {
                std::swap(s[i], s[j]);
                sign = -sign;
            }
        }
    auto it = terms_.find(s);
    if (it == terms_.end()) return Polynomial(dim_);
    Polynomial c = it->second;
    if (sign < 0) c *= Rational(-1);
    return c;
}

PolyVectorField& PolyVectorField::operator+=(const PolyVectorField& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
    for (const auto& [t, p] : o.terms_) add_term(t, p);
    return *this;
}

PolyVectorField& PolyVectorField::operator-=(const PolyVectorField& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
    for (const auto& [t, p] : o.terms_) {
        Polynomial np = p;
        np *= Rational(-1);
        add_term(t, np);
    }
    return *this;
}

PolyVectorField& PolyVectorField::operator*=(const Rational& q) {
    if (q == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [t, p] : terms_) p *= q;
    return *this;
}

PolyVectorField operator*(const PolyVectorField& a, const PolyVectorField& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("dimension mismatch");
    PolyVectorField r(a.dim_);
    for (const auto& [t1, p1] : a.terms_)
        for (const auto& [t2, p2] : b.terms_) {
            PolyVectorField::Tuple t = t1;
            t.insert(t.end(), t2.begin(), t2.end());
            r.add_term(t, p1 * p2);
        }
    return r;
}

PolyVectorField PolyVectorField::psi_derivative(int i) const {
    PolyVectorField r(dim_);
    for (const auto& [t, p] : terms_) {
        for (size_t pos = 0; pos < t.size(); ++pos)
            if (t[pos] == i) {
                Tuple nt;
                for (size_t j = 0; j < t.size(); ++j)
                    if (j != pos) nt.push_back(t[j]);
                Polynomial c = p;
                if (pos % 2) c *= Rational(-1);  // left derivative
                r.add_term(nt, c);
                break;
            }
    }
    return r;
}

PolyVectorField PolyVectorField::x_derivative(int i) const {
    PolyVectorField r(dim_);
    for (const auto& [t, p] : terms_) r.add_term(t, p.derivative(i));
    return r;
}

std::map<int, PolyVectorField> PolyVectorField::homogeneous_pieces() const {
    std::map<int, PolyVectorField> pieces;
    for (const auto& [t, p] : terms_) {
        auto [it, fresh] = pieces.try_emplace(static_cast<int>(t.size()), PolyVectorField(dim_));
        it->second.add_term(t, p);
    }
    return pieces;
}

PolyVectorField bullet(const PolyVectorField& a, const PolyVectorField& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
    PolyVectorField r(a.dim());
    for (int i = 0; i < a.dim(); ++i) r += a.psi_derivative(i) * b.x_derivative(i);
    return r;
}

PolyVectorField schouten_bracket(const PolyVectorField& a, const PolyVectorField& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
    // Shifted-degree antisymmetrization of the twisted pre-Lie product
    // (-1)^{k-1} a.b; the plain (-1)^{(k1-1)(k2-1)} form fails Jacobi for
    // mixed arities with the left odd derivative.
    PolyVectorField r(a.dim());
    for (const auto& [k1, pa] : a.homogeneous_pieces())
        for (const auto& [k2, pb] : b.homogeneous_pieces()) {
            PolyVectorField fwd = bullet(pa, pb);
            if ((k1 - 1) % 2) fwd *= Rational(-1);
            r += fwd;
            PolyVectorField rev = bullet(pb, pa);
            if ((k1 * (k2 - 1)) % 2 == 0) rev *= Rational(-1);
            r += rev;
        }
    return r;
}

} // namespace feyngraph
