#include "feyngraph/linalg.hpp"

namespace feyngraph {

long rank_exact(std::vector<std::vector<Rational>> mat) {
    if (mat.empty() || mat[0].empty()) return 0;
    const size_t rows = mat.size(), cols = mat[0].size();

    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (size_t i = 0; i < rows; ++i) {
        mpz_class l = 1;
        for (size_t j = 0; j < cols; ++j) l = lcm(l, mat[i][j].get_den());
        for (size_t j = 0; j < cols; ++j) {
            Rational v = mat[i][j] * Rational(l);
            a[i][j] = v.get_num();
        }
    }

    size_t r = 0;
    mpz_class prev = 1;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) std::swap(a[p], a[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j)
                a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<long>(r);
}

std::vector<std::vector<Rational>> mat_mul(const std::vector<std::vector<Rational>>& a,
                                           const std::vector<std::vector<Rational>>& b) {
    const size_t n = a.size();
    const size_t k = n ? a[0].size() : 0;
    const size_t m = b.empty() ? 0 : b[0].size();
    std::vector<std::vector<Rational>> r(n, std::vector<Rational>(m, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
        }
    return r;
}

bool mat_is_zero(const std::vector<std::vector<Rational>>& a) {
    for (const auto& row : a)
        for (const auto& v : row)
            if (v != 0) return false;
    return true;
}

} // namespace feyngraph
