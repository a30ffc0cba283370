#include "msurf/exactalg/linalg.hpp"

#include <stdexcept>

namespace msurf {

FieldMatrix identity_matrix(std::size_t n) {
    FieldMatrix m(n, std::vector<FieldElement>(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

FieldMatrix mat_mul(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.empty()) return {};
    const std::size_t inner = b.size();
    if (a[0].size() != inner) throw std::invalid_argument("matrix shapes do not match");
    const std::size_t cols = inner == 0 ? 0 : b[0].size();
    FieldMatrix r(a.size(), std::vector<FieldElement>(cols));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < cols; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

std::vector<FieldElement> mat_vec(const FieldMatrix& a, const std::vector<FieldElement>& v) {
    std::vector<FieldElement> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != v.size()) throw std::invalid_argument("matrix and vector shapes do not match");
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    }
    return r;
}

namespace {

// Row echelon form in place; returns pivot columns and the sign of the row
// permutation.
std::vector<std::size_t> echelon(FieldMatrix& m, std::size_t ncols, int* sign, bool reduced) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    if (sign) *sign = 1;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col].is_zero()) ++p;
        if (p == m.size()) continue;
        if (p != row) {
            std::swap(m[p], m[row]);
            if (sign) *sign = -*sign;
        }
        const FieldElement inv = m[row][col].inverse();
        const std::size_t start = reduced ? 0 : row + 1;
        if (reduced) {
            for (std::size_t j = col; j < ncols; ++j) m[row][j] *= inv;
        }
        for (std::size_t r = start; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            const FieldElement f = reduced ? m[r][col] : m[r][col] * inv;
            for (std::size_t j = col; j < ncols; ++j) m[r][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

FieldElement determinant(FieldMatrix m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    int sign = 1;
    const auto pivots = echelon(m, n, &sign, false);
    if (pivots.size() < n) return FieldElement{};
    FieldElement d(sign);
    for (std::size_t i = 0; i < n; ++i) d *= m[i][i];
    return d;
}

std::size_t rank(FieldMatrix m) {
    if (m.empty()) return 0;
    const std::size_t ncols = m[0].size();
    return echelon(m, ncols, nullptr, false).size();
}

std::optional<FieldMatrix> inverse(const FieldMatrix& m) {
    const std::size_t n = m.size();
    FieldMatrix aug(n, std::vector<FieldElement>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::invalid_argument("inverse of a non-square matrix");
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    const auto pivots = echelon(aug, 2 * n, nullptr, true);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    FieldMatrix r(n, std::vector<FieldElement>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r[i][j] = aug[i][n + j];
    return r;
}

std::vector<std::vector<FieldElement>> nullspace(FieldMatrix m, std::size_t ncols) {
    const auto pivots = echelon(m, ncols, nullptr, true);
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<FieldElement>> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldElement> v(ncols);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<FieldElement> projective_normalize(std::vector<FieldElement> v) {
    for (const auto& x : v) {
        if (!x.is_zero()) {
            const FieldElement inv = x.inverse();
            for (auto& y : v) y *= inv;
            return v;
        }
    }
    return v;
}

bool projectively_equal(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
    if (a.size() != b.size()) return false;
    bool nz_a = false, nz_b = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        nz_a = nz_a || !a[i].is_zero();
        nz_b = nz_b || !b[i].is_zero();
    }
    if (!nz_a || !nz_b) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) return false;
    return true;
}

}  // namespace msurf
