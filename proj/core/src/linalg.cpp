#include "ctm/linalg.hpp"

#include "ctm/errors.hpp"

namespace ctm {

namespace {

// reduce to row echelon form in place; returns pivot column per pivot row
std::vector<std::size_t> echelon(QMatrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        const Rat inv = Rat(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t matrix_rank(QMatrix m) { return echelon(m).size(); }

std::vector<QVec> kernel_basis(QMatrix m) {
    if (m.empty()) return {};
    const std::size_t cols = m[0].size();
    auto pivots = echelon(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (std::size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        QVec v(cols, Rat(0));
        v[free_c] = 1;
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            v[pivots[pr]] = -m[pr][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVec> solve_unique(QMatrix m, QVec rhs) {
    if (m.size() != rhs.size()) throw ArgumentError("solve_unique: shape mismatch");
    if (m.empty()) return QVec{};
    const std::size_t cols = m[0].size();
    for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(rhs[i]);
    auto pivots = echelon(m);
    // inconsistent if a pivot lands in the rhs column
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    if (pivots.size() < cols)
        throw ArgumentError("solve_unique: solution is not unique");
    QVec x(cols, Rat(0));
    for (std::size_t pr = 0; pr < pivots.size(); ++pr) x[pivots[pr]] = m[pr][cols];
    return x;
}

std::optional<QMatrix> matrix_inverse(const QMatrix& m) {
    const std::size_t n = m.size();
    QMatrix aug(n, QVec(2 * n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw ArgumentError("matrix_inverse: not square");
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    auto pivots = echelon(aug);
    std::size_t rank_left = 0;
    for (auto c : pivots)
        if (c < n) ++rank_left;
    if (rank_left < n) return std::nullopt;
    QMatrix inv(n, QVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

Rat matrix_det(QMatrix m) {
    const std::size_t n = m.size();
    Rat det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && m[sel][c] == 0) ++sel;
        if (sel == n) return Rat(0);
        if (sel != c) {
            std::swap(m[sel], m[c]);
            det = -det;
        }
        det *= m[c][c];
        const Rat inv = Rat(1) / m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            const Rat f = m[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

LdlResult ldlt(const QMatrix& g) {
    const std::size_t n = g.size();
    LdlResult out;
    QMatrix a = g;
    out.upper = QMatrix(n, QVec(n, Rat(0)));
    out.pivots.assign(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) out.upper[i][i] = 1;
    for (std::size_t k = 0; k < n; ++k) {
        const Rat d = a[k][k];
        if (d <= 0) {
            out.positive_definite = false;
            return out;
        }
        out.pivots[k] = d;
        for (std::size_t j = k + 1; j < n; ++j) out.upper[k][j] = a[k][j] / d;
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] -= a[i][k] * a[k][j] / d;
    }
    out.positive_definite = true;
    return out;
}

} // namespace ctm
