#include "floorlog/linalg.hpp"

#include <utility>

#include "floorlog/errors.hpp"

namespace floorlog {

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<size_t> rref(QMatrix& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    const size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rat inv = Rat(1) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::optional<QRow> solve_linear(QMatrix a, QRow b) {
    if (a.size() != b.size()) throw parameter_error("solve_linear: shape mismatch");
    if (a.empty()) return QRow{};
    const size_t cols = a[0].size();
    for (size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
    std::vector<size_t> pivots = rref(a);
    // inconsistent iff a pivot lands in the augmented column
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    QRow x(cols, Rat(0));
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][cols];
    return x;
}

std::vector<QRow> nullspace_basis(QMatrix a) {
    std::vector<QRow> basis;
    if (a.empty()) return basis;
    const size_t cols = a[0].size();
    std::vector<size_t> pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        QRow v(cols, Rat(0));
        v[fc] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace floorlog
