#include "isoder/linalg.hpp"

#include <stdexcept>

namespace isoder {

AffineSolutionSet solve_linear(std::vector<std::vector<Rat>> A, std::vector<Rat> rhs) {
    const size_t rows = A.size();
    if (rhs.size() != rows) throw std::invalid_argument("rhs size does not match row count");
    size_t cols = 0;
    for (const auto& row : A) {
        if (cols == 0) cols = row.size();
        if (row.size() != cols) throw std::invalid_argument("ragged coefficient matrix");
    }
    if (rows > 0 && cols == 0) {
        // No unknowns: consistent iff rhs is identically zero.
        AffineSolutionSet s;
        s.consistent = true;
        for (const auto& b : rhs)
            if (b != 0) { s.consistent = false; break; }
        return s;
    }

    // Reduced row echelon form of [A | rhs], pivots left to right.
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && A[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(A[sel], A[r]);
        std::swap(rhs[sel], rhs[r]);
        const Rat inv = Rat(1) / A[r][c];
        for (size_t j = c; j < cols; ++j) A[r][j] *= inv;
        rhs[r] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][c] == 0) continue;
            const Rat factor = A[i][c];
            for (size_t j = c; j < cols; ++j) A[i][j] -= factor * A[r][j];
            rhs[i] -= factor * rhs[r];
        }
        pivot_col.push_back(c);
        ++r;
    }

    AffineSolutionSet s;
    for (size_t i = r; i < rows; ++i)
        if (rhs[i] != 0) return s;                   // 0 = nonzero: inconsistent
    s.consistent = true;

    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivot_col) is_pivot[c] = true;

    s.particular.assign(cols, Rat(0));
    for (size_t i = 0; i < pivot_col.size(); ++i) s.particular[pivot_col[i]] = rhs[i];

    for (size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[c] = Rat(1);
        for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -A[i][c];
        s.nullspace.push_back(std::move(v));
    }
    return s;
}

} // namespace isoder
