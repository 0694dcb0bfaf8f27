#include "detmult/linalg.hpp"

#include <utility>

namespace detmult {

namespace {

// Reduces `a` to row echelon form in place; returns the rank and the sign of
// the row permutation used.
std::pair<int, int> eliminate(Matrix& a, std::size_t cols) {
    int sign = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < a.size() && a[pivot][col].is_zero()) ++pivot;
        if (pivot == a.size()) continue;
        if (pivot != row) {
            std::swap(a[pivot], a[row]);
            sign = -sign;
        }
        for (std::size_t r = row + 1; r < a.size(); ++r) {
            if (a[r][col].is_zero()) continue;
            const Rational f = a[r][col] / a[row][col];
            for (std::size_t c = col; c < a[r].size(); ++c) a[r][c] -= f * a[row][c];
        }
        ++row;
    }
    return {static_cast<int>(row), sign};
}

}  // namespace

Rational determinant(Matrix a) {
    const std::size_t n = a.size();
    const auto [r, sign] = eliminate(a, n);
    if (static_cast<std::size_t>(r) < n) return 0;
    Rational det = sign;
    for (std::size_t i = 0; i < n; ++i) det *= a[i][i];
    return det;
}

int rank(Matrix a) {
    if (a.empty()) return 0;
    return eliminate(a, a.front().size()).first;
}

std::optional<Point> solve_unique(Matrix a, Point b) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
    const auto [r, sign] = eliminate(a, n);
    (void)sign;
    if (static_cast<std::size_t>(r) < n) return std::nullopt;
    Point x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc = a[i][n];
        for (std::size_t j = i + 1; j < n; ++j) acc -= a[i][j] * x[j];
        x[i] = acc / a[i][i];
    }
    return x;
}

}  // namespace detmult
