#include "detmult/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace detmult {

namespace {

// Row counts of length kind.part_bound(); zero counts beyond the bound are
// dropped, nonzero ones rejected.
RowCounts fit_to_kind(const RowCounts& rc, const MatrixKind& kind) {
    const int bound = kind.part_bound();
    std::vector<long> r(static_cast<std::size_t>(bound), 0);
    for (int i = 1; i <= rc.m(); ++i) {
        if (i <= bound) {
            r[static_cast<std::size_t>(i - 1)] = rc.r(i);
        } else if (rc.r(i) != 0) {
            throw DomainError("row length " + std::to_string(i) + " exceeds the bound " +
                              std::to_string(bound) + " of " + kind.describe());
        }
    }
    return RowCounts(std::move(r));
}

long symbolic_order(const Shape& s, int t) {
    long total = 0;
    for (int a : s.parts()) total += std::max(0, a - t + 1);
    return total;
}

}  // namespace

Shape::Shape(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int a : parts_)
        if (a <= 0) throw DomainError("shape parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

long Shape::boxes() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

RowCounts::RowCounts(std::vector<long> counts) : r_(std::move(counts)) {
    for (long v : r_)
        if (v < 0) throw DomainError("row counts must be nonnegative");
}

RowCounts RowCounts::from_shape(const Shape& s, int m) {
    if (m < 0) throw DomainError("negative row bound");
    std::vector<long> r(static_cast<std::size_t>(m), 0);
    for (int a : s.parts()) {
        if (a > m) throw DomainError("shape part " + std::to_string(a) + " exceeds " + std::to_string(m));
        ++r[static_cast<std::size_t>(a - 1)];
    }
    return RowCounts(std::move(r));
}

long RowCounts::B(int i) const {
    long b = 0;
    for (int k = m(); k > m() - i; --k) b += r(k);
    return b;
}

long RowCounts::rows() const { return std::accumulate(r_.begin(), r_.end(), 0L); }

long RowCounts::boxes() const {
    long total = 0;
    for (int i = 1; i <= m(); ++i) total += i * r(i);
    return total;
}

Shape RowCounts::to_shape() const {
    std::vector<int> parts;
    for (int i = m(); i >= 1; --i) parts.insert(parts.end(), static_cast<std::size_t>(r(i)), i);
    return Shape(std::move(parts));
}

Integer W(int n, const RowCounts& rc) {
    const int m = rc.m();
    if (n < m) throw DomainError("alphabet smaller than the number of row-count slots");
    std::vector<long> b(static_cast<std::size_t>(m) + 1, 0);
    for (int i = 1; i <= m; ++i) b[static_cast<std::size_t>(i)] = rc.B(i);

    Integer num = 1;
    for (int i = 1; i <= m; ++i)
        for (int k = 0; k < n - m; ++k) num *= b[static_cast<std::size_t>(i)] + i + k;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            num *= b[static_cast<std::size_t>(j)] - b[static_cast<std::size_t>(i)] + (j - i);
    Integer den = 1;
    for (int i = 1; i <= m; ++i) den *= factorial(n - i);
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw std::logic_error("tableau count formula produced a non-integer");
    return num / den;
}

Integer count_tableaux_bruteforce(const Shape& s, int n) {
    if (s.boxes() > 16 || n > 8) throw ScaleRefused("brute-force tableau count limited to 16 boxes, n <= 8");
    if (n < 0) throw DomainError("negative alphabet size");
    const auto& parts = s.parts();
    std::vector<std::vector<int>> fill;
    for (int a : parts) fill.emplace_back(static_cast<std::size_t>(a), 0);
    Integer count = 0;
    // row-major filling with row-strict and column-weak pruning
    std::function<void(std::size_t, std::size_t)> place = [&](std::size_t row, std::size_t col) {
        if (row == fill.size()) {
            ++count;
            return;
        }
        if (col == fill[row].size()) {
            place(row + 1, 0);
            return;
        }
        int lo = 1;
        if (col > 0) lo = std::max(lo, fill[row][col - 1] + 1);
        if (row > 0) lo = std::max(lo, fill[row - 1][col]);
        for (int v = lo; v <= n; ++v) {
            fill[row][col] = v;
            place(row, col + 1);
        }
    };
    place(0, 0);
    return count;
}

Integer standard_monomial_count(const MatrixKind& kind, const RowCounts& rc) {
    const RowCounts r = fit_to_kind(rc, kind);
    switch (kind.type) {
        case KindType::generic:
            return W(kind.m, r) * W(kind.n, r);
        case KindType::symmetric: {
            std::vector<long> doubled;
            for (long v : r.counts()) doubled.push_back(2 * v);
            return W(kind.n, RowCounts(std::move(doubled)));
        }
        case KindType::pfaffian: {
            std::vector<long> spread;
            for (long v : r.counts()) {
                spread.push_back(0);
                spread.push_back(v);
            }
            if (kind.n % 2 == 1) spread.push_back(0);
            return W(kind.n, RowCounts(std::move(spread)));
        }
    }
    return 0;
}

bool in_symbolic_power(const Shape& s, int t, long r, const MatrixKind& kind) {
    if (s.largest() > kind.part_bound()) return false;
    return symbolic_order(s, t) >= r;
}

bool in_closure_power(const Shape& s, int t, long s_pow, const MatrixKind& kind) {
    int first = 1;
    if (kind.type == KindType::pfaffian) {
        const long half = kind.n / 2;
        first = static_cast<int>(std::max(1L, half - s_pow * (half - t)));
    }
    for (int j = first; j <= t; ++j)
        if (!in_symbolic_power(s, j, (t - j + 1) * s_pow, kind)) return false;
    return true;
}

bool in_diagram_layer(const Shape& s, int t, long s_pow, Layer layer, const MatrixKind& kind) {
    if (s.largest() > kind.part_bound()) return false;
    return in_diagram_layer(RowCounts::from_shape(s, kind.part_bound()), t, s_pow, layer);
}

bool in_diagram_layer(const RowCounts& rc, int t, long s_pow, Layer layer) {
    const long boxes = rc.boxes();
    const long next = s_pow + 1;
    if (boxes >= t * next) return false;
    if (layer == Layer::j_layer && boxes < t * s_pow) return false;
    return rc.rows() <= boxes - (t - 1) * next;
}

}  // namespace detmult
