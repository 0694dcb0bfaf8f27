#include "doctest.h"

#include <functional>
#include <random>

#include "detmult/tableaux.hpp"

using namespace detmult;

namespace {

// All row-count vectors of length m with at most `max_boxes` boxes.
void for_each_row_counts(int m, long max_boxes, const std::function<void(const RowCounts&)>& f) {
    std::vector<long> r(static_cast<std::size_t>(m), 0);
    std::function<void(int, long)> rec = [&](int i, long left) {
        if (i == m) {
            f(RowCounts(r));
            return;
        }
        for (long v = 0; v * (i + 1) <= left; ++v) {
            r[static_cast<std::size_t>(i)] = v;
            rec(i + 1, left - v * (i + 1));
        }
        r[static_cast<std::size_t>(i)] = 0;
    };
    rec(0, max_boxes);
}

}  // namespace

TEST_CASE("shapes and row counts") {
    const Shape s({1, 3, 2, 3});
    CHECK(s.parts() == std::vector<int>{3, 3, 2, 1});
    CHECK(s.boxes() == 9);
    CHECK_THROWS_AS(Shape({2, 0}), DomainError);
    const RowCounts rc = RowCounts::from_shape(s, 4);
    CHECK(rc.counts() == std::vector<long>{1, 1, 2, 0});
    CHECK(rc.B(1) == 0);
    CHECK(rc.B(2) == 2);
    CHECK(rc.B(4) == 4);
    CHECK(rc.to_shape() == s);
    CHECK(rc.boxes() == 9);
    CHECK_THROWS_AS(RowCounts::from_shape(s, 2), DomainError);
}

TEST_CASE("tableau counts") {
    CHECK(W(2, RowCounts({1, 0})) == 2);
    CHECK(W(2, RowCounts({0, 1})) == 1);
    CHECK(W(2, RowCounts({2, 0})) == 3);
    CHECK(W(4, RowCounts({0, 0, 0})) == 1);
    CHECK_THROWS_AS(W(1, RowCounts({1, 0})), DomainError);

    CHECK(count_tableaux_bruteforce(Shape({1}), 3) == 3);
    CHECK(count_tableaux_bruteforce(Shape({2}), 4) == 6);
    CHECK(count_tableaux_bruteforce(Shape({2, 1}), 3) == 8);
    CHECK_THROWS_AS(count_tableaux_bruteforce(Shape({9, 8}), 3), ScaleRefused);
}

TEST_CASE("product formula matches brute force on all small shapes") {
    int checked = 0;
    for (int n = 1; n <= 5; ++n)
        for (int m = 1; m <= n; ++m)
            for_each_row_counts(m, 10, [&](const RowCounts& rc) {
                CHECK(W(n, rc) == count_tableaux_bruteforce(rc.to_shape(), n));
                ++checked;
            });
    CHECK(checked == 701);
}

TEST_CASE("product formula matches brute force on random larger shapes") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 5 + trial % 4;
        const int m = 2 + trial % (n - 1);
        std::vector<long> r(static_cast<std::size_t>(m), 0);
        long boxes = 0;
        std::uniform_int_distribution<int> pick(1, m);
        while (boxes < 11) {
            const int len = pick(rng);
            if (boxes + len > 16) break;
            ++r[static_cast<std::size_t>(len - 1)];
            boxes += len;
        }
        const RowCounts rc(r);
        CHECK(W(n, rc) == count_tableaux_bruteforce(rc.to_shape(), n));
    }
}

TEST_CASE("standard monomial counts") {
    const MatrixKind g = MatrixKind::generic(2, 2);
    CHECK(standard_monomial_count(g, RowCounts({1, 0})) == 4);
    CHECK(standard_monomial_count(g, RowCounts({2, 0})) == 9);
    CHECK(standard_monomial_count(g, RowCounts({0, 1})) == 1);
    CHECK_THROWS_AS(standard_monomial_count(g, RowCounts({0, 0, 1})), DomainError);

    // degree-1 standard monomials are the variables
    CHECK(standard_monomial_count(MatrixKind::generic(3, 5), RowCounts({1, 0, 0})) == 15);
    CHECK(standard_monomial_count(MatrixKind::symmetric(4), RowCounts({1, 0, 0, 0})) == 10);
    CHECK(standard_monomial_count(MatrixKind::pfaffian(6), RowCounts({1, 0, 0})) == 15);
    CHECK(standard_monomial_count(MatrixKind::pfaffian(7), RowCounts({1, 0, 0})) == 21);
    // monomials of degree 2 in the 6 entries of a 3x3 symmetric matrix: 21 = 15 from (1,1) + 6 from (2)
    const MatrixKind s3 = MatrixKind::symmetric(3);
    CHECK(standard_monomial_count(s3, RowCounts({2, 0, 0})) + standard_monomial_count(s3, RowCounts({0, 1, 0})) == 21);
}

TEST_CASE("standard monomials of each degree span the polynomial ring") {
    for (const MatrixKind k : {MatrixKind::generic(1, 3), MatrixKind::generic(2, 3), MatrixKind::generic(3, 4),
                               MatrixKind::symmetric(2), MatrixKind::symmetric(3), MatrixKind::symmetric(4),
                               MatrixKind::pfaffian(4), MatrixKind::pfaffian(5), MatrixKind::pfaffian(6),
                               MatrixKind::pfaffian(7)}) {
        const long vars = k.ring_dimension();
        std::vector<Integer> by_degree(7);
        for_each_row_counts(k.part_bound(), 6, [&](const RowCounts& rc) {
            by_degree[static_cast<std::size_t>(rc.boxes())] += standard_monomial_count(k, rc);
        });
        for (long deg = 0; deg <= 6; ++deg) CHECK(by_degree[static_cast<std::size_t>(deg)] == binomial(vars + deg - 1, deg));
    }
}

TEST_CASE("symbolic and closure powers") {
    const MatrixKind g3 = MatrixKind::generic(3, 3);
    CHECK(in_symbolic_power(Shape({2}), 2, 1, g3));
    CHECK_FALSE(in_symbolic_power(Shape({1}), 2, 1, g3));
    CHECK(in_symbolic_power(Shape({3}), 2, 2, g3));
    CHECK_FALSE(in_symbolic_power(Shape({4}), 2, 1, g3));

    CHECK_FALSE(in_closure_power(Shape({3}), 2, 2, g3));
    CHECK(in_closure_power(Shape({2}), 2, 1, g3));

    for (const MatrixKind k : {g3, MatrixKind::symmetric(4), MatrixKind::pfaffian(6)})
        for (int t = 1; t <= 2; ++t)
            for (int s = 1; s <= 4; ++s) CHECK(in_closure_power(Shape(std::vector<int>(static_cast<std::size_t>(s), t)), t, s, k));

    // monotone in r; t = 1 is the maximal ideal
    for_each_row_counts(3, 9, [&](const RowCounts& rc) {
        const Shape s = rc.to_shape();
        for (long r = 1; r <= 6; ++r)
            if (in_symbolic_power(s, 2, r, g3)) CHECK(in_symbolic_power(s, 2, r - 1, g3));
        for (long sp = 0; sp <= 6; ++sp) CHECK(in_closure_power(s, 1, sp, g3) == (s.boxes() >= sp));
    });
}

TEST_CASE("diagram layers") {
    const MatrixKind g3 = MatrixKind::generic(3, 3);
    CHECK_FALSE(in_diagram_layer(Shape({1}), 2, 0, Layer::eps_layer, g3));
    CHECK(in_diagram_layer(Shape({3}), 2, 1, Layer::eps_layer, g3));
    CHECK_FALSE(in_diagram_layer(Shape({2, 2}), 2, 2, Layer::j_layer, g3));
    CHECK_FALSE(in_diagram_layer(Shape({4}), 2, 3, Layer::eps_layer, g3));

    // j-layer membership at power s implies epsilon-layer membership, and
    // the layers at different powers do not overlap
    for_each_row_counts(3, 14, [&](const RowCounts& rc) {
        for (long s = 0; s <= 5; ++s) {
            if (in_diagram_layer(rc, 2, s, Layer::j_layer)) {
                CHECK(in_diagram_layer(rc, 2, s, Layer::eps_layer));
                CHECK_FALSE(in_diagram_layer(rc, 2, s + 1, Layer::j_layer));
            }
        }
    });
}
