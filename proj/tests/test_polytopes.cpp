#include "doctest.h"

#include <random>

#include "detmult/polytopes.hpp"

using namespace detmult;

namespace {

Rational q(long a, long b = 1) { return Rational(Integer(a), Integer(b)); }

// Number of simplices whose closure contains x.
int containing(const Triangulation& tri, const Point& x) {
    int count = 0;
    for (const auto& s : tri.simplices) {
        // barycentric coordinates by solving the edge system
        const auto& v = s.vertices();
        Matrix a = s.edge_matrix();
        Point rhs;
        for (std::size_t i = 0; i < x.size(); ++i) rhs.push_back(x[i] - v[0][i]);
        const auto lambda = solve_unique(a, rhs);
        REQUIRE(lambda.has_value());
        Rational sum;
        bool inside = true;
        for (const auto& l : *lambda) {
            if (l.sign() < 0) inside = false;
            sum += l;
        }
        if (inside && sum <= Rational(1)) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("ordered slice regions") {
    const HPolytope h = ordered_slice_region(2, 1);
    const auto v = enumerate_vertices(h);
    REQUIRE(v.size() == 2);
    CHECK(v[0] == Point{q(0)});
    CHECK(v[1] == Point{q(1, 2)});
    CHECK(volume(h) == q(1, 2));

    CHECK(volume(ordered_slice_region(3, 1)) * Rational(6) == q(1, 2));
    CHECK(h.contains({q(1, 4)}));
    CHECK_FALSE(h.contains({q(3, 4)}));
    CHECK_THROWS_AS(ordered_slice_region(3, 3), DomainError);
    CHECK_THROWS_AS(ordered_slice_region(1, 1), DomainError);

    const HPolytope h32 = ordered_slice_region(3, 2);
    CHECK(h32.contains({q(1, 2), q(3, 4)}));
    CHECK_FALSE(h32.contains({q(1, 10), q(1, 10)}));
}

TEST_CASE("ordered epsilon regions") {
    CHECK(volume(ordered_epsilon_region(2, 1)) == q(1, 4));
    const HPolytope h = ordered_epsilon_region(3, 2);
    CHECK(h.contains({q(1, 2), q(1, 2), q(1, 2)}));
    CHECK_FALSE(h.contains({q(1, 10), q(1, 5), q(1, 2)}));
    CHECK_THROWS_AS(ordered_epsilon_region(2, 2), DomainError);
}

TEST_CASE("vertex enumeration") {
    CHECK(enumerate_vertices(unit_cube(2)).size() == 4);
    HPolytope empty(1);
    empty.add_lower({q(1)}, q(0));
    empty.add({q(1)}, q(-1));
    CHECK(enumerate_vertices(empty).empty());
    HPolytope ray(1);
    ray.add_lower({q(1)}, q(0));
    CHECK_THROWS_AS(enumerate_vertices(ray), DomainError);

    for (int m = 2; m <= 5; ++m)
        for (int t = 1; t < m; ++t) {
            const HPolytope h = ordered_epsilon_region(m, t);
            for (const auto& v : enumerate_vertices(h)) {
                CHECK(h.contains(v));
                Matrix tight;
                for (const auto& row : h.rows())
                    if (row.tight_at(v)) tight.push_back(row.normal);
                CHECK(rank(tight) == m);
            }
        }
}

TEST_CASE("triangulations") {
    CHECK(triangulate(unit_cube(2)).simplices.size() == 2);
    CHECK(triangulate(unit_cube(3)).volume() == 1);
    CHECK(triangulate(ordered_unit_simplex_region(3)).simplices.size() == 1);

    const HPolytope h = ordered_slice_region(4, 2);
    const Triangulation tri = triangulate(h);
    CHECK(tri.volume() == volume(h));

    HPolytope flat(2);
    flat.add_lower({q(1), q(0)}, q(0));
    flat.add({q(1), q(0)}, q(0));
    flat.add_lower({q(0), q(1)}, q(0));
    flat.add({q(0), q(1)}, q(1));
    CHECK_THROWS_AS(triangulate(flat), DomainError);

    HPolytope none(2);
    none.add_lower({q(1), q(0)}, q(1));
    none.add({q(1), q(0)}, q(0));
    none.add_lower({q(0), q(1)}, q(0));
    none.add({q(0), q(1)}, q(1));
    CHECK_THROWS_AS(triangulate(none), DomainError);
}

TEST_CASE("standard and section simplices") {
    for (std::size_t d = 1; d <= 6; ++d) CHECK(Simplex::standard(d).volume() == Rational(1) / Rational(factorial(static_cast<long>(d))));
    // vertices (1,..,1,0,1,..,1) of the section sum z = m-1, projected away from the last coordinate
    for (int m = 2; m <= 6; ++m) {
        std::vector<Point> verts;
        for (int k = 0; k < m; ++k) {
            Point p;
            for (int i = 0; i + 1 < m; ++i) p.push_back(q(i == k ? 0 : 1));
            verts.push_back(p);
        }
        CHECK(Simplex(verts).volume() == Rational(1) / Rational(factorial(m - 1)));
    }
}

TEST_CASE("random points fall in exactly one simplex interior") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> coord(0, 997);
    for (const auto& [m, t] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}}) {
        const HPolytope h = ordered_epsilon_region(m, t);
        const Triangulation tri = triangulate(h);
        int inside = 0;
        for (int i = 0; i < 5000; ++i) {
            Point x;
            for (int k = 0; k < m; ++k) x.push_back(q(coord(rng), 997));
            const int c = containing(tri, x);
            if (h.contains(x)) {
                ++inside;
                CHECK(c >= 1);
            } else {
                CHECK(c == 0);
            }
        }
        CHECK(inside > 0);
    }
}

TEST_CASE("triangulation json") {
    const std::string js = triangulation_json(triangulate(ordered_slice_region(2, 1)));
    CHECK(js.find("\"simplices\"") != std::string::npos);
    CHECK(js.find("1/2") != std::string::npos);
}
