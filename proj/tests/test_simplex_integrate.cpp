#include "doctest.h"

#include <random>

#include "detmult/simplex_integrate.hpp"

using namespace detmult;

namespace {

Rational q(long a, long b = 1) { return Rational(Integer(a), Integer(b)); }

Rational random_rational(std::mt19937& rng, long lo, long hi) {
    std::uniform_int_distribution<long> num(lo, hi);
    std::uniform_int_distribution<long> den(1, 5);
    return Rational(Integer(num(rng)), Integer(den(rng)));
}

Simplex random_simplex(std::mt19937& rng, std::size_t d) {
    for (;;) {
        std::vector<Point> v;
        for (std::size_t i = 0; i <= d; ++i) {
            Point p;
            for (std::size_t k = 0; k < d; ++k) p.push_back(random_rational(rng, -6, 6));
            v.push_back(p);
        }
        try {
            return Simplex(v);
        } catch (const DomainError&) {
        }
    }
}

FormProduct random_product(std::mt19937& rng, std::size_t d) {
    std::uniform_int_distribution<int> count(1, 6);
    std::uniform_int_distribution<unsigned> expo(0, 4);
    FormProduct f;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) {
        LinearForm l{random_rational(rng, -4, 4), {}};
        for (std::size_t j = 0; j < d; ++j) l.coefficients.push_back(random_rational(rng, -4, 4));
        f.push_back({l, expo(rng)});
    }
    return f;
}

}  // namespace

TEST_CASE("Dirichlet monomials") {
    const unsigned a00[] = {0, 0};
    const unsigned a20[] = {2, 0};
    const unsigned a11[] = {1, 1};
    CHECK(monomial_over_standard_simplex(a00, 2) == q(1, 2));
    CHECK(monomial_over_standard_simplex(a20, 2) == q(1, 12));
    CHECK(monomial_over_standard_simplex(a11, 2) == q(1, 24));
}

TEST_CASE("integrals over single simplices") {
    CHECK(integrate_over_simplex(Polynomial::constant(2, 1), Simplex::standard(2)) == q(1, 2));

    // (1 - 2 z)^2 on [0, 1/2]
    const FormProduct f{{LinearForm{1, {q(-2)}}, 2}};
    const Simplex half({{q(0)}, {q(1, 2)}});
    CHECK(integrate_over_simplex(product_of_linear_forms(f), half) == q(1, 6));
    CHECK(integrate_over_simplex(f, half) == q(1, 6));
    CHECK(linear_forms_over_simplex(f, half) == q(1, 6));

    const FormProduct sq{{LinearForm::difference(2, 1, 0), 2}};
    CHECK(integrate_over_simplex(product_of_linear_forms(sq), Simplex::standard(2)) == q(1, 12));

    const FormProduct z1sq{{LinearForm::variable(2, 0), 2}};
    CHECK(linear_forms_over_simplex(z1sq, Simplex::standard(2)) == q(1, 12));

    const Simplex s = Simplex({{q(1), q(0)}, {q(3), q(1)}, {q(0), q(5, 2)}});
    CHECK(linear_forms_over_simplex({}, s) == s.volume());
    CHECK(integrate_over_simplex(FormProduct{}, s) == s.volume());
}

TEST_CASE("integrals over polytopes") {
    CHECK(integrate_over_polytope(Polynomial::constant(2, 1), unit_cube(2)).value == 1);
    const FormProduct sq{{LinearForm::difference(2, 1, 0), 2}};
    CHECK(integrate_over_polytope(sq, ordered_epsilon_region(2, 1)).value == q(1, 24));
    CHECK(integrate_over_polytope(sq, ordered_epsilon_region(2, 1), Engine::linear_forms).value == q(1, 24));
    const Polynomial p = product_of_linear_forms(sq);
    CHECK(integrate_over_polytope(p, ordered_epsilon_region(2, 1), Engine::linear_forms).value == q(1, 24));
}

TEST_CASE("engines agree on random products over random simplices") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t d = 1 + static_cast<std::size_t>(trial % 4);
        const Simplex s = random_simplex(rng, d);
        const FormProduct f = random_product(rng, d);
        const Rational a = integrate_over_simplex(f, s);
        CHECK(a == linear_forms_over_simplex(f, s));
        CHECK(a == integrate_over_simplex(product_of_linear_forms(f), s));
    }
}

TEST_CASE("linearity and scaling") {
    std::mt19937 rng(99);
    const Simplex s = random_simplex(rng, 3);
    const Polynomial p = product_of_linear_forms(random_product(rng, 3));
    const Polynomial r = product_of_linear_forms(random_product(rng, 3));
    const Rational alpha = q(3, 7);
    const Rational beta = q(-2, 5);
    CHECK(integrate_over_simplex(p * alpha + r * beta, s) ==
          alpha * integrate_over_simplex(p, s) + beta * integrate_over_simplex(r, s));

    // homogeneous degree 4 in 2 variables over a simplex scaled by 3
    const FormProduct h{{LinearForm{0, {q(1), q(2)}}, 3}, {LinearForm{0, {q(-1), q(1)}}, 1}};
    const Simplex base({{q(0), q(0)}, {q(1), q(1, 2)}, {q(1, 3), q(2)}});
    const Simplex scaled({{q(0), q(0)}, {q(3), q(3, 2)}, {q(1), q(6)}});
    CHECK(integrate_over_simplex(h, scaled) == integrate_over_simplex(h, base) * pow(q(3), 6));
}

TEST_CASE("additivity over a triangulation") {
    const HPolytope h = ordered_epsilon_region(4, 2);
    const Triangulation tri = triangulate(h);
    const FormProduct f{{LinearForm::difference(4, 3, 0), 2}, {LinearForm::variable(4, 1), 1}};
    Rational sum;
    for (const auto& s : tri.simplices) sum += integrate_over_simplex(product_of_linear_forms(f), s);
    CHECK(integrate_over_triangulation(f, tri).value == sum);
    CHECK(integrate_over_triangulation(f, tri, Engine::linear_forms).value == sum);
}

TEST_CASE("engine names") {
    CHECK(parse_engine("monomial") == Engine::monomial);
    CHECK(parse_engine("linforms") == Engine::linear_forms);
    CHECK(to_string(Engine::linear_forms) == "linforms");
    CHECK_THROWS_AS(parse_engine("simpson"), DomainError);
}
