#pragma once

// Exact integration of polynomials over simplices and triangulated
// polytopes. Two engines are provided and are kept independent of each other
// so that they can cross-check:
//
//  * monomial: pull the integrand back to the standard simplex, expand it in
//    monomials and integrate term by term with the Dirichlet formula
//        int_{x >= 0, sum x <= 1} x^a dx = prod(a_i!) / (d + |a|)!
//  * linear_forms: integrate prod l_j^{M_j} from the values of the l_j at the
//    vertices, summing over the ways of distributing each exponent M_j over
//    the d+1 vertices.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "detmult/exactnum.hpp"
#include "detmult/polyforms.hpp"
#include "detmult/polytopes.hpp"

namespace detmult {

enum class Engine { monomial, linear_forms };

std::string_view to_string(Engine e);
Engine parse_engine(std::string_view name);

struct IntegralResult {
    Rational value;
    Engine engine = Engine::monomial;
    std::size_t simplex_count = 0;
};

/// prod(a_i!) / (d + sum a_i)!, the integral of x^a over the standard
/// d-simplex. `exponents` must have length d.
Rational monomial_over_standard_simplex(std::span<const unsigned> exponents, std::size_t d);

/// Arbitrary sparse polynomial, from the vertex coordinates without a
/// change of variables.
Rational integrate_over_simplex(const Polynomial& p, const Simplex& s);
/// Monomial engine for a product of linear forms; the forms are pulled back
/// before expansion.
Rational integrate_over_simplex(const FormProduct& factors, const Simplex& s);

/// Linear-forms engine.
Rational linear_forms_over_simplex(const FormProduct& factors, const Simplex& s);

IntegralResult integrate_over_polytope(const Polynomial& p, const HPolytope& h,
                                       Engine engine = Engine::monomial);
IntegralResult integrate_over_polytope(const FormProduct& factors, const HPolytope& h,
                                       Engine engine = Engine::monomial);
IntegralResult integrate_over_triangulation(const FormProduct& factors, const Triangulation& tri,
                                            Engine engine = Engine::monomial);

}  // namespace detmult
