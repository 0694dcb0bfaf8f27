#pragma once

// Sparse multivariate polynomials over Q, affine linear forms, and the
// symmetric integrands attached to each matrix kind.

#include <map>
#include <span>
#include <string>
#include <vector>

#include "detmult/exactnum.hpp"
#include "detmult/polytopes.hpp"
#include "detmult/problem.hpp"

namespace detmult {

using Monomial = std::vector<unsigned>;

class Polynomial {
public:
    using Terms = std::map<Monomial, Rational>;

    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c);
    static Polynomial variable(std::size_t nvars, std::size_t i);

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    /// Coefficient of a monomial (zero when absent).
    Rational coefficient(const Monomial& mono) const;

    /// Adds c * x^mono; zero results are erased.
    void add_term(const Monomial& mono, const Rational& c);

    Rational evaluate(std::span<const Rational> point) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Terms in lexicographic exponent order as "coeff*[e1,...,en]" joined
    /// by " + ". The zero polynomial prints as "0".
    std::string to_string() const;

private:
    std::size_t nvars_;
    Terms terms_;
};

Polynomial pow(const Polynomial& p, unsigned exponent);

/// constant + sum_i coefficients[i] * x_i
struct LinearForm {
    Rational constant;
    std::vector<Rational> coefficients;

    static LinearForm variable(std::size_t nvars, std::size_t i);
    /// x_j - x_i
    static LinearForm difference(std::size_t nvars, std::size_t j, std::size_t i);

    std::size_t nvars() const { return coefficients.size(); }
    Rational evaluate(std::span<const Rational> point) const;
    Polynomial to_polynomial() const;

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

struct PoweredForm {
    LinearForm form;
    unsigned exponent = 1;
};

/// A polynomial kept as a product of powers of linear forms.
using FormProduct = std::vector<PoweredForm>;

Rational evaluate(const FormProduct& factors, std::span<const Rational> point);

/// Fully expanded prod l_i^{e_i}. Throws DomainError when the forms do not
/// share one variable count.
Polynomial product_of_linear_forms(std::span<const PoweredForm> factors);

/// Integrand of a determinantal multiplicity formula on the ordered chamber
/// z_1 <= ... <= z_{m*}, together with m*! undoing that restriction.
struct Integrand {
    FormProduct factors;
    std::size_t nvars = 0;
    Integer symmetrization_factor;

    Polynomial expand() const { return product_of_linear_forms(factors); }
};

/// (z_1...z_m)^monomial_power * prod_{i<j} (z_j - z_i)^difference_power in
/// m variables; zero exponents are omitted.
FormProduct vandermonde_integrand(std::size_t m, unsigned monomial_power, unsigned difference_power);

/// Generic:   (z_1...z_m)^(n-m) * prod_{i<j} (z_j - z_i)^2
/// Symmetric: prod_{i<j} (z_j - z_i)
/// Pfaffian:  (z_1...z_m)^(2 delta) * prod_{i<j} (z_j - z_i)^4, m = floor(n/2)
/// Throws DomainError unless 0 < t < m*.
Integrand build_integrand(const ProblemSpec& spec);

/// Substitutes z_m = t - (z_1 + ... + z_{m-1}), dropping the last variable.
Polynomial eliminate_slice_variable(const Polynomial& p, const Rational& t);
LinearForm eliminate_slice_variable(const LinearForm& l, const Rational& t);
FormProduct eliminate_slice_variable(const FormProduct& f, const Rational& t);

/// Composition with the affine map sending the standard simplex onto `s`
/// (origin -> vertex 0, e_i -> vertex i), plus |det| of its linear part.
struct Pullback {
    Polynomial polynomial;
    Rational jacobian;
};
Pullback affine_pullback(const Polynomial& p, const Simplex& s);
LinearForm affine_pullback(const LinearForm& l, const Simplex& s);

}  // namespace detmult
