#pragma once

// j-multiplicity, epsilon-multiplicity and fiber-cone degree of I_t for the
// three matrix kinds, from integrals over ordered regions. Also the closed
// formula for rational normal scrolls, the Selberg check and the series
// method for t = m-1.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "detmult/exactnum.hpp"
#include "detmult/problem.hpp"
#include "detmult/simplex_integrate.hpp"

namespace detmult {

enum class EngineChoice { monomial, linear_forms, both };

std::string_view to_string(EngineChoice e);
/// "monomial", "linforms" (or "linear_forms"), "both".
EngineChoice parse_engine_choice(std::string_view name);

/// One computed quantity. `engine` names what produced it ("closed-form"
/// when no integral was needed).
struct Evaluation {
    Rational value;
    std::string engine;
    std::size_t simplex_count = 0;
    std::string note;
};

/// Constant c in front of the integrals. Throws DomainError outside the
/// valid range of t.
Rational leading_constant(const ProblemSpec& spec);

/// t <= 0 throws DomainError. If the analytic spread is not maximal the value
/// is 0 with a note. With EngineChoice::both the two engines are compared and
/// a mismatch throws std::runtime_error.
Evaluation evaluate_j(const ProblemSpec& spec, EngineChoice engine = EngineChoice::monomial);
Evaluation evaluate_epsilon(const ProblemSpec& spec, EngineChoice engine = EngineChoice::monomial);
/// For t at or beyond the bound: the generic Grassmannian case and the zero
/// ideal throw OutOfScope; the square kinds at t = m* give 1.
Evaluation evaluate_fiber(const ProblemSpec& spec, EngineChoice engine = EngineChoice::monomial);

Rational j_multiplicity(const ProblemSpec& spec, EngineChoice engine = EngineChoice::monomial);
Rational epsilon_multiplicity(const ProblemSpec& spec, EngineChoice engine = EngineChoice::monomial);
Rational fiber_degree(const ProblemSpec& spec, EngineChoice engine = EngineChoice::monomial);

struct MultiplicityReport {
    ProblemSpec spec;
    Rational j;
    Rational epsilon;
    std::optional<Rational> fiber_degree;  // absent when out of scope
    Rational c;
    bool valid_range = false;
    std::vector<std::string> notes;
};

MultiplicityReport multiplicity_report(const ProblemSpec& spec, EngineChoice engine = EngineChoice::monomial);

/// j-multiplicity of the ideal of the scroll S(a_1, ..., a_d). The input is
/// sorted; it must be nonempty with positive entries.
Integer scroll_j(std::vector<long> a);

struct SelbergCheck {
    Rational lhs;  // m! times the integral over the ordered unit simplex
    Rational rhs;  // closed form
    bool holds() const { return lhs == rhs; }
};

/// Requires 1 <= m <= n.
SelbergCheck selberg_identity(int m, int n, EngineChoice engine = EngineChoice::monomial);

/// j(I_{m-1}) of a generic m x n matrix through the finite sum over pairs of
/// matrices (a, b). Refuses m > 4 or n > 7.
Rational j_series_submaximal(int m, int n);

}  // namespace detmult
