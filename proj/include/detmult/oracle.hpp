#pragma once

// Brute-force layer lengths from shape enumeration, and the normalized
// estimates that converge to j and epsilon.

#include <optional>
#include <vector>

#include "detmult/exactnum.hpp"
#include "detmult/problem.hpp"
#include "detmult/tableaux.hpp"

namespace detmult {

/// Length of the s-th j-layer or epsilon-layer: the sum of
/// standard_monomial_count over all row-count vectors passing
/// in_diagram_layer. Refuses t(s+1) > 500 or more than 5 variables.
Integer layer_count(const ProblemSpec& spec, long s, Layer layer);

/// (d-1)! * layer_count(s, j_layer) / s^(d-1). s = 0 throws DomainError.
Rational j_estimate(const ProblemSpec& spec, long s);

/// d! * layer_count(s-1, eps_layer) / s^d. s = 0 throws DomainError.
Rational epsilon_estimate(const ProblemSpec& spec, long s);

/// Exact j from the eventual Hilbert polynomial of the j-layers: interpolate
/// layer_count at s0, ..., s0+d-1, require agreement at `extra` further
/// points and return (d-1)! times the leading coefficient. Throws
/// std::runtime_error if the counts are not yet polynomial from s0 on.
Rational j_from_layer_polynomial(const ProblemSpec& spec, long s0, long extra = 4);

struct ConvergenceSample {
    long s = 0;
    Integer count;
    Rational estimate;
    std::optional<Rational> ratio;  // estimate / exact, when exact is nonzero
};

struct ConvergenceReport {
    ProblemSpec spec;
    Layer layer = Layer::j_layer;
    std::optional<Rational> exact;
    std::vector<ConvergenceSample> samples;
};

/// s_values must be strictly increasing and positive. The exact value comes
/// from the integral formulas.
ConvergenceReport convergence_report(const ProblemSpec& spec, const std::vector<long>& s_values,
                                     Layer layer = Layer::j_layer);

}  // namespace detmult
