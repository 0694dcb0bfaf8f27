#include "detmult/oracle.hpp"

#include <stdexcept>

#include "detmult/errors.hpp"
#include "detmult/multiplicity.hpp"

namespace detmult {

namespace {

void check_scale(const ProblemSpec& spec, long s) {
    if (s < 0) throw DomainError("layer index must be nonnegative");
    if (spec.t <= 0) throw DomainError("t must be positive");
    if (spec.t * (s + 1) > 500 || spec.variable_count() > 5)
        throw ScaleRefused("oracle enumeration limited to t(s+1) <= 500 and at most 5 variables");
}

Rational normalize(const Integer& count, long d, long s) {
    return Rational(factorial(d) * count, ipow(Integer(s), static_cast<unsigned>(d)));
}

}  // namespace

Integer layer_count(const ProblemSpec& spec, long s, Layer layer) {
    check_scale(spec, s);
    const int m = spec.variable_count();
    const long hi = spec.t * (s + 1);  // boxes < hi
    const long lo = layer == Layer::j_layer ? spec.t * s : 0;
    std::vector<long> r(static_cast<std::size_t>(m), 0);
    Integer total = 0;

    // r_m, ..., r_2 by recursion; r_1 fills the remaining box range.
    auto rec = [&](auto&& self, int i, long boxes) -> void {
        if (i == 1) {
            for (long r1 = std::max(0L, lo - boxes); boxes + r1 < hi; ++r1) {
                r[0] = r1;
                const RowCounts rc(r);
                if (in_diagram_layer(rc, spec.t, s, layer)) total += standard_monomial_count(spec.kind, rc);
            }
            return;
        }
        for (long v = 0; boxes + i * v < hi; ++v) {
            r[static_cast<std::size_t>(i - 1)] = v;
            self(self, i - 1, boxes + i * v);
        }
        r[static_cast<std::size_t>(i - 1)] = 0;
    };
    rec(rec, m, 0);
    return total;
}

Rational j_estimate(const ProblemSpec& spec, long s) {
    if (s <= 0) throw DomainError("j estimate needs s >= 1");
    return normalize(layer_count(spec, s, Layer::j_layer), spec.ring_dimension() - 1, s);
}

Rational epsilon_estimate(const ProblemSpec& spec, long s) {
    if (s <= 0) throw DomainError("epsilon estimate needs s >= 1");
    return normalize(layer_count(spec, s - 1, Layer::eps_layer), spec.ring_dimension(), s);
}

Rational j_from_layer_polynomial(const ProblemSpec& spec, long s0, long extra) {
    if (s0 < 0 || extra < 1) throw DomainError("need s0 >= 0 and at least one check point");
    const long deg = spec.ring_dimension() - 1;
    const auto npts = static_cast<std::size_t>(deg + 1);
    std::vector<long> xs;
    std::vector<Rational> c;  // Newton divided differences
    for (long s = s0; s < s0 + deg + 1 + extra; ++s) {
        xs.push_back(s);
        c.emplace_back(layer_count(spec, s, Layer::j_layer));
    }
    std::vector<Rational> check(c.begin() + static_cast<long>(npts), c.end());
    c.resize(npts);
    for (std::size_t j = 1; j < npts; ++j)
        for (std::size_t i = npts - 1; i >= j; --i) c[i] = (c[i] - c[i - 1]) / Rational(xs[i] - xs[i - j]);
    for (std::size_t k = 0; k < check.size(); ++k) {
        const Rational x(xs[npts + k]);
        Rational v = c.back();
        for (std::size_t i = npts - 1; i-- > 0;) v = v * (x - Rational(xs[i])) + c[i];
        if (v != check[k])
            throw std::runtime_error("layer counts are not polynomial from s = " + std::to_string(s0));
    }
    return c.back() * Rational(factorial(deg));
}

ConvergenceReport convergence_report(const ProblemSpec& spec, const std::vector<long>& s_values, Layer layer) {
    ConvergenceReport out;
    out.spec = spec;
    out.layer = layer;
    for (std::size_t i = 1; i < s_values.size(); ++i)
        if (s_values[i] <= s_values[i - 1]) throw DomainError("s values must be strictly increasing");
    if (s_values.empty()) return out;
    out.exact = layer == Layer::j_layer ? j_multiplicity(spec) : epsilon_multiplicity(spec);
    for (long s : s_values) {
        ConvergenceSample sample;
        sample.s = s;
        if (s <= 0) throw DomainError("estimates need s >= 1");
        const long d = spec.ring_dimension();
        if (layer == Layer::j_layer) {
            sample.count = layer_count(spec, s, Layer::j_layer);
            sample.estimate = normalize(sample.count, d - 1, s);
        } else {
            sample.count = layer_count(spec, s - 1, Layer::eps_layer);
            sample.estimate = normalize(sample.count, d, s);
        }
        if (!out.exact->is_zero()) sample.ratio = sample.estimate / *out.exact;
        out.samples.push_back(std::move(sample));
    }
    return out;
}

}  // namespace detmult
