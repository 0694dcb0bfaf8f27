#include "detmult/multiplicity.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "detmult/polyforms.hpp"
#include "detmult/polytopes.hpp"

namespace detmult {

namespace {

enum class Region { slice, epsilon };

// Triangulations depend only on (region, m, t) and are reused across kinds.
std::shared_ptr<const Triangulation> cached_triangulation(Region region, int m, int t) {
    static std::mutex mu;
    static std::map<std::tuple<Region, int, int>, std::shared_ptr<const Triangulation>> cache;
    const auto key = std::make_tuple(region, m, t);
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    const HPolytope h = region == Region::slice ? ordered_slice_region(m, t) : ordered_epsilon_region(m, t);
    auto tri = std::make_shared<const Triangulation>(triangulate(h));
    std::lock_guard lock(mu);
    return cache.emplace(key, std::move(tri)).first->second;
}

Evaluation integrate(const FormProduct& f, const Triangulation& tri, EngineChoice engine) {
    if (engine != EngineChoice::both) {
        const Engine e = engine == EngineChoice::monomial ? Engine::monomial : Engine::linear_forms;
        const IntegralResult r = integrate_over_triangulation(f, tri, e);
        return {r.value, std::string(to_string(e)), r.simplex_count, {}};
    }
    const IntegralResult a = integrate_over_triangulation(f, tri, Engine::monomial);
    const IntegralResult b = integrate_over_triangulation(f, tri, Engine::linear_forms);
    if (a.value != b.value)
        throw std::runtime_error("integration engines disagree: " + a.value.to_string() + " vs " +
                                 b.value.to_string());
    return {a.value, "both", a.simplex_count, {}};
}

Rational kind_constant(const MatrixKind& k) {
    const long n = k.n;
    Integer den = 1;
    switch (k.type) {
        case KindType::generic: {
            const long m = k.m;
            for (long i = 1; i <= m; ++i) den *= factorial(n - i) * factorial(i);
            return Rational(factorial(m * n - 1), den);
        }
        case KindType::symmetric: {
            for (long i = 1; i <= n; ++i) den *= factorial(i);
            return Rational(ipow(Integer(2), static_cast<unsigned>(binomial(n, 2).get_ui())) *
                                factorial(binomial(n + 1, 2).get_si() - 1),
                            den);
        }
        case KindType::pfaffian: {
            den = factorial(n / 2);
            for (long i = 1; i <= n - 1; ++i) den *= factorial(i);
            return Rational(factorial(binomial(n, 2).get_si() - 1), den);
        }
    }
    return Rational();
}

void require_positive_t(const ProblemSpec& spec) {
    if (spec.t <= 0) throw DomainError("t must be positive, got " + std::to_string(spec.t));
}

std::string vanishing_note(const ProblemSpec& spec) {
    return "t >= " + std::to_string(spec.variable_count()) + " for " + spec.kind.describe() +
           ": the analytic spread is not maximal, so j and epsilon are 0";
}

const char* kSingleVariableNote = "I_t is the maximal ideal of the polynomial ring";

// c * m*! * integral over the ordered slice, i.e. the fiber-cone degree.
Evaluation slice_term(const ProblemSpec& spec, EngineChoice engine) {
    const Integrand in = build_integrand(spec);
    const int m = spec.variable_count();
    const Rational t(spec.t);
    const FormProduct sliced = eliminate_slice_variable(in.factors, t);
    const auto tri = cached_triangulation(Region::slice, m, spec.t);
    Evaluation e = integrate(sliced, *tri, engine);
    e.value *= leading_constant(spec) * Rational(in.symmetrization_factor);
    return e;
}

}  // namespace

std::string_view to_string(EngineChoice e) {
    switch (e) {
        case EngineChoice::monomial:
            return "monomial";
        case EngineChoice::linear_forms:
            return "linforms";
        case EngineChoice::both:
            return "both";
    }
    return "";
}

EngineChoice parse_engine_choice(std::string_view name) {
    if (name == "both") return EngineChoice::both;
    return parse_engine(name) == Engine::monomial ? EngineChoice::monomial : EngineChoice::linear_forms;
}

Rational leading_constant(const ProblemSpec& spec) {
    if (!spec.in_valid_range()) throw DomainError("no leading constant: t outside the valid range for " + spec.describe());
    return kind_constant(spec.kind);
}

Evaluation evaluate_fiber(const ProblemSpec& spec, EngineChoice engine) {
    require_positive_t(spec);
    if (spec.single_variable()) return {Rational(1), "closed-form", 0, kSingleVariableNote};
    const int bound = spec.variable_count();
    if (spec.t > bound) throw OutOfScope("I_t is the zero ideal for " + spec.describe());
    if (spec.t == bound) {
        if (spec.kind.type == KindType::generic)
            throw OutOfScope("t = m: the fiber cone is the coordinate ring of a Grassmannian, whose degree is not computed here");
        return {Rational(1), "closed-form", 0, "the fiber cone is a polynomial ring"};
    }
    return slice_term(spec, engine);
}

Evaluation evaluate_j(const ProblemSpec& spec, EngineChoice engine) {
    require_positive_t(spec);
    if (spec.single_variable()) return {Rational(1), "closed-form", 0, kSingleVariableNote};
    if (!spec.in_valid_range()) return {Rational(), "closed-form", 0, vanishing_note(spec)};
    Evaluation e = slice_term(spec, engine);
    e.value *= Rational(spec.t);
    if (!e.value.is_integer())
        throw std::logic_error("non-integral j-multiplicity " + e.value.to_string() + " for " + spec.describe());
    return e;
}

Evaluation evaluate_epsilon(const ProblemSpec& spec, EngineChoice engine) {
    require_positive_t(spec);
    if (spec.single_variable()) return {Rational(1), "closed-form", 0, kSingleVariableNote};
    if (!spec.in_valid_range()) return {Rational(), "closed-form", 0, vanishing_note(spec)};
    const Integrand in = build_integrand(spec);
    const auto tri = cached_triangulation(Region::epsilon, spec.variable_count(), spec.t);
    Evaluation e = integrate(in.factors, *tri, engine);
    e.value *= leading_constant(spec) * Rational(spec.ring_dimension()) * Rational(in.symmetrization_factor);
    return e;
}

Rational j_multiplicity(const ProblemSpec& spec, EngineChoice engine) { return evaluate_j(spec, engine).value; }

Rational epsilon_multiplicity(const ProblemSpec& spec, EngineChoice engine) {
    return evaluate_epsilon(spec, engine).value;
}

Rational fiber_degree(const ProblemSpec& spec, EngineChoice engine) { return evaluate_fiber(spec, engine).value; }

MultiplicityReport multiplicity_report(const ProblemSpec& spec, EngineChoice engine) {
    MultiplicityReport r;
    r.spec = spec;
    r.valid_range = spec.in_valid_range();
    r.c = kind_constant(spec.kind);
    const Evaluation j = evaluate_j(spec, engine);
    r.j = j.value;
    if (!j.note.empty()) r.notes.push_back(j.note);
    r.epsilon = evaluate_epsilon(spec, engine).value;
    try {
        const Evaluation f = evaluate_fiber(spec, engine);
        r.fiber_degree = f.value;
        if (!f.note.empty() && f.note != j.note) r.notes.push_back(f.note);
    } catch (const OutOfScope& e) {
        r.notes.emplace_back(e.what());
    }
    return r;
}

Integer scroll_j(std::vector<long> a) {
    if (a.empty()) throw DomainError("scroll needs at least one entry");
    for (long v : a)
        if (v <= 0) throw DomainError("scroll entries must be positive");
    std::sort(a.begin(), a.end());
    long c = 0;
    for (long v : a) c += v;
    const long d = static_cast<long>(a.size());
    if (c < d + 3) return 0;
    if (c == d + 3) return 2 * (binomial(2 * c - 4, c - 2) - binomial(2 * c - 4, c - 1));
    Integer sum = 0;
    for (long j = 2; j <= c - d - 1; ++j) sum += binomial(c + d - 1, c - j);
    sum -= binomial(c + d - 1, c - 1) * (c - d - 2);
    return 2 * sum;
}

SelbergCheck selberg_identity(int m, int n, EngineChoice engine) {
    if (m < 1 || m > n) throw DomainError("Selberg identity needs 1 <= m <= n");
    const FormProduct f = vandermonde_integrand(static_cast<std::size_t>(m), static_cast<unsigned>(n - m), 2);
    const Triangulation tri = triangulate(ordered_unit_simplex_region(m));
    SelbergCheck out;
    out.lhs = integrate(f, tri, engine).value * Rational(factorial(m));
    Integer num = 1;
    for (int i = 1; i <= m; ++i) num *= factorial(n - i) * factorial(i);
    out.rhs = Rational(num, factorial(static_cast<long>(n) * m));
    return out;
}

Rational j_series_submaximal(int m, int n) {
    if (m < 2 || m > n) throw DomainError("series method needs 2 <= m <= n");
    if (m > 4 || n > 7) throw ScaleRefused("series enumeration limited to m <= 4, n <= 7");
    const auto um = static_cast<std::size_t>(m);
    const unsigned row_sum = static_cast<unsigned>(n - m);

    // Off-diagonal compositions of n-m for one row of a.
    std::vector<std::vector<unsigned>> rows;
    std::vector<unsigned> cur(um - 1, 0);
    auto compose = [&](auto&& self, std::size_t pos, unsigned rest) -> void {
        if (pos + 1 == cur.size()) {
            cur[pos] = rest;
            rows.push_back(cur);
            return;
        }
        for (unsigned v = 0; v <= rest; ++v) {
            cur[pos] = v;
            self(self, pos + 1, rest - v);
        }
    };
    compose(compose, 0, row_sum);

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t p = 0; p < um; ++p)
        for (std::size_t q = p + 1; q < um; ++q) pairs.emplace_back(p, q);

    const unsigned max_col = row_sum * static_cast<unsigned>(m) + 2U * static_cast<unsigned>(m);
    std::vector<Integer> fact;
    for (unsigned k = 0; k <= max_col; ++k) fact.push_back(factorial(k));

    std::vector<std::vector<unsigned>> a(um, std::vector<unsigned>(um, 0));
    std::vector<std::vector<unsigned>> b(um, std::vector<unsigned>(um, 0));
    Integer total = 0;

    auto term = [&]() {
        Integer prod = 1;
        int sign = 1;
        for (std::size_t j = 0; j < um; ++j) {
            unsigned col = 0;
            unsigned upper_b = 0;
            Integer den = 1;
            for (std::size_t i = 0; i < um; ++i) {
                col += a[i][j] + b[i][j];
                if (i < j) upper_b += b[i][j];
                den *= fact[a[i][j]] * fact[b[i][j]];
            }
            if (upper_b % 2 == 1) sign = -sign;
            prod *= fact[col] / den;
        }
        if (sign < 0) total -= prod;
        else total += prod;
    };

    auto over_b = [&](auto&& self, std::size_t k) -> void {
        if (k == pairs.size()) {
            term();
            return;
        }
        const auto [p, q] = pairs[k];
        for (unsigned v = 0; v <= 2; ++v) {
            b[p][q] = v;
            b[q][p] = 2 - v;
            self(self, k + 1);
        }
    };

    auto over_a = [&](auto&& self, std::size_t i) -> void {
        if (i == um) {
            over_b(over_b, 0);
            return;
        }
        for (const auto& row : rows) {
            std::size_t k = 0;
            for (std::size_t j = 0; j < um; ++j) a[i][j] = j == i ? 0 : row[k++];
            self(self, i + 1);
        }
    };
    over_a(over_a, 0);

    Integer den = 1;
    for (int i = 1; i <= m - 1; ++i) den *= ipow(Integer(n - i), static_cast<unsigned>(i));
    for (int i = 1; i <= m; ++i) den *= factorial(i);
    const Integer num = Integer(m - 1) * ipow(Integer(2), static_cast<unsigned>(m * (m - 1) / 2));
    return Rational(num * total, den);
}

}  // namespace detmult
