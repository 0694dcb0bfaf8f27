#include "detmult/polyforms.hpp"

#include <numeric>
#include <sstream>

namespace detmult {

namespace {

// Lazily computed powers of a fixed polynomial.
class PowerCache {
public:
    explicit PowerCache(Polynomial base) : powers_{Polynomial::constant(base.nvars(), 1)} {
        powers_.push_back(std::move(base));
    }
    const Polynomial& get(unsigned k) {
        while (powers_.size() <= k) powers_.push_back(powers_.back() * powers_[1]);
        return powers_[k];
    }

private:
    std::vector<Polynomial> powers_;
};

void require_nvars(const LinearForm& l, std::size_t nvars) {
    if (l.nvars() != nvars) throw DomainError("linear forms disagree on the number of variables");
}

}  // namespace

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
    Polynomial p(nvars);
    Monomial mono(nvars, 0);
    mono.at(i) = 1;
    p.add_term(mono, 1);
    return p;
}

int Polynomial::degree() const {
    int deg = -1;
    for (const auto& [mono, c] : terms_)
        deg = std::max(deg, static_cast<int>(std::accumulate(mono.begin(), mono.end(), 0U)));
    return deg;
}

Rational Polynomial::coefficient(const Monomial& mono) const {
    const auto it = terms_.find(mono);
    return it == terms_.end() ? Rational() : it->second;
}

void Polynomial::add_term(const Monomial& mono, const Rational& c) {
    if (mono.size() != nvars_) throw DomainError("monomial has wrong number of variables");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    if (point.size() != nvars_) throw DomainError("evaluation point has wrong dimension");
    Rational sum;
    for (const auto& [mono, c] : terms_) {
        Rational v = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (mono[i] != 0) v *= pow(point[i], mono[i]);
        sum += v;
    }
    return sum;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.nvars_ != nvars_) throw DomainError("polynomials disagree on the number of variables");
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.nvars_ != nvars_) throw DomainError("polynomials disagree on the number of variables");
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, coeff] : terms_) coeff *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_) throw DomainError("polynomials disagree on the number of variables");
    Polynomial out(a.nvars_);
    Monomial mono(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < mono.size(); ++i) mono[i] = ma[i] + mb[i];
            out.add_term(mono, ca * cb);
        }
    }
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c << "*[";
        for (std::size_t i = 0; i < mono.size(); ++i) os << (i ? "," : "") << mono[i];
        os << "]";
    }
    return os.str();
}

Polynomial pow(const Polynomial& p, unsigned exponent) {
    Polynomial result = Polynomial::constant(p.nvars(), 1);
    Polynomial base = p;
    while (exponent > 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent > 0) base = base * base;
    }
    return result;
}

LinearForm LinearForm::variable(std::size_t nvars, std::size_t i) {
    LinearForm l{0, std::vector<Rational>(nvars)};
    l.coefficients.at(i) = 1;
    return l;
}

LinearForm LinearForm::difference(std::size_t nvars, std::size_t j, std::size_t i) {
    LinearForm l{0, std::vector<Rational>(nvars)};
    l.coefficients.at(j) = 1;
    l.coefficients.at(i) = -1;
    return l;
}

Rational LinearForm::evaluate(std::span<const Rational> point) const {
    if (point.size() != nvars()) throw DomainError("evaluation point has wrong dimension");
    Rational v = constant;
    for (std::size_t i = 0; i < point.size(); ++i) v += coefficients[i] * point[i];
    return v;
}

Polynomial LinearForm::to_polynomial() const {
    Polynomial p = Polynomial::constant(nvars(), constant);
    for (std::size_t i = 0; i < nvars(); ++i) {
        Monomial mono(nvars(), 0);
        mono[i] = 1;
        p.add_term(mono, coefficients[i]);
    }
    return p;
}

Rational evaluate(const FormProduct& factors, std::span<const Rational> point) {
    Rational v = 1;
    for (const auto& f : factors) v *= pow(f.form.evaluate(point), f.exponent);
    return v;
}

Polynomial product_of_linear_forms(std::span<const PoweredForm> factors) {
    if (factors.empty()) throw DomainError("empty product has no variable count");
    const std::size_t nvars = factors.front().form.nvars();
    Polynomial out = Polynomial::constant(nvars, 1);
    for (const auto& f : factors) {
        require_nvars(f.form, nvars);
        out = out * pow(f.form.to_polynomial(), f.exponent);
    }
    return out;
}

Integrand build_integrand(const ProblemSpec& spec) {
    if (!spec.in_valid_range())
        throw DomainError("t outside 0 < t < " + std::to_string(spec.variable_count()) + " for " +
                          spec.kind.describe() +
                          ": the analytic spread is not maximal and the multiplicities vanish");
    const auto m = static_cast<std::size_t>(spec.variable_count());
    unsigned monomial_power = 0;
    unsigned difference_power = 0;
    switch (spec.kind.type) {
        case KindType::generic:
            monomial_power = static_cast<unsigned>(spec.kind.n - spec.kind.m);
            difference_power = 2;
            break;
        case KindType::symmetric:
            difference_power = 1;
            break;
        case KindType::pfaffian:
            monomial_power = 2U * static_cast<unsigned>(spec.delta());
            difference_power = 4;
            break;
    }
    Integrand out;
    out.nvars = m;
    out.symmetrization_factor = factorial(static_cast<long>(m));
    out.factors = vandermonde_integrand(m, monomial_power, difference_power);
    return out;
}

FormProduct vandermonde_integrand(std::size_t m, unsigned monomial_power, unsigned difference_power) {
    FormProduct out;
    if (monomial_power > 0)
        for (std::size_t i = 0; i < m; ++i) out.push_back({LinearForm::variable(m, i), monomial_power});
    if (difference_power > 0)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                out.push_back({LinearForm::difference(m, j, i), difference_power});
    return out;
}

Polynomial eliminate_slice_variable(const Polynomial& p, const Rational& t) {
    const std::size_t m = p.nvars();
    if (m == 0) throw DomainError("no variable to eliminate");
    // t - (z_1 + ... + z_{m-1})
    LinearForm last{t, std::vector<Rational>(m - 1, Rational(-1))};
    PowerCache powers(last.to_polynomial());
    Polynomial out(m - 1);
    for (const auto& [mono, c] : p.terms()) {
        Polynomial term(m - 1);
        term.add_term(Monomial(mono.begin(), mono.end() - 1), c);
        out += term * powers.get(mono.back());
    }
    return out;
}

LinearForm eliminate_slice_variable(const LinearForm& l, const Rational& t) {
    const std::size_t m = l.nvars();
    if (m == 0) throw DomainError("no variable to eliminate");
    const Rational& a = l.coefficients.back();
    LinearForm out{l.constant + a * t, {}};
    for (std::size_t i = 0; i + 1 < m; ++i) out.coefficients.push_back(l.coefficients[i] - a);
    return out;
}

FormProduct eliminate_slice_variable(const FormProduct& f, const Rational& t) {
    FormProduct out;
    out.reserve(f.size());
    for (const auto& pf : f) out.push_back({eliminate_slice_variable(pf.form, t), pf.exponent});
    return out;
}

LinearForm affine_pullback(const LinearForm& l, const Simplex& s) {
    require_nvars(l, s.dim());
    const auto& v = s.vertices();
    LinearForm out{l.evaluate(v[0]), {}};
    for (std::size_t i = 1; i < v.size(); ++i) out.coefficients.push_back(l.evaluate(v[i]) - out.constant);
    return out;
}

Pullback affine_pullback(const Polynomial& p, const Simplex& s) {
    const std::size_t d = s.dim();
    if (p.nvars() != d) throw DomainError("polynomial and simplex dimensions differ");
    std::vector<PowerCache> images;
    images.reserve(d);
    for (std::size_t j = 0; j < d; ++j)
        images.emplace_back(affine_pullback(LinearForm::variable(d, j), s).to_polynomial());
    Polynomial out(d);
    for (const auto& [mono, c] : p.terms()) {
        Polynomial term = Polynomial::constant(d, c);
        for (std::size_t j = 0; j < d; ++j)
            if (mono[j] != 0) term = term * images[j].get(mono[j]);
        out += term;
    }
    return {std::move(out), s.abs_determinant()};
}

}  // namespace detmult
