#include "detmult/simplex_integrate.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <unordered_map>

namespace detmult {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

unsigned total_exponent(const FormProduct& factors) {
    unsigned d = 0;
    for (const auto& f : factors) d += f.exponent;
    return d;
}

// Mixed-radix key for exponent vectors whose entries never exceed `max_entry`.
std::uint64_t radix_for(unsigned max_entry, std::size_t digits) {
    const std::uint64_t base = max_entry + 1ULL;
    std::uint64_t cap = 1;
    for (std::size_t i = 0; i < digits; ++i) {
        if (cap > std::numeric_limits<std::uint64_t>::max() / base)
            throw ScaleRefused("integrand degree too large for dense expansion");
        cap *= base;
    }
    return base;
}

// l = (1/scale) * (c0 + sum c_i x_i) with integer c.
struct IntegerForm {
    Integer constant;
    std::vector<Integer> coefficients;
    Integer scale;
};

IntegerForm to_integer_form(const Rational& constant, std::span<const Rational> coefficients) {
    Integer q = constant.denominator();
    for (const auto& c : coefficients) q = lcm(q, c.denominator());
    IntegerForm out;
    out.scale = q;
    out.constant = (constant * Rational(q)).numerator();
    for (const auto& c : coefficients) out.coefficients.push_back((c * Rational(q)).numerator());
    return out;
}

// All monomials in d variables of degree <= D, sorted by degree, with the
// index of a + e_i for every monomial a and the integer Dirichlet weights
// prod(a_i!) * (D+d)! / (d+|a|)!.
class MonomialTable {
public:
    MonomialTable(std::size_t d, unsigned max_degree) : d_(d), max_degree_(max_degree) {
        const std::uint64_t base = radix_for(max_degree, d);
        std::vector<std::uint64_t> keys;
        std::vector<unsigned> current(d, 0);
        upto_.assign(max_degree + 1, 0);
        for (unsigned k = 0; k <= max_degree; ++k) {
            emit(current, 0, k, base, keys);
            upto_[k] = keys.size();
        }
        index_.reserve(keys.size() * 2);
        for (std::size_t i = 0; i < keys.size(); ++i) index_.emplace(keys[i], static_cast<std::uint32_t>(i));

        shift_.assign(keys.size() * d, kNone);
        place_.assign(d, 1);
        for (std::size_t i = 1; i < d; ++i) place_[i] = place_[i - 1] * base;
        for (std::size_t idx = 0; idx < keys.size(); ++idx) {
            if (degree_[idx] == max_degree) continue;
            for (std::size_t i = 0; i < d; ++i) shift_[idx * d + i] = index_.at(keys[idx] + place_[i]);
        }

        const Integer top = factorial(static_cast<long>(max_degree + d));
        weights_.reserve(keys.size());
        for (std::size_t idx = 0; idx < keys.size(); ++idx) {
            Integer w = top / factorial(static_cast<long>(d + degree_[idx]));
            for (std::size_t i = 0; i < d; ++i) w *= factorial(exponents_[idx * d + i]);
            weights_.push_back(std::move(w));
        }
    }

    std::size_t size() const { return degree_.size(); }
    std::size_t index_of(const Monomial& mono) const {
        std::uint64_t key = 0;
        for (std::size_t i = 0; i < d_; ++i) key += mono[i] * place_[i];
        return index_.at(key);
    }
    unsigned degree_of(std::size_t idx) const { return degree_[idx]; }
    const Integer& weight(std::size_t idx) const { return weights_[idx]; }

    // Coefficients of prod_i 1 / (1 - <p_i, y>) up to the table degree.
    std::vector<Integer> vertex_series(const std::vector<std::vector<Integer>>& points) const {
        std::vector<Integer> coef(size());
        coef[0] = 1;
        for (const auto& p : points) {
            for (std::size_t idx = 0; idx < size(); ++idx) {
                if (degree_[idx] == max_degree_ || coef[idx] == 0) continue;
                const std::uint32_t* next = &shift_[idx * d_];
                for (std::size_t i = 0; i < d_; ++i)
                    if (p[i] != 0) mpz_addmul(coef[next[i]].get_mpz_t(), p[i].get_mpz_t(), coef[idx].get_mpz_t());
            }
        }
        return coef;
    }
    std::size_t d() const { return d_; }
    unsigned max_degree() const { return max_degree_; }

    // Integral over the standard simplex of prod of the given integer forms,
    // times (D+d)! * prod(scale^e).
    Integer scaled_integral(const std::vector<std::pair<IntegerForm, unsigned>>& forms) const {
        unsigned total = 0;
        for (const auto& f : forms) total += f.second;
        if (total != max_degree_) throw DomainError("monomial table built for another degree");
        std::vector<Integer> coef(size());
        coef[0] = 1;
        unsigned deg = 0;
        for (const auto& [form, e] : forms) {
            for (unsigned rep = 0; rep < e; ++rep, ++deg) {
                for (std::size_t idx = upto_[deg]; idx-- > 0;) {
                    Integer& c = coef[idx];
                    if (c == 0) continue;
                    const std::uint32_t* next = &shift_[idx * d_];
                    for (std::size_t i = 0; i < d_; ++i) {
                        if (form.coefficients[i] == 0) continue;
                        mpz_addmul(coef[next[i]].get_mpz_t(), form.coefficients[i].get_mpz_t(),
                                   c.get_mpz_t());
                    }
                    c *= form.constant;
                }
            }
        }
        Integer sum;
        for (std::size_t idx = 0; idx < upto_[deg]; ++idx)
            if (coef[idx] != 0) mpz_addmul(sum.get_mpz_t(), coef[idx].get_mpz_t(), weights_[idx].get_mpz_t());
        return sum;
    }

private:
    void emit(std::vector<unsigned>& cur, std::size_t pos, unsigned remaining, std::uint64_t base,
              std::vector<std::uint64_t>& keys) {
        if (pos + 1 >= d_) {
            if (d_ > 0) cur[d_ - 1] = remaining;
            else if (remaining != 0) return;
            std::uint64_t key = 0;
            unsigned deg = 0;
            for (std::size_t i = d_; i-- > 0;) {
                key = key * base + cur[i];
                deg += cur[i];
            }
            keys.push_back(key);
            degree_.push_back(deg);
            exponents_.insert(exponents_.end(), cur.begin(), cur.end());
            return;
        }
        for (unsigned v = remaining + 1; v-- > 0;) {
            cur[pos] = v;
            emit(cur, pos + 1, remaining - v, base, keys);
        }
    }

    std::size_t d_;
    unsigned max_degree_;
    std::vector<unsigned> degree_;
    std::vector<unsigned> exponents_;
    std::vector<std::size_t> upto_;
    std::vector<std::uint64_t> place_;
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
    std::vector<std::uint32_t> shift_;
    std::vector<Integer> weights_;
};

Rational monomial_engine(const FormProduct& factors, const Simplex& s, const MonomialTable& table) {
    std::vector<std::pair<IntegerForm, unsigned>> forms;
    Integer scale = 1;
    for (const auto& f : factors) {
        if (f.exponent == 0) continue;
        if (f.form.nvars() != s.dim()) throw DomainError("form and simplex dimensions differ");
        const LinearForm pulled = affine_pullback(f.form, s);
        IntegerForm form = to_integer_form(pulled.constant, pulled.coefficients);
        scale *= ipow(form.scale, f.exponent);
        forms.emplace_back(std::move(form), f.exponent);
    }
    const Integer sum = table.scaled_integral(forms);
    const Integer denom = factorial(static_cast<long>(table.max_degree() + table.d())) * scale;
    return s.abs_determinant() * Rational(sum, denom);
}

// Every composition of `total` into `parts` nonnegative parts.
void for_each_composition(unsigned total, std::size_t parts,
                          const std::function<void(const std::vector<unsigned>&)>& f) {
    std::vector<unsigned> k(parts, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t pos, unsigned remaining) {
        if (pos + 1 == parts) {
            k[pos] = remaining;
            f(k);
            return;
        }
        for (unsigned v = 0; v <= remaining; ++v) {
            k[pos] = v;
            rec(pos + 1, remaining - v);
        }
    };
    rec(0, total);
}

}  // namespace

std::string_view to_string(Engine e) {
    return e == Engine::monomial ? "monomial" : "linforms";
}

Engine parse_engine(std::string_view name) {
    if (name == "monomial") return Engine::monomial;
    if (name == "linforms" || name == "linear_forms") return Engine::linear_forms;
    throw DomainError("unknown integration engine '" + std::string(name) + "'");
}

Rational monomial_over_standard_simplex(std::span<const unsigned> exponents, std::size_t d) {
    if (exponents.size() != d) throw DomainError("exponent vector length differs from dimension");
    Integer num = 1;
    unsigned total = 0;
    for (unsigned a : exponents) {
        num *= factorial(a);
        total += a;
    }
    return Rational(num, factorial(static_cast<long>(d + total)));
}

// With x = sum lambda_i v_i, the integral of x^a is
// |det| * a! / (|a| + d)! * [y^a] prod_i 1 / (1 - <v_i, y>).
Rational integrate_over_simplex(const Polynomial& p, const Simplex& s) {
    const std::size_t d = s.dim();
    if (p.nvars() != d) throw DomainError("polynomial and simplex dimensions differ");
    if (p.is_zero()) return Rational();
    Integer q = 1;
    for (const auto& v : s.vertices())
        for (const auto& c : v) q = lcm(q, c.denominator());
    std::vector<std::vector<Integer>> points;
    for (const auto& v : s.vertices()) {
        std::vector<Integer> w;
        for (const auto& c : v) w.push_back((c * Rational(q)).numerator());
        points.push_back(std::move(w));
    }
    const MonomialTable table(d, static_cast<unsigned>(p.degree()));
    const std::vector<Integer> h = table.vertex_series(points);
    Rational sum;
    for (const auto& [mono, c] : p.terms()) {
        const std::size_t idx = table.index_of(mono);
        sum += c * Rational(table.weight(idx) * h[idx], ipow(q, table.degree_of(idx)));
    }
    return s.abs_determinant() * sum / Rational(factorial(static_cast<long>(table.max_degree() + d)));
}

Rational integrate_over_simplex(const FormProduct& factors, const Simplex& s) {
    const MonomialTable table(s.dim(), total_exponent(factors));
    return monomial_engine(factors, s, table);
}

Rational linear_forms_over_simplex(const FormProduct& factors, const Simplex& s) {
    const std::size_t d = s.dim();
    const std::size_t nv = d + 1;
    const unsigned total = total_exponent(factors);
    const std::uint64_t base = radix_for(total, nv);
    std::vector<std::uint64_t> place(nv, 1);
    for (std::size_t i = 1; i < nv; ++i) place[i] = place[i - 1] * base;

    // state: how many powers have been assigned to each vertex so far
    std::unordered_map<std::uint64_t, Integer> state{{0, Integer(1)}};
    Integer scale = 1;
    for (const auto& f : factors) {
        if (f.exponent == 0) continue;
        if (f.form.nvars() != d) throw DomainError("form and simplex dimensions differ");
        std::vector<Rational> values;
        for (const auto& v : s.vertices()) values.push_back(f.form.evaluate(v));
        IntegerForm iv = to_integer_form(0, values);
        scale *= ipow(iv.scale, f.exponent);

        // multinomial(M; k) * prod_i value_i^{k_i} for every k with |k| = M
        std::vector<std::pair<std::uint64_t, Integer>> spread;
        const Integer mfact = factorial(f.exponent);
        for_each_composition(f.exponent, nv, [&](const std::vector<unsigned>& k) {
            Integer w = mfact;
            std::uint64_t key = 0;
            for (std::size_t i = 0; i < nv; ++i) {
                if (k[i] == 0) continue;
                if (iv.coefficients[i] == 0) return;
                w *= ipow(iv.coefficients[i], k[i]);
                w /= factorial(k[i]);
                key += k[i] * place[i];
            }
            spread.emplace_back(key, std::move(w));
        });

        std::unordered_map<std::uint64_t, Integer> next;
        next.reserve(state.size() * 4);
        for (const auto& [key, val] : state)
            for (const auto& [dk, w] : spread) {
                Integer& slot = next[key + dk];
                mpz_addmul(slot.get_mpz_t(), val.get_mpz_t(), w.get_mpz_t());
            }
        state = std::move(next);
    }

    Integer sum;
    for (const auto& [key, val] : state) {
        Integer w = val;
        std::uint64_t rest = key;
        for (std::size_t i = 0; i < nv; ++i) {
            w *= factorial(static_cast<long>(rest % base));
            rest /= base;
        }
        sum += w;
    }
    const Integer denom = factorial(static_cast<long>(total + d)) * scale;
    return s.abs_determinant() * Rational(sum, denom);
}

IntegralResult integrate_over_triangulation(const FormProduct& factors, const Triangulation& tri,
                                            Engine engine) {
    IntegralResult out{Rational(), engine, tri.simplices.size()};
    if (engine == Engine::monomial) {
        const MonomialTable table(tri.source.dim(), total_exponent(factors));
        for (const auto& s : tri.simplices) out.value += monomial_engine(factors, s, table);
    } else {
        for (const auto& s : tri.simplices) out.value += linear_forms_over_simplex(factors, s);
    }
    return out;
}

IntegralResult integrate_over_polytope(const FormProduct& factors, const HPolytope& h, Engine engine) {
    return integrate_over_triangulation(factors, triangulate(h), engine);
}

IntegralResult integrate_over_polytope(const Polynomial& p, const HPolytope& h, Engine engine) {
    if (p.nvars() != h.dim()) throw DomainError("polynomial and polytope dimensions differ");
    const Triangulation tri = triangulate(h);
    IntegralResult out{Rational(), engine, tri.simplices.size()};
    for (const auto& s : tri.simplices) {
        if (engine == Engine::monomial) {
            out.value += integrate_over_simplex(p, s);
            continue;
        }
        for (const auto& [mono, c] : p.terms()) {
            FormProduct factors;
            for (std::size_t i = 0; i < mono.size(); ++i)
                if (mono[i] != 0) factors.push_back({LinearForm::variable(p.nvars(), i), mono[i]});
            out.value += c * linear_forms_over_simplex(factors, s);
        }
    }
    return out;
}

}  // namespace detmult
