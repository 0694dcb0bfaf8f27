#include "detmult/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <future>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "detmult/cache.hpp"
#include "detmult/errors.hpp"
#include "detmult/multiplicity.hpp"
#include "detmult/oracle.hpp"
#include "detmult/polytopes.hpp"
#include "detmult/table1.hpp"
#include "detmult/version.hpp"

namespace detmult {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string kind = "generic";
    std::optional<int> m;
    std::optional<int> n;
    std::optional<int> t;
    std::string format = "text";
    std::string engine = "monomial";
    std::string cache;
    bool verify_cache = false;
    std::optional<int> float_digits;
    std::string dump_triangulation;
};

void add_spec_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--kind", o.kind, "generic, symmetric or pfaffian")
        ->check(CLI::IsMember({"generic", "symmetric", "pfaffian"}));
    cmd->add_option("--m", o.m, "rows (generic kind)");
    cmd->add_option("--n", o.n, "columns, or the size of a square matrix");
    cmd->add_option("--t", o.t, "minor size (pfaffians: 2t-pfaffians)")->required();
}

void add_output_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--float-digits", o.float_digits, "also render values to K decimals")
        ->check(CLI::Range(0, 1000));
}

ProblemSpec make_spec(const Options& o) {
    const KindType k = parse_kind(o.kind);
    if (!o.n) throw UsageError("--n is required");
    ProblemSpec spec;
    spec.t = *o.t;
    if (k == KindType::generic) {
        if (!o.m) throw UsageError("--m is required for the generic kind");
        spec.kind = MatrixKind::generic(*o.m, *o.n);
    } else {
        if (o.m && *o.m != *o.n) throw UsageError("--m must equal --n for a square kind");
        spec.kind = k == KindType::symmetric ? MatrixKind::symmetric(*o.n) : MatrixKind::pfaffian(*o.n);
    }
    return spec;
}

std::string decimal(const Rational& v, const Options& o, int fallback = 12) {
    return v.to_decimal(o.float_digits.value_or(fallback));
}

void print_value(std::ostream& out, const Options& o, const Rational& v) {
    out << v.to_string() << '\n';
    if (o.float_digits) out << "~ " << v.to_decimal(*o.float_digits) << '\n';
}

// j, eps and fiber.
int run_quantity(const std::string& quantity, const Options& o, std::ostream& out, std::ostream& err) {
    const ProblemSpec spec = make_spec(o);
    const EngineChoice engine = parse_engine_choice(o.engine);

    std::string path = o.cache;
    if (path.empty())
        if (const char* env = std::getenv("DETMULT_CACHE")) path = env;
    std::optional<ResultCache> cache;
    if (!path.empty()) cache.emplace(path, err);
    const ResultKey key{spec.kind.type, spec.kind.m, spec.kind.n, spec.t, quantity};

    auto compute = [&] {
        if (quantity == "j") return evaluate_j(spec, engine);
        if (quantity == "eps") return evaluate_epsilon(spec, engine);
        return evaluate_fiber(spec, engine);
    };

    Evaluation ev;
    const auto hit = cache ? cache->find(key) : std::nullopt;
    if (hit) {
        ev = {hit->value, "cache", 0, {}};
        if (o.verify_cache) {
            const Evaluation fresh = compute();
            if (fresh.value != hit->value) {
                err << "error: cached " << quantity << " = " << hit->value << " differs from recomputed "
                    << fresh.value << '\n';
                return 1;
            }
            ev = fresh;
        }
    } else {
        ev = compute();
        if (cache)
            cache->store({key, ev.value, ev.engine, current_timestamp(), DETMULT_VERSION});
    }

    if (!o.dump_triangulation.empty()) {
        const int vars = spec.variable_count();
        if (!spec.in_valid_range() || vars < 2) throw DomainError("no integration region to dump for " + spec.describe());
        const HPolytope h = quantity == "eps" ? ordered_epsilon_region(vars, spec.t) : ordered_slice_region(vars, spec.t);
        std::ofstream f(o.dump_triangulation);
        if (!f) throw DomainError("cannot write " + o.dump_triangulation);
        f << triangulation_json(triangulate(h)) << '\n';
    }

    if (o.format == "json") {
        json j = {{"kind", std::string(to_string(spec.kind.type))},
                  {"m", spec.kind.m},
                  {"n", spec.kind.n},
                  {"t", spec.t},
                  {"quantity", quantity},
                  {"value", ev.value.to_string()},
                  {"value_float", std::stod(decimal(ev.value, o, 17))},
                  {"engine", ev.engine},
                  {"simplex_count", ev.simplex_count}};
        if (!ev.note.empty()) j["note"] = ev.note;
        out << j.dump() << '\n';
    } else if (o.format == "csv") {
        out << "kind,m,n,t,quantity,value\n"
            << to_string(spec.kind.type) << ',' << spec.kind.m << ',' << spec.kind.n << ',' << spec.t << ','
            << quantity << ',' << ev.value << '\n';
    } else {
        print_value(out, o, ev.value);
        if (!ev.note.empty()) err << "note: " << ev.note << '\n';
    }
    return 0;
}

int run_oracle(const Options& o, const std::vector<long>& s_values, const std::string& layer_name,
               std::ostream& out) {
    const ProblemSpec spec = make_spec(o);
    if (s_values.empty()) throw UsageError("give --s or --s-list");
    const Layer layer = layer_name == "eps" ? Layer::eps_layer : Layer::j_layer;
    const ConvergenceReport rep = convergence_report(spec, s_values, layer);
    const int digits = o.float_digits.value_or(6);
    if (o.format == "json") {
        json samples = json::array();
        for (const auto& smp : rep.samples) {
            json row = {{"s", smp.s}, {"count", smp.count.get_str()}, {"estimate", smp.estimate.to_string()}};
            if (smp.ratio) row["ratio"] = smp.ratio->to_string();
            samples.push_back(row);
        }
        json j = {{"kind", std::string(to_string(spec.kind.type))},
                  {"m", spec.kind.m},
                  {"n", spec.kind.n},
                  {"t", spec.t},
                  {"layer", layer_name},
                  {"exact", rep.exact ? rep.exact->to_string() : ""},
                  {"samples", samples}};
        out << j.dump() << '\n';
    } else if (o.format == "csv") {
        out << "s,count,estimate,ratio\n";
        for (const auto& smp : rep.samples)
            out << smp.s << ',' << smp.count << ',' << smp.estimate << ',' << (smp.ratio ? smp.ratio->to_string() : "")
                << '\n';
    } else {
        out << "exact " << (rep.exact ? rep.exact->to_string() : "-") << '\n';
        out << "s\tcount\testimate\tratio\n";
        for (const auto& smp : rep.samples)
            out << smp.s << '\t' << smp.count << '\t' << smp.estimate.to_decimal(digits) << '\t'
                << (smp.ratio ? smp.ratio->to_decimal(digits) : "-") << '\n';
    }
    return 0;
}

std::vector<int> parse_int_list(const std::string& s, std::size_t expected) {
    std::vector<int> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw UsageError("bad integer '" + item + "' in '" + s + "'");
        }
    }
    if (v.size() != expected) throw UsageError("expected " + std::to_string(expected) + " comma-separated values in '" + s + "'");
    return v;
}

struct TableCheck {
    int t, m, n;
    std::string j_expected, eps_expected;
    Rational j, eps;
    bool ok() const { return j.to_string() == j_expected && eps.to_string() == eps_expected; }
};

int run_table1(const Options& o, const std::vector<std::string>& rows, const std::vector<std::string>& overrides,
               int jobs, std::ostream& out) {
    std::vector<TableCheck> checks;
    for (const auto& r : kPublishedTable) checks.push_back({r.t, r.m, r.n, r.j, r.epsilon, {}, {}});
    for (const auto& spec : overrides) {
        // t,m,n,j,eps
        std::stringstream ss(spec);
        std::vector<std::string> parts;
        for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
        if (parts.size() != 5) throw UsageError("--expect takes t,m,n,j,eps");
        const auto tmn = parse_int_list(parts[0] + "," + parts[1] + "," + parts[2], 3);
        bool found = false;
        for (auto& c : checks)
            if (c.t == tmn[0] && c.m == tmn[1] && c.n == tmn[2]) {
                c.j_expected = Rational::parse(parts[3]).to_string();
                c.eps_expected = Rational::parse(parts[4]).to_string();
                found = true;
            }
        if (!found) throw UsageError("--expect names a row that is not in the table");
    }
    if (!rows.empty()) {
        std::vector<TableCheck> picked;
        for (const auto& r : rows) {
            const auto tmn = parse_int_list(r, 3);
            bool found = false;
            for (const auto& c : checks)
                if (c.t == tmn[0] && c.m == tmn[1] && c.n == tmn[2]) {
                    picked.push_back(c);
                    found = true;
                }
            if (!found) throw UsageError("row " + r + " is not in the table");
        }
        checks = std::move(picked);
    }

    const EngineChoice engine = parse_engine_choice(o.engine);
    auto work = [engine](TableCheck& c) {
        const ProblemSpec spec{MatrixKind::generic(c.m, c.n), c.t};
        c.j = j_multiplicity(spec, engine);
        c.eps = epsilon_multiplicity(spec, engine);
    };
    if (jobs <= 1) {
        for (auto& c : checks) work(c);
    } else {
        std::size_t next = 0;
        std::mutex mu;
        std::vector<std::future<void>> workers;
        for (int w = 0; w < jobs; ++w)
            workers.push_back(std::async(std::launch::async, [&] {
                for (;;) {
                    std::size_t i;
                    {
                        std::lock_guard lock(mu);
                        if (next == checks.size()) return;
                        i = next++;
                    }
                    work(checks[i]);
                }
            }));
        for (auto& f : workers) f.get();
    }

    std::size_t good = 0;
    json arr = json::array();
    if (o.format == "csv") out << "t,m,n,j,j_expected,eps,eps_expected,match\n";
    for (const auto& c : checks) {
        if (c.ok()) ++good;
        if (o.format == "json") {
            arr.push_back({{"t", c.t},
                           {"m", c.m},
                           {"n", c.n},
                           {"j", c.j.to_string()},
                           {"j_expected", c.j_expected},
                           {"eps", c.eps.to_string()},
                           {"eps_expected", c.eps_expected},
                           {"match", c.ok()}});
        } else if (o.format == "csv") {
            out << c.t << ',' << c.m << ',' << c.n << ',' << c.j << ',' << c.j_expected << ',' << c.eps << ','
                << c.eps_expected << ',' << (c.ok() ? "yes" : "no") << '\n';
        } else {
            out << "t=" << c.t << " m=" << c.m << " n=" << c.n << "  j " << c.j;
            if (c.j.to_string() != c.j_expected) out << " (expected " << c.j_expected << ")";
            out << "  eps " << c.eps;
            if (c.eps.to_string() != c.eps_expected) out << " (expected " << c.eps_expected << ")";
            out << (c.ok() ? "  ok" : "  MISMATCH") << '\n';
        }
    }
    if (o.format == "json") out << arr.dump() << '\n';
    else if (o.format == "text") out << good << "/" << checks.size() << " rows match\n";
    return good == checks.size() ? 0 : 1;
}

Rational json_rational(const json& v) {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw DomainError("numbers must be integers or rational strings");
}

int run_integrate(const Options& o, const std::string& file, std::ostream& out) {
    std::ifstream in(file);
    if (!in) throw DomainError("cannot read " + file);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed input: ") + e.what());
    }
    Rational value;
    std::size_t simplices = 0;
    std::string engine_name;
    try {
        const auto dim = doc.at("dim").get<std::size_t>();
        HPolytope h(dim);
        for (const auto& row : doc.at("inequalities")) {
            if (row.size() != dim + 1) throw DomainError("inequality rows need dim+1 entries");
            Point normal;
            for (std::size_t i = 0; i < dim; ++i) normal.push_back(json_rational(row[i]));
            h.add(std::move(normal), json_rational(row[dim]));
        }
        Polynomial p(dim);
        for (const auto& term : doc.at("polynomial")) {
            Monomial mono;
            for (const auto& e : term.at(1)) {
                const long v = e.is_string() ? std::stol(e.get<std::string>()) : e.get<long>();
                if (v < 0) throw DomainError("negative exponent");
                mono.push_back(static_cast<unsigned>(v));
            }
            p.add_term(mono, json_rational(term.at(0)));
        }
        const Triangulation tri = triangulate(h);
        if (!o.dump_triangulation.empty()) {
            std::ofstream f(o.dump_triangulation);
            f << triangulation_json(tri) << '\n';
        }
        const EngineChoice choice = parse_engine_choice(o.engine);
        auto run = [&](Engine e) { return integrate_over_polytope(p, h, e); };
        if (choice == EngineChoice::both) {
            const IntegralResult a = run(Engine::monomial);
            const IntegralResult b = run(Engine::linear_forms);
            if (a.value != b.value)
                throw std::runtime_error("integration engines disagree: " + a.value.to_string() + " vs " +
                                         b.value.to_string());
            value = a.value;
            simplices = a.simplex_count;
        } else {
            const IntegralResult r = run(choice == EngineChoice::monomial ? Engine::monomial : Engine::linear_forms);
            value = r.value;
            simplices = r.simplex_count;
        }
        engine_name = to_string(choice);
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed input: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw DomainError(std::string("malformed input: ") + e.what());
    }
    if (o.format == "json") {
        out << json{{"quantity", "integral"},
                    {"value", value.to_string()},
                    {"value_float", std::stod(decimal(value, o, 17))},
                    {"engine", engine_name},
                    {"simplex_count", simplices}}
                   .dump()
            << '\n';
    } else if (o.format == "csv") {
        out << "quantity,value\nintegral," << value << '\n';
    } else {
        print_value(out, o, value);
    }
    return 0;
}

void emit_simple(std::ostream& out, const Options& o, const std::string& quantity, const Rational& v,
                 const json& extra) {
    if (o.format == "json") {
        json j = extra;
        j["quantity"] = quantity;
        j["value"] = v.to_string();
        j["value_float"] = std::stod(decimal(v, o, 17));
        out << j.dump() << '\n';
    } else if (o.format == "csv") {
        out << "quantity,value\n" << quantity << ',' << v << '\n';
    } else {
        print_value(out, o, v);
    }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact j- and epsilon-multiplicities of determinantal ideals", "detmult"};
    app.set_version_flag("--version", DETMULT_VERSION);
    app.require_subcommand(1);

    Options o;

    std::vector<CLI::App*> quantity_cmds;
    for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
             {"j", "j-multiplicity of I_t"}, {"eps", "epsilon-multiplicity of I_t"}, {"fiber", "degree of the fiber cone"}}) {
        CLI::App* cmd = app.add_subcommand(name, help);
        add_spec_flags(cmd, o);
        add_output_flags(cmd, o);
        cmd->add_option("--engine", o.engine, "monomial, linforms or both")
            ->check(CLI::IsMember({"monomial", "linforms", "linear_forms", "both"}));
        cmd->add_option("--cache", o.cache, "JSON-lines result cache (default: $DETMULT_CACHE)");
        cmd->add_flag("--verify-cache", o.verify_cache, "recompute cached values and compare");
        cmd->add_option("--dump-triangulation", o.dump_triangulation, "write the triangulation used as JSON");
        quantity_cmds.push_back(cmd);
    }

    std::vector<long> scroll_a;
    CLI::App* scroll = app.add_subcommand("scroll", "j-multiplicity of a rational normal scroll");
    scroll->add_option("a", scroll_a, "scroll type a_1 ... a_d")->required();
    add_output_flags(scroll, o);

    long s_single = -1;
    std::vector<long> s_list;
    std::string layer = "j";
    CLI::App* oracle = app.add_subcommand("oracle", "layer counts and normalized estimates");
    add_spec_flags(oracle, o);
    add_output_flags(oracle, o);
    auto* s_opt = oracle->add_option("--s", s_single, "single power");
    oracle->add_option("--s-list", s_list, "comma-separated powers")->delimiter(',')->excludes(s_opt);
    oracle->add_option("--layer", layer, "j or eps")->check(CLI::IsMember({"j", "eps"}));

    int sm = 0;
    int sn = 0;
    CLI::App* selberg = app.add_subcommand("selberg", "check the Selberg integral identity");
    selberg->add_option("--m", sm)->required();
    selberg->add_option("--n", sn)->required();
    add_output_flags(selberg, o);

    CLI::App* series = app.add_subcommand("series", "j(I_{m-1}) of a generic matrix by the series method");
    series->add_option("--m", sm)->required();
    series->add_option("--n", sn)->required();
    add_output_flags(series, o);

    std::vector<std::string> rows;
    std::vector<std::string> overrides;
    int jobs = 1;
    CLI::App* table = app.add_subcommand("table1", "recompute the published table of j and epsilon");
    table->add_option("--rows", rows, "restrict to rows t,m,n (repeatable)");
    table->add_option("--expect", overrides, "override expected values t,m,n,j,eps (repeatable)");
    table->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 64));
    table->add_option("--engine", o.engine)->check(CLI::IsMember({"monomial", "linforms", "linear_forms", "both"}));
    add_output_flags(table, o);

    std::string file;
    CLI::App* integ = app.add_subcommand("integrate", "integrate a polynomial over an H-polytope");
    integ->add_option("file", file, "JSON input")->required();
    integ->add_option("--engine", o.engine)->check(CLI::IsMember({"monomial", "linforms", "linear_forms", "both"}));
    integ->add_option("--dump-triangulation", o.dump_triangulation, "write the triangulation used as JSON");
    add_output_flags(integ, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        if (code == 0) return 0;
        err << app.help();
        return 2;
    }

    try {
        for (CLI::App* cmd : quantity_cmds)
            if (cmd->parsed()) return run_quantity(cmd->get_name(), o, out, err);
        if (scroll->parsed()) {
            const Integer v = scroll_j(scroll_a);
            emit_simple(out, o, "scroll_j", Rational(v), json{{"a", scroll_a}});
            return 0;
        }
        if (oracle->parsed()) {
            if (s_single >= 0) s_list = {s_single};
            return run_oracle(o, s_list, layer, out);
        }
        if (selberg->parsed()) {
            const SelbergCheck c = selberg_identity(sm, sn);
            if (o.format == "json") {
                out << json{{"m", sm}, {"n", sn}, {"lhs", c.lhs.to_string()}, {"rhs", c.rhs.to_string()}, {"equal", c.holds()}}
                           .dump()
                    << '\n';
            } else if (o.format == "csv") {
                out << "m,n,lhs,rhs,equal\n" << sm << ',' << sn << ',' << c.lhs << ',' << c.rhs << ',' << c.holds() << '\n';
            } else {
                out << "lhs " << c.lhs << "\nrhs " << c.rhs << '\n' << (c.holds() ? "equal" : "NOT EQUAL") << '\n';
            }
            return c.holds() ? 0 : 1;
        }
        if (series->parsed()) {
            emit_simple(out, o, "j_series", j_series_submaximal(sm, sn), json{{"m", sm}, {"n", sn}, {"t", sm - 1}});
            return 0;
        }
        if (table->parsed()) return run_table1(o, rows, overrides, jobs, out);
        if (integ->parsed()) return run_integrate(o, file, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace detmult
