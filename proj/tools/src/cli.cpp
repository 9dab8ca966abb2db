#include <coxl2_tool/cli.hpp>

#include "render.hpp"

#include <coxl2/builtins.hpp>
#include <coxl2/classification.hpp>
#include <coxl2/finite_hecke.hpp>
#include <coxl2/growth.hpp>
#include <coxl2/piecewise.hpp>
#include <coxl2/right_angled.hpp>
#include <coxl2/verify.hpp>
#include <coxl2/weighted.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

namespace coxl2::tool {

namespace {

struct Options {
    std::string system;
    std::string complex = "chamber";
    std::string q;
    std::string format = "human";
    int precision = 6;
    unsigned max_length = 8;
    std::size_t budget = 5'000'000;
    double timeout = 0;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// A file path, inline text with ';' separating lines, or a builtin name.
std::optional<std::string> text_source(const std::string& spec)
{
    std::error_code ec;
    if (std::filesystem::is_regular_file(spec, ec)) return read_file(spec);
    if (spec.find(':') != std::string::npos) {
        std::string text = spec;
        std::replace(text.begin(), text.end(), ';', '\n');
        return text;
    }
    return std::nullopt;
}

CoxeterSystem load_system(const std::string& spec)
{
    if (spec.empty()) throw InvalidArgument("--system is required");
    if (auto text = text_source(spec)) return parse_system(*text);
    return builtin_system(spec);
}

MirroredComplex load_complex(const std::string& spec, const CoxeterSystem& w)
{
    if (spec == "chamber" || spec == "sigma") return chamber(w);
    if (spec == "circle") return circle_complex(w);
    auto text = text_source(spec);
    if (!text) throw InvalidArgument("unknown complex '" + spec + "' (chamber, circle, a file, or inline text)");
    MirroredComplex z = parse_mirrored_complex(*text, w);
    z.validate(w);
    return z;
}

Multiparam load_q(const std::string& text, const CoxeterSystem& w)
{
    if (text.empty()) throw InvalidArgument("--q is required");
    Multiparam q = parse_multiparam(text);
    if (q.size() == 1 && w.num_classes() > 1) q.assign(w.num_classes(), q[0]);
    if (q.size() != w.num_classes())
        throw InvalidArgument("--q has " + std::to_string(q.size()) + " entries but the system has " +
                              std::to_string(w.num_classes()) + " parameter classes");
    return q;
}

Subset load_subset(const std::string& text, const CoxeterSystem& w)
{
    Subset t = 0;
    for (int s : w.parse_word(text)) t |= singleton(s);
    return t;
}

Json header(const std::string& command, const Options& o)
{
    return Json{{"schema_version", kSchemaVersion}, {"command", command}, {"precision", o.precision}};
}

Json describe(const CoxeterSystem& w)
{
    Json classes = Json::array();
    for (int c : w.classes()) classes.push_back(c + 1);
    Json j{{"generators", w.labels()}, {"classes", classes}, {"right_angled", w.is_right_angled()}};
    j["finite"] = w.is_finite();
    return j;
}

Json numbers(const std::vector<Rational>& xs, int precision)
{
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(encode(x, precision));
    return a;
}

Json multiparam(const Multiparam& q)
{
    Json a = Json::array();
    for (const auto& x : q) a.push_back(to_string(x));
    return a;
}

// ---------------------------------------------------------------- commands

Json cmd_catalog(const Options& o)
{
    Json j = header("catalog", o);
    Json t = table({"name", "description", "generators", "classes", "finite"});
    for (const auto& e : builtin_catalog()) {
        CoxeterSystem w = builtin_system(e.name);
        t["rows"].push_back(Json::array({e.name, e.description, std::to_string(w.rank()), std::to_string(w.num_classes()),
                                         w.is_finite()}));
    }
    j["systems"] = t;
    return j;
}

Json cmd_growth(const Options& o, bool subsets, int series)
{
    CoxeterSystem w = load_system(o.system);
    GrowthData g(w);
    Json j = header("growth", o);
    j["system"] = describe(w);
    j["inverse_growth"] = encode(g.inverse_series());
    j["growth"] = encode(g.growth_series());
    if (series >= 0) {
        Json t = table({"monomial", "coefficient"});
        for (const auto& [e, c] : g.growth_series().series_coefficients(static_cast<unsigned>(series)))
            t["rows"].push_back(Json::array({Polynomial::monomial(e).to_string(), encode(c, o.precision)}));
        j["series"] = t;
    }
    if (subsets) {
        Json t = table({"T", "W_T(t)", "W^T(t)/W(t)"});
        for (Subset s : g.poset().subsets)
            t["rows"].push_back(Json::array({w.format(s), encode(g.spherical_growth_poly(s)), encode(g.wT_over_W(s))}));
        j["spherical_subsets"] = t;
    }
    return j;
}

Json cmd_rho(const Options& o)
{
    CoxeterSystem w = load_system(o.system).with_single_class();
    GrowthData g(w);
    Json j = header("rho", o);
    j["inverse_growth"] = encode(g.inverse_series());
    auto rho = g.radius_of_convergence();
    if (rho) rho->refine(Rational(1, 1000000));
    j["rho"] = rho ? encode(*rho, o.precision) : Json("inf");
    if (rho && !rho->is_rational()) {
        // 1/rho is a root of the reversed polynomial
        UniCoeffs rev(rho->polynomial().rbegin(), rho->polynomial().rend());
        Rational lo = 1 / rho->hi(), hi = 1 / rho->lo();
        j["inverse_rho"] = encode(AlgebraicNumber(rev, lo, hi), o.precision);
    } else if (rho) {
        j["inverse_rho"] = encode(1 / rho->lo(), o.precision);
    }
    return j;
}

Json cmd_region(const Options& o)
{
    CoxeterSystem w = load_system(o.system);
    GrowthData g(w);
    Multiparam q = load_q(o.q, w);
    Json j = header("region", o);
    j["q"] = multiparam(q);
    j["region"] = encode(g.classify_region(q), o.precision);
    return j;
}

Json cmd_betti(const Options& o, const std::string& method)
{
    CoxeterSystem w = load_system(o.system);
    GrowthData g(w);
    MirroredComplex z = load_complex(o.complex, w);
    Multiparam q = load_q(o.q, w);
    BettiReport r;
    if (method == "auto" || method == "formula") {
        r = betti_formula(z, g, q);
    } else if (method == "direct") {
        r = direct_betti_finite(z, g, q);
    } else if (method == "R" || method == "Rinv") {
        r.region = g.classify_region(q);
        r.method = method == "R" ? BettiMethod::formula_R : BettiMethod::formula_Rinv;
        r.degrees = method == "R" ? betti_formula_R(z, g, q) : betti_formula_Rinv(z, g, q);
        r.euler = euler_characteristic(z, g, q);
    } else {
        throw InvalidArgument("unknown method '" + method + "' (auto, formula, direct, R, Rinv)");
    }
    Json j = header("betti", o);
    j["q"] = multiparam(q);
    j["complex"] = o.complex;
    j["region"] = to_string(r.region.tag);
    j["method"] = to_string(r.method);
    Json t = table({"degree", "b"});
    for (std::size_t i = 0; i < r.degrees.size(); ++i)
        t["rows"].push_back(Json::array({std::to_string(i), encode(r.degrees[i], o.precision)}));
    j["betti"] = t;
    j["euler_characteristic"] = encode(r.euler, o.precision);
    j["alternating_sum"] = encode(r.alternating_sum(), o.precision);
    return j;
}

Json cmd_euler(const Options& o)
{
    CoxeterSystem w = load_system(o.system);
    GrowthData g(w);
    MirroredComplex z = load_complex(o.complex, w);
    Multiparam q = load_q(o.q, w);
    Json j = header("euler", o);
    j["q"] = multiparam(q);
    j["cochain_dimensions"] = numbers(cochain_dims(z, g, q), o.precision);
    j["euler_characteristic"] = encode(euler_characteristic(z, g, q), o.precision);
    j["euler_characteristic_by_types"] = encode(euler_characteristic_by_types(z, g, q), o.precision);
    j["inverse_growth_at_q"] = encode(g.inverse_at(q), o.precision);
    return j;
}

Json check_table(const std::vector<CheckResult>& results, bool with_suite)
{
    // timings only make sense for the suite driver
    std::vector<std::string> cols;
    if (with_suite) cols = {"suite", "check", "result", "seconds", "detail"};
    else cols = {"check", "result", "detail"};
    Json t = table(cols);
    for (const auto& r : results) {
        Json row = Json::array();
        if (with_suite) row.push_back(r.suite);
        row.push_back(r.name);
        row.push_back(r.passed ? "pass" : "FAIL");
        if (with_suite) {
            char secs[32];
            std::snprintf(secs, sizeof secs, "%.3f", r.seconds);
            row.push_back(secs);
        }
        row.push_back(r.detail);
        t["rows"].push_back(row);
    }
    return t;
}

bool all_passed(const std::vector<CheckResult>& rs)
{
    return std::all_of(rs.begin(), rs.end(), [](const CheckResult& r) { return r.passed; });
}

Json cmd_hecke(const Options& o, bool check, const std::string& idempotent)
{
    CoxeterSystem w = load_system(o.system);
    std::optional<Multiparam> q;
    if (!o.q.empty()) q = load_q(o.q, w);
    Json j = header("hecke", o);
    j["parameters"] = q ? multiparam(*q) : Json("symbolic");
    if (!idempotent.empty()) {
        Subset t = load_subset(idempotent, w);
        if (!w.is_spherical(t)) throw InvalidArgument("a_T and h_T need a spherical T");
        if (q) {
            HeckeAlgebra<Rational> h(w, *q);
            j["a_T"] = format_element(w, h.idempotent_a(t));
            j["h_T"] = format_element(w, h.idempotent_h(t));
        } else {
            auto h = symbolic_hecke(w);
            j["a_T"] = format_element(w, h.idempotent_a(t));
            j["h_T"] = format_element(w, h.idempotent_h(t));
        }
    }
    if (check || idempotent.empty()) {
        auto results = check_hecke_identities(w, q);
        j["checks"] = check_table(results, false);
        j["all_passed"] = all_passed(results);
    }
    return j;
}

Json cmd_solomon(const Options& o)
{
    CoxeterSystem w = load_system(o.system);
    Multiparam q = load_q(o.q, w);
    WeightedSpace l2(w, q);
    SolomonReport rep = verify_solomon(l2);
    Json j = header("solomon", o);
    j["q"] = multiparam(q);
    Json t = table({"T", "dim L2 h_T a_{S-T}", "dim L2 a_{S-T} h_T", "W^T(q)/W(q)", "equals D_T", "equals G_T"});
    for (const auto& e : rep.entries)
        t["rows"].push_back(Json::array({w.format(e.t), encode(e.dim_D, o.precision), encode(e.dim_G, o.precision),
                                         encode(e.expected, o.precision), e.matches_D, e.matches_G}));
    j["decomposition"] = t;
    j["direct_sum_D"] = rep.direct_D;
    j["direct_sum_G"] = rep.direct_G;
    j["ok"] = rep.ok();
    if (!rep.ok()) j["failure"] = rep.failure;
    return j;
}

Json cmd_ruin(const Options& o, const std::string& u_text, const std::string& t_text)
{
    CoxeterSystem w = load_system(o.system);
    Multiparam q = load_q(o.q, w);
    Subset u = u_text.empty() ? w.all() : load_subset(u_text, w);
    Subset t = load_subset(t_text, w);
    RuinReport r = ruin_homology_finite(w, u, t, q);
    Json j = header("ruin", o);
    j["q"] = multiparam(q);
    j["U"] = w.format(u);
    j["T"] = w.format(t);
    Json tb = table({"degree", "dim"});
    for (std::size_t k = 0; k < r.dims.size(); ++k)
        tb["rows"].push_back(Json::array({std::to_string(k), encode(r.dims[k], o.precision)}));
    j["homology"] = tb;
    j["expected"] = encode(r.expected, o.precision);
    j["concentrated_in"] = r.concentrated_in;
    return j;
}

Json cmd_hpoly(const Options& o)
{
    CoxeterSystem w = load_system(o.system);
    SimplicialComplex l = nerve(w);
    int n = l.dimension() + 1;
    HpolyCheck c = verify_hpoly_identity(l, n);
    Json j = header("hpoly", o);
    j["n"] = n;
    j["f_vector"] = l.f_vector();
    Json h = Json::array();
    for (const auto& x : c.h) h.push_back(to_string(x));
    j["h_vector"] = h;
    j["inverse_growth"] = encode(c.inverse_growth);
    j["from_h_polynomial"] = encode(c.from_h);
    j["equal"] = c.equal;
    return j;
}

Json roots_json(const std::vector<IsolatedRoot>& roots, int precision)
{
    Json a = Json::array();
    for (const auto& r : roots) {
        Json x = encode(r.value, precision);
        x["multiplicity"] = r.multiplicity;
        a.push_back(x);
    }
    return a;
}

Json cmd_chi(const Options& o, const std::string& expr)
{
    SimplicialComplex l = expr.empty() ? nerve(load_system(o.system)) : betti_calculus(expr).complex;
    RationalFunction chi = chi_q(l);
    Json j = header("chi", o);
    j["f_vector"] = l.f_vector();
    j["chi_q"] = encode(chi, {"q"});
    j["numerator_roots"] = chi.numerator().is_zero() ? Json::array() : roots_json(isolate_positive_roots(chi.numerator()), o.precision);
    return j;
}

Json cmd_calculus(const Options& o, const std::string& expr)
{
    CalculusResult r = betti_calculus(expr);
    Json j = header("calculus", o);
    j["expression"] = expr;
    j["f_vector"] = r.complex.f_vector();
    Json b = Json::array();
    for (std::size_t i = 0; i < r.betti.size(); ++i) b.push_back(Json{{"degree", i}, {"b", encode(r.betti[i], o.precision)}});
    j["betti"] = b;
    RationalFunction chi = chi_q(r.complex);
    j["chi_q"] = encode(chi, {"q"});
    j["alternating_sum_equals_chi"] = alternating_sum(r.betti) == PiecewiseRational(chi);
    return j;
}

Json cmd_existence(const Options& o, int m)
{
    ExistenceReport r = example_existence(m);
    Json j = header("example-existence", o);
    j["m"] = m;
    Json chis;
    auto put = [&](const char* name, const RationalFunction& f) { chis[name] = encode(f, {"q"}); };
    put("annulus", r.chi_annulus);
    put("suspended_annulus", r.chi_suspended_annulus);
    put("filling", r.chi_filling);
    put("suspended_polygon", r.chi_suspended_polygon);
    put("A", r.chi_a);
    put("A_hat", r.chi_a_hat);
    put("L", r.chi_l);
    j["chi_q"] = chis;
    j["built_complexes_agree"] = r.chi_a == r.chi_a_built && r.chi_a_hat == r.chi_a_hat_built && r.chi_l == r.chi_l_built;
    j["annulus_f_vector"] = r.f_annulus;
    j["L_is_flag"] = r.flag_l;
    j["A_hat_is_flag"] = r.flag_a_hat;
    j["roots_A_hat"] = roots_json(r.roots_a_hat, o.precision);
    j["roots_L"] = roots_json(r.roots_l, o.precision);
    return j;
}

Json cmd_verify(const Options& o, const std::string& suite, std::uint64_t seed, bool& ok)
{
    auto results = run_suite(suite, seed);
    ok = all_passed(results);
    Json j = header("verify", o);
    j["suite"] = suite;
    j["seed"] = seed;
    j["results"] = check_table(results, true);
    std::size_t passed = std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
    j["passed"] = passed;
    j["failed"] = results.size() - passed;
    return j;
}

Json cmd_ball(const Options& o, bool list)
{
    CoxeterSystem w = load_system(o.system);
    Budget b{o.budget, o.timeout};
    auto ball = w.enumerate_ball(o.max_length, b);
    std::vector<long> hist(o.max_length + 1, 0);
    for (const auto& e : ball) ++hist[e.length()];
    Json j = header("ball", o);
    j["max_length"] = o.max_length;
    j["size"] = ball.size();
    Json t = table({"length", "count"});
    for (std::size_t i = 0; i < hist.size(); ++i) t["rows"].push_back(Json::array({std::to_string(i), std::to_string(hist[i])}));
    j["histogram"] = t;
    if (list) {
        Json els = Json::array();
        for (const auto& e : ball) els.push_back(w.format(e));
        j["elements"] = els;
    }
    return j;
}

Json cmd_normal_form(const Options& o, const std::string& word)
{
    CoxeterSystem w = load_system(o.system);
    Element e = w.normal_form(w.parse_word(word));
    Json j = header("normal-form", o);
    j["input"] = word;
    j["normal_form"] = w.format(e);
    j["length"] = e.length();
    j["right_descents"] = w.format(w.descent_set(e));
    j["left_descents"] = w.format(w.left_descent_set(e));
    return j;
}

Json cmd_sample(const Options& o, const std::string& from, const std::string& to, int steps)
{
    CoxeterSystem w = load_system(o.system);
    GrowthData g(w);
    MirroredComplex z = load_complex(o.complex, w);
    Rational a = parse_rational(from), b = parse_rational(to);
    if (sgn(a) <= 0 || b <= a) throw InvalidArgument("need 0 < --from < --to");
    if (steps < 1) throw InvalidArgument("--steps must be positive");
    int top = z.base().dimension();
    std::vector<std::string> cols{"q", "region"};
    for (int i = 0; i <= top; ++i) cols.push_back("b" + std::to_string(i));
    Json t = table(cols);
    for (int k = 0; k <= steps; ++k) {
        Rational q = a + (b - a) * k / steps;
        q.canonicalize();
        Multiparam qs(w.num_classes(), q);
        Json row = Json::array({encode(q, o.precision)});
        try {
            BettiReport r = betti_formula(z, g, qs);
            row.push_back(to_string(r.region.tag));
            for (const auto& x : r.degrees) row.push_back(encode(x, o.precision));
        } catch (const NotComputable&) {
            row.push_back(to_string(RegionTag::intermediate));
            for (int i = 0; i <= top; ++i) row.push_back(nullptr);
        }
        t["rows"].push_back(row);
    }
    Json j = header("sample", o);
    j["samples"] = t;
    return j;
}

Json error_object(const std::string& code, const std::string& message)
{
    return Json{{"schema_version", kSchemaVersion}, {"error", Json{{"code", code}, {"message", message}}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Growth series, Hecke algebras and weighted L2-Betti numbers of Coxeter groups", "coxl2"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* c, bool system, bool q) {
        if (system) c->add_option("--system", o.system, "builtin name, system file, or inline text ('generators: s t; m s t 5')");
        if (q) c->add_option("--q", o.q, "parameters, comma separated, one per class; a single value applies to all");
        c->add_option("--format", o.format, "human, json or csv")
            ->check(CLI::IsMember({"human", "json", "csv"}))
            ->capture_default_str();
        c->add_option("--precision", o.precision, "digits after the point in decimal renderings")
            ->check(CLI::Range(1, 200))
            ->capture_default_str();
    };
    auto with_complex = [&](CLI::App* c) {
        c->add_option("--complex", o.complex, "chamber, circle, a mirrored-complex file or inline text")->capture_default_str();
    };

    std::function<Json()> action;
    bool checks_ok = true;

    auto* catalog = app.add_subcommand("catalog", "list the builtin systems");
    common(catalog, false, false);
    catalog->callback([&] { action = [&] { return cmd_catalog(o); }; });

    bool subsets = false;
    int series = -1;
    auto* growth = app.add_subcommand("growth", "growth series W(t) and 1/W(t)");
    common(growth, true, false);
    growth->add_flag("--subsets", subsets, "list W_T and W^T/W for every spherical T");
    growth->add_option("--series", series, "Taylor coefficients up to this total degree");
    growth->callback([&] { action = [&] { return cmd_growth(o, subsets, series); }; });

    auto* rho = app.add_subcommand("rho", "radius of convergence of the one-parameter growth series");
    common(rho, true, false);
    rho->callback([&] { action = [&] { return cmd_rho(o); }; });

    auto* region = app.add_subcommand("region", "locate q relative to R and R^-1");
    common(region, true, true);
    region->callback([&] { action = [&] { return cmd_region(o); }; });

    std::string method = "auto";
    auto* betti = app.add_subcommand("betti", "weighted L2-Betti numbers");
    common(betti, true, true);
    with_complex(betti);
    betti->add_option("--method", method, "auto, direct (finite W), R or Rinv (force one side)")->capture_default_str();
    betti->callback([&] { action = [&] { return cmd_betti(o, method); }; });

    auto* euler = app.add_subcommand("euler", "weighted Euler characteristic");
    common(euler, true, true);
    with_complex(euler);
    euler->callback([&] { action = [&] { return cmd_euler(o); }; });

    bool check = false;
    std::string idem;
    auto* hecke = app.add_subcommand("hecke", "Hecke algebra idempotents and identities");
    common(hecke, true, true);
    hecke->add_flag("--check", check, "run the identity checks (symbolic when --q is absent)");
    hecke->add_option("--idempotent", idem, "print a_T and h_T for this T, e.g. 's t'");
    hecke->callback([&] {
        action = [&] {
            Json j = cmd_hecke(o, check, idem);
            if (j.contains("all_passed")) checks_ok = j["all_passed"].get<bool>();
            return j;
        };
    });

    auto* solomon = app.add_subcommand("solomon", "decomposition of L2_q for finite W");
    common(solomon, true, true);
    solomon->callback([&] { action = [&] { return cmd_solomon(o); }; });

    std::string ru, rt;
    auto* ruin = app.add_subcommand("ruin", "L2_q homology of a ruin of a finite Coxeter group");
    common(ruin, true, true);
    ruin->add_option("--U", ru, "generators of U (default S)");
    ruin->add_option("--T", rt, "generators of T (default empty)");
    ruin->callback([&] { action = [&] { return cmd_ruin(o, ru, rt); }; });

    auto* hpoly = app.add_subcommand("hpoly", "1/W(t) against the h-polynomial of the nerve (right-angled)");
    common(hpoly, true, false);
    hpoly->callback([&] { action = [&] { return cmd_hpoly(o); }; });

    std::string chi_expr;
    auto* chi = app.add_subcommand("chi", "chi_q of the nerve of a right-angled system, or of a calculus expression");
    common(chi, true, false);
    chi->add_option("--expr", chi_expr, "calculus expression instead of --system");
    chi->callback([&] { action = [&] { return cmd_chi(o, chi_expr); }; });

    std::string expr;
    auto* calculus = app.add_subcommand("calculus", "piecewise Betti functions of flag complexes built from points and octahedra");
    common(calculus, false, false);
    calculus->add_option("expression", expr, "e.g. 'join(P3, cone(O2))'")->required();
    calculus->callback([&] { action = [&] { return cmd_calculus(o, expr); }; });

    int m = 10;
    auto* existence = app.add_subcommand("example-existence", "Euler characteristics of the doubled-annulus construction");
    common(existence, false, false);
    existence->add_option("--m", m, "outer polygon size (at least 5)")->capture_default_str();
    existence->callback([&] { action = [&] { return cmd_existence(o, m); }; });

    std::string suite = "all";
    std::uint64_t seed = 1;
    auto* verify = app.add_subcommand("verify", "run property-check suites");
    common(verify, false, false);
    verify->add_option("--suite", suite, "all, " + [] {
        std::string s;
        for (const auto& n : suite_names()) s += (s.empty() ? "" : ", ") + n;
        return s;
    }())->capture_default_str();
    verify->add_option("--seed", seed, "random seed")->capture_default_str();
    verify->callback([&] { action = [&] { return cmd_verify(o, suite, seed, checks_ok); }; });

    bool list = false;
    auto* ball = app.add_subcommand("ball", "enumerate the ball of radius --max-length");
    common(ball, true, false);
    ball->add_option("--max-length", o.max_length, "radius")->capture_default_str();
    ball->add_option("--budget", o.budget, "maximum number of elements")->capture_default_str();
    ball->add_option("--timeout", o.timeout, "wall-clock limit in seconds (0: none)");
    ball->add_flag("--list", list, "print every element");
    ball->callback([&] { action = [&] { return cmd_ball(o, list); }; });

    std::string word;
    auto* nf = app.add_subcommand("normal-form", "shortlex normal form of a word");
    common(nf, true, false);
    nf->add_option("--word", word, "generators separated by spaces, e.g. 's t s'")->required();
    nf->callback([&] { action = [&] { return cmd_normal_form(o, word); }; });

    std::string from = "1/10", to = "10";
    int steps = 20;
    auto* sample = app.add_subcommand("sample", "Betti numbers along q*(1,...,1), plot-ready");
    common(sample, true, false);
    with_complex(sample);
    sample->add_option("--from", from)->capture_default_str();
    sample->add_option("--to", to)->capture_default_str();
    sample->add_option("--steps", steps)->capture_default_str();
    sample->callback([&] { action = [&] { return cmd_sample(o, from, to, steps); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        out << error_object("usage", e.what()).dump(2) << '\n';
        return 1;
    }

    try {
        Format format = parse_format(o.format);
        Json report = action();
        render(report, format, out);
    } catch (const BudgetExceeded& e) {
        Json j = error_object(e.code(), e.what());
        j["error"]["completed_length"] = e.completed_length();
        j["error"]["elements_found"] = e.partial().size();
        out << j.dump(2) << '\n';
        return 2;
    } catch (const Error& e) {
        out << error_object(e.code(), e.what()).dump(2) << '\n';
        return 2;
    } catch (const std::exception& e) {
        out << error_object("internal", e.what()).dump(2) << '\n';
        return 2;
    }
    return checks_ok ? 0 : 3;
}

}  // namespace coxl2::tool
