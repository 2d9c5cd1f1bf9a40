#include "commands.hpp"

#include <algorithm>
#include <functional>

#include <CLI11.hpp>

#include <ncgeode/gfseries.hpp>
#include <ncgeode/io.hpp>
#include <ncgeode/json_io.hpp>
#include <ncgeode/lagrange.hpp>
#include <ncgeode/schroeder.hpp>
#include <ncgeode/verify.hpp>

namespace ncgeode::cli {

namespace {

void require(bool ok, const std::string& message)
{
    if (!ok)
        throw usage_error(message);
}

Basis basis_option(const std::string& name)
{
    require(name == "S" || name == "R" || name == "L", "--basis must be S, R or L");
    return parse_basis(name);
}

void check_format(const std::string& format)
{
    require(format == "text" || format == "json", "--format must be text or json");
}

void check_degree(int degree) { require(degree >= 0, "--degree must be nonnegative"); }

template <class C>
int emit_series(const Series<C>& s, const std::string& name, const std::string& basis, const std::string& format,
                std::ostream& out)
{
    Series<C> converted = convert_basis(s, basis_option(basis));
    if (format == "json")
        out << series_to_json(converted, name).dump(2) << '\n';
    else
        out << render_series(converted, name);
    return Ok;
}

std::string join_sequence(const UniSeries& s)
{
    std::string out;
    for (int n = 0; n <= s.order(); ++n)
        out += (n ? ", " : "") + to_string(s[n]);
    return out;
}

json sequence_json(const UniSeries& s)
{
    json a = json::array();
    for (int n = 0; n <= s.order(); ++n)
        a.push_back(to_string(s[n]));
    return a;
}

ClosedForm parse_closed_form(const std::string& name)
{
    if (name == "catalan")
        return ClosedForm::Catalan;
    if (name == "geode")
        return ClosedForm::Geode;
    if (name == "ribbon-sums")
        return ClosedForm::RibbonSums;
    if (name == "lambda-sums")
        return ClosedForm::LambdaSums;
    throw usage_error("--form must be catalan, geode, ribbon-sums or lambda-sums");
}

// Comma-separated positive integers, e.g. "3,1".
Composition parse_composition_option(const std::string& text)
{
    std::vector<int> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        bool digits = !item.empty() && item.size() < 9 &&
                      std::all_of(item.begin(), item.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
        require(digits && std::stoi(item) > 0, "'" + text + "' is not a comma-separated list of positive integers");
        parts.push_back(std::stoi(item));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return Composition(std::move(parts));
}

} // namespace

int run_expand(const ExpandOptions& o, std::ostream& out)
{
    check_degree(o.degree);
    check_format(o.format);
    basis_option(o.basis);
    const int N = o.degree;
    if (o.ring == "int") {
        if (o.series == "g")
            return emit_series(lagrange_series(N), "g", o.basis, o.format, out);
        if (o.series == "gamma")
            return emit_series(geode(N), "gamma", o.basis, o.format, out);
        if (o.series == "gessel")
            return emit_series(gessel_gamma(N), "gamma", o.basis, o.format, out);
        if (o.series == "h")
            return emit_series(prime_series(lagrange_series(N)).h, "h", o.basis, o.format, out);
        if (o.series == "eta")
            return emit_series(prime_series(lagrange_series(N + 1)).eta, "eta", o.basis, o.format, out);
        require(o.series != "theta", "--series theta needs --ring polyt");
    } else if (o.ring == "polyt") {
        if (o.series == "g")
            return emit_series(t_lagrange_series(N), "g", o.basis, o.format, out);
        if (o.series == "gamma")
            return emit_series(gamma_t(t_lagrange_series(N + 1)), "gamma", o.basis, o.format, out);
        if (o.series == "theta")
            return emit_series(theta_t(t_lagrange_series(N + 1)), "theta", o.basis, o.format, out);
        if (o.series == "h")
            return emit_series(h_t(t_lagrange_series(N)), "h", o.basis, o.format, out);
        if (o.series == "eta")
            return emit_series(eta_t(t_lagrange_series(N + 1)), "eta", o.basis, o.format, out);
        require(o.series != "gessel", "--series gessel needs --ring int");
    } else {
        throw usage_error("--ring must be int or polyt");
    }
    throw usage_error("unknown --series '" + o.series + "'");
}

int run_klagrange(const KLagrangeOptions& o, std::ostream& out)
{
    check_degree(o.degree);
    check_format(o.format);
    basis_option(o.basis);
    const int N = o.degree;
    const std::string name = "g^(" + std::to_string(o.k) + ")";
    if (o.route == "t")
        return emit_series(t_lagrange_at(t_lagrange_series(N), o.k), name, o.basis, o.format, out);
    if (o.route == "phi") {
        require(o.k >= 1, "--route phi needs k >= 1");
        return emit_series(phi(lagrange_series(o.k * N), o.k).truncated(N), name, o.basis, o.format, out);
    }
    if (o.route == "direct")
        return emit_series(k_lagrange_direct(o.k, N), name, o.basis, o.format, out);
    throw usage_error("--route must be t, phi or direct");
}

int run_eseries(const ESeriesOptions& o, std::ostream& out)
{
    check_degree(o.degree);
    check_format(o.format);
    basis_option(o.basis);
    ERoute route;
    if (o.route == "formula")
        route = ERoute::Formula;
    else if (o.route == "trees")
        route = ERoute::Trees;
    else if (o.route == "system")
        route = ERoute::System;
    else
        throw usage_error("--route must be formula, trees or system");
    if (o.series == "g")
        return emit_series(e_lagrange_series(o.degree, route), "g", o.basis, o.format, out);
    if (o.series == "gamma") {
        require(o.k >= 1, "--k must be positive");
        return emit_series(annihilate(e_lagrange_series(o.degree + o.k, route), o.k), "gamma", o.basis, o.format,
                           out);
    }
    throw usage_error("--series must be g or gamma");
}

int run_trees(const TreesOptions& o, std::ostream& out)
{
    check_format(o.format);
    std::vector<std::string> items;
    json header;
    if (o.kind == "pqr") {
        require(!o.shape.empty(), "--kind pqr needs --shape");
        Composition shape = parse_composition_option(o.shape);
        require(!shape.empty(), "--shape must be a nonempty composition");
        for (const auto& f : parking_quasi_ribbons(shape))
            items.push_back(quasi_ribbon_label(f));
        header = {{"kind", o.kind}, {"shape", shape.parts()}};
    } else {
        require(o.n >= 0, "--n must be nonnegative");
        std::vector<Word> codes;
        if (o.kind == "lukasiewicz")
            codes = enumerate_lukasiewicz(o.n);
        else if (o.kind == "schroeder")
            codes = enumerate_schroeder(o.n);
        else if (o.kind == "prime-schroeder")
            codes = enumerate_prime_schroeder(o.n);
        else
            throw usage_error("--kind must be lukasiewicz, schroeder, prime-schroeder or pqr");
        for (const auto& w : codes)
            items.push_back(word_label(w));
        header = {{"kind", o.kind}, {"n", o.n}};
    }
    if (o.format == "json") {
        header["count"] = items.size();
        header["items"] = items;
        out << header.dump(2) << '\n';
    } else {
        for (const auto& s : items)
            out << s << '\n';
        out << "count: " << items.size() << '\n';
    }
    return Ok;
}

int run_specialize(const SpecializeOptions& o, std::ostream& out)
{
    check_degree(o.degree);
    check_format(o.format);
    const int N = o.degree;

    if (o.map == "ones" || o.map == "alternating" || o.map == "first-only") {
        require(o.series == "g_e", "--map " + o.map + " acts on --series g_e");
        auto ge = e_lagrange_series(N);
        Series<Integer> s = o.map == "ones"          ? specialize_ones(ge)
                            : o.map == "alternating" ? specialize_alternating(ge)
                                                     : specialize_first_only(ge);
        return emit_series(s, o.map == "alternating" ? "K" : "g", "S", o.format, out);
    }
    if (o.map == "zq") {
        require(o.series == "g_e", "--map zq acts on --series g_e");
        BiSeries s = specialize_zq(e_lagrange_series(N));
        if (o.format == "json") {
            json terms = json::array();
            for (const auto& [k, c] : s.terms())
                terms.push_back({{"z", k.first}, {"q", k.second}, {"coeff", to_string(c)}});
            out << json{{"map", "zq"}, {"order", N}, {"terms", terms}}.dump(2) << '\n';
        } else {
            for (const auto& [k, c] : s.terms())
                out << "[z^" << k.first << " q^" << k.second << "] = " << to_string(c) << '\n';
        }
        return Ok;
    }

    UniSeries seq;
    std::string label;
    if (o.map == "closed-form") {
        seq = closed_form(parse_closed_form(o.form), N);
        label = o.form;
    } else {
        UniMap map;
        try {
            map = parse_unimap(o.map);
        } catch (const parse_error& e) {
            throw usage_error(e.what());
        }
        Series<Integer> s;
        if (o.series == "g")
            s = lagrange_series(N);
        else if (o.series == "gamma")
            s = geode(N);
        else
            throw usage_error("--map " + o.map + " acts on --series g or gamma");
        seq = specialize(s, map);
        label = o.series + " " + o.map;
    }
    if (o.format == "json")
        out << json{{"label", label}, {"order", N}, {"values", sequence_json(seq)}}.dump(2) << '\n';
    else
        out << label << ": " << join_sequence(seq) << '\n';
    return Ok;
}

int run_verify(const VerifyOptions& o, std::ostream& out)
{
    check_degree(o.degree);
    Suite suite;
    try {
        suite = parse_suite(o.suite);
    } catch (const parse_error& e) {
        throw usage_error(e.what());
    }
    Report r = run_suite(suite, o.degree);
    out << r.render();
    return r.passed() ? Ok : Failure;
}

namespace {

void series_flags(CLI::App* cmd, std::string& basis, int& degree, std::string& format)
{
    cmd->add_option("--basis", basis, "S, R or L (Lambda)")->capture_default_str();
    cmd->add_option("--degree", degree, "truncation degree")->capture_default_str();
    cmd->add_option("--format", format, "text or json")->capture_default_str();
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Lagrange series, geodes and their specializations in noncommutative symmetric functions"};
    app.require_subcommand(1);
    std::function<int()> action;

    ExpandOptions ex;
    auto* expand = app.add_subcommand("expand", "expand g, gamma, h, eta, theta or Gessel's gamma");
    expand->add_option("--series", ex.series, "g, gamma, h, eta, gessel, theta (polyt)")->capture_default_str();
    expand->add_option("--ring", ex.ring, "int or polyt")->capture_default_str();
    series_flags(expand, ex.basis, ex.degree, ex.format);
    expand->callback([&] { action = [&] { return run_expand(ex, out); }; });

    KLagrangeOptions kl;
    auto* klag = app.add_subcommand("klagrange", "the k-Lagrange series g^(k)");
    klag->add_option("--k", kl.k, "integer k (0 gives sigma_1, -1 the free cumulants)")->capture_default_str();
    klag->add_option("--route", kl.route, "t, phi or direct")->capture_default_str();
    series_flags(klag, kl.basis, kl.degree, kl.format);
    klag->callback([&] { action = [&] { return run_klagrange(kl, out); }; });

    ESeriesOptions es;
    auto* eser = app.add_subcommand("eseries", "the e-Lagrange series and its geode");
    eser->add_option("--series", es.series, "g or gamma")->capture_default_str();
    eser->add_option("--route", es.route, "formula, trees or system")->capture_default_str();
    eser->add_option("--k", es.k, "annihilator index for gamma")->capture_default_str();
    series_flags(eser, es.basis, es.degree, es.format);
    eser->callback([&] { action = [&] { return run_eseries(es, out); }; });

    TreesOptions tr;
    auto* trees = app.add_subcommand("trees", "enumerate trees or parking quasi-ribbons");
    trees->add_option("--kind", tr.kind, "lukasiewicz, schroeder, prime-schroeder or pqr")->capture_default_str();
    trees->add_option("--n", tr.n, "size")->capture_default_str();
    trees->add_option("--shape", tr.shape, "ribbon shape for pqr, e.g. 3,1");
    trees->add_option("--format", tr.format, "text or json")->capture_default_str();
    trees->callback([&] { action = [&] { return run_trees(tr, out); }; });

    SpecializeOptions sp;
    auto* spz = app.add_subcommand("specialize", "commutative images and closed forms");
    spz->add_option("--series", sp.series, "g or gamma; g_e for ones, alternating, first-only, zq")
        ->capture_default_str();
    spz->add_option("--map", sp.map,
                     "catalan, coeff-sum, ribbon-u, lambda-abs, closed-form, ones, alternating, first-only, zq")
        ->capture_default_str();
    spz->add_option("--form", sp.form, "closed-form: catalan, geode, ribbon-sums, lambda-sums")
        ->capture_default_str();
    spz->add_option("--degree", sp.degree, "truncation order")->capture_default_str();
    spz->add_option("--format", sp.format, "text or json")->capture_default_str();
    spz->callback([&] { action = [&] { return run_specialize(sp, out); }; });

    VerifyOptions vf;
    auto* verify = app.add_subcommand("verify", "run the verification suites");
    verify->add_option("--suite", vf.suite, "all, paper, identities or oeis")->capture_default_str();
    verify->add_option("--degree", vf.degree, "degree bound")->capture_default_str();
    verify->callback([&] { action = [&] { return run_verify(vf, out); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return Usage;
    }

    try {
        return action();
    } catch (const usage_error& e) {
        err << "error: " << e.what() << '\n';
        return Usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return Failure;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv{"ncgeode"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace ncgeode::cli
