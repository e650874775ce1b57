// isoder: exact computations with plane polynomial derivations — simplicity
// of Shamsuddin derivations, isotropy groups, commutation and conjugation of
// automorphisms, truncated flows, stable ideals, and singular-locus
// certificates. Text or JSON output; see README for the schema.

#include "CLI11.hpp"

#include "isoder/derivation.hpp"
#include "isoder/isotropy.hpp"
#include "isoder/parse.hpp"
#include "isoder/report.hpp"
#include "isoder/series.hpp"

#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace isoder;
using nlohmann::json;

struct Options {
    std::string a, b, f, rho, point;
    int order = 8;
    int max_degree = 64;
    bool sham = false;
    bool use_stdin = false;
    std::string format = "text";
};

ParseOptions parse_opts(const Options& o) { return ParseOptions{o.max_degree}; }

/// key=value lines from stdin fill inputs that were not set by flags.
void merge_stdin(Options& o) {
    if (!o.use_stdin) return;
    std::map<std::string, std::string*> slots = {
        {"a", &o.a}, {"b", &o.b}, {"f", &o.f}, {"rho", &o.rho}, {"point", &o.point}};
    std::string line;
    while (std::getline(std::cin, line)) {
        const size_t eq = line.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = line.substr(0, eq);
        const auto it = slots.find(key);
        if (it != slots.end() && it->second->empty()) *it->second = line.substr(eq + 1);
    }
}

Derivation build_derivation(const Options& o, json& inputs) {
    if (o.a.empty() || o.b.empty())
        throw ParseError("both --a and --b are required", 1, 1);
    if (o.sham) {
        const UPoly a = parse_upoly_x(o.a, parse_opts(o));
        const UPoly b = parse_upoly_x(o.b, parse_opts(o));
        inputs["a"] = print_upoly(a);
        inputs["b"] = print_upoly(b);
        inputs["sham"] = true;
        return ShamsuddinDerivation{a, b}.to_derivation();
    }
    const BPoly a = parse_poly(o.a, parse_opts(o));
    const BPoly b = parse_poly(o.b, parse_opts(o));
    inputs["a"] = print_poly(a);
    inputs["b"] = print_poly(b);
    inputs["sham"] = false;
    return Derivation{a, b};
}

std::pair<UPoly, UPoly> build_sham_pair(const Options& o, json& inputs) {
    if (o.a.empty() || o.b.empty())
        throw ParseError("both --a and --b are required", 1, 1);
    const UPoly a = parse_upoly_x(o.a, parse_opts(o));
    const UPoly b = parse_upoly_x(o.b, parse_opts(o));
    inputs["a"] = print_upoly(a);
    inputs["b"] = print_upoly(b);
    return {a, b};
}

std::pair<Rat, Rat> build_point(const Options& o, json& inputs) {
    if (o.point.empty()) throw ParseError("--point \"p1,p2\" is required", 1, 1);
    const size_t comma = o.point.find(',');
    if (comma == std::string::npos)
        throw ParseError("--point needs two comma-separated rationals", 1, 1);
    const Rat p1 = parse_rational(o.point.substr(0, comma));
    const Rat p2 = parse_rational(o.point.substr(comma + 1));
    inputs["point"] = "(" + rat_to_string(p1) + ", " + rat_to_string(p2) + ")";
    return {p1, p2};
}

Automorphism build_rho(const Options& o, json& inputs) {
    if (o.rho.empty()) throw ParseError("--rho \"<letter word>\" is required", 1, 1);
    const Automorphism rho = parse_automorphism(o.rho, parse_opts(o));
    const RawEndo e = expand(rho);
    inputs["rho_x"] = print_poly(e.f);
    inputs["rho_y"] = print_poly(e.g);
    return rho;
}

json run_simple(const Options& o) {
    json r = make_report("simple");
    const auto [a, b] = build_sham_pair(o, r["inputs"]);
    if (a.is_zero()) {
        r["verdict"] = "not simple";
        r["witness"] = {{"reason", "a = 0: h' = b is solved by every antiderivative of b"},
                        {"h_base", print_upoly(b.antiderivative())}};
        return r;
    }
    const OdeSolution sol = solve_sham_ode(a, b);
    if (sol.kind == OdeSolution::Kind::Unique) {
        r["verdict"] = "not simple";
        r["witness"] = {{"h", print_upoly(*sol.h)}};
        return r;
    }
    r["verdict"] = "simple";
    const int forced = b.degree() - a.degree();
    r["witness"] = {
        {"certificate", "h' = a*h + b has no polynomial solution: a solution would need "
                        "degree deg b - deg a, and the coefficient linear system at that "
                        "degree is inconsistent"},
        {"forced_degree", forced < 0 ? "negative (deg b < deg a)" : std::to_string(forced)}};
    return r;
}

std::string family_maps(const IsotropyDescription& d) {
    switch (d.kind) {
        case IsotropyKind::Trivial: return "only the identity";
        case IsotropyKind::CaseIIIFamily: return "x -> x, y -> (1-d)*h + d*y, d != 0";
        case IsotropyKind::ScaleOnly: return "x -> x, y -> d*y, d != 0";
        case IsotropyKind::ConstABFamily: return "x -> x+c, y -> b*(d-1)/a + d*y, d != 0";
        case IsotropyKind::ShiftScale: return "x -> x+c, y -> d*y, d != 0";
        case IsotropyKind::FullDeJonquieres: return "x -> x+P(y), y -> d + beta*y, beta != 0";
        case IsotropyKind::SubgroupN0:
            return "x -> x+c, y -> d + b*(1-beta)*x + beta*y, beta != 0";
        case IsotropyKind::ConjugatedDeJonquieres:
            return "tau^-1 o sigma o tau with tau: y -> B(x)+y and sigma: x -> x+P(y), "
                   "y -> d + beta*y, beta != 0";
    }
    return "";
}

json run_isotropy(const Options& o) {
    json r = make_report("isotropy");
    const auto [a, b] = build_sham_pair(o, r["inputs"]);
    const IsotropyDescription d = isotropy_shamsuddin(a, b);
    r["verdict"] = kind_name(d.kind);
    json w;
    w["family"] = kind_name(d.kind);
    w["maps"] = family_maps(d);
    if (d.h) w["h"] = print_upoly(*d.h);
    if (d.B) w["B"] = print_upoly(*d.B);
    if (d.const_a) w["a"] = rat_to_string(*d.const_a);
    if (d.const_b) w["b"] = rat_to_string(*d.const_b);
    if (d.kind != IsotropyKind::Trivial) w["group_law"] = group_law(d).description;
    r["witness"] = w;
    if (d.partial) r["flags"].push_back("partial");
    if (d.extension) r["flags"].push_back("extension");
    for (const std::string& n : d.notes) r["flags"].push_back(n);
    return r;
}

json run_commute(const Options& o) {
    json r = make_report("commute");
    const Derivation D = build_derivation(o, r["inputs"]);
    const Automorphism rho = build_rho(o, r["inputs"]);
    const RawEndo e = expand(rho);
    const BPoly res_x = apply(D, e.f) - apply(e, D.a);
    const BPoly res_y = apply(D, e.g) - apply(e, D.b);
    if (res_x.is_zero() && res_y.is_zero()) {
        r["verdict"] = "commutes";
    } else {
        r["verdict"] = "does not commute";
        r["witness"] = {{"residual_x", print_poly(res_x)}, {"residual_y", print_poly(res_y)}};
    }
    return r;
}

json run_conjugate(const Options& o) {
    json r = make_report("conjugate");
    const Derivation D = build_derivation(o, r["inputs"]);
    const Automorphism rho = build_rho(o, r["inputs"]);
    const Derivation C = conjugate(rho, D);
    r["verdict"] = "ok";
    r["witness"] = {{"a", print_poly(C.a)}, {"b", print_poly(C.b)}};
    return r;
}

json run_flow(const Options& o) {
    json r = make_report("flow");
    const Derivation D = build_derivation(o, r["inputs"]);
    const auto [p1, p2] = build_point(o, r["inputs"]);
    r["inputs"]["order"] = o.order;
    const SolutionPair s = solve_through(D, p1, p2, o.order);
    json phi = json::array(), psi = json::array();
    for (const Rat& c : s.phi.coeffs()) phi.push_back(rat_to_string(c));
    for (const Rat& c : s.psi.coeffs()) psi.push_back(rat_to_string(c));
    r["verdict"] = "ok";
    r["witness"] = {{"order", o.order}, {"phi", phi}, {"psi", psi}};
    return r;
}

json run_stable(const Options& o) {
    json r = make_report("stable");
    const Derivation D = build_derivation(o, r["inputs"]);
    if (o.f.empty()) throw ParseError("--f <polynomial> is required", 1, 1);
    const BPoly f = parse_poly(o.f, parse_opts(o));
    r["inputs"]["f"] = print_poly(f);
    const auto q = stable_ideal_quotient(D, f);
    if (q) {
        r["verdict"] = "stable";
        r["witness"] = {{"quotient", print_poly(*q)}};
    } else {
        r["verdict"] = "not stable";
    }
    return r;
}

json run_singular(const Options& o) {
    json r = make_report("singular");
    const Derivation D = build_derivation(o, r["inputs"]);
    const SingularCertificate cert = certify_no_singular_points(D);
    json w;
    w["witness"] = cert.witness;
    w["detail"] = cert.detail;
    switch (cert.verdict) {
        case SingularCertificate::Verdict::NoSingularPoints:
            r["verdict"] = "no singular points";
            break;
        case SingularCertificate::Verdict::SingularPointFound:
            r["verdict"] = "singular point found";
            if (cert.rational_point)
                w["point"] = "(" + rat_to_string(cert.rational_point->first) + ", " +
                             rat_to_string(cert.rational_point->second) + ")";
            break;
        case SingularCertificate::Verdict::CommonFactor:
            r["verdict"] = "common factor";
            w["common_factor"] = print_poly(*cert.common_factor);
            break;
    }
    r["witness"] = w;
    return r;
}

void emit(const json& report, const Options& o) {
    if (o.format == "json")
        std::cout << report.dump(2) << "\n";
    else
        std::cout << render_text(report);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with plane polynomial derivations"};
    app.require_subcommand(1);

    Options o;
    std::string command;

    auto add_common = [&](CLI::App* sub, bool needs_ab) {
        if (needs_ab) {
            sub->add_option("--a", o.a, "coefficient of d/dx (or a(x) with --sham)");
            sub->add_option("--b", o.b, "coefficient of d/dy (or b(x) with --sham)");
            sub->add_flag("--sham", o.sham,
                          "read --a/--b as univariate a(x), b(x) of d/dx + (a*y+b)*d/dy");
        }
        sub->add_option("--max-degree", o.max_degree, "parser exponent cap")
            ->envname("ISODER_MAX_DEGREE");
        sub->add_option("--format", o.format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_flag("--stdin", o.use_stdin, "read missing inputs as key=value lines from stdin");
        sub->callback([&command, sub] { command = sub->get_name(); });
    };

    CLI::App* simple = app.add_subcommand("simple", "decide Shamsuddin simplicity");
    simple->add_option("--a", o.a, "a(x)");
    simple->add_option("--b", o.b, "b(x)");
    add_common(simple, false);

    CLI::App* isotropy = app.add_subcommand("isotropy", "describe the isotropy group Aut(D)");
    isotropy->add_option("--a", o.a, "a(x)");
    isotropy->add_option("--b", o.b, "b(x)");
    add_common(isotropy, false);

    CLI::App* commute = app.add_subcommand("commute", "does rho commute with D?");
    add_common(commute, true);
    commute->add_option("--rho", o.rho, "automorphism word");

    CLI::App* conj = app.add_subcommand("conjugate", "compute rho D rho^-1");
    add_common(conj, true);
    conj->add_option("--rho", o.rho, "automorphism word");

    CLI::App* flow = app.add_subcommand("flow", "truncated solution through a point");
    add_common(flow, true);
    flow->add_option("--point", o.point, "base point p1,p2");
    flow->add_option("--order", o.order, "truncation order (default 8)")->envname("ISODER_ORDER");

    CLI::App* stable = app.add_subcommand("stable", "is the ideal (f) stable under D?");
    add_common(stable, true);
    stable->add_option("--f", o.f, "the ideal generator");

    CLI::App* singular = app.add_subcommand("singular", "certify the singular locus of D");
    add_common(singular, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        merge_stdin(o);
        json report;
        if (command == "simple")
            report = run_simple(o);
        else if (command == "isotropy")
            report = run_isotropy(o);
        else if (command == "commute")
            report = run_commute(o);
        else if (command == "conjugate")
            report = run_conjugate(o);
        else if (command == "flow")
            report = run_flow(o);
        else if (command == "stable")
            report = run_stable(o);
        else if (command == "singular")
            report = run_singular(o);
        emit(report, o);
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
