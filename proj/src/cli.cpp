#include "fixpoint/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <memory>
#include <ostream>

#include <CLI11.hpp>

#include "fixpoint/dynamics.hpp"
#include "fixpoint/e3036.hpp"
#include "fixpoint/error.hpp"
#include "fixpoint/eset.hpp"
#include "fixpoint/serialize.hpp"

namespace fixpoint::cli {

std::size_t Config::depth_for(const Polynomial& p) const {
    if (max_depth) return *max_depth;
    if (p.degree() <= 2) return 5;
    if (p.degree() == 3) return 3;
    return 2;
}

void Config::validate() const {
    auto bad = [](const std::string& what) { throw Error(ErrorKind::PreconditionViolation, what); };
    if (max_steps == 0) bad("--max-steps must be positive");
    if (bit_cap == 0) bad("--bit-cap must be positive");
    if (precision_digits <= 0) bad("--digits must be positive");
    if (tolerance.sign() <= 0) bad("--tol must be positive");
    if (limits.max_degree == 0) bad("max degree must be positive");
}

Rational parse_decimal(std::string_view text) {
    if (text.find('/') != std::string_view::npos) return Rational::parse(text);
    std::string s(text);
    int exponent = 0;
    const auto e = s.find_first_of("eE");
    if (e != std::string::npos) {
        const std::string exp_part = s.substr(e + 1);
        s.resize(e);
        try {
            std::size_t used = 0;
            exponent = std::stoi(exp_part, &used);
            if (used != exp_part.size()) throw ParseError(e + 1, "bad exponent");
        } catch (const std::logic_error&) {
            throw ParseError(e + 1, "bad exponent in '" + std::string(text) + "'");
        }
    }
    const auto dot = s.find('.');
    if (dot != std::string::npos) {
        const std::string frac = s.substr(dot + 1);
        exponent -= static_cast<int>(frac.size());
        s = s.substr(0, dot) + frac;
        if (s.empty() || s == "-" || s == "+") s += "0";
    }
    return Rational::parse(s) * pow10(exponent);
}

namespace {

void print_list(std::ostream& out, const std::vector<AlgebraicNumber>& values, int digits) {
    if (values.empty()) {
        out << "none\n";
        return;
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << ", ";
        out << (values[i].is_exact() ? values[i].exact_value().to_string() : approx(values[i], digits));
    }
    out << '\n';
}

std::string value_text(const AlgebraicNumber& a, int digits) {
    return a.is_exact() ? a.exact_value().to_string() : approx(a, digits);
}

int cmd_fixed_points(const Polynomial& p, const Config& cfg, std::ostream& out) {
    const PolynomialMap m(p, cfg.limits);
    const auto fps = fixed_points(m);
    if (cfg.output_format == OutputFormat::Json) {
        json arr = json::array();
        for (const auto& f : fps) arr.push_back(to_json(f, cfg.precision_digits));
        out << json{{"polynomial", to_json(p)}, {"fixed_points", arr}, {"e_empty", fps.empty()}}.dump(2) << '\n';
        return kOk;
    }
    print_list(out, fps, cfg.precision_digits);
    if (fps.empty()) out << "E is empty: no real fixed point, no eventually constant orbit\n";
    return kOk;
}

void print_tree_text(const ETree& tree, const Config& cfg, std::ostream& out) {
    const Polynomial* p = tree.map->as_polynomial();
    out << "P(x) = " << (p ? p->to_string() : std::string("?")) << ", depth " << tree.max_depth << '\n';
    if (tree.e_empty) {
        out << "E is empty: no real fixed point\n";
        return;
    }
    for (std::size_t k = 0; k < tree.levels.size(); ++k) {
        out << "level " << k << ": " << tree.levels[k].size() << " new, " << tree.count_up_to(k)
            << " total\n";
        for (auto id : tree.levels[k]) {
            const auto& n = tree.nodes[id];
            out << "  [" << id << "] " << value_text(n.value, cfg.precision_digits);
            if (n.parent) out << "  -> [" << *n.parent << "]";
            else out << "  (fixed point)";
            out << '\n';
        }
    }
}

int cmd_build(const Polynomial& p, const Config& cfg, std::ostream& out) {
    const ETree tree = build_tree(std::make_shared<PolynomialMap>(p, cfg.limits), cfg.depth_for(p));
    switch (cfg.output_format) {
    case OutputFormat::Json: out << to_json(tree, cfg.precision_digits).dump(2) << '\n'; break;
    case OutputFormat::Dot: out << to_dot(tree); break;
    case OutputFormat::Csv: out << to_csv(tree, cfg.precision_digits); break;
    case OutputFormat::Text: print_tree_text(tree, cfg, out); break;
    }
    return kOk;
}

int cmd_check(const Polynomial& p, const Rational& a, const Config& cfg, std::ostream& out) {
    std::optional<OrbitTrace> trace;
    const OrbitVerdict v = classify_orbit(p, a, OrbitOptions{cfg.max_steps, cfg.bit_cap}, trace);
    if (cfg.output_format == OutputFormat::Json) {
        out << to_json(v, trace).dump(2) << '\n';
        return kOk;
    }
    out << verdict_name(v);
    if (const auto* s = std::get_if<verdict::Stationary>(&v)) {
        out << ": rank " << s->rank << " (a_" << s->rank + 1 << " when a_1 = a), limit " << s->limit;
    } else if (const auto* c = std::get_if<verdict::Cycle>(&v)) {
        out << ": entry " << c->entry << ", period " << c->period;
    } else if (const auto* d = std::get_if<verdict::CertifiedDivergent>(&v)) {
        out << ": escape certified at step " << d->step;
    } else if (const auto* n = std::get_if<verdict::CertifiedNonStationary>(&v)) {
        out << ": " << to_string(n->reason);
    } else if (const auto* u = std::get_if<verdict::Undetermined>(&v)) {
        out << ": " << to_string(u->reason);
    }
    out << '\n';
    if (trace) {
        out << "trace:";
        for (const auto& x : trace->values) out << ' ' << x;
        out << " (" << to_string(trace->truncation) << ")\n";
    }
    return kOk;
}

int cmd_member(const Polynomial& p, const std::optional<std::string>& value, const std::optional<std::string>& defining,
               const std::optional<std::string>& lo, const std::optional<std::string>& hi, const Config& cfg,
               std::ostream& out) {
    const PolynomialMap m(p, cfg.limits);
    const std::size_t depth = cfg.depth_for(p);
    std::optional<std::size_t> result;
    std::string shown;
    if (defining) {
        if (!lo || !hi) throw Error(ErrorKind::PreconditionViolation, "--defining needs --lo and --hi");
        const auto a = AlgebraicNumber::from_interval(squarefree_part(parse_polynomial(*defining)),
                                                      parse_decimal(*lo), parse_decimal(*hi));
        shown = value_text(a, cfg.precision_digits);
        result = member_algebraic(m, a, depth);
    } else if (value) {
        const Rational a = parse_decimal(*value);
        shown = a.to_string();
        result = member_rational(m, a, depth);
    } else {
        throw Error(ErrorKind::PreconditionViolation, "member needs a value or --defining/--lo/--hi");
    }
    if (cfg.output_format == OutputFormat::Json) {
        json j{{"value", shown}, {"max_depth", depth}};
        j["depth"] = result ? json(*result) : json(nullptr);
        out << j.dump(2) << '\n';
        return kOk;
    }
    if (result) out << shown << " is in E at depth " << *result << '\n';
    else out << shown << " is not in E up to depth " << depth << '\n';
    return kOk;
}

int cmd_verify(const Polynomial& p, std::size_t samples, const Config& cfg, std::ostream& out) {
    const auto report = cross_validate(std::make_shared<PolynomialMap>(p, cfg.limits), cfg.depth_for(p), samples,
                                       cfg.seed, OrbitOptions{cfg.max_steps, cfg.bit_cap});
    if (cfg.output_format == OutputFormat::Json) {
        out << to_json(report).dump(2) << '\n';
    } else {
        out << "seed " << report.seed << ", depth " << report.max_depth << ", samples " << report.samples << '\n';
        out << "fixed points: ";
        print_list(out, report.fixed_points, cfg.precision_digits);
        if (report.e_empty) out << "E is empty: check is vacuous on the tree side\n";
        out << "E in A: " << report.nodes_checked << " nodes (" << report.rational_nodes << " rational, "
            << report.irrational_nodes << " irrational)\n";
        out << "A in E: " << report.sampled.size() << " samples, " << report.sampled_stationary << " stationary";
        if (report.sampled_beyond_depth) out << " (" << report.sampled_beyond_depth << " beyond depth)";
        out << '\n';
        for (const auto& v : report.violations) out << "violation: " << v << '\n';
        out << (report.passed() ? "PASS" : "FAIL") << '\n';
    }
    return report.passed() ? kOk : kValidationFailure;
}

int cmd_e3036(const Config& cfg, std::ostream& out) {
    const Polynomial p = e3036::chebyshev_map();
    const std::size_t depth = cfg.max_depth.value_or(4);
    const ETree tree = build_tree(std::make_shared<PolynomialMap>(p, cfg.limits), depth);
    const auto report = e3036::match_levels(tree, depth, cfg.tolerance);
    if (cfg.output_format == OutputFormat::Json) {
        json j = to_json(report);
        json rads = json::array();
        for (const auto& r : e3036::enumerate_radicals(depth)) rads.push_back(to_json(r, cfg.precision_digits));
        j["radicals"] = rads;
        out << j.dump(2) << '\n';
    } else {
        const auto radicals = e3036::enumerate_radicals(depth);
        for (const auto& l : report.levels) {
            out << "level " << l.level << ": " << l.enumerated << " closed forms, " << l.tree_nodes
                << " tree nodes, " << l.matched << " matched\n";
            for (const auto& r : radicals) {
                if (r.level != l.level) continue;
                out << "  " << r.expr.render() << " = "
                    << decimal_midpoint(e3036::radical_value(r.expr, cfg.precision_digits + 2), cfg.precision_digits)
                    << '\n';
            }
            for (const auto& u : l.unmatched_radicals) out << "  unmatched closed form " << u << '\n';
            for (auto id : l.unmatched_nodes) out << "  unmatched node " << id << '\n';
        }
        out << "bijection: " << (report.perfect() ? "yes" : "no") << " (" << report.total_enumerated() << " = "
            << report.total_tree_nodes() << ")\n";
    }
    return report.perfect() ? kOk : kValidationFailure;
}

OutputFormat parse_format(const std::string& s) {
    if (s == "json") return OutputFormat::Json;
    if (s == "dot") return OutputFormat::Dot;
    if (s == "csv") return OutputFormat::Csv;
    return OutputFormat::Text;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact eventually-constant orbits of rational polynomial maps", "fixpoint_atlas"};
    app.require_subcommand(1);

    Config cfg;
    std::string format = "text";
    std::size_t depth = 0;
    std::string tol_text;
    std::size_t samples = 200;
    std::string poly_text;
    std::string seed_value;
    std::optional<std::string> member_value, defining, lo, hi;

    auto add_common = [&](CLI::App* sub, std::vector<std::string> formats) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
        sub->add_option("--digits", cfg.precision_digits, "Significant digits for decimal approximations");
    };
    auto add_depth = [&](CLI::App* sub) {
        sub->add_option("--depth", depth, "Tree depth K (number of preimage steps)")->check(CLI::NonNegativeNumber);
    };
    auto add_orbit = [&](CLI::App* sub) {
        sub->add_option("--max-steps", cfg.max_steps, "Iteration limit");
        sub->add_option("--bit-cap", cfg.bit_cap, "Per-value size limit in bits");
    };

    auto* fp = app.add_subcommand("fixed-points", "Real fixed points of P");
    fp->add_option("poly", poly_text, "Polynomial, e.g. \"x^2 - 2\" or \"[-2, 0, 1]\"")->required();
    add_common(fp, {"text", "json"});

    auto* build = app.add_subcommand("build", "Backward-orbit tree of E to depth K");
    build->add_option("poly", poly_text, "Polynomial")->required();
    add_depth(build);
    add_common(build, {"text", "json", "dot", "csv"});

    auto* check = app.add_subcommand("check", "Classify the orbit of a rational start value");
    check->add_option("poly", poly_text, "Polynomial")->required();
    check->add_option("value", seed_value, "Start value a (integer, p/q or decimal)")->required();
    add_orbit(check);
    add_common(check, {"text", "json"});

    auto* member = app.add_subcommand("member", "Depth at which a value enters E");
    member->add_option("poly", poly_text, "Polynomial")->required();
    member->add_option("value", member_value, "Rational value");
    member->add_option("--defining", defining, "Defining polynomial of an algebraic value");
    member->add_option("--lo", lo, "Isolating interval lower end (exclusive)");
    member->add_option("--hi", hi, "Isolating interval upper end (inclusive)");
    add_depth(member);
    add_common(member, {"text", "json"});

    auto* verify = app.add_subcommand("verify", "Check E = A on the tree and on seeded samples");
    verify->add_option("poly", poly_text, "Polynomial")->required();
    verify->add_option("--samples", samples, "Number of sampled start values");
    verify->add_option("--seed", cfg.seed, "Sampling seed");
    add_depth(verify);
    add_orbit(verify);
    add_common(verify, {"text", "json"});

    auto* e36 = app.add_subcommand("e3036", "Match the closed-form radicals of x^2 - 2 against the tree");
    add_depth(e36);
    e36->add_option("--tol", tol_text, "Matching tolerance (default 1e-10)");
    add_common(e36, {"text", "json"});

    std::vector<std::string> argv_store{"fixpoint_atlas"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kUsage;
    }

    try {
        cfg.output_format = parse_format(format);
        for (auto* sub : {build, member, verify, e36}) {
            if (sub->parsed() && sub->count("--depth") > 0) cfg.max_depth = depth;
        }
        if (!tol_text.empty()) cfg.tolerance = parse_decimal(tol_text);
        if (const char* env = std::getenv("FIXPOINT_ATLAS_MAX_DEGREE")) {
            try {
                cfg.limits.max_degree = std::stoul(env);
            } catch (const std::logic_error&) {
                err << "ignoring malformed FIXPOINT_ATLAS_MAX_DEGREE='" << env << "'\n";
            }
        }
        cfg.validate();

        if (e36->parsed()) return cmd_e3036(cfg, out);

        const Polynomial p = parse_polynomial(poly_text);
        const bool needs_degree = build->parsed() || member->parsed() || verify->parsed();
        if (needs_degree && p.degree() < 1) {
            throw Error(ErrorKind::DegreeZeroNotAllowed,
                        "constant map: every real number reaches the fixed point in one step");
        }
        if (fp->parsed()) return cmd_fixed_points(p, cfg, out);
        if (build->parsed()) return cmd_build(p, cfg, out);
        if (check->parsed()) return cmd_check(p, parse_decimal(seed_value), cfg, out);
        if (member->parsed()) return cmd_member(p, member_value, defining, lo, hi, cfg, out);
        if (verify->parsed()) return cmd_verify(p, samples, cfg, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
        switch (e.kind()) {
        case ErrorKind::PreconditionViolation:
        case ErrorKind::DegreeZeroNotAllowed: return kUsage;
        default: return kComputation;
        }
    }
    return kUsage;
}

} // namespace fixpoint::cli
