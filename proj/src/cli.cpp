#include "extalg/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <ostream>

#include "extalg/electromagnetism.hpp"
#include "extalg/equation_doc.hpp"
#include "extalg/parser.hpp"
#include "extalg/printer.hpp"
#include "extalg/verification.hpp"

namespace extalg::cli {

namespace {

// Diagnostic for a rejected command; maps to exit status 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DeriveOptions {
    int k = 0, n = 0;
    std::optional<int> r;
    std::string preset = "maxwell";
    std::optional<std::string> mass, xi;
    std::string format = "text";
    bool wave = false;
    std::optional<std::string> lagrangian, field;
    std::optional<int> grade;
};

struct VerifyOptions {
    std::string suite = "all";
    std::uint64_t seed = 42;
    long trials = 100;
};

struct EvalOptions {
    std::string expr;
    int k = 0, n = 0;
    std::string format = "text";
};

Rational rational_option(const std::optional<std::string>& text, const char* flag) {
    try {
        return parse_rational(*text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

void print_equation(std::ostream& out, const FieldEquation& eq, const std::string& format) {
    out << (format == "json" ? equation_to_json(eq) : format_equation(eq)) << "\n";
}

int derive(const DeriveOptions& o, std::ostream& out) {
    const Metric metric(o.k, o.n);
    if (o.lagrangian) {
        if (!o.field || !o.grade) throw UsageError("--lagrangian needs --field and --grade");
        if (o.mass || o.xi || o.wave) throw UsageError("--m, --xi and --wave apply to presets only");
        const LagrangianDensity L =
            parse_lagrangian(*o.lagrangian, metric, FieldSymbol{*o.field, *o.grade, FieldRole::Dynamical});
        if (!L.dynamical()) throw UsageError("field '" + *o.field + "' does not occur in the Lagrangian");
        const FieldEquation eq =
            L.uses(DerivOp::Tensor) ? euler_lagrange_tensor(L) : euler_lagrange_exterior(L);
        print_equation(out, canonicalize(eq), o.format);
        return kExitOk;
    }
    if (!o.r) throw UsageError("--r is required for presets");

    if (o.preset == "dual") {
        if (o.mass || o.xi || o.wave) throw UsageError("--m, --xi and --wave do not apply to the dual preset");
        // --r is the grade of the dual field strength; the potential has grade r+1.
        if (*o.r < 0 || *o.r + 1 > metric.dim())
            throw UsageError("dual preset needs 0 <= r <= k+n-1, got r=" + std::to_string(*o.r));
        const DualEquations d = dual_theory(metric, *o.r + 1);
        print_equation(out, d.nonhomogeneous, o.format);
        print_equation(out, d.homogeneous, o.format);
        return kExitOk;
    }

    MaxwellConfig cfg{metric, *o.r, 0, std::nullopt, "A", "J"};
    if (o.preset == "electrostatics") {
        if (*o.r != 1) throw UsageError("electrostatics preset needs r=1, got r=" + std::to_string(*o.r));
        cfg.potential = "phi";
        cfg.source = "rho";
    }
    if (o.mass) cfg.mass = rational_option(o.mass, "--m");
    if (o.xi) cfg.xi = rational_option(o.xi, "--xi");
    try {
        cfg.validate();
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }
    print_equation(out, o.wave ? wave_form(cfg) : derive_equations(cfg), o.format);
    return kExitOk;
}

int verify(const VerifyOptions& o, std::ostream& out) {
    if (o.trials < 1) throw UsageError("--trials must be positive");
    std::vector<Property> props;
    try {
        props = suite_properties(o.suite);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    out << "verify suite=" << o.suite << " seed=" << o.seed << " trials=" << o.trials
        << " generator=" << TrialRng::kName << "\n";
    long failed = 0;
    for (const auto& p : props) {
        const PropertyResult r = run_property(p, o.seed, o.trials);
        out << (r.passed() ? "PASS " : "FAIL ") << r.name << " " << (r.trials - r.failures) << "/" << r.trials
            << " passed\n";
        if (!r.passed()) {
            ++failed;
            out << "  first counterexample: " << r.counterexample << "\n";
        }
    }
    out << "summary: " << props.size() << " properties, " << failed << " failed\n";
    return failed == 0 ? kExitOk : kExitVerificationFailed;
}

int eval(const EvalOptions& o, std::ostream& out) {
    const Metric metric(o.k, o.n);
    const MvField v = parse_expr(o.expr, metric);
    if (o.format == "json") {
        nlohmann::ordered_json terms = nlohmann::ordered_json::array();
        for (const auto& [I, c] : v.terms()) terms.push_back({{"blade", I.to_vector()}, {"coeff", c.to_string()}});
        nlohmann::ordered_json doc = {{"metric", {{"k", o.k}, {"n", o.n}}},
                                      {"grade", v.grade()},
                                      {"terms", terms},
                                      {"text", format_field(v)}};
        out << doc.dump() << "\n";
    } else {
        out << format_field(v) << "\n";
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exterior algebra on flat (k,n) space-times and Euler-Lagrange field equations", "extalg"};
    app.require_subcommand(1);

    DeriveOptions d;
    auto* derive_cmd = app.add_subcommand("derive", "Derive field equations from a preset or a Lagrangian");
    derive_cmd->add_option("--k", d.k, "temporal dimensions")->required();
    derive_cmd->add_option("--n", d.n, "spatial dimensions")->required();
    derive_cmd->add_option("--r", d.r, "field-strength grade");
    derive_cmd->add_option("--preset", d.preset)->check(CLI::IsMember({"maxwell", "dual", "electrostatics"}));
    derive_cmd->add_option("--m", d.mass, "Proca mass p/q");
    derive_cmd->add_option("--xi", d.xi, "R_xi gauge parameter p/q");
    derive_cmd->add_flag("--wave", d.wave, "rewrite with the Laplacian (needs --xi)");
    derive_cmd->add_option("--format", d.format)->check(CLI::IsMember({"text", "json"}));
    derive_cmd->add_option("--lagrangian", d.lagrangian, "e.g. \"1/2*(d^A . d^A) + (J . A)\"");
    derive_cmd->add_option("--field", d.field, "dynamical field name for --lagrangian");
    derive_cmd->add_option("--grade", d.grade, "dynamical field grade for --lagrangian");

    VerifyOptions v;
    auto* verify_cmd = app.add_subcommand("verify", "Run property suites");
    verify_cmd->add_option("--suite", v.suite)->check(CLI::IsMember({"algebra", "calculus", "variational", "em", "all"}));
    verify_cmd->add_option("--seed", v.seed);
    verify_cmd->add_option("--trials", v.trials);

    EvalOptions e;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate an algebra expression");
    eval_cmd->add_option("--expr", e.expr)->required();
    eval_cmd->add_option("--k", e.k)->required();
    eval_cmd->add_option("--n", e.n)->required();
    eval_cmd->add_option("--format", e.format)->check(CLI::IsMember({"text", "json"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& ex) {
        const int code = app.exit(ex, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (derive_cmd->parsed()) return derive(d, out);
        if (verify_cmd->parsed()) return verify(v, out);
        return eval(e, out);
    } catch (const UsageError& ex) {
        err << "error: " << ex.what() << "\n";
    } catch (const ParseError& ex) {
        err << "parse error at " << ex.what() << "\n";
    } catch (const std::domain_error& ex) {
        err << "error: " << ex.what() << "\n";
    } catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << "\n";
    }
    return kExitUsage;
}

}  // namespace extalg::cli
