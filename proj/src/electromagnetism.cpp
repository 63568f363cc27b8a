#include "extalg/electromagnetism.hpp"

#include <stdexcept>

#include "extalg/random.hpp"

namespace extalg {

namespace {

Rational parity(int p) { return (p % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace

void MaxwellConfig::validate() const {
    if (r < 1 || r > metric.dim())
        throw std::domain_error("field grade r=" + std::to_string(r) + " outside [1, " + std::to_string(metric.dim()) +
                                "]");
    if (sgn(mass) < 0) throw std::domain_error("Proca mass must be non-negative");
    if (xi && sgn(*xi) <= 0) throw std::domain_error("gauge parameter xi must be positive");
    if (potential.empty() || source.empty() || potential == source)
        throw std::domain_error("potential and source need distinct non-empty names");
}

MvField field_from_potential(const MvField& A, int r) {
    if (A.grade() != r - 1)
        throw std::domain_error("potential of grade " + std::to_string(A.grade()) + " for a grade-" +
                                std::to_string(r) + " field");
    return ext_deriv(A);
}

LagrangianDensity build_lagrangian(const MaxwellConfig& cfg) {
    cfg.validate();
    const int s = cfg.r - 1;
    const FieldSymbol A{cfg.potential, s, FieldRole::Dynamical};
    const FieldSymbol J{cfg.source, s, FieldRole::Source};
    const Rational sign = parity(cfg.r - 1);

    std::vector<LagrangianTerm> terms;
    terms.push_back({Rational(sign / 2), Slot{DerivOp::Ext, A}, Slot{DerivOp::Ext, A}});
    terms.push_back({Rational(1), Slot{DerivOp::Id, J}, Slot{DerivOp::Id, A}});
    if (!is_zero(cfg.mass))
        terms.push_back({Rational(-cfg.mass * cfg.mass / 2), Slot{DerivOp::Id, A}, Slot{DerivOp::Id, A}});
    if (cfg.xi) terms.push_back({Rational(sign / (2 * *cfg.xi)), Slot{DerivOp::Int, A}, Slot{DerivOp::Int, A}});
    return LagrangianDensity(cfg.metric, std::move(terms));
}

FieldEquation derive_equations(const MaxwellConfig& cfg) {
    return canonicalize(euler_lagrange_exterior(build_lagrangian(cfg)));
}

bool splitting_identity_verified(const Metric& metric, int grade, int trials, std::uint64_t seed) {
    for (int t = 0; t < trials; ++t) {
        TrialRng rng = TrialRng::for_trial(seed, "laplacian-splitting", static_cast<std::uint64_t>(t));
        if (!laplacian_splitting_holds(trial_field(rng, metric, grade, static_cast<std::uint64_t>(t)))) return false;
    }
    return true;
}

FieldEquation wave_form(const MaxwellConfig& cfg) {
    cfg.validate();
    if (!cfg.xi) throw std::domain_error("the wave form needs the R_xi gauge term (set xi)");
    const int s = cfg.r - 1;
    if (!splitting_identity_verified(cfg.metric, s))
        throw std::domain_error("Laplacian splitting identity failed for metric " + cfg.metric.to_string() +
                                ", grade " + std::to_string(s) + "; refusing to rewrite");

    const FieldEquation eq = derive_equations(cfg);
    const std::vector<FieldOp> int_ext{FieldOp::Int, FieldOp::Ext};
    const std::vector<FieldOp> ext_int{FieldOp::Ext, FieldOp::Int};

    // d_|(d^A) = (-1)^s lap A + d^(d_|A)
    auto rewrite = [&](const FormalExpr& side) {
        FormalExpr out;
        for (const auto& t : side.terms()) {
            if (t.ops == int_ext) {
                out += FormalExpr({FormalTerm{Rational(t.coeff * parity(s)), {FieldOp::Lap}, t.symbol},
                                   FormalTerm{t.coeff, ext_int, t.symbol}});
            } else {
                out += FormalExpr({t});
            }
        }
        return out;
    };
    FormalExpr lhs, rhs = rewrite(eq.rhs);
    const FormalExpr rewritten = rewrite(eq.lhs);
    for (const auto& t : rewritten.terms()) {
        if (t.ops == ext_int)
            rhs += FormalExpr({FormalTerm{Rational(-t.coeff), t.ops, t.symbol}});
        else
            lhs += FormalExpr({t});
    }
    return sort_sides(
        drop_vanishing_terms(FieldEquation{eq.metric, eq.grade, eq.symbols, lhs.simplified(), rhs.simplified()}));
}

MvField gauge_transform(const MvField& A, const MvField& Abar, const std::optional<MvField>& G) {
    if (Abar.grade() != A.grade())
        throw std::domain_error("constant shift of grade " + std::to_string(Abar.grade()) + " for a grade-" +
                                std::to_string(A.grade()) + " potential");
    if (!is_constant(Abar)) throw std::domain_error("the shift Abar must be constant");
    MvField out = A + Abar;
    if (G) {
        if (G->grade() != A.grade() - 1)
            throw std::domain_error("gauge function of grade " + std::to_string(G->grade()) + " for a grade-" +
                                    std::to_string(A.grade()) + " potential");
        out += ext_deriv(*G);
    }
    return out;
}

bool homogeneous_check(const MvField& F) { return ext_deriv(F).is_zero(); }

LagrangianDensity dual_lagrangian(const Metric& metric, int s, const std::string& potential,
                                  const std::string& source) {
    if (s < 1 || s > metric.dim())
        throw std::domain_error("dual potential grade s=" + std::to_string(s) + " outside [1, " +
                                std::to_string(metric.dim()) + "]");
    const FieldSymbol Abar{potential, s, FieldRole::Dynamical};
    const FieldSymbol Jbar{source, s, FieldRole::Source};
    std::vector<LagrangianTerm> terms;
    terms.push_back({Rational(parity(s - 1) / 2), Slot{DerivOp::Int, Abar}, Slot{DerivOp::Int, Abar}});
    terms.push_back({Rational(1), Slot{DerivOp::Id, Jbar}, Slot{DerivOp::Id, Abar}});
    return LagrangianDensity(metric, std::move(terms));
}

DualEquations dual_theory(const Metric& metric, int s, const std::string& potential, const std::string& source) {
    const LagrangianDensity L = dual_lagrangian(metric, s, potential, source);
    FieldEquation nonhomogeneous = canonicalize(euler_lagrange_exterior(L));
    FieldEquation homogeneous{metric, s - 2, L.symbols(),
                              FormalExpr({FormalTerm{Rational(1), {FieldOp::Int, FieldOp::Int}, potential}}),
                              FormalExpr()};
    return DualEquations{std::move(nonhomogeneous), std::move(homogeneous)};
}

bool interior_sides_relation_holds(const MvField& Abar) {
    const MvField right = right_int_deriv(Abar);
    return int_deriv(Abar) == (Abar.grade() % 2 == 1 ? right : -right);
}

bool lorenz_gauge_holds(const MvField& Abar) { return ext_deriv(Abar).is_zero(); }

long polarization_count(int k, int n, int r) {
    if (k < 1 || n < 1) throw std::domain_error("polarization count needs k >= 1 and n >= 1");
    if (r < 1 || r > k + n)
        throw std::domain_error("field grade r=" + std::to_string(r) + " outside [1, " + std::to_string(k + n) + "]");
    return binomial(k + n - 2, r - 1);
}

}  // namespace extalg
