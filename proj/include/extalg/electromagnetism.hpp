#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "extalg/variational.hpp"

namespace extalg {

/// Generalized Maxwell theory with a grade-r field strength F = d^A.
struct MaxwellConfig {
    Metric metric{1, 3};
    int r = 2;
    Rational mass = 0;           // Proca mass; 0 drops the term
    std::optional<Rational> xi;  // R_xi gauge parameter; absent drops the term
    std::string potential = "A";
    std::string source = "J";

    /// Throws std::domain_error unless 1 <= r <= k+n, mass >= 0 and xi > 0.
    void validate() const;
};

/// F = d^A for a potential of grade r-1.
MvField field_from_potential(const MvField& A, int r);

/// (-1)^(r-1)/2 (d^A).(d^A) + J.A - m^2/2 A.A + (-1)^(r-1)/(2 xi) (d_|A).(d_|A)
LagrangianDensity build_lagrangian(const MaxwellConfig& cfg);

/// Exterior Euler-Lagrange equation of build_lagrangian(cfg), canonically
/// oriented: d_| ( d^ A ) + m^2 A = J + 1/xi d^ ( d_| A ).
FieldEquation derive_equations(const MaxwellConfig& cfg);

/// Checks d_|(d^a) - d^(d_|a) = (-1)^g (d.d)a on the degenerate fields and
/// `trials` random grade-g fields.
bool splitting_identity_verified(const Metric& metric, int grade, int trials = 8, std::uint64_t seed = 1);

/// derive_equations rewritten with the Laplacian:
/// (-1)^(r-1) lap A + m^2 A = J + (1/xi - 1) d^ ( d_| A ).
/// Needs the R_xi term. Throws std::domain_error if the splitting identity
/// fails for the configuration's metric and grade.
FieldEquation wave_form(const MaxwellConfig& cfg);

/// A + Abar + d^G. Abar must be constant with A's grade; G has grade one
/// less and may be omitted (it must be when A is a scalar).
MvField gauge_transform(const MvField& A, const MvField& Abar, const std::optional<MvField>& G);

/// d^F == 0
bool homogeneous_check(const MvField& F);

/// Equations of the dual theory for a potential Abar of grade s:
/// d^ ( d_| Abar ) = Jbar, and the identity d_| ( d_| Abar ) = 0.
struct DualEquations {
    FieldEquation nonhomogeneous;
    FieldEquation homogeneous;
};

/// (-1)^r/2 (d_|Abar).(d_|Abar) + Jbar.Abar with r = s-1.
LagrangianDensity dual_lagrangian(const Metric& metric, int s, const std::string& potential = "Abar",
                                  const std::string& source = "Jbar");
DualEquations dual_theory(const Metric& metric, int s, const std::string& potential = "Abar",
                          const std::string& source = "Jbar");

/// d_|Abar == (-1)^(s+1) (Abar |_ d)
bool interior_sides_relation_holds(const MvField& Abar);

/// d^Abar == 0
bool lorenz_gauge_holds(const MvField& Abar);

/// binomial(k+n-2, r-1); needs k >= 1, n >= 1 and 1 <= r <= k+n.
long polarization_count(int k, int n, int r);

}  // namespace extalg
