#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "extalg/field.hpp"

namespace extalg {

enum class DerivOp { Id, Ext, Int, Tensor };
enum class FieldRole { Dynamical, Source };

struct FieldSymbol {
    std::string name;
    int grade = 0;
    FieldRole role = FieldRole::Dynamical;

    bool operator==(const FieldSymbol&) const = default;
};

/// One factor D f of a dot-product term.
struct Slot {
    DerivOp op = DerivOp::Id;
    FieldSymbol field;

    bool is_matrix() const { return op == DerivOp::Tensor; }
    /// Grade of D f (the column grade for the tensor derivative).
    int grade() const;
    bool operator==(const Slot&) const = default;
};

/// coeff * (left . right)
struct LagrangianTerm {
    Rational coeff;
    Slot left;
    Slot right;
};

/// Quadratic Lagrangian density: a sum of dot products of fields and their
/// first derivatives with exact coefficients.
class LagrangianDensity {
public:
    /// Throws std::domain_error if a term pairs slots of different shape, a
    /// symbol is used with two grades or roles, a grade leaves [0, k+n], or
    /// more than one dynamical symbol appears.
    LagrangianDensity(Metric metric, std::vector<LagrangianTerm> terms);

    const Metric& metric() const { return metric_; }
    const std::vector<LagrangianTerm>& terms() const { return terms_; }

    /// The dynamical field, if any.
    std::optional<FieldSymbol> dynamical() const;
    /// All symbols in order of first appearance.
    std::vector<FieldSymbol> symbols() const;
    bool uses(DerivOp op) const;

    LagrangianDensity scaled(const Rational& c) const;
    friend LagrangianDensity operator+(const LagrangianDensity& a, const LagrangianDensity& b);

    /// Mini-grammar text, e.g. "-1/2*(d^A . d^A) + (J . A)".
    std::string to_string() const;

private:
    Metric metric_;
    std::vector<LagrangianTerm> terms_;
};

// ---------------------------------------------------------------------------
// Formal field expressions

/// Operators appearing in derived equations. Tensor and MatDiv only occur
/// as an adjacent MatDiv(Tensor(.)) pair, which simplifies to Lap.
enum class FieldOp { Ext, Int, Lap, Tensor, MatDiv };

/// coeff * op_1(op_2(...(symbol))) with ops listed outermost first.
struct FormalTerm {
    Rational coeff;
    std::vector<FieldOp> ops;
    std::string symbol;

    bool operator==(const FormalTerm&) const = default;
};

class FormalExpr {
public:
    FormalExpr() = default;
    explicit FormalExpr(std::vector<FormalTerm> terms);
    static FormalExpr symbol(const std::string& name, const Rational& coeff = Rational(1));

    const std::vector<FormalTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    /// Prepends op to every term.
    FormalExpr apply(FieldOp op) const;
    FormalExpr scaled(const Rational& c) const;
    FormalExpr& operator+=(const FormalExpr& o);
    friend FormalExpr operator+(FormalExpr a, const FormalExpr& b) { return a += b; }
    friend FormalExpr operator-(FormalExpr a, const FormalExpr& b) { return a += b.scaled(Rational(-1)); }

    /// Merges like terms, drops zero coefficients, rewrites MatDiv(Tensor(.))
    /// as Lap. Term order is preserved by first appearance.
    FormalExpr simplified() const;

    bool operator==(const FormalExpr&) const = default;

private:
    std::vector<FormalTerm> terms_;
};

/// Derived field equation lhs = rhs between formal expressions.
struct FieldEquation {
    Metric metric;
    int grade = 0;
    std::vector<FieldSymbol> symbols;
    FormalExpr lhs;
    FormalExpr rhs;

    const FieldSymbol& symbol(const std::string& name) const;
};

/// Orients an equation. Like terms are merged and the leading term of the
/// dynamical field (most operators first) gets a positive coefficient on the
/// left. Sources move to the right; other dynamical terms sit on the side
/// where their coefficient is positive. An equation of sources alone keeps
/// them on the left with a positive leading coefficient. Within a side,
/// sources come first, then terms with more operators, then by operator
/// (d_| before d^) and symbol.
FieldEquation canonicalize(const FieldEquation& eq);

/// Removes terms that vanish identically because an intermediate grade
/// leaves [0, k+n], such as d^ ( d_| A ) for a scalar A.
FieldEquation drop_vanishing_terms(const FieldEquation& eq);

/// Sorts each side in the canonical term order without moving terms.
FieldEquation sort_sides(const FieldEquation& eq);

/// Grade produced by a formal term; nullopt for matrix-valued terms.
std::optional<int> term_grade(const FormalTerm& t, int symbol_grade);

// ---------------------------------------------------------------------------
// Vector derivatives and Euler-Lagrange equations

/// Formal vector derivative of L with respect to the slot `wrt`, using
/// d_a(a.a) = 2a and d_a(a.b) = b term by term. Throws std::domain_error if
/// `wrt` names a source.
FormalExpr vderiv(const LagrangianDensity& L, const Slot& wrt);

/// d_a L = d x (d_{d(x)a} L). Requires only Id and Tensor slots.
FieldEquation euler_lagrange_tensor(const LagrangianDensity& L);

/// d_a L = (-1)^s d_|(d_{d^a} L) - (-1)^s d^(d_{d_|a} L), s = grade of a.
/// Requires only Id, Ext and Int slots.
FieldEquation euler_lagrange_exterior(const LagrangianDensity& L);

// ---------------------------------------------------------------------------
// Concrete evaluation

/// Concrete fields substituted for symbols.
using Bindings = std::map<std::string, MvField>;
using SlotValue = std::variant<MvField, MvMatrixField>;

SlotValue evaluate_slot(const Slot& slot, const Bindings& fields);
/// Evaluates a formal expression; every term must be vector-valued with the
/// given grade.
MvField evaluate(const FormalExpr& expr, const std::vector<FieldSymbol>& symbols, const Bindings& fields,
                 const Metric& metric, int grade);
/// lhs - rhs
MvField residual(const FieldEquation& eq, const Bindings& fields);
/// Value of the density as a polynomial in the coordinates.
Polynomial evaluate_density(const LagrangianDensity& L, const Bindings& fields);

/// dL/da_J, from the defining sums (the density as a function of components).
Polynomial component_partial(const LagrangianDensity& L, const Bindings& fields, const IndexList& J);
/// dL/d(d_j a_J).
Polynomial gradient_partial(const LagrangianDensity& L, const Bindings& fields, int j, const IndexList& J);

/// d_a L as a concrete field: sum_J Delta_JJ dL/da_J e_J.
MvField field_vderiv(const LagrangianDensity& L, const Bindings& fields);
/// d_{d(x)a} L as a concrete matrix field: sum Delta_JJ dL/d(d_j a_J) w_{j,J}.
MvMatrixField tensor_momentum(const LagrangianDensity& L, const Bindings& fields);

/// Per-component Euler-Lagrange residual dL/da_J - sum_i d_i dL/d(d_i a_J),
/// returned as the field sum_J residual_J e_J (no metric factors).
MvField component_residual(const LagrangianDensity& L, const Bindings& fields);

enum class VariationRoute { Tensor, Exterior };

/// First-order change of L under a -> a + eps split into the Euler-Lagrange
/// integrand and the argument of a total divergence.
struct FirstVariation {
    Polynomial bulk;
    MvField boundary;  // grade-1 field V; the divergence term is d . V

    /// bulk + d . boundary
    Polynomial total() const;
};

/// `fields` must bind the dynamical symbol to a and every source. The
/// exterior route needs a Lagrangian without Tensor slots.
FirstVariation first_variation(const LagrangianDensity& L, const Bindings& fields, const MvField& eps,
                               VariationRoute route = VariationRoute::Tensor);

struct IdentityReport {
    int trials = 0;
    int failures = 0;
    std::string counterexample;  // empty when every trial passed

    bool passed() const { return failures == 0; }
};

/// Checks d x (dL/d(d(x)a)) = (-1)^s d_|(dL/d(d^a)) - (-1)^s d^(dL/d(d_|a))
/// on random polynomial fields, the left side taken through the component
/// partial derivatives.
IdentityReport verify_tensor_exterior_identity(const LagrangianDensity& L, int trials, std::uint64_t seed);

/// Random fields for every symbol of L; trial index selects the degenerate
/// cases for the dynamical field.
Bindings random_bindings(const LagrangianDensity& L, std::uint64_t seed, std::string_view property,
                         std::uint64_t trial);

}  // namespace extalg
