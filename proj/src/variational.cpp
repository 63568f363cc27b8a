#include "extalg/variational.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "extalg/printer.hpp"
#include "extalg/random.hpp"

namespace extalg {

int Slot::grade() const {
    switch (op) {
        case DerivOp::Ext: return field.grade + 1;
        case DerivOp::Int: return field.grade - 1;
        default: return field.grade;
    }
}

namespace {

std::string op_text(DerivOp op) {
    switch (op) {
        case DerivOp::Id: return "";
        case DerivOp::Ext: return "d^";
        case DerivOp::Int: return "d_|";
        case DerivOp::Tensor: return "dX";
    }
    return "";
}

FormalTerm slot_term(const Slot& s, const Rational& coeff) {
    FormalTerm t{coeff, {}, s.field.name};
    switch (s.op) {
        case DerivOp::Id: break;
        case DerivOp::Ext: t.ops.push_back(FieldOp::Ext); break;
        case DerivOp::Int: t.ops.push_back(FieldOp::Int); break;
        case DerivOp::Tensor: t.ops.push_back(FieldOp::Tensor); break;
    }
    return t;
}

void require_dynamical(const LagrangianDensity& L, const FieldSymbol& a) {
    if (a.role != FieldRole::Dynamical)
        throw std::domain_error("cannot differentiate with respect to source '" + a.name + "'");
    auto dyn = L.dynamical();
    if (dyn && !(*dyn == a)) throw std::domain_error("'" + a.name + "' is not the dynamical field of the Lagrangian");
}

}  // namespace

LagrangianDensity::LagrangianDensity(Metric metric, std::vector<LagrangianTerm> terms)
    : metric_(metric), terms_(std::move(terms)) {
    std::map<std::string, FieldSymbol> seen;
    std::optional<std::string> dynamical;
    auto check_symbol = [&](const FieldSymbol& f) {
        if (f.grade < 0 || f.grade > metric_.dim())
            throw std::domain_error("symbol '" + f.name + "' has grade " + std::to_string(f.grade) +
                                    " outside [0, " + std::to_string(metric_.dim()) + "]");
        auto [it, inserted] = seen.emplace(f.name, f);
        if (!inserted && !(it->second == f))
            throw std::domain_error("symbol '" + f.name + "' used with inconsistent grade or role");
        if (f.role == FieldRole::Dynamical) {
            if (dynamical && *dynamical != f.name)
                throw std::domain_error("more than one dynamical field: '" + *dynamical + "' and '" + f.name + "'");
            dynamical = f.name;
        }
    };
    for (const auto& t : terms_) {
        check_symbol(t.left.field);
        check_symbol(t.right.field);
        if (t.left.is_matrix() != t.right.is_matrix() || t.left.grade() != t.right.grade())
            throw std::domain_error("dot product of mismatched factors in term " +
                                    LagrangianDensity(metric_, {}).to_string());
    }
}

std::optional<FieldSymbol> LagrangianDensity::dynamical() const {
    for (const auto& t : terms_) {
        if (t.left.field.role == FieldRole::Dynamical) return t.left.field;
        if (t.right.field.role == FieldRole::Dynamical) return t.right.field;
    }
    return std::nullopt;
}

std::vector<FieldSymbol> LagrangianDensity::symbols() const {
    std::vector<FieldSymbol> out;
    auto add = [&](const FieldSymbol& f) {
        if (std::none_of(out.begin(), out.end(), [&](const FieldSymbol& g) { return g.name == f.name; }))
            out.push_back(f);
    };
    for (const auto& t : terms_) {
        add(t.left.field);
        add(t.right.field);
    }
    return out;
}

bool LagrangianDensity::uses(DerivOp op) const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [&](const LagrangianTerm& t) { return t.left.op == op || t.right.op == op; });
}

LagrangianDensity LagrangianDensity::scaled(const Rational& c) const {
    auto terms = terms_;
    for (auto& t : terms) t.coeff *= c;
    return LagrangianDensity(metric_, std::move(terms));
}

LagrangianDensity operator+(const LagrangianDensity& a, const LagrangianDensity& b) {
    detail::require_same_metric(a.metric_, b.metric_);
    auto terms = a.terms_;
    terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
    return LagrangianDensity(a.metric_, std::move(terms));
}

std::string LagrangianDensity::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
        const bool negative = sgn(t.coeff) < 0;
        const Rational mag = abs(t.coeff);
        if (first)
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        first = false;
        if (mag != 1) s += extalg::to_string(mag) + "*";
        s += "(" + op_text(t.left.op) + t.left.field.name + " . " + op_text(t.right.op) + t.right.field.name + ")";
    }
    return s;
}

// ---------------------------------------------------------------------------

FormalExpr::FormalExpr(std::vector<FormalTerm> terms) : terms_(std::move(terms)) {}

FormalExpr FormalExpr::symbol(const std::string& name, const Rational& coeff) {
    return FormalExpr({FormalTerm{coeff, {}, name}});
}

FormalExpr FormalExpr::apply(FieldOp op) const {
    FormalExpr out = *this;
    for (auto& t : out.terms_) t.ops.insert(t.ops.begin(), op);
    return out;
}

FormalExpr FormalExpr::scaled(const Rational& c) const {
    FormalExpr out = *this;
    for (auto& t : out.terms_) t.coeff *= c;
    return out;
}

FormalExpr& FormalExpr::operator+=(const FormalExpr& o) {
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    return *this;
}

FormalExpr FormalExpr::simplified() const {
    std::vector<FormalTerm> out;
    for (FormalTerm t : terms_) {
        for (std::size_t i = 0; i + 1 < t.ops.size();) {
            if (t.ops[i] == FieldOp::MatDiv && t.ops[i + 1] == FieldOp::Tensor) {
                t.ops[i] = FieldOp::Lap;
                t.ops.erase(t.ops.begin() + static_cast<long>(i) + 1);
            } else {
                ++i;
            }
        }
        auto it = std::find_if(out.begin(), out.end(),
                               [&](const FormalTerm& u) { return u.ops == t.ops && u.symbol == t.symbol; });
        if (it == out.end())
            out.push_back(std::move(t));
        else
            it->coeff += t.coeff;
    }
    std::erase_if(out, [](const FormalTerm& t) { return is_zero(t.coeff); });
    return FormalExpr(std::move(out));
}

const FieldSymbol& FieldEquation::symbol(const std::string& name) const {
    for (const auto& s : symbols)
        if (s.name == name) return s;
    throw std::domain_error("unknown symbol '" + name + "'");
}

std::optional<int> term_grade(const FormalTerm& t, int symbol_grade) {
    int g = symbol_grade;
    bool matrix = false;
    for (auto it = t.ops.rbegin(); it != t.ops.rend(); ++it) {
        switch (*it) {
            case FieldOp::Ext: ++g; break;
            case FieldOp::Int: --g; break;
            case FieldOp::Lap: break;
            case FieldOp::Tensor: matrix = true; break;
            case FieldOp::MatDiv: matrix = false; break;
        }
    }
    if (matrix) return std::nullopt;
    return g;
}

namespace {

int op_rank(FieldOp op) {
    switch (op) {
        case FieldOp::Int: return 0;
        case FieldOp::Ext: return 1;
        case FieldOp::Lap: return 2;
        case FieldOp::Tensor: return 3;
        case FieldOp::MatDiv: return 4;
    }
    return 5;
}

// Sources first, then more operators first, then by operators (innermost
// d_| before d^) and symbol.
struct CanonicalOrder {
    const FieldEquation& eq;

    bool is_source(const FormalTerm& t) const { return eq.symbol(t.symbol).role == FieldRole::Source; }
    bool operator()(const FormalTerm& a, const FormalTerm& b) const {
        const auto ka = std::make_tuple(!is_source(a), -static_cast<long>(a.ops.size()));
        const auto kb = std::make_tuple(!is_source(b), -static_cast<long>(b.ops.size()));
        if (ka != kb) return ka < kb;
        if (a.ops != b.ops)
            return std::lexicographical_compare(a.ops.begin(), a.ops.end(), b.ops.begin(), b.ops.end(),
                                                [](FieldOp x, FieldOp y) { return op_rank(x) < op_rank(y); });
        return a.symbol < b.symbol;
    }
};

}  // namespace

FieldEquation drop_vanishing_terms(const FieldEquation& eq) {
    const int dim = eq.metric.dim();
    auto vanishes = [&](const FormalTerm& t) {
        int g = eq.symbol(t.symbol).grade;
        for (auto it = t.ops.rbegin(); it != t.ops.rend(); ++it) {
            if (*it == FieldOp::Ext) ++g;
            if (*it == FieldOp::Int) --g;
            if (g < 0 || g > dim) return true;
        }
        return false;
    };
    auto keep = [&](const FormalExpr& side) {
        std::vector<FormalTerm> out;
        for (const auto& t : side.terms())
            if (!vanishes(t)) out.push_back(t);
        return FormalExpr(std::move(out));
    };
    return FieldEquation{eq.metric, eq.grade, eq.symbols, keep(eq.lhs), keep(eq.rhs)};
}

FieldEquation sort_sides(const FieldEquation& eq) {
    const CanonicalOrder order{eq};
    auto lhs = eq.lhs.terms(), rhs = eq.rhs.terms();
    std::stable_sort(lhs.begin(), lhs.end(), order);
    std::stable_sort(rhs.begin(), rhs.end(), order);
    return FieldEquation{eq.metric, eq.grade, eq.symbols, FormalExpr(std::move(lhs)), FormalExpr(std::move(rhs))};
}

FieldEquation canonicalize(const FieldEquation& eq) {
    const CanonicalOrder order{eq};
    auto is_source = [&](const FormalTerm& t) { return order.is_source(t); };
    const FieldEquation pruned = drop_vanishing_terms(eq);
    std::vector<FormalTerm> all = (pruned.lhs - pruned.rhs).simplified().terms();
    std::sort(all.begin(), all.end(), order);

    FieldEquation out{eq.metric, eq.grade, eq.symbols, {}, {}};
    auto leading = std::find_if(all.begin(), all.end(), [&](const FormalTerm& t) { return !is_source(t); });
    if (leading == all.end() && !all.empty()) leading = all.begin();
    if (leading != all.end() && sgn(leading->coeff) < 0)
        for (auto& t : all) t.coeff = -t.coeff;
    std::vector<FormalTerm> lhs, rhs;
    for (auto& t : all) {
        if (is_source(t) && leading != all.end() && !is_source(*leading)) {
            t.coeff = -t.coeff;
            rhs.push_back(t);
        } else if (sgn(t.coeff) > 0) {
            lhs.push_back(t);
        } else {
            t.coeff = -t.coeff;
            rhs.push_back(t);
        }
    }
    out.lhs = FormalExpr(std::move(lhs));
    out.rhs = FormalExpr(std::move(rhs));
    return out;
}

// ---------------------------------------------------------------------------

FormalExpr vderiv(const LagrangianDensity& L, const Slot& wrt) {
    require_dynamical(L, wrt.field);
    FormalExpr out;
    for (const auto& t : L.terms()) {
        const bool left = t.left == wrt, right = t.right == wrt;
        if (left && right)
            out += FormalExpr({slot_term(t.right, Rational(2 * t.coeff))});
        else if (left)
            out += FormalExpr({slot_term(t.right, t.coeff)});
        else if (right)
            out += FormalExpr({slot_term(t.left, t.coeff)});
    }
    return out.simplified();
}

FieldEquation euler_lagrange_tensor(const LagrangianDensity& L) {
    if (L.uses(DerivOp::Ext) || L.uses(DerivOp::Int))
        throw std::domain_error("tensor Euler-Lagrange form needs a Lagrangian in a and d(x)a only; "
                                "use the exterior form for d^ and d_| slots");
    auto a = L.dynamical();
    if (!a) throw std::domain_error("Lagrangian has no dynamical field");
    FormalExpr lhs = vderiv(L, Slot{DerivOp::Id, *a});
    FormalExpr rhs = vderiv(L, Slot{DerivOp::Tensor, *a}).apply(FieldOp::MatDiv).simplified();
    return FieldEquation{L.metric(), a->grade, L.symbols(), lhs, rhs};
}

FieldEquation euler_lagrange_exterior(const LagrangianDensity& L) {
    if (L.uses(DerivOp::Tensor))
        throw std::domain_error("exterior Euler-Lagrange form needs a Lagrangian in a, d^a and d_|a only; "
                                "use the tensor form for d(x)a slots");
    auto a = L.dynamical();
    if (!a) throw std::domain_error("Lagrangian has no dynamical field");
    const Rational sign = (a->grade % 2 == 0) ? Rational(1) : Rational(-1);
    FormalExpr lhs = vderiv(L, Slot{DerivOp::Id, *a});
    FormalExpr rhs = vderiv(L, Slot{DerivOp::Ext, *a}).apply(FieldOp::Int).scaled(sign) +
                     vderiv(L, Slot{DerivOp::Int, *a}).apply(FieldOp::Ext).scaled(Rational(-sign));
    return FieldEquation{L.metric(), a->grade, L.symbols(), lhs, rhs.simplified()};
}

// ---------------------------------------------------------------------------

namespace {

const MvField& lookup(const Bindings& fields, const FieldSymbol& f) {
    auto it = fields.find(f.name);
    if (it == fields.end()) throw std::domain_error("no field bound to symbol '" + f.name + "'");
    if (it->second.grade() != f.grade)
        throw std::domain_error("field bound to '" + f.name + "' has grade " + std::to_string(it->second.grade()) +
                                ", expected " + std::to_string(f.grade));
    return it->second;
}

Polynomial slot_dot(const SlotValue& u, const SlotValue& v) {
    if (std::holds_alternative<MvField>(u)) return dot(std::get<MvField>(u), std::get<MvField>(v));
    return mat_dot(std::get<MvMatrixField>(u), std::get<MvMatrixField>(v));
}

// Partial derivatives of the density with respect to the components a_J and
// d_j a_J of the dynamical field, read off the defining sums of each slot.
class JetEvaluator {
public:
    JetEvaluator(const LagrangianDensity& L, const Bindings& fields) : L_(L) {
        auto a = L.dynamical();
        if (!a) throw std::domain_error("Lagrangian has no dynamical field");
        a_ = *a;
        for (const auto& t : L.terms()) values_.emplace_back(evaluate_slot(t.left, fields), evaluate_slot(t.right, fields));
    }

    const FieldSymbol& field() const { return a_; }
    const Metric& metric() const { return L_.metric(); }

    Polynomial wrt_component(const IndexList& J) const {
        return contract([&](const Slot& s) -> std::optional<SlotValue> {
            if (s.field.role != FieldRole::Dynamical || s.op != DerivOp::Id) return std::nullopt;
            return MvField::blade(metric(), J);
        });
    }

    Polynomial wrt_gradient(int j, const IndexList& J) const {
        const Metric& m = metric();
        return contract([&](const Slot& s) -> std::optional<SlotValue> {
            if (s.field.role != FieldRole::Dynamical) return std::nullopt;
            switch (s.op) {
                case DerivOp::Id: return std::nullopt;
                case DerivOp::Ext: {
                    if (J.contains(j)) return std::nullopt;
                    auto [sigma, jJ] = concat_signature(IndexList::single(j), J);
                    return MvField::blade(m, jJ, signed_value(m.delta(j) * sigma, Polynomial(1)));
                }
                case DerivOp::Int: {
                    if (!J.contains(j)) return std::nullopt;
                    IndexList rest = *subtract(J, IndexList::single(j));
                    const Sign sigma = concat_signature(rest, IndexList::single(j)).first;
                    return MvField::blade(m, rest, signed_value(sigma, Polynomial(1)));
                }
                case DerivOp::Tensor:
                    return MvMatrixField::basis(m, IndexList::single(j), J, signed_value(m.delta(j), Polynomial(1)));
            }
            return std::nullopt;
        });
    }

private:
    template <class D>
    Polynomial contract(D&& derivative) const {
        Polynomial sum;
        for (std::size_t k = 0; k < L_.terms().size(); ++k) {
            const auto& t = L_.terms()[k];
            const auto& [u, v] = values_[k];
            Polynomial term;
            if (auto du = derivative(t.left)) term += slot_dot(*du, v);
            if (auto dv = derivative(t.right)) term += slot_dot(u, *dv);
            sum += term * Polynomial(t.coeff);
        }
        return sum;
    }

    const LagrangianDensity& L_;
    FieldSymbol a_;
    std::vector<std::pair<SlotValue, SlotValue>> values_;
};

}  // namespace

SlotValue evaluate_slot(const Slot& slot, const Bindings& fields) {
    const MvField& f = lookup(fields, slot.field);
    switch (slot.op) {
        case DerivOp::Id: return f;
        case DerivOp::Ext: return ext_deriv(f);
        case DerivOp::Int: return int_deriv(f);
        case DerivOp::Tensor: return tensor_deriv(f);
    }
    throw std::logic_error("unreachable");
}

MvField evaluate(const FormalExpr& expr, const std::vector<FieldSymbol>& symbols, const Bindings& fields,
                 const Metric& metric, int grade) {
    MvField out(metric, grade);
    for (const auto& t : expr.terms()) {
        auto sym = std::find_if(symbols.begin(), symbols.end(), [&](const FieldSymbol& s) { return s.name == t.symbol; });
        if (sym == symbols.end()) throw std::domain_error("unknown symbol '" + t.symbol + "'");
        SlotValue value = lookup(fields, *sym);
        for (auto it = t.ops.rbegin(); it != t.ops.rend(); ++it) {
            if (*it == FieldOp::MatDiv) {
                value = matrix_divergence(std::get<MvMatrixField>(value));
                continue;
            }
            const MvField& f = std::get<MvField>(value);
            switch (*it) {
                case FieldOp::Ext: value = ext_deriv(f); break;
                case FieldOp::Int: value = int_deriv(f); break;
                case FieldOp::Lap: value = laplacian(f); break;
                case FieldOp::Tensor: value = tensor_deriv(f); break;
                case FieldOp::MatDiv: break;
            }
        }
        if (!std::holds_alternative<MvField>(value)) throw std::domain_error("matrix-valued term in field expression");
        const MvField& f = std::get<MvField>(value);
        if (f.is_zero() && f.grade() != grade) continue;
        out += f.scaled(Polynomial(t.coeff));
    }
    return out;
}

MvField residual(const FieldEquation& eq, const Bindings& fields) {
    return evaluate(eq.lhs, eq.symbols, fields, eq.metric, eq.grade) -
           evaluate(eq.rhs, eq.symbols, fields, eq.metric, eq.grade);
}

Polynomial evaluate_density(const LagrangianDensity& L, const Bindings& fields) {
    Polynomial sum;
    for (const auto& t : L.terms())
        sum += slot_dot(evaluate_slot(t.left, fields), evaluate_slot(t.right, fields)) * Polynomial(t.coeff);
    return sum;
}

Polynomial component_partial(const LagrangianDensity& L, const Bindings& fields, const IndexList& J) {
    return JetEvaluator(L, fields).wrt_component(J);
}

Polynomial gradient_partial(const LagrangianDensity& L, const Bindings& fields, int j, const IndexList& J) {
    return JetEvaluator(L, fields).wrt_gradient(j, J);
}

MvField field_vderiv(const LagrangianDensity& L, const Bindings& fields) {
    JetEvaluator jet(L, fields);
    const Metric& m = L.metric();
    MvField out(m, jet.field().grade);
    for (const auto& J : all_index_lists(m.dim(), jet.field().grade))
        out.add_term(J, signed_value(m.delta(J), jet.wrt_component(J)));
    return out;
}

MvMatrixField tensor_momentum(const LagrangianDensity& L, const Bindings& fields) {
    JetEvaluator jet(L, fields);
    const Metric& m = L.metric();
    MvMatrixField out(m, 1, jet.field().grade);
    for (int j = 0; j < m.dim(); ++j)
        for (const auto& J : all_index_lists(m.dim(), jet.field().grade))
            out.add_term(IndexList::single(j), J, signed_value(m.delta(J), jet.wrt_gradient(j, J)));
    return out;
}

MvField component_residual(const LagrangianDensity& L, const Bindings& fields) {
    JetEvaluator jet(L, fields);
    const Metric& m = L.metric();
    MvField out(m, jet.field().grade);
    for (const auto& J : all_index_lists(m.dim(), jet.field().grade)) {
        Polynomial r = jet.wrt_component(J);
        for (int i = 0; i < m.dim(); ++i) r -= jet.wrt_gradient(i, J).partial(i);
        out.add_term(J, r);
    }
    return out;
}

Polynomial FirstVariation::total() const { return bulk + scalar_part(int_deriv(boundary)); }

FirstVariation first_variation(const LagrangianDensity& L, const Bindings& fields, const MvField& eps,
                               VariationRoute route) {
    auto a = L.dynamical();
    if (!a) throw std::domain_error("Lagrangian has no dynamical field");
    if (eps.grade() != a->grade)
        throw std::domain_error("perturbation grade " + std::to_string(eps.grade()) + " differs from field grade " +
                                std::to_string(a->grade));
    const Metric& m = L.metric();
    const int s = a->grade;

    if (route == VariationRoute::Tensor) {
        const MvMatrixField B = tensor_momentum(L, fields);
        const MvField el = field_vderiv(L, fields) - matrix_divergence(B);
        return FirstVariation{dot(el, eps), mat_vec(B, eps)};
    }

    if (L.uses(DerivOp::Tensor)) throw std::domain_error("exterior variation route needs a Lagrangian without d(x)a");
    const auto symbols = L.symbols();
    const MvField G = evaluate(vderiv(L, Slot{DerivOp::Id, *a}), symbols, fields, m, s);
    const MvField Bx = evaluate(vderiv(L, Slot{DerivOp::Ext, *a}), symbols, fields, m, s + 1);
    const MvField C = evaluate(vderiv(L, Slot{DerivOp::Int, *a}), symbols, fields, m, s - 1);
    const Polynomial sign = (s % 2 == 0) ? Polynomial(1) : Polynomial(-1);

    // d^eps . B = d.(eps _| B) - (-1)^s (d_|B).eps
    // (d_|eps) . C = (-1)^(s-1) [d.(C _| eps) - (d^C).eps]
    MvField el = G - int_deriv(Bx).scaled(sign) + ext_deriv(C).scaled(sign);
    MvField boundary(m, 1);
    if (s + 1 <= m.dim()) boundary += left_contract(eps, Bx);
    if (s >= 1) boundary -= left_contract(C, eps).scaled(sign);
    return FirstVariation{dot(el, eps), boundary};
}

Bindings random_bindings(const LagrangianDensity& L, std::uint64_t seed, std::string_view property,
                         std::uint64_t trial) {
    TrialRng rng = TrialRng::for_trial(seed, property, trial);
    Bindings out;
    for (const auto& f : L.symbols()) {
        if (f.role == FieldRole::Dynamical)
            out.emplace(f.name, trial_field(rng, L.metric(), f.grade, trial));
        else
            out.emplace(f.name, random_field(rng, L.metric(), f.grade));
    }
    return out;
}

IdentityReport verify_tensor_exterior_identity(const LagrangianDensity& L, int trials, std::uint64_t seed) {
    if (L.uses(DerivOp::Tensor)) throw std::domain_error("identity check needs a Lagrangian without d(x)a");
    auto a = L.dynamical();
    if (!a) throw std::domain_error("Lagrangian has no dynamical field");
    const Metric& m = L.metric();
    const int s = a->grade;
    const Rational sign = (s % 2 == 0) ? Rational(1) : Rational(-1);
    const FormalExpr exterior_side = vderiv(L, Slot{DerivOp::Ext, *a}).apply(FieldOp::Int).scaled(sign) +
                                     vderiv(L, Slot{DerivOp::Int, *a}).apply(FieldOp::Ext).scaled(Rational(-sign));
    const auto symbols = L.symbols();

    IdentityReport report;
    for (int t = 0; t < trials; ++t) {
        const Bindings fields = random_bindings(L, seed, "tensor-exterior-identity", static_cast<std::uint64_t>(t));
        const MvField lhs = matrix_divergence(tensor_momentum(L, fields));
        const MvField rhs = evaluate(exterior_side, symbols, fields, m, s);
        ++report.trials;
        if (lhs == rhs) continue;
        if (report.failures++ == 0)
            report.counterexample = "metric " + m.to_string() + ", s=" + std::to_string(s) + ", trial " +
                                    std::to_string(t) + ": tensor side " + format_field(lhs) + " vs exterior side " +
                                    format_field(rhs);
    }
    return report;
}

}  // namespace extalg
