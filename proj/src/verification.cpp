#include "extalg/verification.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "extalg/electromagnetism.hpp"
#include "extalg/printer.hpp"

namespace extalg {

std::string PropertyCase::to_string() const { return metric.to_string() + " grade " + std::to_string(grade); }

namespace {

using Outcome = std::optional<std::string>;

Outcome mismatch(const std::string& what, const std::string& lhs, const std::string& rhs) {
    return what + ": " + lhs + " != " + rhs;
}

Outcome expect_equal(const MvField& a, const MvField& b, const std::string& what) {
    if (a == b) return std::nullopt;
    return mismatch(what, format_field(a), format_field(b));
}

Outcome expect_equal(const Polynomial& a, const Polynomial& b, const std::string& what) {
    if (a == b) return std::nullopt;
    return mismatch(what, a.to_string(), b.to_string());
}

Outcome expect_equal(const RationalMultivector& a, const RationalMultivector& b, const std::string& what) {
    if (a == b) return std::nullopt;
    return mismatch(what, format_multivector(a), format_multivector(b));
}

Outcome expect_true(bool ok, const std::string& what) {
    if (ok) return std::nullopt;
    return what;
}

Outcome first_failure(std::initializer_list<Outcome> outcomes) {
    for (const auto& o : outcomes)
        if (o) return o;
    return std::nullopt;
}

int random_grade(TrialRng& rng, const Metric& m) { return static_cast<int>(rng.uniform(0, m.dim())); }

Rational random_rational(TrialRng& rng) {
    long num = rng.uniform(1, 5);
    if (rng.coin()) num = -num;
    return make_rational(num, rng.uniform(1, 3));
}

std::vector<PropertyCase> cases_for(const std::vector<Metric>& metrics, int lo, int hi_offset) {
    std::vector<PropertyCase> out;
    for (const auto& m : metrics)
        for (int g = lo; g <= m.dim() + hi_offset; ++g) out.push_back({m, g});
    return out;
}

const std::vector<Metric>& algebra_metrics() {
    static const std::vector<Metric> m = {{0, 2}, {1, 1}, {0, 3}, {1, 3}, {2, 2}, {2, 3}, {1, 4}};
    return m;
}

MvField random_vector_field(TrialRng& rng, const Metric& m, int grade) { return random_field(rng, m, grade); }

// ---------------------------------------------------------------------------
// algebra

std::vector<Property> algebra_properties() {
    std::vector<Property> out;
    std::vector<PropertyCase> per_metric;
    for (const auto& m : algebra_metrics()) per_metric.push_back({m, 0});
    const auto graded = cases_for(algebra_metrics(), 0, 0);

    out.push_back({"algebra.signature-merge", per_metric, [](const PropertyCase& c, TrialRng& rng, std::uint64_t) {
                       const int dim = c.metric.dim();
                       std::vector<int> I, J, K;
                       for (int i = 0; i < dim; ++i) {
                           const long which = rng.uniform(0, 3);
                           if (which == 0) I.push_back(i);
                           if (which == 1) J.push_back(i);
                           if (which == 2) K.push_back(i);
                       }
                       const IndexList li(std::span<const int>(I.data(), I.size())),
                           lj(std::span<const int>(J.data(), J.size())), lk(std::span<const int>(K.data(), K.size()));
                       std::vector<int> raw(J);
                       raw.insert(raw.end(), I.begin(), I.end());
                       const auto [s_raw, sorted] = sort_signature(raw, dim);
                       const auto [s_ji, merged] = concat_signature(lj, li);
                       const auto [s_ij, ij] = concat_signature(li, lj);
                       const auto [s_jk, jk] = concat_signature(lj, lk);
                       const Sign left = s_ij * concat_signature(ij, lk).first;
                       const Sign right = s_jk * concat_signature(li, jk).first;
                       const Sign swap = parity_sign(static_cast<long>(I.size() * J.size()));
                       return first_failure({
                           expect_true(s_raw == s_ji && sorted == merged,
                                       "sort of " + lj.to_string() + "++" + li.to_string() + " differs from merge"),
                           expect_true(left == right, "merge signs not associative for " + li.to_string() +
                                                          lj.to_string() + lk.to_string()),
                           expect_true(s_ij == swap * s_ji, "swapping " + li.to_string() + "," + lj.to_string() +
                                                                " does not give (-1)^(|I||J|)"),
                       });
                   }});

    out.push_back(
        {"algebra.signature-transposition", per_metric, [](const PropertyCase& c, TrialRng& rng, std::uint64_t) {
             const int dim = c.metric.dim();
             std::vector<int> raw;
             for (int i = 0; i < dim; ++i)
                 if (rng.coin()) raw.push_back(i);
             for (std::size_t i = raw.size(); i > 1; --i)
                 std::swap(raw[i - 1], raw[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(i) - 1))]);
             if (raw.size() < 2) return Outcome{};
             const std::size_t p = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(raw.size()) - 2));
             auto swapped = raw;
             std::swap(swapped[p], swapped[p + 1]);
             const Sign a = sort_signature(raw, dim).first, b = sort_signature(swapped, dim).first;
             return expect_true(a == -b, "adjacent transposition did not flip the sign");
         }});

    out.push_back({"algebra.duality-left", graded, [](const PropertyCase& c, TrialRng& rng, std::uint64_t) {
                       const auto a = random_multivector(rng, c.metric, c.grade);
                       const auto b = random_multivector(rng, c.metric, random_grade(rng, c.metric));
                       if (a.grade() > b.grade()) return Outcome{};
                       return expect_equal(left_contract(a, b), inv_hodge(wedge(a, hodge(b))), "a _| b vs dual form");
                   }});

    out.push_back({"algebra.duality-right", graded, [](const PropertyCase& c, TrialRng& rng, std::uint64_t) {
                       const auto a = random_multivector(rng, c.metric, c.grade);
                       const auto b = random_multivector(rng, c.metric, random_grade(rng, c.metric));
                       if (a.grade() > b.grade()) return Outcome{};
                       return expect_equal(right_contract(b, a), hodge(wedge(inv_hodge(b), a)), "b |_ a vs dual form");
                   }});

    out.push_back({"algebra.hodge-roundtrip", graded, [](const PropertyCase& c, TrialRng& rng, std::uint64_t) {
                       const auto a = random_multivector(rng, c.metric, c.grade);
                       return first_failure({expect_equal(inv_hodge(hodge(a)), a, "invhodge(hodge(a))"),
                                             expect_equal(hodge(inv_hodge(a)), a, "hodge(invhodge(a))")});
                   }});

    out.push_back({"algebra.equal-grade-collapse", graded, [](const PropertyCase& c, TrialRng& rng, std::uint64_t) {
                       const auto a = random_multivector(rng, c.metric, c.grade);
                       const auto b = random_multivector(rng, c.metric, c.grade);
                       const auto d = RationalMultivector::scalar(c.metric, dot(a, b));
                       return first_failure({expect_equal(left_contract(a, b), d, "a _| b vs a.b"),
                                             expect_equal(right_contract(b, a), d, "b |_ a vs a.b")});
                   }});

    out.push_back({"algebra.wedge-graded-commutativity", graded,
                   [](const PropertyCase& c, TrialRng& rng, std::uint64_t) {
                       const auto a = random_multivector(rng, c.metric, c.grade);
                       const auto b = random_multivector(rng, c.metric, random_grade(rng, c.metric));
                       const auto ba = wedge(b, a);
                       const bool odd = (a.grade() * b.grade()) % 2 == 1;
                       return expect_equal(wedge(a, b), odd ? -ba : ba, "a^b vs (-1)^(gr a gr b) b^a");
                   }});

    out.push_back({"algebra.wedge-associativity", graded, [](const PropertyCase& c, TrialRng& rng, std::uint64_t) {
                       const auto a = random_multivector(rng, c.metric, c.grade);
                       const auto b = random_multivector(rng, c.metric, random_grade(rng, c.metric));
                       const auto d = random_multivector(rng, c.metric, random_grade(rng, c.metric));
                       return expect_equal(wedge(wedge(a, b), d), wedge(a, wedge(b, d)), "(a^b)^c vs a^(b^c)");
                   }});

    out.push_back({"algebra.bilinearity", graded, [](const PropertyCase& c, TrialRng& rng, std::uint64_t) {
                       const Rational k = random_rational(rng);
                       const auto a1 = random_multivector(rng, c.metric, c.grade);
                       const auto a2 = random_multivector(rng, c.metric, c.grade);
                       const auto b = random_multivector(rng, c.metric, random_grade(rng, c.metric));
                       const auto b_same = random_multivector(rng, c.metric, c.grade);
                       const auto a = a1.scaled(k) + a2;
                       return first_failure({
                           expect_equal(wedge(a, b), wedge(a1, b).scaled(k) + wedge(a2, b), "wedge, first slot"),
                           expect_equal(wedge(b, a), wedge(b, a1).scaled(k) + wedge(b, a2), "wedge, second slot"),
                           expect_equal(left_contract(a, b), left_contract(a1, b).scaled(k) + left_contract(a2, b),
                                        "left contraction, first slot"),
                           expect_equal(left_contract(b, a), left_contract(b, a1).scaled(k) + left_contract(b, a2),
                                        "left contraction, second slot"),
                           expect_equal(right_contract(a, b), right_contract(a1, b).scaled(k) + right_contract(a2, b),
                                        "right contraction, first slot"),
                           expect_true(dot(a, b_same) == k * dot(a1, b_same) + dot(a2, b_same), "dot, first slot"),
                       });
                   }});

    out.push_back({"algebra.matrix-identity", graded, [](const PropertyCase& c, TrialRng& rng, std::uint64_t) {
                       const int h = random_grade(rng, c.metric);
                       const auto A = random_matrix(rng, c.metric, c.grade, h);
                       const auto v = random_multivector(rng, c.metric, c.grade);
                       return first_failure({
                           expect_true(mat_mul(identity_matrix(c.metric, c.grade), A) == A, "I x A != A"),
                           expect_true(mat_mul(A, identity_matrix(c.metric, h)) == A, "A x I != A"),
                           expect_equal(mat_vec(identity_matrix(c.metric, c.grade), v), v, "I x v"),
                       });
                   }});

    out.push_back({"algebra.matrix-transpose", graded, [](const PropertyCase& c, TrialRng& rng, std::uint64_t) {
                       const int h = random_grade(rng, c.metric);
                       const auto A = random_matrix(rng, c.metric, h, c.grade);
                       const auto B = random_matrix(rng, c.metric, h, c.grade);
                       const auto v = random_multivector(rng, c.metric, c.grade);
                       return first_failure({
                           expect_equal(mat_vec(A, v), vec_mat(v, transpose(A)), "A x v vs v x A^T"),
                           expect_true(transpose(transpose(A)) == A, "transpose not an involution"),
                           expect_true(mat_dot(A, B) == mat_dot(transpose(A), transpose(B)), "dot under transpose"),
                       });
                   }});
    return out;
}

// ---------------------------------------------------------------------------
// calculus

std::vector<Property> calculus_properties() {
    const auto graded = cases_for(calculus_metrics(), 0, 0);
    const auto positive = cases_for(calculus_metrics(), 1, 0);
    std::vector<PropertyCase> vectors;
    for (const auto& m : calculus_metrics()) vectors.push_back({m, 1});

    std::vector<Property> out;
    out.push_back({"calculus.ext-nilpotent", graded, [](const PropertyCase& c, TrialRng& rng, std::uint64_t t) {
                       const MvField a = trial_field(rng, c.metric, c.grade, t);
                       return expect_true(ext_deriv(ext_deriv(a)).is_zero(), "d^(d^a) != 0 for a = " + format_field(a));
                   }});
    out.push_back({"calculus.int-nilpotent", graded, [](const PropertyCase& c, TrialRng& rng, std::uint64_t t) {
                       const MvField a = trial_field(rng, c.metric, c.grade, t);
                       return expect_true(int_deriv(int_deriv(a)).is_zero(),
                                          "d_|(d_|a) != 0 for a = " + format_field(a));
                   }});
    out.push_back({"calculus.leibniz-wedge", vectors, [](const PropertyCase& c, TrialRng& rng, std::uint64_t t) {
                       // d_|(a^b) = a(d.b) - (d.a)b with d acting on the whole product
                       const MvField a = trial_field(rng, c.metric, 1, t);
                       const MvField b = random_vector_field(rng, c.metric, 1);
                       MvField rhs(c.metric, 1);
                       for (int i = 0; i < c.metric.dim(); ++i) {
                           const IndexList e = IndexList::single(i);
                           rhs += partial(a.scaled(b.coefficient(e)), i);
                           rhs -= partial(b.scaled(a.coefficient(e)), i);
                       }
                       return expect_equal(int_deriv(wedge(a, b)), rhs, "d_|(a^b) vs a(d.b) - (d.a)b");
                   }});
    out.push_back({"calculus.leibniz-contraction", positive,
                   [](const PropertyCase& c, TrialRng& rng, std::uint64_t t) {
                       const MvField a = trial_field(rng, c.metric, c.grade - 1, t);
                       const MvField b = random_vector_field(rng, c.metric, c.grade);
                       const Polynomial lhs = scalar_part(int_deriv(left_contract(a, b)));
                       Polynomial rhs = dot(ext_deriv(a), b);
                       const Polynomial tail = dot(int_deriv(b), a);
                       rhs += (a.grade() % 2 == 0) ? tail : -tail;
                       return expect_equal(lhs, rhs, "d.(a _| b) vs (d^a).b + (-1)^gr(a) (d_|b).a");
                   }});
    out.push_back({"calculus.leibniz-matrix", graded, [](const PropertyCase& c, TrialRng& rng, std::uint64_t t) {
                       const MvField a = trial_field(rng, c.metric, c.grade, t);
                       const MvMatrixField B = random_matrix_field(rng, c.metric, 1, c.grade);
                       const Polynomial lhs = scalar_part(int_deriv(mat_vec(B, a)));
                       const Polynomial rhs = dot(matrix_divergence(B), a) + mat_dot(B, tensor_deriv(a));
                       return expect_equal(lhs, rhs, "d.(B x a) vs (d x B).a + B.(d(x)a)");
                   }});
    out.push_back({"calculus.laplacian-splitting", graded, [](const PropertyCase& c, TrialRng& rng, std::uint64_t t) {
                       const MvField a = trial_field(rng, c.metric, c.grade, t);
                       return expect_true(laplacian_splitting_holds(a),
                                          "d_|(d^a) - d^(d_|a) != (-1)^gr(a) lap a for a = " + format_field(a));
                   }});
    out.push_back({"calculus.divergence-of-tensor", graded, [](const PropertyCase& c, TrialRng& rng, std::uint64_t t) {
                       const MvField a = trial_field(rng, c.metric, c.grade, t);
                       return expect_equal(matrix_divergence(tensor_deriv(a)), laplacian(a), "d x (d(x)a) vs lap a");
                   }});
    out.push_back({"calculus.curl", {PropertyCase{Metric(0, 3), 1}},
                   [](const PropertyCase& c, TrialRng& rng, std::uint64_t t) {
                       const MvField v = trial_field(rng, c.metric, 1, t);
                       auto comp = [&](int i) { return v.coefficient(IndexList::single(i)); };
                       MvField classical(c.metric, 1);
                       for (int i = 0; i < 3; ++i) {
                           const int j = (i + 1) % 3, k = (i + 2) % 3;
                           classical.add_term(IndexList::single(i), comp(k).partial(j) - comp(j).partial(k));
                       }
                       const MvField via_ext = inv_hodge(ext_deriv(v));
                       return first_failure({
                           expect_equal(via_ext, int_deriv(inv_hodge(v)), "(d^v)^H-1 vs d_|(v^H-1)"),
                           expect_equal(via_ext, int_deriv(hodge(v)), "(d^v)^H-1 vs d_|(v^H)"),
                           expect_equal(via_ext, classical, "(d^v)^H-1 vs component curl"),
                       });
                   }});
    return out;
}

// ---------------------------------------------------------------------------
// variational

MvField jet_residual(const LagrangianDensity& L, const Bindings& fields) {
    return field_vderiv(L, fields) - matrix_divergence(tensor_momentum(L, fields));
}

FieldEquation formal_equation(const LagrangianDensity& L) {
    return L.uses(DerivOp::Tensor) ? euler_lagrange_tensor(L) : euler_lagrange_exterior(L);
}

std::vector<FormalTerm> sorted_terms(const FormalExpr& e) {
    auto terms = e.simplified().terms();
    std::sort(terms.begin(), terms.end(), [](const FormalTerm& a, const FormalTerm& b) {
        return std::tie(a.ops, a.symbol) < std::tie(b.ops, b.symbol);
    });
    return terms;
}

template <class F>
Outcome for_each_lagrangian(const PropertyCase& c, F&& f) {
    for (const auto& [name, L] : lagrangian_battery(c.metric, c.grade)) {
        if (auto failure = f(name, L)) return name + ": " + *failure;
    }
    return std::nullopt;
}

std::vector<Property> variational_properties() {
    const auto graded = cases_for(calculus_metrics(), 0, 0);
    std::vector<Property> out;

    out.push_back({"variational.el-routes-agree", graded, [](const PropertyCase& c, TrialRng& rng, std::uint64_t t) {
                       return for_each_lagrangian(c, [&](const std::string&, const LagrangianDensity& L) -> Outcome {
                           if (L.uses(DerivOp::Tensor)) return std::nullopt;
                           const FieldEquation eq = euler_lagrange_exterior(L);
                           const Bindings fields = random_bindings(L, rng, t);
                           const auto sym = L.symbols();
                           return first_failure({
                               expect_equal(field_vderiv(L, fields), evaluate(eq.lhs, sym, fields, c.metric, eq.grade),
                                            "component d_a L vs formal"),
                               expect_equal(matrix_divergence(tensor_momentum(L, fields)),
                                            evaluate(eq.rhs, sym, fields, c.metric, eq.grade),
                                            "d x (dL/d(d(x)a)) vs exterior form"),
                           });
                       });
                   }});

    out.push_back({"variational.tensor-form", graded, [](const PropertyCase& c, TrialRng& rng, std::uint64_t t) {
                       return for_each_lagrangian(c, [&](const std::string&, const LagrangianDensity& L) -> Outcome {
                           if (!L.uses(DerivOp::Tensor)) return std::nullopt;
                           const Bindings fields = random_bindings(L, rng, t);
                           return expect_equal(residual(euler_lagrange_tensor(L), fields), jet_residual(L, fields),
                                               "formal tensor equation vs component route");
                       });
                   }});

    out.push_back({"variational.component-form", graded, [](const PropertyCase& c, TrialRng& rng, std::uint64_t t) {
                       return for_each_lagrangian(c, [&](const std::string&, const LagrangianDensity& L) -> Outcome {
                           const Bindings fields = random_bindings(L, rng, t);
                           const MvField formal = residual(formal_equation(L), fields);
                           MvField weighted(c.metric, formal.grade());
                           for (const auto& [J, r] : formal.terms())
                               weighted.add_term(J, signed_value(c.metric.delta(J), r));
                           return expect_equal(component_residual(L, fields), weighted,
                                               "dL/da_I - sum_i d_i dL/d(d_i a_I) vs Delta_II (EL residual)_I");
                       });
                   }});

    out.push_back({"variational.first-variation", graded, [](const PropertyCase& c, TrialRng& rng, std::uint64_t t) {
                       return for_each_lagrangian(c, [&](const std::string&, const LagrangianDensity& L) -> Outcome {
                           const Bindings fields = random_bindings(L, rng, t);
                           const MvField eps = random_field(rng, c.metric, c.grade);
                           const Polynomial oracle = linear_variation_oracle(L, fields, eps);
                           Outcome tensor = expect_equal(first_variation(L, fields, eps, VariationRoute::Tensor).total(),
                                                         oracle, "tensor-route bulk + divergence vs d/dt L(a+t eps)");
                           if (tensor || L.uses(DerivOp::Tensor)) return tensor;
                           return expect_equal(first_variation(L, fields, eps, VariationRoute::Exterior).total(), oracle,
                                               "exterior-route bulk + divergence vs d/dt L(a+t eps)");
                       });
                   }});

    out.push_back({"variational.vderiv-linearity", graded, [](const PropertyCase& c, TrialRng& rng, std::uint64_t) {
                       const auto battery = lagrangian_battery(c.metric, c.grade);
                       const auto& L1 = battery[static_cast<std::size_t>(
                                                    rng.uniform(0, static_cast<long>(battery.size()) - 1))]
                                            .second;
                       const auto& L2 = battery[static_cast<std::size_t>(
                                                    rng.uniform(0, static_cast<long>(battery.size()) - 1))]
                                            .second;
                       const Rational c1 = random_rational(rng), c2 = random_rational(rng);
                       const LagrangianDensity sum = L1.scaled(c1) + L2.scaled(c2);
                       const FieldSymbol a = *sum.dynamical();
                       for (DerivOp op : {DerivOp::Id, DerivOp::Ext, DerivOp::Int, DerivOp::Tensor}) {
                           const Slot slot{op, a};
                           const FormalExpr lhs = vderiv(sum, slot);
                           const FormalExpr rhs = vderiv(L1, slot).scaled(c1) + vderiv(L2, slot).scaled(c2);
                           if (sorted_terms(lhs) != sorted_terms(rhs))
                               return Outcome(mismatch("vderiv(c1 L1 + c2 L2) for " + L1.to_string() + " and " +
                                                           L2.to_string(),
                                                       format_expr(lhs), format_expr(rhs.simplified())));
                       }
                       return Outcome{};
                   }});
    return out;
}

// ---------------------------------------------------------------------------
// electromagnetism

bool is_single(const FormalExpr& e, const Rational& coeff, const std::vector<FieldOp>& ops, const std::string& sym) {
    return e.terms().size() == 1 && e.terms()[0] == FormalTerm{coeff, ops, sym};
}

std::vector<Property> em_properties() {
    const auto fields = cases_for(calculus_metrics(), 1, 0);
    std::vector<Property> out;

    std::vector<PropertyCase> small;
    for (int dim = 1; dim <= 4; ++dim)
        for (int k = 0; k <= dim; ++k)
            for (int r = 1; r <= dim; ++r) small.push_back({Metric(k, dim - k), r});

    out.push_back({"em.maxwell-structure", small,
                   [](const PropertyCase& c, TrialRng&, std::uint64_t) {
                       const FieldEquation eq = derive_equations(MaxwellConfig{c.metric, c.grade, 0, {}, "A", "J"});
                       return expect_true(is_single(eq.lhs, 1, {FieldOp::Int, FieldOp::Ext}, "A") &&
                                              is_single(eq.rhs, 1, {}, "J") && eq.grade == c.grade - 1,
                                          "derived " + format_equation(eq));
                   },
                   false});

    out.push_back({"em.proca-structure", small,
                   [](const PropertyCase& c, TrialRng&, std::uint64_t) {
                       const Rational m = make_rational(3, 2), xi = make_rational(2, 5);
                       const FieldEquation eq = derive_equations(MaxwellConfig{c.metric, c.grade, m, xi, "A", "J"});
                       const FormalExpr lhs({FormalTerm{1, {FieldOp::Int, FieldOp::Ext}, "A"}, FormalTerm{m * m, {}, "A"}});
                       const FormalExpr rhs({FormalTerm{1, {}, "J"}, FormalTerm{1 / xi, {FieldOp::Ext, FieldOp::Int}, "A"}});
                       if (c.grade == 1)  // d_|A vanishes for a scalar potential
                           return expect_true(eq.lhs == lhs && is_single(eq.rhs, 1, {}, "J"),
                                              "derived " + format_equation(eq));
                       return expect_true(eq.lhs == lhs && eq.rhs == rhs, "derived " + format_equation(eq));
                   },
                   false});

    out.push_back({"em.wave-form-agrees", fields, [](const PropertyCase& c, TrialRng& rng, std::uint64_t t) {
                       for (const auto& [m, xi] : {std::pair{Rational(2), make_rational(3, 1)},
                                                   std::pair{Rational(0), Rational(1)},
                                                   std::pair{make_rational(1, 2), make_rational(2, 7)}}) {
                           const MaxwellConfig cfg{c.metric, c.grade, m, xi, "A", "J"};
                           const Bindings b = {{"A", trial_field(rng, c.metric, c.grade - 1, t)},
                                               {"J", random_field(rng, c.metric, c.grade - 1)}};
                           const FieldEquation wave = wave_form(cfg);
                           if (auto f = expect_equal(residual(derive_equations(cfg), b), residual(wave, b),
                                                     "derived vs wave form " + format_equation(wave)))
                               return f;
                       }
                       return Outcome{};
                   }});

    out.push_back({"em.gauge-invariance", fields, [](const PropertyCase& c, TrialRng& rng, std::uint64_t t) {
                       const MvField A = trial_field(rng, c.metric, c.grade - 1, t);
                       const MvField Abar = to_field(random_multivector(rng, c.metric, c.grade - 1));
                       std::optional<MvField> G;
                       if (c.grade >= 2) G = random_field(rng, c.metric, c.grade - 2);
                       return expect_equal(field_from_potential(gauge_transform(A, Abar, G), c.grade),
                                           field_from_potential(A, c.grade), "F(A + Abar + d^G) vs F(A)");
                   }});

    out.push_back({"em.homogeneous-identity", fields, [](const PropertyCase& c, TrialRng& rng, std::uint64_t t) {
                       const MvField A = trial_field(rng, c.metric, c.grade - 1, t);
                       return expect_true(homogeneous_check(field_from_potential(A, c.grade)),
                                          "d^F != 0 for F = d^(" + format_field(A) + ")");
                   }});

    out.push_back({"em.continuity", fields, [](const PropertyCase& c, TrialRng& rng, std::uint64_t t) {
                       const MvField A = trial_field(rng, c.metric, c.grade - 1, t);
                       const MvField J = int_deriv(field_from_potential(A, c.grade));
                       return expect_true(int_deriv(J).is_zero(), "d_|J != 0 for J = " + format_field(J));
                   }});

    out.push_back({"em.dual-structure", small,
                   [](const PropertyCase& c, TrialRng&, std::uint64_t) {
                       const DualEquations d = dual_theory(c.metric, c.grade);
                       return expect_true(is_single(d.nonhomogeneous.lhs, 1, {FieldOp::Ext, FieldOp::Int}, "Abar") &&
                                              is_single(d.nonhomogeneous.rhs, 1, {}, "Jbar"),
                                          "derived " + format_equation(d.nonhomogeneous));
                   },
                   false});

    out.push_back({"em.dual-homogeneous", fields, [](const PropertyCase& c, TrialRng& rng, std::uint64_t t) {
                       const DualEquations d = dual_theory(c.metric, c.grade);
                       const Bindings b = {{"Abar", trial_field(rng, c.metric, c.grade, t)},
                                           {"Jbar", random_field(rng, c.metric, c.grade)}};
                       return expect_true(residual(d.homogeneous, b).is_zero(),
                                          "d_|(d_|Abar) != 0 for Abar = " + format_field(b.at("Abar")));
                   }});

    out.push_back({"em.dual-interior-sides", fields, [](const PropertyCase& c, TrialRng& rng, std::uint64_t t) {
                       const MvField Abar = trial_field(rng, c.metric, c.grade, t);
                       return expect_true(interior_sides_relation_holds(Abar),
                                          "d_|Abar != (-1)^(s+1) Abar |_ d for Abar = " + format_field(Abar));
                   }});

    std::vector<PropertyCase> counts;
    for (int dim = 2; dim <= 6; ++dim)
        for (int k = 1; k < dim; ++k)
            for (int r = 1; r <= dim; ++r) counts.push_back({Metric(k, dim - k), r});
    out.push_back({"em.polarization-count", counts,
                   [](const PropertyCase& c, TrialRng&, std::uint64_t) {
                       // Pascal's rule from the boundary values, independent of binomial().
                       const int n = c.metric.dim() - 2, k = c.grade - 1;
                       std::vector<std::vector<long>> pascal(static_cast<std::size_t>(n) + 1);
                       for (int i = 0; i <= n; ++i) {
                           pascal[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, 1);
                           for (int j = 1; j < i; ++j)
                               pascal[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                                   pascal[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1] +
                                   pascal[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j)];
                       }
                       const long expected = k <= n ? pascal[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] : 0;
                       const long got = polarization_count(c.metric.k(), c.metric.n(), c.grade);
                       return expect_true(got == expected,
                                          "count " + std::to_string(got) + ", expected " + std::to_string(expected));
                   },
                   false});
    return out;
}

const std::vector<Property>& all_properties() {
    static const std::vector<Property> props = [] {
        std::vector<Property> all;
        for (auto* make : {&algebra_properties, &calculus_properties, &variational_properties, &em_properties}) {
            auto part = make();
            all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
        }
        std::sort(all.begin(), all.end(), [](const Property& a, const Property& b) { return a.name < b.name; });
        return all;
    }();
    return props;
}

}  // namespace

const std::vector<Metric>& calculus_metrics() {
    static const std::vector<Metric> m = {{0, 3}, {1, 1}, {1, 3}, {2, 2}};
    return m;
}

std::vector<Property> suite_properties(const std::string& suite) {
    if (suite != "all" && std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end())
        throw std::invalid_argument("unknown suite '" + suite + "'");
    std::vector<Property> out;
    for (const auto& p : all_properties())
        if (suite == "all" || p.name.rfind(suite + ".", 0) == 0) out.push_back(p);
    return out;
}

const Property& find_property(const std::string& name) {
    for (const auto& p : all_properties())
        if (p.name == name) return p;
    throw std::invalid_argument("unknown property '" + name + "'");
}

PropertyResult run_property(const Property& p, std::uint64_t seed, long trials) {
    const long per_case = p.randomized ? trials : std::min<long>(trials, 1);
    auto run_case = [&](const PropertyCase& c) {
        PropertyResult r{p.name, 0, 0, {}};
        const std::string stream = p.name + "@" + c.to_string();
        for (long t = 0; t < per_case; ++t) {
            TrialRng rng = TrialRng::for_trial(seed, stream, static_cast<std::uint64_t>(t));
            Outcome failure;
            try {
                failure = p.check(c, rng, static_cast<std::uint64_t>(t));
            } catch (const std::exception& e) {
                failure = std::string("exception: ") + e.what();
            }
            ++r.trials;
            if (failure && r.failures++ == 0)
                r.counterexample = c.to_string() + ", trial " + std::to_string(t) + ": " + *failure;
        }
        return r;
    };
    std::vector<std::future<PropertyResult>> parts;
    for (const auto& c : p.cases) parts.push_back(std::async(std::launch::async, run_case, c));
    PropertyResult total{p.name, 0, 0, {}};
    for (auto& f : parts) {
        PropertyResult r = f.get();
        total.trials += r.trials;
        if (r.failures && total.failures == 0) total.counterexample = r.counterexample;
        total.failures += r.failures;
    }
    return total;
}

std::vector<std::pair<std::string, LagrangianDensity>> lagrangian_battery(const Metric& metric, int s) {
    std::vector<std::pair<std::string, LagrangianDensity>> out;
    const FieldSymbol a{"a", s, FieldRole::Dynamical};
    const FieldSymbol J{"J", s, FieldRole::Source};
    if (s + 1 <= metric.dim()) {
        auto maxwell = [&](Rational m, std::optional<Rational> xi) {
            return build_lagrangian(MaxwellConfig{metric, s + 1, std::move(m), std::move(xi), "a", "J"});
        };
        out.emplace_back("maxwell", maxwell(0, std::nullopt));
        out.emplace_back("proca", maxwell(make_rational(3, 2), std::nullopt));
        out.emplace_back("maxwell-rxi", maxwell(0, make_rational(2, 3)));
        out.emplace_back("proca-rxi", maxwell(2, Rational(5)));
    }
    if (s >= 1) out.emplace_back("dual", dual_lagrangian(metric, s, "a", "J"));
    out.emplace_back("pure-source", LagrangianDensity(metric, {{1, Slot{DerivOp::Id, J}, Slot{DerivOp::Id, a}}}));
    out.emplace_back("tensor-kinetic",
                     LagrangianDensity(metric, {{make_rational(1, 2), Slot{DerivOp::Tensor, a}, Slot{DerivOp::Tensor, a}},
                                                {-1, Slot{DerivOp::Id, J}, Slot{DerivOp::Id, a}}}));
    return out;
}

Bindings random_bindings(const LagrangianDensity& L, TrialRng& rng, std::uint64_t trial) {
    Bindings out;
    for (const auto& f : L.symbols()) {
        if (f.role == FieldRole::Dynamical)
            out.emplace(f.name, trial_field(rng, L.metric(), f.grade, trial));
        else
            out.emplace(f.name, random_field(rng, L.metric(), f.grade));
    }
    return out;
}

Polynomial linear_variation_oracle(const LagrangianDensity& L, const Bindings& fields, const MvField& eps) {
    const auto a = L.dynamical();
    if (!a) return Polynomial();
    // t is a coordinate no derivative touches: x_dim.
    const int t = L.metric().dim();
    Bindings shifted = fields;
    shifted.at(a->name) += eps.scaled(Polynomial::variable(t));
    return evaluate_density(L, shifted).coefficient_of(t, 1);
}

}  // namespace extalg
