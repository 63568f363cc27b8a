#pragma once

// Independent reference computations used only by the tests. None of these
// call the signature or product code under test.

#include <algorithm>
#include <numeric>
#include <vector>

#include "extalg/field.hpp"
#include "extalg/variational.hpp"

namespace oracle {

using namespace extalg;

/// Parity of the permutation sorting `raw`, from its cycle decomposition:
/// a permutation with c cycles on m points is a product of m - c
/// transpositions. Repeated entries give 0.
inline int transposition_parity(const std::vector<int>& raw) {
    const std::size_t m = raw.size();
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return raw[a] < raw[b]; });
    for (std::size_t i = 1; i < m; ++i)
        if (raw[order[i]] == raw[order[i - 1]]) return 0;
    std::vector<bool> seen(m, false);
    std::size_t cycles = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (std::size_t j = i; !seen[j]; j = order[j]) seen[j] = true;
    }
    return (m - cycles) % 2 == 0 ? 1 : -1;
}

inline std::vector<int> cat(const IndexList& a, const IndexList& b) {
    std::vector<int> out = a.to_vector();
    for (int i : b) out.push_back(i);
    return out;
}

inline IndexList sorted_union(const IndexList& a, const IndexList& b) {
    std::vector<int> v = cat(a, b);
    std::sort(v.begin(), v.end());
    return IndexList(std::span<const int>(v));
}

inline std::vector<int> minus(const IndexList& J, const IndexList& I) {
    std::vector<int> out;
    for (int j : J)
        if (!I.contains(j)) out.push_back(j);
    return out;
}

inline int metric_sign(const Metric& m, const std::vector<int>& I) {
    int s = 1;
    for (int i : I) s *= i < m.k() ? -1 : 1;
    return s;
}

inline bool subset(const IndexList& I, const IndexList& J) {
    return std::all_of(I.begin(), I.end(), [&](int i) { return J.contains(i); });
}

/// e_I ^ e_J straight from the definition.
inline RationalMultivector wedge_blades(const Metric& m, const IndexList& I, const IndexList& J) {
    RationalMultivector out(m, static_cast<int>(I.size() + J.size()));
    const int s = transposition_parity(cat(I, J));
    if (s != 0) out.add_term(sorted_union(I, J), Rational(s));
    return out;
}

/// e_I _| e_J = Delta_II sigma(J\I, I) e_{J\I}
inline RationalMultivector left_blades(const Metric& m, const IndexList& I, const IndexList& J) {
    RationalMultivector out(m, static_cast<int>(J.size()) - static_cast<int>(I.size()));
    if (!subset(I, J)) return out;
    const auto rest = minus(J, I);
    std::vector<int> raw = rest;
    for (int i : I) raw.push_back(i);
    out.add_term(IndexList(std::span<const int>(rest)), Rational(metric_sign(m, I.to_vector()) * transposition_parity(raw)));
    return out;
}

/// e_J |_ e_I = Delta_II sigma(I, J\I) e_{J\I}
inline RationalMultivector right_blades(const Metric& m, const IndexList& J, const IndexList& I) {
    RationalMultivector out(m, static_cast<int>(J.size()) - static_cast<int>(I.size()));
    if (!subset(I, J)) return out;
    const auto rest = minus(J, I);
    std::vector<int> raw = I.to_vector();
    raw.insert(raw.end(), rest.begin(), rest.end());
    out.add_term(IndexList(std::span<const int>(rest)), Rational(metric_sign(m, I.to_vector()) * transposition_parity(raw)));
    return out;
}

inline RationalMultivector hodge_blade(const Metric& m, const IndexList& I) {
    std::vector<int> comp = minus(IndexList::full(m.dim()), I);
    RationalMultivector out(m, m.dim() - static_cast<int>(I.size()));
    std::vector<int> raw = I.to_vector();
    raw.insert(raw.end(), comp.begin(), comp.end());
    out.add_term(IndexList(std::span<const int>(comp)), Rational(metric_sign(m, I.to_vector()) * transposition_parity(raw)));
    return out;
}

inline RationalMultivector inv_hodge_blade(const Metric& m, const IndexList& I) {
    std::vector<int> comp = minus(IndexList::full(m.dim()), I);
    RationalMultivector out(m, m.dim() - static_cast<int>(I.size()));
    std::vector<int> raw = comp;
    for (int i : I) raw.push_back(i);
    out.add_term(IndexList(std::span<const int>(comp)), Rational(metric_sign(m, comp) * transposition_parity(raw)));
    return out;
}

/// First-order coefficient of t in L(a + t*eps), with t an extra coordinate
/// that no derivative touches.
inline Polynomial t_linear(const LagrangianDensity& L, Bindings fields, const MvField& eps) {
    const int t = L.metric().dim();
    const std::string a = L.dynamical()->name;
    fields.at(a) += eps.scaled(Polynomial::variable(t));
    return evaluate_density(L, fields).coefficient_of(t, 1);
}

/// dL/da_I by perturbing the single component a_I.
inline Polynomial d_component(const LagrangianDensity& L, const Bindings& fields, const IndexList& I) {
    return t_linear(L, fields, MvField::blade(L.metric(), I));
}

/// dL/d(d_j a_I): perturbing a_I by t*x_j moves d_j a_I by t and a_I by t*x_j.
inline Polynomial d_gradient(const LagrangianDensity& L, const Bindings& fields, int j, const IndexList& I) {
    const MvField bump = MvField::blade(L.metric(), I, Polynomial::variable(j));
    return t_linear(L, fields, bump) - Polynomial::variable(j) * d_component(L, fields, I);
}

}  // namespace oracle
