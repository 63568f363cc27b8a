#include "extalg/random.hpp"

#include <limits>
#include <stdexcept>

namespace extalg {

namespace {

// FNV-1a, used only to mix property names into seeds.
std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

// splitmix64 finalizer.
std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

TrialRng TrialRng::for_trial(std::uint64_t seed, std::string_view property, std::uint64_t trial) {
    return TrialRng(mix(mix(seed) ^ fnv1a(property)) ^ mix(trial + 1));
}

long TrialRng::uniform(long lo, long hi) {
    if (hi < lo) throw std::invalid_argument("empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<long>(engine_());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return lo + static_cast<long>(x % span);
}

Polynomial random_polynomial(TrialRng& rng, int variables, const FieldShape& shape) {
    Polynomial p;
    const long terms = rng.uniform(0, shape.max_terms);
    for (long t = 0; t < terms; ++t) {
        std::vector<std::uint32_t> e(static_cast<std::size_t>(variables), 0);
        const long degree = rng.uniform(0, shape.max_degree);
        for (long d = 0; d < degree && variables > 0; ++d) ++e[static_cast<std::size_t>(rng.uniform(0, variables - 1))];
        long c = rng.uniform(1, shape.coeff_bound);
        if (rng.coin()) c = -c;
        p += Polynomial::monomial(Monomial(std::move(e)), Rational(c));
    }
    return p;
}

MvField random_field(TrialRng& rng, const Metric& metric, int grade, const FieldShape& shape) {
    MvField out(metric, grade);
    for (const auto& I : all_index_lists(metric.dim(), grade))
        out.add_term(I, random_polynomial(rng, metric.dim(), shape));
    return out;
}

MvMatrixField random_matrix_field(TrialRng& rng, const Metric& metric, int row_grade, int col_grade,
                                  const FieldShape& shape) {
    MvMatrixField out(metric, row_grade, col_grade);
    for (const auto& I : all_index_lists(metric.dim(), row_grade))
        for (const auto& J : all_index_lists(metric.dim(), col_grade))
            out.add_term(I, J, random_polynomial(rng, metric.dim(), shape));
    return out;
}

RationalMultivector random_multivector(TrialRng& rng, const Metric& metric, int grade, long bound) {
    RationalMultivector out(metric, grade);
    for (const auto& I : all_index_lists(metric.dim(), grade)) {
        const long num = rng.uniform(-bound, bound);
        const long den = rng.uniform(1, 3);
        out.add_term(I, make_rational(num, den));
    }
    return out;
}

RationalMatrix random_matrix(TrialRng& rng, const Metric& metric, int row_grade, int col_grade, long bound) {
    RationalMatrix out(metric, row_grade, col_grade);
    for (const auto& I : all_index_lists(metric.dim(), row_grade))
        for (const auto& J : all_index_lists(metric.dim(), col_grade))
            out.add_term(I, J, make_rational(rng.uniform(-bound, bound), rng.uniform(1, 3)));
    return out;
}

MvField trial_field(TrialRng& rng, const Metric& metric, int grade, std::uint64_t trial, const FieldShape& shape) {
    MvField out(metric, grade);
    const auto blades = all_index_lists(metric.dim(), grade);
    if (blades.empty()) return out;
    switch (trial) {
        case 0:
            return out;
        case 1:
            for (const auto& I : blades) out.add_term(I, Polynomial(Rational(rng.uniform(-3, 3))));
            return out;
        case 2: {
            const auto& I = blades[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(blades.size()) - 1))];
            std::vector<std::uint32_t> e(static_cast<std::size_t>(metric.dim()), 0);
            for (int d = 0; d < shape.max_degree; ++d) ++e[static_cast<std::size_t>(rng.uniform(0, metric.dim() - 1))];
            out.add_term(I, Polynomial::monomial(Monomial(std::move(e)), Rational(rng.uniform(1, shape.coeff_bound))));
            return out;
        }
        default:
            return random_field(rng, metric, grade, shape);
    }
}

}  // namespace extalg
