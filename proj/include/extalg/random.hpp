#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "extalg/field.hpp"

namespace extalg {

/// Reproducible generator for property trials. The raw engine is
/// std::mt19937_64, whose output sequence is fixed by the standard; integer
/// ranges are drawn by rejection sampling implemented here rather than by
/// std::uniform_int_distribution, whose algorithm is implementation-defined.
class TrialRng {
public:
    static constexpr std::string_view kName = "mt19937_64/rejection-v1";

    explicit TrialRng(std::uint64_t seed) : engine_(seed) {}

    /// Derives an independent stream for (property, trial) from a base seed.
    static TrialRng for_trial(std::uint64_t seed, std::string_view property, std::uint64_t trial);

    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi);
    bool coin() { return uniform(0, 1) == 1; }
    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// Knobs for random polynomial fields.
struct FieldShape {
    int max_degree = 3;
    int max_terms = 4;
    long coeff_bound = 3;  // coefficients drawn from [-bound, bound] \ {0}
};

Polynomial random_polynomial(TrialRng& rng, int variables, const FieldShape& shape = {});
MvField random_field(TrialRng& rng, const Metric& metric, int grade, const FieldShape& shape = {});
MvMatrixField random_matrix_field(TrialRng& rng, const Metric& metric, int row_grade, int col_grade,
                                  const FieldShape& shape = {});
RationalMultivector random_multivector(TrialRng& rng, const Metric& metric, int grade, long bound = 5);
RationalMatrix random_matrix(TrialRng& rng, const Metric& metric, int row_grade, int col_grade, long bound = 5);

/// Field for trial `trial` of a property run: trials 0, 1 and 2 are the zero
/// field, a constant field and a single-term field; later trials are random.
MvField trial_field(TrialRng& rng, const Metric& metric, int grade, std::uint64_t trial,
                    const FieldShape& shape = {});

}  // namespace extalg
