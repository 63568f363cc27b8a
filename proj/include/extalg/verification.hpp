#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "extalg/random.hpp"
#include "extalg/variational.hpp"

namespace extalg {

/// One configuration a property is run on. `grade` is property specific: a
/// field grade for calculus and variational properties, the field-strength
/// grade r for electromagnetism, an operand grade for algebra.
struct PropertyCase {
    Metric metric;
    int grade = 0;

    std::string to_string() const;
};

/// Returns a description of the failure, or nullopt when the trial passes.
using PropertyCheck = std::function<std::optional<std::string>(const PropertyCase&, TrialRng&, std::uint64_t trial)>;

struct Property {
    std::string name;  // "<suite>.<property>"
    std::vector<PropertyCase> cases;
    PropertyCheck check;
    bool randomized = true;  // false: a single trial per case suffices
};

struct PropertyResult {
    std::string name;
    long trials = 0;
    long failures = 0;
    std::string counterexample;  // first failure in (case, trial) order

    bool passed() const { return failures == 0; }
};

inline const std::vector<std::string> kSuites = {"algebra", "calculus", "variational", "em"};

/// Properties of one suite ("all" for every suite), sorted by name.
std::vector<Property> suite_properties(const std::string& suite);

/// Runs `trials` trials of the property on each of its cases. Trials of
/// a case use independent generators derived from (seed, name, case, trial);
/// cases run in parallel and results merge in case order.
PropertyResult run_property(const Property& p, std::uint64_t seed, long trials);

/// Looks a property up by name; throws std::invalid_argument if unknown.
const Property& find_property(const std::string& name);

/// Metrics used by the randomized calculus, variational and em suites.
const std::vector<Metric>& calculus_metrics();

/// Named Lagrangians exercised by the variational properties for a
/// dynamical field of grade s; only those defined for (metric, s).
std::vector<std::pair<std::string, LagrangianDensity>> lagrangian_battery(const Metric& metric, int s);

/// Random fields for every symbol of L; the dynamical field follows the
/// degenerate-case schedule of trial_field.
Bindings random_bindings(const LagrangianDensity& L, TrialRng& rng, std::uint64_t trial);

/// d/dt L(a + t eps) at t = 0, computed by expanding in an extra coordinate.
Polynomial linear_variation_oracle(const LagrangianDensity& L, const Bindings& fields, const MvField& eps);

}  // namespace extalg
