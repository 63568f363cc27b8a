#pragma once

#include <string>

#include "extalg/index_list.hpp"

namespace extalg {

/// Flat (k,n) space-time: k temporal directions with negative metric followed
/// by n spatial directions with positive metric.
class Metric {
public:
    /// Throws std::domain_error unless k, n >= 0 and 1 <= k+n <= kMaxDimension.
    Metric(int k, int n);

    int k() const { return k_; }
    int n() const { return n_; }
    int dim() const { return k_ + n_; }

    /// Delta_ii
    Sign delta(int i) const { return i < k_ ? Sign::minus() : Sign::plus(); }
    /// Delta_II, the product of the diagonal entries over I.
    Sign delta(const IndexList& I) const;

    std::string to_string() const;
    bool operator==(const Metric&) const = default;

private:
    int k_;
    int n_;
};

}  // namespace extalg
