#include "extalg/metric.hpp"

#include <stdexcept>

namespace extalg {

Metric::Metric(int k, int n) : k_(k), n_(n) {
    if (k < 0 || n < 0 || k + n < 1 || k + n > kMaxDimension)
        throw std::domain_error("invalid metric (" + std::to_string(k) + "," + std::to_string(n) +
                                "): need k,n >= 0 and 1 <= k+n <= " + std::to_string(kMaxDimension));
}

Sign Metric::delta(const IndexList& I) const {
    int temporal = 0;
    for (int i : I)
        if (i < k_) ++temporal;
    return parity_sign(temporal);
}

std::string Metric::to_string() const {
    return "(" + std::to_string(k_) + "," + std::to_string(n_) + ")";
}

}  // namespace extalg
