#include "extalg/index_list.hpp"

#include <algorithm>
#include <stdexcept>

namespace extalg {

namespace {

std::vector<std::uint8_t> checked(std::span<const int> indices) {
    std::vector<std::uint8_t> out;
    out.reserve(indices.size());
    for (std::size_t k = 0; k < indices.size(); ++k) {
        const int i = indices[k];
        if (i < 0 || i >= kMaxDimension)
            throw std::invalid_argument("index " + std::to_string(i) + " outside [0, " +
                                        std::to_string(kMaxDimension) + ")");
        if (k > 0 && i <= indices[k - 1])
            throw std::invalid_argument("indices must be strictly increasing");
        out.push_back(static_cast<std::uint8_t>(i));
    }
    return out;
}

// Merge sort over [lo, hi) returning the number of inversions.
long sort_count(std::vector<int>& v, std::vector<int>& scratch, std::size_t lo, std::size_t hi) {
    if (hi - lo < 2) return 0;
    const std::size_t mid = lo + (hi - lo) / 2;
    long inv = sort_count(v, scratch, lo, mid) + sort_count(v, scratch, mid, hi);
    std::size_t a = lo, b = mid, out = lo;
    while (a < mid && b < hi) {
        if (v[b] < v[a]) {
            inv += static_cast<long>(mid - a);
            scratch[out++] = v[b++];
        } else {
            scratch[out++] = v[a++];
        }
    }
    while (a < mid) scratch[out++] = v[a++];
    while (b < hi) scratch[out++] = v[b++];
    std::copy(scratch.begin() + static_cast<long>(lo), scratch.begin() + static_cast<long>(hi),
              v.begin() + static_cast<long>(lo));
    return inv;
}

}  // namespace

IndexList::IndexList(std::initializer_list<int> indices)
    : idx_(checked(std::span<const int>(indices.begin(), indices.size()))) {}

IndexList::IndexList(std::span<const int> indices) : idx_(checked(indices)) {}

IndexList IndexList::full(int dim) {
    std::vector<std::uint8_t> idx(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) idx[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    return IndexList(Trusted{}, std::move(idx));
}

bool IndexList::contains(int i) const {
    return std::binary_search(idx_.begin(), idx_.end(), i);
}

std::string IndexList::to_string() const {
    std::string s = "(";
    for (std::size_t k = 0; k < idx_.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(idx_[k]);
    }
    return s + ")";
}

std::pair<Sign, IndexList> sort_signature(std::span<const int> raw, int dim) {
    for (int i : raw)
        if (i < 0 || i >= dim)
            throw std::domain_error("index " + std::to_string(i) + " outside [0, " +
                                    std::to_string(dim) + ")");
    std::vector<int> v(raw.begin(), raw.end());
    std::vector<int> scratch(v.size());
    const long inversions = sort_count(v, scratch, 0, v.size());
    if (std::adjacent_find(v.begin(), v.end()) != v.end()) return {Sign::zero(), IndexList()};
    std::vector<std::uint8_t> idx(v.begin(), v.end());
    return {parity_sign(inversions), IndexList(IndexList::Trusted{}, std::move(idx))};
}

std::pair<Sign, IndexList> concat_signature(const IndexList& I, const IndexList& J) {
    // Each j in J jumps over the elements of I larger than it.
    std::vector<std::uint8_t> merged;
    merged.reserve(I.size() + J.size());
    long inversions = 0;
    std::size_t a = 0, b = 0;
    while (a < I.size() && b < J.size()) {
        if (I.idx_[a] == J.idx_[b]) return {Sign::zero(), IndexList()};
        if (J.idx_[b] < I.idx_[a]) {
            inversions += static_cast<long>(I.size() - a);
            merged.push_back(J.idx_[b++]);
        } else {
            merged.push_back(I.idx_[a++]);
        }
    }
    while (a < I.size()) merged.push_back(I.idx_[a++]);
    while (b < J.size()) merged.push_back(J.idx_[b++]);
    return {parity_sign(inversions), IndexList(IndexList::Trusted{}, std::move(merged))};
}

IndexList complement(const IndexList& I, int dim) {
    std::vector<std::uint8_t> out;
    out.reserve(static_cast<std::size_t>(dim));
    std::size_t a = 0;
    for (int i = 0; i < dim; ++i) {
        if (a < I.size() && I.idx_[a] == i) {
            ++a;
            continue;
        }
        out.push_back(static_cast<std::uint8_t>(i));
    }
    return IndexList(IndexList::Trusted{}, std::move(out));
}

std::optional<IndexList> subtract(const IndexList& J, const IndexList& I) {
    std::vector<std::uint8_t> out;
    std::size_t a = 0;
    for (auto j : J.idx_) {
        if (a < I.size() && I.idx_[a] == j) {
            ++a;
            continue;
        }
        if (a < I.size() && I.idx_[a] < j) return std::nullopt;
        out.push_back(j);
    }
    if (a != I.size()) return std::nullopt;
    return IndexList(IndexList::Trusted{}, std::move(out));
}

std::vector<IndexList> all_index_lists(int dim, int grade) {
    std::vector<IndexList> out;
    if (grade < 0 || grade > dim) return out;
    std::vector<std::uint8_t> cur(static_cast<std::size_t>(grade));
    for (int k = 0; k < grade; ++k) cur[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(k);
    while (true) {
        out.push_back(IndexList(IndexList::Trusted{}, cur));
        int pos = grade - 1;
        while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == dim - grade + pos) --pos;
        if (pos < 0) break;
        ++cur[static_cast<std::size_t>(pos)];
        for (int k = pos + 1; k < grade; ++k)
            cur[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(cur[static_cast<std::size_t>(k - 1)] + 1);
    }
    return out;
}

std::vector<IndexList> all_index_lists(int dim) {
    std::vector<IndexList> out;
    for (int g = 0; g <= dim; ++g) {
        auto lists = all_index_lists(dim, g);
        out.insert(out.end(), lists.begin(), lists.end());
    }
    return out;
}

long binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace extalg
