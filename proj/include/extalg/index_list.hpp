#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace extalg {

/// Largest supported space-time dimension k+n.
inline constexpr int kMaxDimension = 16;

/// Permutation signature: -1, 0 (repeated index) or +1.
class Sign {
public:
    constexpr Sign() = default;
    constexpr explicit Sign(int v) : value_(v > 0 ? 1 : (v < 0 ? -1 : 0)) {}

    static constexpr Sign plus() { return Sign(1); }
    static constexpr Sign minus() { return Sign(-1); }
    static constexpr Sign zero() { return Sign(0); }

    constexpr int value() const { return value_; }
    constexpr bool is_zero() const { return value_ == 0; }

    constexpr Sign operator*(Sign o) const { return Sign(value_ * o.value_); }
    constexpr Sign operator-() const { return Sign(-value_); }
    constexpr bool operator==(const Sign&) const = default;

private:
    int value_ = 1;
};

/// (-1)^p
constexpr Sign parity_sign(long p) { return (p % 2 == 0) ? Sign::plus() : Sign::minus(); }

/// Strictly increasing list of dimension indices labelling a basis blade e_I.
/// The empty list is the scalar blade.
class IndexList {
public:
    IndexList() = default;
    /// Throws std::invalid_argument unless the indices are strictly increasing
    /// and below kMaxDimension.
    IndexList(std::initializer_list<int> indices);
    explicit IndexList(std::span<const int> indices);

    static IndexList single(int i) { return IndexList({i}); }
    /// (0, 1, ..., dim-1)
    static IndexList full(int dim);

    std::size_t size() const { return idx_.size(); }
    bool empty() const { return idx_.empty(); }
    int operator[](std::size_t i) const { return idx_[i]; }
    auto begin() const { return idx_.begin(); }
    auto end() const { return idx_.end(); }

    bool contains(int i) const;
    /// Largest index + 1, or 0 for the empty list.
    int span_dimension() const { return idx_.empty() ? 0 : idx_.back() + 1; }

    std::vector<int> to_vector() const { return {idx_.begin(), idx_.end()}; }
    /// "(0,2,3)"; "()" for the empty list.
    std::string to_string() const;

    /// Lexicographic on the index sequence.
    auto operator<=>(const IndexList&) const = default;
    bool operator==(const IndexList&) const = default;

private:
    struct Trusted {};
    IndexList(Trusted, std::vector<std::uint8_t> idx) : idx_(std::move(idx)) {}
    friend std::pair<Sign, IndexList> sort_signature(std::span<const int>, int);
    friend std::pair<Sign, IndexList> concat_signature(const IndexList&, const IndexList&);
    friend IndexList complement(const IndexList&, int);
    friend std::optional<IndexList> subtract(const IndexList&, const IndexList&);
    friend std::vector<IndexList> all_index_lists(int, int);

    std::vector<std::uint8_t> idx_;
};

/// Signature of the permutation sorting `raw` and the sorted list. A repeated
/// index yields (0, empty). Throws std::domain_error if an index lies outside
/// [0, dim).
std::pair<Sign, IndexList> sort_signature(std::span<const int> raw, int dim);

/// sigma(I,J) and the merged list I+J.
std::pair<Sign, IndexList> concat_signature(const IndexList& I, const IndexList& J);

/// Indices of [0, dim) not present in I, in increasing order.
IndexList complement(const IndexList& I, int dim);

/// J \ I when I is a subset of J, nullopt otherwise.
std::optional<IndexList> subtract(const IndexList& J, const IndexList& I);

/// Every canonical list of length `grade` over [0, dim), lexicographically.
std::vector<IndexList> all_index_lists(int dim, int grade);

/// Every canonical list over [0, dim), ordered by length then lexicographically.
std::vector<IndexList> all_index_lists(int dim);

long binomial(int n, int k);

}  // namespace extalg
