#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "meixner/rational.hpp"

namespace meixner {

// Element of N0^d: degree vectors n, lattice points x, monomial exponents.
class MultiIndex {
public:
    explicit MultiIndex(std::vector<int> entries);
    static MultiIndex zero(int dimension);
    static MultiIndex unit(int dimension, int axis);

    int dimension() const { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& entries() const { return entries_; }

    // |k| = k_1 + ... + k_d
    int total() const;
    // k! = k_1! k_2! ... k_d!
    Integer factorial() const;

    MultiIndex plus(const MultiIndex& other) const;
    // Entry-wise k + shift, or nullopt if the result leaves N0^d.
    std::optional<MultiIndex> shifted(std::span<const int> shift) const;

    auto operator<=>(const MultiIndex&) const = default;

private:
    std::vector<int> entries_;
};

// All k with |k| <= max_total, in graded lexicographic order.
std::vector<MultiIndex> indices_total_at_most(int dimension, int max_total);

// All k with 0 <= k_i <= extent[i], in lexicographic order.
std::vector<MultiIndex> indices_in_box(const std::vector<int>& extent);
std::vector<MultiIndex> indices_in_box(int dimension, int max_coord);

}  // namespace meixner
