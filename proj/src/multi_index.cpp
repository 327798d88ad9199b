#include "meixner/multi_index.hpp"

#include <algorithm>
#include <stdexcept>

namespace meixner {

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int value : entries_) {
        if (value < 0) {
            throw std::invalid_argument("MultiIndex entries must be nonnegative");
        }
    }
}

MultiIndex MultiIndex::zero(int dimension) {
    return MultiIndex(std::vector<int>(static_cast<std::size_t>(dimension), 0));
}

MultiIndex MultiIndex::unit(int dimension, int axis) {
    std::vector<int> entries(static_cast<std::size_t>(dimension), 0);
    entries.at(static_cast<std::size_t>(axis)) = 1;
    return MultiIndex(std::move(entries));
}

int MultiIndex::total() const {
    int sum = 0;
    for (int value : entries_) {
        sum += value;
    }
    return sum;
}

Integer MultiIndex::factorial() const {
    Integer product(1);
    for (int value : entries_) {
        product *= meixner::factorial(value);
    }
    return product;
}

MultiIndex MultiIndex::plus(const MultiIndex& other) const {
    if (other.dimension() != dimension()) {
        throw std::invalid_argument("MultiIndex dimension mismatch");
    }
    std::vector<int> entries(entries_);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        entries[i] += other.entries_[i];
    }
    return MultiIndex(std::move(entries));
}

std::optional<MultiIndex> MultiIndex::shifted(std::span<const int> shift) const {
    if (shift.size() != entries_.size()) {
        throw std::invalid_argument("MultiIndex shift dimension mismatch");
    }
    std::vector<int> entries(entries_);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        entries[i] += shift[i];
        if (entries[i] < 0) {
            return std::nullopt;
        }
    }
    return MultiIndex(std::move(entries));
}

namespace {

void collect_with_total(int dimension, int axis, int remaining, std::vector<int>& current,
                        std::vector<MultiIndex>& out) {
    if (axis == dimension - 1) {
        current[static_cast<std::size_t>(axis)] = remaining;
        out.emplace_back(current);
        return;
    }
    for (int value = 0; value <= remaining; ++value) {
        current[static_cast<std::size_t>(axis)] = value;
        collect_with_total(dimension, axis + 1, remaining - value, current, out);
    }
}

}  // namespace

std::vector<MultiIndex> indices_total_at_most(int dimension, int max_total) {
    std::vector<MultiIndex> result;
    if (dimension <= 0) {
        result.push_back(MultiIndex(std::vector<int>{}));
        return result;
    }
    std::vector<int> current(static_cast<std::size_t>(dimension), 0);
    for (int total = 0; total <= max_total; ++total) {
        collect_with_total(dimension, 0, total, current, result);
    }
    return result;
}

std::vector<MultiIndex> indices_in_box(const std::vector<int>& extent) {
    std::vector<MultiIndex> result;
    const std::size_t d = extent.size();
    std::vector<int> current(d, 0);
    while (true) {
        result.emplace_back(current);
        std::size_t axis = d;
        while (axis > 0) {
            --axis;
            if (current[axis] < extent[axis]) {
                ++current[axis];
                std::fill(current.begin() + static_cast<std::ptrdiff_t>(axis) + 1,
                          current.end(), 0);
                break;
            }
            if (axis == 0) {
                return result;
            }
        }
        if (d == 0) {
            return result;
        }
    }
}

std::vector<MultiIndex> indices_in_box(int dimension, int max_coord) {
    return indices_in_box(std::vector<int>(static_cast<std::size_t>(dimension), max_coord));
}

}  // namespace meixner
