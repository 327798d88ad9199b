#include "meixner/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace meixner {

TruncatedSeries::TruncatedSeries(int dimension, int order)
    : dimension_(dimension), order_(order) {
    if (dimension < 0) {
        throw std::invalid_argument("TruncatedSeries: negative dimension");
    }
    if (order < 0) {
        throw std::invalid_argument("TruncatedSeries: negative order");
    }
}

TruncatedSeries TruncatedSeries::one(int dimension, int order) {
    TruncatedSeries s(dimension, order);
    s.add_term(MultiIndex::zero(dimension), Rational(1));
    return s;
}

TruncatedSeries TruncatedSeries::from_polynomial(const SparsePolynomial& p, int order) {
    TruncatedSeries s(p.dimension(), order);
    for (const auto& [exponent, coefficient] : p.terms()) {
        s.add_term(exponent, coefficient);
    }
    return s;
}

Rational TruncatedSeries::coefficient(const MultiIndex& exponent) const {
    const auto it = coefficients_.find(exponent);
    return it == coefficients_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::add_term(const MultiIndex& exponent, const Rational& value) {
    if (exponent.dimension() != dimension_) {
        throw std::invalid_argument("TruncatedSeries: exponent dimension mismatch");
    }
    if (value == 0 || exponent.total() > order_) {
        return;
    }
    auto [it, inserted] = coefficients_.emplace(exponent, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) {
            coefficients_.erase(it);
        }
    }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
    if (other.dimension_ != dimension_) {
        throw std::invalid_argument("TruncatedSeries: dimension mismatch");
    }
    order_ = std::min(order_, other.order_);
    std::erase_if(coefficients_,
                  [this](const auto& entry) { return entry.first.total() > order_; });
    for (const auto& [exponent, value] : other.coefficients_) {
        add_term(exponent, value);
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
    if (other.dimension_ != dimension_) {
        throw std::invalid_argument("TruncatedSeries: dimension mismatch");
    }
    order_ = std::min(order_, other.order_);
    std::erase_if(coefficients_,
                  [this](const auto& entry) { return entry.first.total() > order_; });
    for (const auto& [exponent, value] : other.coefficients_) {
        add_term(exponent, -value);
    }
    return *this;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.dimension() != b.dimension()) {
        throw std::invalid_argument("series_mul: dimension mismatch");
    }
    TruncatedSeries product(a.dimension(), std::min(a.order(), b.order()));
    for (const auto& [ea, ca] : a.coefficients()) {
        if (ea.total() > product.order()) {
            continue;
        }
        for (const auto& [eb, cb] : b.coefficients()) {
            if (ea.total() + eb.total() > product.order()) {
                continue;
            }
            product.add_term(ea.plus(eb), ca * cb);
        }
    }
    return product;
}

TruncatedSeries series_pow(const TruncatedSeries& base, int exponent) {
    if (exponent < 0) {
        throw std::invalid_argument("series_pow: negative exponent");
    }
    TruncatedSeries result = TruncatedSeries::one(base.dimension(), base.order());
    TruncatedSeries square(base);
    int remaining = exponent;
    while (remaining > 0) {
        if (remaining % 2 == 1) {
            result = series_mul(result, square);
        }
        remaining /= 2;
        if (remaining > 0) {
            square = series_mul(square, square);
        }
    }
    return result;
}

TruncatedSeries series_negative_power(const Rational& gamma, int dimension, int order) {
    TruncatedSeries s(dimension, order);
    for (const MultiIndex& k : indices_total_at_most(dimension, order)) {
        s.add_term(k, pochhammer(gamma, k.total()) / Rational(k.factorial()));
    }
    return s;
}

}  // namespace meixner
