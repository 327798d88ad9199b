#pragma once

#include <map>

#include "meixner/multi_index.hpp"
#include "meixner/polynomial.hpp"
#include "meixner/rational.hpp"

namespace meixner {

// Formal power series truncated by total degree: every operation discards
// terms with |exponent| > order. Coefficients are exact rationals.
class TruncatedSeries {
public:
    TruncatedSeries(int dimension, int order);
    static TruncatedSeries one(int dimension, int order);
    static TruncatedSeries from_polynomial(const SparsePolynomial& p, int order);

    int dimension() const { return dimension_; }
    int order() const { return order_; }
    const std::map<MultiIndex, Rational>& coefficients() const { return coefficients_; }
    Rational coefficient(const MultiIndex& exponent) const;

    // Accumulates; silently drops exponents beyond the order bound.
    void add_term(const MultiIndex& exponent, const Rational& value);

    TruncatedSeries& operator+=(const TruncatedSeries& other);
    TruncatedSeries& operator-=(const TruncatedSeries& other);

    bool operator==(const TruncatedSeries&) const = default;

private:
    int dimension_;
    int order_;
    std::map<MultiIndex, Rational> coefficients_;
};

// Exact Cauchy product truncated at min(order(a), order(b)).
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

// base^exponent for nonnegative integer exponent, truncated at order(base).
TruncatedSeries series_pow(const TruncatedSeries& base, int exponent);

// (1 - z_1 - ... - z_d)^{-gamma} = sum_k (gamma)_{|k|}/k! z^k, up to |k| <= order.
TruncatedSeries series_negative_power(const Rational& gamma, int dimension, int order);

}  // namespace meixner
