#pragma once

#include <map>
#include <span>

#include "meixner/multi_index.hpp"
#include "meixner/rational.hpp"

namespace meixner {

// Multivariate polynomial over Rational, stored sparsely as a map from
// exponent vector to coefficient. Zero coefficients are never stored.
class SparsePolynomial {
public:
    explicit SparsePolynomial(int dimension);
    static SparsePolynomial constant(int dimension, Rational value);
    static SparsePolynomial variable(int dimension, int axis);
    static SparsePolynomial monomial(MultiIndex exponent, Rational coefficient);

    int dimension() const { return dimension_; }
    bool is_zero() const { return terms_.empty(); }
    // max |exponent| over stored terms; 0 for the zero polynomial
    int total_degree() const;
    const std::map<MultiIndex, Rational>& terms() const { return terms_; }
    Rational coefficient(const MultiIndex& exponent) const;

    // Accumulates into the term map, erasing entries that cancel to zero.
    void add_term(const MultiIndex& exponent, const Rational& coefficient);

    SparsePolynomial& operator+=(const SparsePolynomial& other);
    SparsePolynomial& operator-=(const SparsePolynomial& other);
    SparsePolynomial& operator*=(const SparsePolynomial& other);
    SparsePolynomial& operator*=(const Rational& scalar);
    SparsePolynomial operator-() const;

    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) {
        return a += b;
    }
    friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) {
        return a -= b;
    }
    friend SparsePolynomial operator*(SparsePolynomial a, const SparsePolynomial& b) {
        return a *= b;
    }
    friend SparsePolynomial operator*(SparsePolynomial a, const Rational& s) { return a *= s; }
    friend SparsePolynomial operator*(const Rational& s, SparsePolynomial a) { return a *= s; }

    bool operator==(const SparsePolynomial&) const = default;

private:
    int dimension_;
    std::map<MultiIndex, Rational> terms_;
};

// Exact value of p at a rational point.
Rational poly_eval(const SparsePolynomial& p, std::span<const Rational> point);
Rational poly_eval(const SparsePolynomial& p, const MultiIndex& point);

// q with q(x) = p(x + shift) as an exact polynomial identity.
SparsePolynomial poly_shift(const SparsePolynomial& p, std::span<const int> shift);

}  // namespace meixner
