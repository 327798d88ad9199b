#include "meixner/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace meixner {

SparsePolynomial::SparsePolynomial(int dimension) : dimension_(dimension) {
    if (dimension < 0) {
        throw std::invalid_argument("SparsePolynomial: negative dimension");
    }
}

SparsePolynomial SparsePolynomial::constant(int dimension, Rational value) {
    SparsePolynomial p(dimension);
    p.add_term(MultiIndex::zero(dimension), value);
    return p;
}

SparsePolynomial SparsePolynomial::variable(int dimension, int axis) {
    SparsePolynomial p(dimension);
    p.add_term(MultiIndex::unit(dimension, axis), Rational(1));
    return p;
}

SparsePolynomial SparsePolynomial::monomial(MultiIndex exponent, Rational coefficient) {
    SparsePolynomial p(exponent.dimension());
    p.add_term(std::move(exponent), std::move(coefficient));
    return p;
}

int SparsePolynomial::total_degree() const {
    int degree = 0;
    for (const auto& [exponent, coefficient] : terms_) {
        degree = std::max(degree, exponent.total());
    }
    return degree;
}

Rational SparsePolynomial::coefficient(const MultiIndex& exponent) const {
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePolynomial::add_term(const MultiIndex& exponent, const Rational& coefficient) {
    if (exponent.dimension() != dimension_) {
        throw std::invalid_argument("SparsePolynomial: exponent dimension mismatch");
    }
    if (coefficient == 0) {
        return;
    }
    auto [it, inserted] = terms_.emplace(exponent, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
    if (other.dimension_ != dimension_) {
        throw std::invalid_argument("SparsePolynomial: dimension mismatch");
    }
    for (const auto& [exponent, coefficient] : other.terms_) {
        add_term(exponent, coefficient);
    }
    return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& other) {
    if (other.dimension_ != dimension_) {
        throw std::invalid_argument("SparsePolynomial: dimension mismatch");
    }
    for (const auto& [exponent, coefficient] : other.terms_) {
        add_term(exponent, -coefficient);
    }
    return *this;
}

SparsePolynomial& SparsePolynomial::operator*=(const SparsePolynomial& other) {
    if (other.dimension_ != dimension_) {
        throw std::invalid_argument("SparsePolynomial: dimension mismatch");
    }
    SparsePolynomial product(dimension_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : other.terms_) {
            product.add_term(ea.plus(eb), ca * cb);
        }
    }
    *this = std::move(product);
    return *this;
}

SparsePolynomial& SparsePolynomial::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [exponent, coefficient] : terms_) {
        coefficient *= scalar;
    }
    return *this;
}

SparsePolynomial SparsePolynomial::operator-() const {
    SparsePolynomial negated(*this);
    for (auto& [exponent, coefficient] : negated.terms_) {
        coefficient = -coefficient;
    }
    return negated;
}

Rational poly_eval(const SparsePolynomial& p, std::span<const Rational> point) {
    if (static_cast<int>(point.size()) != p.dimension()) {
        throw std::invalid_argument("poly_eval: point dimension mismatch");
    }
    // power tables per variable, filled on demand
    std::vector<std::vector<Rational>> powers(point.size());
    for (std::size_t i = 0; i < point.size(); ++i) {
        powers[i].push_back(Rational(1));
    }
    Rational result(0);
    for (const auto& [exponent, coefficient] : p.terms()) {
        Rational term(coefficient);
        for (std::size_t i = 0; i < point.size(); ++i) {
            const int e = exponent[static_cast<int>(i)];
            while (static_cast<int>(powers[i].size()) <= e) {
                powers[i].push_back(powers[i].back() * point[i]);
            }
            if (e > 0) {
                term *= powers[i][static_cast<std::size_t>(e)];
            }
        }
        result += term;
    }
    return result;
}

Rational poly_eval(const SparsePolynomial& p, const MultiIndex& point) {
    std::vector<Rational> coords;
    coords.reserve(point.entries().size());
    for (int v : point.entries()) {
        coords.emplace_back(v);
    }
    return poly_eval(p, coords);
}

SparsePolynomial poly_shift(const SparsePolynomial& p, std::span<const int> shift) {
    if (static_cast<int>(shift.size()) != p.dimension()) {
        throw std::invalid_argument("poly_shift: shift dimension mismatch");
    }
    const int d = p.dimension();
    SparsePolynomial result(d);
    // binomial rows per variable: (x_i + s_i)^e = sum_j C(e,j) s_i^{e-j} x_i^j
    std::vector<int> exp(static_cast<std::size_t>(d), 0);
    for (const auto& [exponent, coefficient] : p.terms()) {
        // expand the product over variables by nested iteration
        std::vector<int> sub(static_cast<std::size_t>(d), 0);
        while (true) {
            Rational factor(coefficient);
            for (int i = 0; i < d; ++i) {
                const int e = exponent[i];
                const int j = sub[static_cast<std::size_t>(i)];
                if (shift[static_cast<std::size_t>(i)] == 0 && j < e) {
                    factor = 0;
                    break;
                }
                Integer binom;
                mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(e),
                             static_cast<unsigned long>(j));
                factor *= Rational(binom) *
                          pow_int(Rational(shift[static_cast<std::size_t>(i)]), e - j);
            }
            if (factor != 0) {
                for (int i = 0; i < d; ++i) {
                    exp[static_cast<std::size_t>(i)] = sub[static_cast<std::size_t>(i)];
                }
                result.add_term(MultiIndex(exp), factor);
            }
            // advance the mixed-radix counter 0 <= sub_i <= e_i
            int axis = d - 1;
            while (axis >= 0) {
                if (sub[static_cast<std::size_t>(axis)] < exponent[axis]) {
                    ++sub[static_cast<std::size_t>(axis)];
                    std::fill(sub.begin() + axis + 1, sub.end(), 0);
                    break;
                }
                --axis;
            }
            if (axis < 0) {
                break;
            }
        }
    }
    return result;
}

}  // namespace meixner
