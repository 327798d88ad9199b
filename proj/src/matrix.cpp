#include "meixner/matrix.hpp"

#include <stdexcept>

namespace meixner {

RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.empty() || b.empty() || a.front().size() != b.size()) {
        throw std::invalid_argument("mat_mul: incompatible shapes");
    }
    const std::size_t rows = a.size();
    const std::size_t inner = b.size();
    const std::size_t cols = b.front().size();
    RationalMatrix result(rows, std::vector<Rational>(cols, Rational(0)));
    for (std::size_t i = 0; i < rows; ++i) {
        if (a[i].size() != inner) {
            throw std::invalid_argument("mat_mul: ragged left matrix");
        }
        for (std::size_t k = 0; k < inner; ++k) {
            if (b[k].size() != cols) {
                throw std::invalid_argument("mat_mul: ragged right matrix");
            }
            if (a[i][k] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < cols; ++j) {
                result[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return result;
}

RationalMatrix mat_transpose(const RationalMatrix& a) {
    if (a.empty()) {
        return {};
    }
    const std::size_t rows = a.size();
    const std::size_t cols = a.front().size();
    RationalMatrix result(cols, std::vector<Rational>(rows, Rational(0)));
    for (std::size_t i = 0; i < rows; ++i) {
        if (a[i].size() != cols) {
            throw std::invalid_argument("mat_transpose: ragged matrix");
        }
        for (std::size_t j = 0; j < cols; ++j) {
            result[j][i] = a[i][j];
        }
    }
    return result;
}

RationalMatrix mat_diagonal(const std::vector<Rational>& diag) {
    RationalMatrix result(diag.size(), std::vector<Rational>(diag.size(), Rational(0)));
    for (std::size_t i = 0; i < diag.size(); ++i) {
        result[i][i] = diag[i];
    }
    return result;
}

RationalMatrix mat_scaled_identity(int n, const Rational& scale) {
    RationalMatrix result(static_cast<std::size_t>(n),
                          std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
    for (int i = 0; i < n; ++i) {
        result[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = scale;
    }
    return result;
}

}  // namespace meixner
