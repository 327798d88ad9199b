#include "meixner/parameter_space.hpp"

#include <sstream>
#include <stdexcept>

#include "meixner/errors.hpp"

namespace meixner {

namespace {

Rational vector_sum(const std::vector<Rational>& values) {
    Rational sum(0);
    for (const Rational& v : values) {
        sum += v;
    }
    return sum;
}

bool shape_ok(int d, const std::vector<Rational>& c, const std::vector<Rational>& c_tilde,
              const RationalMatrix& U) {
    const std::size_t n = static_cast<std::size_t>(d) + 1;
    if (d < 1 || c.size() != static_cast<std::size_t>(d) ||
        c_tilde.size() != static_cast<std::size_t>(d) || U.size() != n) {
        return false;
    }
    for (const auto& row : U) {
        if (row.size() != n) {
            return false;
        }
    }
    return true;
}

}  // namespace

MeixnerPoint::MeixnerPoint(int d, Rational c0, std::vector<Rational> c,
                           std::vector<Rational> c_tilde, RationalMatrix U)
    : d_(d), c0_(std::move(c0)), c_(std::move(c)), c_tilde_(std::move(c_tilde)),
      u_(std::move(U)) {}

MeixnerPoint MeixnerPoint::validated(int d, Rational c0, std::vector<Rational> c,
                                     std::vector<Rational> c_tilde, RationalMatrix U) {
    const std::vector<ParameterCheck> report = parameter_check_report(d, c0, c, c_tilde, U);
    std::vector<std::string> violations;
    for (const ParameterCheck& check : report) {
        if (check.pass) {
            continue;
        }
        if (check.condition == "nonzero-parameters") {
            throw ZeroParameter(check.details.front());
        }
        violations.insert(violations.end(), check.details.begin(), check.details.end());
    }
    if (!violations.empty()) {
        std::ostringstream message;
        message << "candidate is not in the parameter set (" << violations.size()
                << " condition(s) violated; first: " << violations.front() << ")";
        throw NotInParameterSet(message.str(), std::move(violations));
    }
    return MeixnerPoint(d, std::move(c0), std::move(c), std::move(c_tilde), std::move(U));
}

MeixnerPoint MeixnerPoint::unchecked(int d, Rational c0, std::vector<Rational> c,
                                     std::vector<Rational> c_tilde, RationalMatrix U) {
    if (!shape_ok(d, c, c_tilde, U)) {
        throw std::invalid_argument("MeixnerPoint: inconsistent shapes");
    }
    return MeixnerPoint(d, std::move(c0), std::move(c), std::move(c_tilde), std::move(U));
}

const Rational& MeixnerPoint::u(int row, int col) const {
    return u_.at(static_cast<std::size_t>(row)).at(static_cast<std::size_t>(col));
}

RationalMatrix MeixnerPoint::C() const {
    std::vector<Rational> diag;
    diag.reserve(static_cast<std::size_t>(d_) + 1);
    diag.emplace_back(1);
    for (const Rational& ci : c_) {
        diag.push_back(-ci);
    }
    return mat_diagonal(diag);
}

RationalMatrix MeixnerPoint::C_tilde() const {
    std::vector<Rational> diag;
    diag.reserve(static_cast<std::size_t>(d_) + 1);
    diag.emplace_back(1);
    for (const Rational& ci : c_tilde_) {
        diag.push_back(-ci);
    }
    return mat_diagonal(diag);
}

std::vector<ParameterCheck> parameter_check_report(int d, const Rational& c0,
                                                   const std::vector<Rational>& c,
                                                   const std::vector<Rational>& c_tilde,
                                                   const RationalMatrix& U) {
    std::vector<ParameterCheck> report;
    const auto add = [&report](std::string condition, std::vector<std::string> details) {
        report.push_back(
            ParameterCheck{std::move(condition), details.empty(), std::move(details)});
    };

    if (!shape_ok(d, c, c_tilde, U)) {
        add("shape", {"inconsistent dimensions for d=" + std::to_string(d)});
        return report;
    }
    add("shape", {});

    std::vector<std::string> zeros;
    if (c0 == 0) {
        zeros.push_back("c0 is zero");
    }
    for (int i = 0; i < d; ++i) {
        if (c[static_cast<std::size_t>(i)] == 0) {
            zeros.push_back("c_" + std::to_string(i + 1) + " is zero");
        }
        if (c_tilde[static_cast<std::size_t>(i)] == 0) {
            zeros.push_back("c_tilde_" + std::to_string(i + 1) + " is zero");
        }
    }
    const bool has_zeros = !zeros.empty();
    add("nonzero-parameters", std::move(zeros));

    const std::size_t n = static_cast<std::size_t>(d) + 1;
    std::vector<std::string> border;
    for (std::size_t j = 0; j < n; ++j) {
        if (U[0][j] != 1) {
            border.push_back("u_{0," + std::to_string(j) + "} != 1");
        }
        if (j > 0 && U[j][0] != 1) {
            border.push_back("u_{" + std::to_string(j) + ",0} != 1");
        }
    }
    add("border-ones", std::move(border));

    // U^t C U C~ = c0 I
    std::vector<Rational> c_diag{Rational(1)};
    std::vector<Rational> ct_diag{Rational(1)};
    for (int i = 0; i < d; ++i) {
        c_diag.push_back(-c[static_cast<std::size_t>(i)]);
        ct_diag.push_back(-c_tilde[static_cast<std::size_t>(i)]);
    }
    const RationalMatrix product =
        mat_mul(mat_mul(mat_mul(mat_transpose(U), mat_diagonal(c_diag)), U),
                mat_diagonal(ct_diag));
    std::vector<std::string> off;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Rational expected = i == j ? c0 : Rational(0);
            if (product[i][j] != expected) {
                std::ostringstream message;
                message << "(U^t C U C~)_{" << i << "," << j << "} = "
                        << to_string(product[i][j]) << ", expected " << to_string(expected);
                off.push_back(message.str());
            }
        }
    }
    add("product-identity", std::move(off));

    // c0 = 1 - |c| = 1 - |c~|
    std::vector<std::string> sums;
    if (c0 != 1 - vector_sum(c)) {
        sums.push_back("c0 != 1 - |c|");
    }
    if (c0 != 1 - vector_sum(c_tilde)) {
        sums.push_back("c0 != 1 - |c_tilde|");
    }
    add("weight-sum", std::move(sums));

    // sum_k c_k u_{k,i} = 1 - c0 delta_{i,0}
    std::vector<std::string> linear;
    for (std::size_t i = 0; i < n; ++i) {
        Rational sum(0);
        for (int k = 1; k <= d; ++k) {
            sum += c[static_cast<std::size_t>(k - 1)] * U[static_cast<std::size_t>(k)][i];
        }
        const Rational expected = i == 0 ? 1 - c0 : Rational(1);
        if (sum != expected) {
            linear.push_back("sum_k c_k u_{k," + std::to_string(i) + "} != " +
                             to_string(expected));
        }
    }
    add("cross-identity-linear", std::move(linear));

    // sum_k c_k u_{k,i} u_{k,j} = 1 + (c0/c~_j) delta_{i,j}
    std::vector<std::string> quadratic;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 1; j < n; ++j) {
            if (has_zeros && i == j && c_tilde[j - 1] == 0) {
                continue;  // undefined; already flagged by nonzero-parameters
            }
            Rational sum(0);
            for (int k = 1; k <= d; ++k) {
                sum += c[static_cast<std::size_t>(k - 1)] *
                       U[static_cast<std::size_t>(k)][i] * U[static_cast<std::size_t>(k)][j];
            }
            Rational expected(1);
            if (i == j) {
                expected += c0 / c_tilde[j - 1];
            }
            if (sum != expected) {
                quadratic.push_back("sum_k c_k u_{k," + std::to_string(i) + "} u_{k," +
                                    std::to_string(j) + "} != " + to_string(expected));
            }
        }
    }
    add("cross-identity-quadratic", std::move(quadratic));
    return report;
}

std::vector<std::string> check_parameter_point(int d, const Rational& c0,
                                               const std::vector<Rational>& c,
                                               const std::vector<Rational>& c_tilde,
                                               const RationalMatrix& U) {
    std::vector<std::string> violations;
    for (const ParameterCheck& check : parameter_check_report(d, c0, c, c_tilde, U)) {
        violations.insert(violations.end(), check.details.begin(), check.details.end());
    }
    return violations;
}

MeixnerPoint involution(const MeixnerPoint& point) {
    return MeixnerPoint::validated(point.dimension(), point.c0(), point.c_tilde(), point.c(),
                                   mat_transpose(point.U()));
}

MeixnerPoint involution_unchecked(const MeixnerPoint& point) {
    return MeixnerPoint::unchecked(point.dimension(), point.c0(), point.c_tilde(), point.c(),
                                   mat_transpose(point.U()));
}

MeixnerPoint from_weights(const std::vector<Rational>& c, const std::vector<Rational>& mixing) {
    const int d = static_cast<int>(c.size());
    if (d < 1) {
        throw BadParameter("from_weights: need at least one weight");
    }
    for (int i = 0; i < d; ++i) {
        if (c[static_cast<std::size_t>(i)] == 0) {
            throw ZeroParameter("from_weights: c_" + std::to_string(i + 1) + " is zero");
        }
    }
    const Rational c0 = 1 - vector_sum(c);
    if (c0 == 0) {
        throw ZeroParameter("from_weights: c0 = 1 - |c| is zero");
    }
    const std::size_t expected_mixing = static_cast<std::size_t>(d) *
                                        (static_cast<std::size_t>(d) - 1) / 2;
    if (!mixing.empty() && mixing.size() != expected_mixing) {
        throw BadParameter("from_weights: expected " + std::to_string(expected_mixing) +
                           " mixing parameters, got " + std::to_string(mixing.size()));
    }

    const std::size_t n = static_cast<std::size_t>(d) + 1;
    // <w1, w2> = w1^t C w2 with C = diag(1, -c_1, ..., -c_d)
    std::vector<Rational> form_diag{Rational(1)};
    for (const Rational& ci : c) {
        form_diag.push_back(-ci);
    }
    const auto inner = [&form_diag, n](const std::vector<Rational>& a,
                                       const std::vector<Rational>& b) {
        Rational sum(0);
        for (std::size_t k = 0; k < n; ++k) {
            sum += form_diag[k] * a[k] * b[k];
        }
        return sum;
    };

    std::vector<std::vector<Rational>> basis;  // columns v_0, ..., v_d
    basis.push_back(std::vector<Rational>(n, Rational(1)));
    std::vector<Rational> norms{c0};  // <v_0, v_0> = 1 - |c| = c0

    std::size_t mix_pos = 0;
    for (int j = 1; j <= d; ++j) {
        std::vector<Rational> v(n, Rational(0));
        v[static_cast<std::size_t>(j)] = 1;
        for (int t = j + 1; t <= d; ++t) {
            if (!mixing.empty()) {
                v[static_cast<std::size_t>(t)] = mixing[mix_pos];
            }
            ++mix_pos;
        }
        for (int prev = 0; prev < j; ++prev) {
            const Rational projection =
                inner(basis[static_cast<std::size_t>(prev)], v) /
                norms[static_cast<std::size_t>(prev)];
            if (projection == 0) {
                continue;
            }
            for (std::size_t k = 0; k < n; ++k) {
                v[k] -= projection * basis[static_cast<std::size_t>(prev)][k];
            }
        }
        if (v[0] == 0) {
            throw DegenerateStep("from_weights: column " + std::to_string(j) +
                                 " has leading coordinate 0 before normalization");
        }
        const Rational leading = v[0];
        for (std::size_t k = 0; k < n; ++k) {
            v[k] /= leading;
        }
        const Rational norm = inner(v, v);
        if (norm == 0) {
            throw DegenerateStep("from_weights: <v_" + std::to_string(j) + ", v_" +
                                 std::to_string(j) + "> = 0");
        }
        basis.push_back(std::move(v));
        norms.push_back(norm);
    }

    RationalMatrix U(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t row = 0; row < n; ++row) {
            U[row][col] = basis[col][row];
        }
    }
    std::vector<Rational> c_tilde;
    c_tilde.reserve(static_cast<std::size_t>(d));
    for (int j = 1; j <= d; ++j) {
        c_tilde.push_back(-c0 / norms[static_cast<std::size_t>(j)]);
    }
    return MeixnerPoint::validated(d, c0, c, std::move(c_tilde), std::move(U));
}

MeixnerPoint family_triangular(const std::vector<Rational>& c) {
    const int d = static_cast<int>(c.size());
    if (d < 1) {
        throw BadParameter("family_triangular: need at least one weight");
    }
    for (int i = 0; i < d; ++i) {
        if (c[static_cast<std::size_t>(i)] == 0) {
            throw ZeroParameter("family_triangular: c_" + std::to_string(i + 1) + " is zero");
        }
    }
    const Rational c0 = 1 - vector_sum(c);
    if (c0 == 0) {
        throw ZeroParameter("family_triangular: c0 = 1 - |c| is zero");
    }

    // tail_sum[k] = sum_{j=k}^{d} c_j (1-based k; tail_sum[d+1] = 0)
    std::vector<Rational> tail_sum(static_cast<std::size_t>(d) + 2, Rational(0));
    for (int k = d; k >= 1; --k) {
        tail_sum[static_cast<std::size_t>(k)] =
            tail_sum[static_cast<std::size_t>(k) + 1] + c[static_cast<std::size_t>(k - 1)];
    }

    std::vector<Rational> c_tilde;
    c_tilde.reserve(static_cast<std::size_t>(d));
    for (int k = 1; k <= d; ++k) {
        const Rational after = 1 - tail_sum[static_cast<std::size_t>(k) + 1];
        const Rational from = 1 - tail_sum[static_cast<std::size_t>(k)];
        if (after == 0 || from == 0) {
            throw ZeroDenominator("family_triangular: denominator vanishes at k=" +
                                  std::to_string(k), k);
        }
        c_tilde.push_back(c[static_cast<std::size_t>(k - 1)] * c0 / (after * from));
    }

    const std::size_t n = static_cast<std::size_t>(d) + 1;
    RationalMatrix U(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i < j) {
                U[i][j] = i == 0 ? Rational(1) : Rational(0);
            } else if (i > j) {
                U[i][j] = 1;
            } else if (i == 0) {
                U[i][j] = 1;
            } else {
                U[i][j] = (1 - tail_sum[i + 1]) / c[i - 1];
            }
        }
    }
    return MeixnerPoint::validated(d, c0, c, std::move(c_tilde), std::move(U));
}

MeixnerPoint family_geometric(const Rational& q, int d) {
    if (q == 0 || q == 1) {
        throw BadParameter("family_geometric: q must not be 0 or 1");
    }
    if (d < 1) {
        throw BadParameter("family_geometric: d must be at least 1");
    }
    std::vector<Rational> c;
    c.reserve(static_cast<std::size_t>(d));
    for (int k = 1; k <= d; ++k) {
        c.push_back((1 - q) * pow_int(q, k - 1));
    }
    const Rational c0 = pow_int(q, d);

    const std::size_t n = static_cast<std::size_t>(d) + 1;
    RationalMatrix U(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const int anti = static_cast<int>(i) + static_cast<int>(j);
            if (anti <= d) {
                U[i][j] = 1;
            } else if (anti == d + 1) {
                U[i][j] = 1 / (1 - q);
            }
        }
    }
    return MeixnerPoint::validated(d, c0, c, c, std::move(U));
}

}  // namespace meixner
