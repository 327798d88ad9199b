#include "meixner/meixner_poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "meixner/errors.hpp"
#include "meixner/series.hpp"
#include "meixner/detail/parallel.hpp"

namespace meixner {

MeixnerSpec::MeixnerSpec(MeixnerPoint point, Rational beta)
    : point_(std::move(point)), beta_(std::move(beta)) {
    if (is_nonpositive_integer(beta_)) {
        throw BadParameter("beta must not be a nonpositive integer, got " + to_string(beta_));
    }
}

MeixnerSpec involution(const MeixnerSpec& spec) {
    // kept unchecked so the verification suites can run negative controls
    // on corrupted points; valid inputs involute to valid points anyway
    return MeixnerSpec(involution_unchecked(spec.point()), spec.beta());
}

DegreeMatrix::DegreeMatrix(int d)
    : d_(d), entries_(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), 0) {
    if (d < 1) {
        throw std::invalid_argument("DegreeMatrix: dimension must be positive");
    }
}

int DegreeMatrix::column_sum(int j) const {
    int sum = 0;
    for (int i = 0; i < d_; ++i) {
        sum += at(i, j);
    }
    return sum;
}

int DegreeMatrix::row_sum(int i) const {
    int sum = 0;
    for (int j = 0; j < d_; ++j) {
        sum += at(i, j);
    }
    return sum;
}

int DegreeMatrix::total() const {
    int sum = 0;
    for (int value : entries_) {
        sum += value;
    }
    return sum;
}

MultiIndex DegreeMatrix::row_sums() const {
    std::vector<int> sums(static_cast<std::size_t>(d_), 0);
    for (int i = 0; i < d_; ++i) {
        sums[static_cast<std::size_t>(i)] = row_sum(i);
    }
    return MultiIndex(std::move(sums));
}

namespace {

// all column vectors (a_1, ..., a_d) with sum <= bound, lexicographic
void enumerate_column(int d, int bound, int axis, std::vector<int>& column,
                      const std::function<void(const std::vector<int>&, int)>& visit,
                      int used) {
    if (axis == d) {
        visit(column, used);
        return;
    }
    for (int value = 0; value <= bound - used; ++value) {
        column[static_cast<std::size_t>(axis)] = value;
        enumerate_column(d, bound, axis + 1, column, visit, used + value);
    }
}

void enumerate_matrices(const MultiIndex& n, int col, DegreeMatrix& matrix,
                        const std::function<void(const DegreeMatrix&)>& visit) {
    const int d = n.dimension();
    if (col == d) {
        visit(matrix);
        return;
    }
    std::vector<int> column(static_cast<std::size_t>(d), 0);
    enumerate_column(d, n[col], 0, column,
                     [&](const std::vector<int>& entries, int) {
                         for (int i = 0; i < d; ++i) {
                             matrix.set(i, col, entries[static_cast<std::size_t>(i)]);
                         }
                         enumerate_matrices(n, col + 1, matrix, visit);
                     },
                     0);
}

}  // namespace

void for_each_degree_matrix(const MultiIndex& n,
                            const std::function<void(const DegreeMatrix&)>& visit) {
    DegreeMatrix matrix(n.dimension());
    enumerate_matrices(n, 0, matrix, visit);
}

Rational PochhammerForm::eval(std::span<const Rational> x) const {
    if (static_cast<int>(x.size()) != dimension) {
        throw std::invalid_argument("PochhammerForm: point dimension mismatch");
    }
    // (-x_i)_m tables, filled on demand
    std::vector<std::vector<Rational>> poch(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        poch[i].push_back(Rational(1));
    }
    Rational result(0);
    for (const auto& [rows, weight] : weights) {
        Rational term(weight);
        for (std::size_t i = 0; i < x.size(); ++i) {
            const int m = rows[static_cast<int>(i)];
            while (static_cast<int>(poch[i].size()) <= m) {
                const int k = static_cast<int>(poch[i].size()) - 1;
                poch[i].push_back(poch[i].back() * (Rational(k) - x[i]));
            }
            if (m > 0) {
                term *= poch[i][static_cast<std::size_t>(m)];
                if (term == 0) {
                    break;
                }
            }
        }
        result += term;
    }
    return result;
}

Rational PochhammerForm::eval(const MultiIndex& x) const {
    std::vector<Rational> coords;
    coords.reserve(x.entries().size());
    for (int v : x.entries()) {
        coords.emplace_back(v);
    }
    return eval(coords);
}

SparsePolynomial PochhammerForm::to_polynomial() const {
    SparsePolynomial result(dimension);
    if (weights.empty()) {
        return result;
    }
    int max_row = 0;
    for (const auto& [rows, weight] : weights) {
        for (int i = 0; i < dimension; ++i) {
            max_row = std::max(max_row, rows[i]);
        }
    }
    // falling[i][m] = (-x_i)_m = prod_{t=0}^{m-1} (t - x_i) as a polynomial
    std::vector<std::vector<SparsePolynomial>> falling(
        static_cast<std::size_t>(dimension));
    for (int i = 0; i < dimension; ++i) {
        auto& column = falling[static_cast<std::size_t>(i)];
        column.push_back(SparsePolynomial::constant(dimension, Rational(1)));
        for (int m = 1; m <= max_row; ++m) {
            SparsePolynomial factor =
                SparsePolynomial::constant(dimension, Rational(m - 1)) -
                SparsePolynomial::variable(dimension, i);
            column.push_back(column.back() * factor);
        }
    }
    for (const auto& [rows, weight] : weights) {
        SparsePolynomial term = SparsePolynomial::constant(dimension, weight);
        for (int i = 0; i < dimension; ++i) {
            if (rows[i] > 0) {
                term *= falling[static_cast<std::size_t>(i)][static_cast<std::size_t>(rows[i])];
            }
        }
        result += term;
    }
    return result;
}

PochhammerForm pochhammer_form(const MeixnerSpec& spec, const MultiIndex& n) {
    const int d = spec.dimension();
    if (n.dimension() != d) {
        throw std::invalid_argument("pochhammer_form: degree dimension mismatch");
    }
    const MeixnerPoint& point = spec.point();

    // per-column lists of (entries, scalar) with zero-scalar columns pruned;
    // scalar = (-n_j)_{colsum} prod_i (1-u_{i,j})^{a_{i,j}} / a_{i,j}!
    struct ColumnTerm {
        std::vector<int> entries;
        Rational scalar;
    };
    std::vector<std::vector<ColumnTerm>> columns(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        // (1-u_{i,j})^a / a! per entry, i and j 1-based in U
        std::vector<std::vector<Rational>> entry_scalars(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) {
            const Rational base = 1 - point.u(i + 1, j + 1);
            auto& scalars = entry_scalars[static_cast<std::size_t>(i)];
            scalars.push_back(Rational(1));
            for (int a = 1; a <= n[j]; ++a) {
                scalars.push_back(scalars.back() * base / a);
            }
        }
        std::vector<Rational> degree_poch;  // (-n_j)_s
        for (int s = 0; s <= n[j]; ++s) {
            degree_poch.push_back(pochhammer(Rational(-n[j]), s));
        }
        std::vector<int> column(static_cast<std::size_t>(d), 0);
        enumerate_column(d, n[j], 0, column,
                         [&](const std::vector<int>& entries, int sum) {
                             Rational scalar = degree_poch[static_cast<std::size_t>(sum)];
                             for (int i = 0; i < d && scalar != 0; ++i) {
                                 scalar *= entry_scalars[static_cast<std::size_t>(i)]
                                                        [static_cast<std::size_t>(
                                                            entries[static_cast<std::size_t>(i)])];
                             }
                             if (scalar != 0) {
                                 columns[static_cast<std::size_t>(j)].push_back(
                                     ColumnTerm{entries, std::move(scalar)});
                             }
                         },
                         0);
    }

    std::vector<Rational> beta_poch;  // (beta)_t for t <= |n|
    for (int t = 0; t <= n.total(); ++t) {
        beta_poch.push_back(pochhammer(spec.beta(), t));
    }

    PochhammerForm form;
    form.dimension = d;
    // column-major product accumulating row sums and the scalar
    std::vector<int> rows(static_cast<std::size_t>(d), 0);
    std::function<void(int, int, const Rational&)> descend =
        [&](int col, int used, const Rational& scalar) {
            if (col == d) {
                const Rational weight = scalar / beta_poch[static_cast<std::size_t>(used)];
                auto [it, inserted] = form.weights.emplace(MultiIndex(rows), weight);
                if (!inserted) {
                    it->second += weight;
                    if (it->second == 0) {
                        form.weights.erase(it);
                    }
                }
                return;
            }
            for (const ColumnTerm& term : columns[static_cast<std::size_t>(col)]) {
                int sum = 0;
                for (int i = 0; i < d; ++i) {
                    rows[static_cast<std::size_t>(i)] += term.entries[static_cast<std::size_t>(i)];
                    sum += term.entries[static_cast<std::size_t>(i)];
                }
                descend(col + 1, used + sum, scalar * term.scalar);
                for (int i = 0; i < d; ++i) {
                    rows[static_cast<std::size_t>(i)] -= term.entries[static_cast<std::size_t>(i)];
                }
            }
        };
    descend(0, 0, Rational(1));
    return form;
}

SparsePolynomial hypergeometric_polynomial(const MeixnerSpec& spec, const MultiIndex& n) {
    return pochhammer_form(spec, n).to_polynomial();
}

std::map<MultiIndex, Rational> generating_coefficients(const MeixnerSpec& spec,
                                                       const MultiIndex& x, int order) {
    const int d = spec.dimension();
    if (x.dimension() != d) {
        throw std::invalid_argument("generating_coefficients: point dimension mismatch");
    }
    if (order < 0) {
        throw std::invalid_argument("generating_coefficients: negative order");
    }
    TruncatedSeries g = series_negative_power(spec.beta() + x.total(), d, order);
    for (int i = 1; i <= d; ++i) {
        SparsePolynomial linear = SparsePolynomial::constant(d, Rational(1));
        for (int j = 1; j <= d; ++j) {
            linear.add_term(MultiIndex::unit(d, j - 1), -spec.point().u(i, j));
        }
        g = series_mul(g, series_pow(TruncatedSeries::from_polynomial(linear, order), x[i - 1]));
    }
    std::map<MultiIndex, Rational> coefficients;
    for (const MultiIndex& k : indices_total_at_most(d, order)) {
        coefficients.emplace(k, g.coefficient(k));
    }
    return coefficients;
}

Rational evaluate(const MeixnerSpec& spec, const MultiIndex& n, std::span<const Rational> x) {
    return pochhammer_form(spec, n).eval(x);
}

Rational evaluate(const MeixnerSpec& spec, const MultiIndex& n, const MultiIndex& x) {
    return pochhammer_form(spec, n).eval(x);
}

bool duality_check(const MeixnerSpec& spec, const MultiIndex& n, const MultiIndex& x) {
    return evaluate(spec, n, x) == evaluate(involution(spec), x, n);
}

Rational gauss_2f1(int n, int x, const Rational& beta, const Rational& t) {
    if (n < 0 || x < 0) {
        throw std::invalid_argument("gauss_2f1: negative integer argument");
    }
    Rational sum(0);
    const int top = std::min(n, x);
    for (int a = 0; a <= top; ++a) {
        sum += pochhammer(Rational(-n), a) * pochhammer(Rational(-x), a) /
               (pochhammer(beta, a) * Rational(factorial(a))) * pow_int(t, a);
    }
    return sum;
}

ValueTable::ValueTable(const MeixnerSpec& spec, const std::vector<int>& n_max,
                       const std::vector<int>& x_max)
    : d_(spec.dimension()), n_max_(n_max), x_max_(x_max) {
    if (static_cast<int>(n_max.size()) != d_ || static_cast<int>(x_max.size()) != d_) {
        throw std::invalid_argument("ValueTable: box dimension mismatch");
    }
    const std::vector<MultiIndex> degrees = indices_in_box(n_max_);
    const std::vector<MultiIndex> points = indices_in_box(x_max_);
    x_count_ = points.size();
    values_.assign(degrees.size() * points.size(), Rational(0));

    int max_total = 0;
    for (int v : n_max_) {
        max_total += v;
    }
    // poch[i][v][m] = (-v)_m for lattice coordinate v; zero once m > v
    std::vector<std::vector<std::vector<Rational>>> poch(static_cast<std::size_t>(d_));
    for (int i = 0; i < d_; ++i) {
        auto& per_value = poch[static_cast<std::size_t>(i)];
        per_value.resize(static_cast<std::size_t>(x_max_[static_cast<std::size_t>(i)]) + 1);
        for (int v = 0; v <= x_max_[static_cast<std::size_t>(i)]; ++v) {
            auto& row = per_value[static_cast<std::size_t>(v)];
            row.push_back(Rational(1));
            for (int m = 1; m <= std::min(v, max_total); ++m) {
                row.push_back(row.back() * Rational(m - 1 - v));
            }
        }
    }

    detail::parallel_for(degrees.size(), [&](std::size_t ni) {
        const PochhammerForm form = pochhammer_form(spec, degrees[ni]);
        for (std::size_t xi = 0; xi < points.size(); ++xi) {
            const MultiIndex& x = points[xi];
            Rational value(0);
            for (const auto& [rows, weight] : form.weights) {
                Rational term(weight);
                bool vanished = false;
                for (int i = 0; i < d_; ++i) {
                    const int m = rows[i];
                    if (m > x[i]) {
                        vanished = true;
                        break;
                    }
                    if (m > 0) {
                        term *= poch[static_cast<std::size_t>(i)]
                                    [static_cast<std::size_t>(x[i])]
                                    [static_cast<std::size_t>(m)];
                    }
                }
                if (!vanished) {
                    value += term;
                }
            }
            values_[ni * x_count_ + xi] = std::move(value);
        }
    });
}

std::size_t ValueTable::flat(const MultiIndex& k, const std::vector<int>& extent) const {
    std::size_t index = 0;
    for (int i = 0; i < d_; ++i) {
        const int v = k[i];
        if (v < 0 || v > extent[static_cast<std::size_t>(i)]) {
            throw std::out_of_range("ValueTable: index outside the tabulated box");
        }
        index = index * (static_cast<std::size_t>(extent[static_cast<std::size_t>(i)]) + 1) +
                static_cast<std::size_t>(v);
    }
    return index;
}

const Rational& ValueTable::at(const MultiIndex& n, const MultiIndex& x) const {
    return values_[flat(n, n_max_) * x_count_ + flat(x, x_max_)];
}

}  // namespace meixner
