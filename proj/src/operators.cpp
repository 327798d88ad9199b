#include "meixner/operators.hpp"

#include <stdexcept>

#include "meixner/detail/parallel.hpp"
#include "meixner/errors.hpp"

namespace meixner {

namespace {

nlohmann::json index_json(const MultiIndex& k) {
    return nlohmann::json(k.entries());
}

void check_direction(int d, int i) {
    if (i < 1 || i > d) {
        throw std::invalid_argument("operator direction must be in 1.." + std::to_string(d));
    }
}

// Shared shape of both operator families. g holds the U entries attached to
// the direction (u_{k,i} for the variable family, u_{i,k} for the degree
// family), w the diagonal weights (c or c~).
DifferenceOperator assemble_operator(int d, const Rational& prefactor,
                                     const std::vector<Rational>& w,
                                     const std::vector<Rational>& g, const Rational& beta) {
    std::vector<OperatorTerm> terms;
    const std::vector<int> no_shift(static_cast<std::size_t>(d), 0);

    SparsePolynomial beta_plus_total = SparsePolynomial::constant(d, beta);
    for (int j = 0; j < d; ++j) {
        beta_plus_total += SparsePolynomial::variable(d, j);
    }

    // one (E... - Id) bracket = a shifted term followed by its Id companion
    const auto push_bracket = [&](SparsePolynomial coefficient, std::vector<int> shift) {
        SparsePolynomial negated = -coefficient;
        terms.push_back(OperatorTerm{std::move(coefficient), std::move(shift)});
        terms.push_back(OperatorTerm{std::move(negated), no_shift});
    };

    // cross terms: coeff x_l, shift E_k E_l^{-1}
    for (int k = 1; k <= d; ++k) {
        for (int l = 1; l <= d; ++l) {
            if (l == k) {
                continue;
            }
            const Rational scalar = prefactor * w[static_cast<std::size_t>(k - 1)] *
                                    g[static_cast<std::size_t>(k - 1)] *
                                    g[static_cast<std::size_t>(l - 1)];
            SparsePolynomial coefficient = SparsePolynomial::variable(d, l - 1) * scalar;
            std::vector<int> shift(no_shift);
            shift[static_cast<std::size_t>(k - 1)] = 1;
            shift[static_cast<std::size_t>(l - 1)] = -1;
            push_bracket(std::move(coefficient), std::move(shift));
        }
    }
    // backward terms: -pre * g_l * v_l, shift E_l^{-1}
    for (int l = 1; l <= d; ++l) {
        SparsePolynomial coefficient = SparsePolynomial::variable(d, l - 1) *
                                       (-prefactor * g[static_cast<std::size_t>(l - 1)]);
        std::vector<int> shift(no_shift);
        shift[static_cast<std::size_t>(l - 1)] = -1;
        push_bracket(std::move(coefficient), std::move(shift));
    }
    // forward terms: -pre * w_k * g_k * (beta + |v|), shift E_k
    for (int k = 1; k <= d; ++k) {
        SparsePolynomial coefficient =
            beta_plus_total * (-prefactor * w[static_cast<std::size_t>(k - 1)] *
                               g[static_cast<std::size_t>(k - 1)]);
        std::vector<int> shift(no_shift);
        shift[static_cast<std::size_t>(k - 1)] = 1;
        push_bracket(std::move(coefficient), std::move(shift));
    }
    return DifferenceOperator(d, std::move(terms));
}

}  // namespace

DifferenceOperator::DifferenceOperator(int dimension, std::vector<OperatorTerm> terms)
    : dimension_(dimension), terms_(std::move(terms)) {
    for (const OperatorTerm& term : terms_) {
        if (term.coefficient.dimension() != dimension_ ||
            static_cast<int>(term.shift.size()) != dimension_) {
            throw std::invalid_argument("DifferenceOperator: term dimension mismatch");
        }
        int forward = 0;
        int backward = 0;
        for (int s : term.shift) {
            if (s == 1) {
                ++forward;
            } else if (s == -1) {
                ++backward;
            } else if (s != 0) {
                throw std::invalid_argument("DifferenceOperator: shift entries must be -1, 0, 1");
            }
        }
        if (forward > 1 || backward > 1) {
            throw std::invalid_argument(
                "DifferenceOperator: at most one forward and one backward shift per term");
        }
        // a backward shift in direction l must come with the factor v_l, so
        // the term vanishes on the lattice boundary v_l = 0
        for (int l = 0; l < dimension_; ++l) {
            if (term.shift[static_cast<std::size_t>(l)] != -1) {
                continue;
            }
            for (const auto& [exponent, coefficient] : term.coefficient.terms()) {
                if (exponent[l] == 0) {
                    throw std::invalid_argument(
                        "DifferenceOperator: backward-shift coefficient lacks the v_" +
                        std::to_string(l + 1) + " factor");
                }
            }
        }
    }
}

int DifferenceOperator::shifted_term_count() const {
    int count = 0;
    for (const OperatorTerm& term : terms_) {
        for (int s : term.shift) {
            if (s != 0) {
                ++count;
                break;
            }
        }
    }
    return count;
}

DifferenceOperator build_variable_operator(const MeixnerSpec& spec, int i) {
    const int d = spec.dimension();
    check_direction(d, i);
    const MeixnerPoint& point = spec.point();
    const Rational prefactor =
        point.c_tilde()[static_cast<std::size_t>(i - 1)] / point.c0();
    std::vector<Rational> g;
    g.reserve(static_cast<std::size_t>(d));
    for (int k = 1; k <= d; ++k) {
        g.push_back(point.u(k, i));
    }
    return assemble_operator(d, prefactor, point.c(), g, spec.beta());
}

DifferenceOperator build_degree_operator(const MeixnerSpec& spec, int i) {
    const int d = spec.dimension();
    check_direction(d, i);
    const MeixnerPoint& point = spec.point();
    const Rational prefactor = point.c()[static_cast<std::size_t>(i - 1)] / point.c0();
    std::vector<Rational> g;
    g.reserve(static_cast<std::size_t>(d));
    for (int k = 1; k <= d; ++k) {
        g.push_back(point.u(i, k));
    }
    return assemble_operator(d, prefactor, point.c_tilde(), g, spec.beta());
}

SparsePolynomial apply_symbolic(const DifferenceOperator& op, const SparsePolynomial& p) {
    if (op.dimension() != p.dimension()) {
        throw std::invalid_argument("apply_symbolic: dimension mismatch");
    }
    SparsePolynomial result(p.dimension());
    for (const OperatorTerm& term : op.terms()) {
        if (term.coefficient.is_zero()) {
            continue;
        }
        result += term.coefficient * poly_shift(p, term.shift);
    }
    return result;
}

Rational apply_on_grid(const DifferenceOperator& op, const std::map<MultiIndex, Rational>& table,
                       const MultiIndex& at) {
    if (op.dimension() != at.dimension()) {
        throw std::invalid_argument("apply_on_grid: dimension mismatch");
    }
    Rational result(0);
    for (const OperatorTerm& term : op.terms()) {
        const Rational factor = poly_eval(term.coefficient, at);
        if (factor == 0) {
            continue;
        }
        const std::optional<MultiIndex> target = at.shifted(term.shift);
        if (!target.has_value()) {
            throw MissingGridPoint("apply_on_grid: shift leaves the lattice at a point with "
                                   "nonzero coefficient");
        }
        const auto it = table.find(*target);
        if (it == table.end()) {
            throw MissingGridPoint("apply_on_grid: table is missing a needed value");
        }
        result += factor * it->second;
    }
    return result;
}

VerificationReport verify_bispectrality(const MeixnerSpec& spec, int maxdeg, int grid) {
    const int d = spec.dimension();
    VerificationReport report;

    std::vector<DifferenceOperator> variable_ops;
    std::vector<DifferenceOperator> degree_ops;
    for (int i = 1; i <= d; ++i) {
        variable_ops.push_back(build_variable_operator(spec, i));
        degree_ops.push_back(build_degree_operator(spec, i));
    }

    // (a) symbolic identity in the variables
    const std::vector<MultiIndex> degrees = indices_total_at_most(d, maxdeg);
    std::vector<SparsePolynomial> polys(degrees.size(), SparsePolynomial(d));
    detail::parallel_for(degrees.size(), [&](std::size_t k) {
        polys[k] = hypergeometric_polynomial(spec, degrees[k]);
    });
    for (int i = 1; i <= d; ++i) {
        std::vector<CheckResult> results(degrees.size());
        detail::parallel_for(degrees.size(), [&](std::size_t k) {
            const MultiIndex& n = degrees[k];
            const SparsePolynomial lhs =
                apply_symbolic(variable_ops[static_cast<std::size_t>(i - 1)], polys[k]);
            const SparsePolynomial rhs = polys[k] * Rational(n[i - 1]);
            CheckResult check;
            check.identity = "4.2a";
            check.params = {{"i", i}, {"n", index_json(n)}};
            check.pass = lhs == rhs;
            if (!check.pass) {
                const SparsePolynomial difference = lhs - rhs;
                const MultiIndex& exponent = difference.terms().begin()->first;
                check.witness = {{"i", i},
                                 {"n", index_json(n)},
                                 {"monomial", index_json(exponent)},
                                 {"lhs", to_string(lhs.coefficient(exponent))},
                                 {"rhs", to_string(rhs.coefficient(exponent))}};
            }
            results[k] = std::move(check);
        });
        for (CheckResult& check : results) {
            report.add(std::move(check));
        }
    }

    // (b) grid identity in the degrees, plus the duality route: the variable
    // operator of the involuted spec acting on tables of the involuted family
    const MeixnerSpec dual = involution(spec);
    std::vector<DifferenceOperator> dual_variable_ops;
    for (int i = 1; i <= d; ++i) {
        dual_variable_ops.push_back(build_variable_operator(dual, i));
    }
    const std::vector<int> x_extent(static_cast<std::size_t>(d), grid);
    const std::vector<int> n_extent(static_cast<std::size_t>(d), grid + 1);
    const ValueTable values(spec, n_extent, x_extent);
    const ValueTable dual_values(dual, x_extent, n_extent);
    const std::vector<MultiIndex> points = indices_in_box(x_extent);
    const std::vector<MultiIndex> inner_degrees = indices_in_box(x_extent);
    const std::vector<MultiIndex> padded_degrees = indices_in_box(n_extent);

    struct GridChecks {
        std::vector<CheckResult> direct;
        std::vector<CheckResult> route;
    };
    std::vector<GridChecks> grid_results(points.size());
    detail::parallel_for(points.size(), [&](std::size_t xi) {
        const MultiIndex& x = points[xi];
        std::map<MultiIndex, Rational> table;
        std::map<MultiIndex, Rational> dual_table;
        for (const MultiIndex& m : padded_degrees) {
            table.emplace(m, values.at(m, x));
            dual_table.emplace(m, dual_values.at(x, m));
        }
        GridChecks& slot = grid_results[xi];
        for (int i = 1; i <= d; ++i) {
            CheckResult direct;
            direct.identity = "4.2b";
            direct.params = {{"i", i}, {"x", index_json(x)}, {"n_box", grid}};
            direct.pass = true;
            CheckResult route;
            route.identity = "4.2b-duality-route";
            route.params = direct.params;
            route.pass = true;
            for (const MultiIndex& n : inner_degrees) {
                const Rational direct_value =
                    apply_on_grid(degree_ops[static_cast<std::size_t>(i - 1)], table, n);
                const Rational expected = Rational(x[i - 1]) * values.at(n, x);
                if (direct.pass && direct_value != expected) {
                    direct.pass = false;
                    direct.witness = {{"i", i},
                                      {"n", index_json(n)},
                                      {"x", index_json(x)},
                                      {"lhs", to_string(direct_value)},
                                      {"rhs", to_string(expected)}};
                }
                const Rational route_value = apply_on_grid(
                    dual_variable_ops[static_cast<std::size_t>(i - 1)], dual_table, n);
                if (route.pass && route_value != direct_value) {
                    route.pass = false;
                    route.witness = {{"i", i},
                                     {"n", index_json(n)},
                                     {"x", index_json(x)},
                                     {"duality_route", to_string(route_value)},
                                     {"direct", to_string(direct_value)}};
                }
            }
            slot.direct.push_back(std::move(direct));
            slot.route.push_back(std::move(route));
        }
    });
    for (GridChecks& slot : grid_results) {
        for (CheckResult& check : slot.direct) {
            report.add(std::move(check));
        }
    }
    for (GridChecks& slot : grid_results) {
        for (CheckResult& check : slot.route) {
            report.add(std::move(check));
        }
    }
    return report;
}

VerificationReport verify_commutativity(const MeixnerSpec& spec,
                                        std::span<const SparsePolynomial> samples) {
    const int d = spec.dimension();
    VerificationReport report;
    for (const char* family : {"x", "n"}) {
        std::vector<DifferenceOperator> ops;
        for (int i = 1; i <= d; ++i) {
            ops.push_back(family == std::string("x") ? build_variable_operator(spec, i)
                                                     : build_degree_operator(spec, i));
        }
        for (int i = 1; i <= d; ++i) {
            for (int j = i + 1; j <= d; ++j) {
                for (std::size_t s = 0; s < samples.size(); ++s) {
                    const SparsePolynomial ij = apply_symbolic(
                        ops[static_cast<std::size_t>(i - 1)],
                        apply_symbolic(ops[static_cast<std::size_t>(j - 1)], samples[s]));
                    const SparsePolynomial ji = apply_symbolic(
                        ops[static_cast<std::size_t>(j - 1)],
                        apply_symbolic(ops[static_cast<std::size_t>(i - 1)], samples[s]));
                    CheckResult check;
                    check.identity = "commute";
                    check.params = {{"family", family},
                                    {"i", i},
                                    {"j", j},
                                    {"sample", s}};
                    check.pass = ij == ji;
                    if (!check.pass) {
                        const SparsePolynomial difference = ij - ji;
                        const MultiIndex& exponent = difference.terms().begin()->first;
                        check.witness = {{"family", family},
                                         {"i", i},
                                         {"j", j},
                                         {"sample", s},
                                         {"monomial", index_json(exponent)},
                                         {"lhs", to_string(ij.coefficient(exponent))},
                                         {"rhs", to_string(ji.coefficient(exponent))}};
                    }
                    report.add(std::move(check));
                }
            }
        }
    }
    return report;
}

}  // namespace meixner
