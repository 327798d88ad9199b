// Acceptance suite: runs every identity the library promises, at the pinned
// boxes and tolerances, and prints one pass/fail line per criterion. Exits
// nonzero if any criterion fails.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "meixner/errors.hpp"
#include "meixner/matrix.hpp"
#include "meixner/operators.hpp"
#include "meixner/orthogonality.hpp"
#include "meixner/parameter_space.hpp"
#include "meixner/verify.hpp"

using namespace meixner;

namespace {

struct Outcome {
    bool pass = true;
    std::string note;

    void fail(const std::string& message) {
        pass = false;
        if (note.empty()) {
            note = message;
        }
    }
};

std::vector<Rational> random_weights(std::mt19937& rng, int d) {
    // entries in (0, 1/d), so every c_i is in (0,1) and |c| < 1
    std::uniform_int_distribution<int> num(1, 9);
    std::uniform_int_distribution<int> extra(1, 9);
    std::vector<Rational> c;
    for (int i = 0; i < d; ++i) {
        const int a = num(rng);
        c.push_back(make_rational(a, (a + extra(rng)) * d));
    }
    return c;
}

// the seven points per dimension shared by criteria 1-3: five random
// Gram-Schmidt points with zero mixing, one triangular, one geometric
std::vector<MeixnerPoint> shared_points(int d) {
    std::mt19937 rng(1000u + static_cast<unsigned>(d));
    std::vector<MeixnerPoint> points;
    for (int trial = 0; trial < 5; ++trial) {
        points.push_back(from_weights(random_weights(rng, d)));
    }
    points.push_back(family_triangular(random_weights(rng, d)));
    points.push_back(family_geometric(Rational(1, 2), d));
    return points;
}

// three distinct points per dimension for the operator criteria
std::vector<MeixnerPoint> operator_points(int d) {
    std::mt19937 rng(2000u + static_cast<unsigned>(d));
    std::vector<MeixnerPoint> points{family_triangular(random_weights(rng, d)),
                                     family_geometric(Rational(1, 2), d),
                                     from_weights(random_weights(rng, d))};
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i] == points[j]) {
                throw std::logic_error("operator points must be pairwise distinct");
            }
        }
    }
    return points;
}

const std::vector<Rational>& betas() {
    static const std::vector<Rational> values{Rational(1), Rational(3, 2), Rational(2)};
    return values;
}

Rational tol(int exponent10) {
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(exponent10));
    return Rational(Integer(1), den);
}

// terminating Gauss sum, written independently of the library internals
Rational oracle_2f1(int n, int x, const Rational& beta, const Rational& t) {
    Rational sum(0);
    Rational term(1);
    for (int a = 0;; ++a) {
        sum += term;
        if (a >= n || a >= x) {
            break;
        }
        term *= Rational(-(n - a)) * Rational(-(x - a)) * t / ((beta + a) * Rational(a + 1));
    }
    return sum;
}

SparsePolynomial random_polynomial(std::mt19937& rng, int d, int max_degree, int terms) {
    SparsePolynomial p(d);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> exponent(static_cast<std::size_t>(d), 0);
        int budget = max_degree;
        for (int i = 0; i < d; ++i) {
            std::uniform_int_distribution<int> pick(0, budget);
            exponent[static_cast<std::size_t>(i)] = pick(rng);
            budget -= exponent[static_cast<std::size_t>(i)];
        }
        std::uniform_int_distribution<int> numerator(-8, 8);
        std::uniform_int_distribution<int> denominator(1, 5);
        p.add_term(MultiIndex(exponent), make_rational(numerator(rng), denominator(rng)));
    }
    return p;
}

std::string describe(const MeixnerPoint& point, const Rational& beta) {
    std::ostringstream text;
    text << "d=" << point.dimension() << " c=(";
    for (int i = 0; i < point.dimension(); ++i) {
        text << (i ? "," : "") << to_string(point.c()[static_cast<std::size_t>(i)]);
    }
    text << ") beta=" << to_string(beta);
    return text.str();
}

// criterion 1: membership identities, recomputed from the matrices
Outcome criterion_parameter_validity() {
    Outcome outcome;
    for (int d = 1; d <= 3; ++d) {
        for (const MeixnerPoint& point : shared_points(d)) {
            const RationalMatrix product =
                mat_mul(mat_mul(mat_mul(mat_transpose(point.U()), point.C()), point.U()),
                        point.C_tilde());
            if (product != mat_scaled_identity(d + 1, point.c0())) {
                outcome.fail("matrix identity fails at " + describe(point, Rational(0)));
                return outcome;
            }
            for (int i = 0; i <= d; ++i) {
                Rational linear(0);
                for (int k = 1; k <= d; ++k) {
                    linear += point.c()[static_cast<std::size_t>(k - 1)] * point.u(k, i);
                }
                if (linear != (i == 0 ? 1 - point.c0() : Rational(1))) {
                    outcome.fail("linear cross identity fails");
                    return outcome;
                }
                for (int j = 1; j <= d; ++j) {
                    Rational quadratic(0);
                    for (int k = 1; k <= d; ++k) {
                        quadratic += point.c()[static_cast<std::size_t>(k - 1)] *
                                     point.u(k, i) * point.u(k, j);
                    }
                    Rational expected(1);
                    if (i == j) {
                        expected += point.c0() /
                                    point.c_tilde()[static_cast<std::size_t>(j - 1)];
                    }
                    if (quadratic != expected) {
                        outcome.fail("quadratic cross identity fails");
                        return outcome;
                    }
                }
            }
            if (!check_parameter_point(d, point.c0(), point.c(), point.c_tilde(), point.U())
                     .empty()) {
                outcome.fail("library validation disagrees");
                return outcome;
            }
        }
    }
    return outcome;
}

std::size_t pow_count(int base, int exponent) {
    std::size_t value = 1;
    for (int i = 0; i < exponent; ++i) {
        value *= static_cast<std::size_t>(base);
    }
    return value;
}

// criterion 2: generating function vs hypergeometric sum, |n| <= 4, x in {0..4}^d
Outcome criterion_cross_representation() {
    Outcome outcome;
    std::size_t checks = 0;
    for (int d = 1; d <= 3; ++d) {
        for (const MeixnerPoint& point : shared_points(d)) {
            for (const Rational& beta : betas()) {
                const MeixnerSpec spec(point, beta);
                const VerificationReport report = verify_cross_representation(spec, 4, 4);
                if (report.checks().size() != pow_count(5, d)) {
                    outcome.fail("unexpected check count");
                    return outcome;
                }
                checks += report.checks().size();
                if (!report.all_passed()) {
                    outcome.fail("mismatch at " + describe(point, beta));
                    return outcome;
                }
            }
        }
    }
    outcome.note = std::to_string(checks) + " lattice points";
    return outcome;
}

// criterion 3: duality on {0..4}^d x {0..4}^d
Outcome criterion_duality() {
    Outcome outcome;
    std::size_t checks = 0;
    for (int d = 1; d <= 3; ++d) {
        for (const MeixnerPoint& point : shared_points(d)) {
            for (const Rational& beta : betas()) {
                const MeixnerSpec spec(point, beta);
                const VerificationReport report = verify_duality(spec, 4);
                if (report.checks().size() != pow_count(5, d)) {
                    outcome.fail("unexpected check count");
                    return outcome;
                }
                checks += report.checks().size();
                if (!report.all_passed()) {
                    outcome.fail("duality fails at " + describe(point, beta));
                    return outcome;
                }
            }
        }
    }
    outcome.note = std::to_string(checks) + " degree rows";
    return outcome;
}

// criterion 4: eigenvalue identities, |n| <= 4 symbolically and the
// {0..5}^d lattice box, including the duality route
Outcome criterion_bispectrality() {
    Outcome outcome;
    for (int d = 1; d <= 3; ++d) {
        const std::vector<MeixnerPoint> points = operator_points(d);
        const std::vector<Rational> point_betas{Rational(3, 2), Rational(1), Rational(2)};
        for (std::size_t p = 0; p < points.size(); ++p) {
            const MeixnerSpec spec(points[p], point_betas[p]);
            const VerificationReport report = verify_bispectrality(spec, 4, 5);
            // d symbolic rows per degree, then direct and duality-route grid
            // rows per (i, x)
            std::size_t symbolic = 0;
            for (const MultiIndex& n : indices_total_at_most(d, 4)) {
                (void)n;
                symbolic += static_cast<std::size_t>(d);
            }
            const std::size_t expected = symbolic + 2 * static_cast<std::size_t>(d) *
                                                        pow_count(6, d);
            if (report.checks().size() != expected) {
                outcome.fail("unexpected check count");
                return outcome;
            }
            if (!report.all_passed()) {
                outcome.fail("eigenvalue identity fails at " +
                             describe(points[p], point_betas[p]));
                return outcome;
            }
        }
    }
    return outcome;
}

// criterion 5: commutators annihilate 10 random polynomials of degree <= 5
Outcome criterion_commutativity() {
    Outcome outcome;
    for (int d = 1; d <= 3; ++d) {
        const std::vector<MeixnerPoint> points = operator_points(d);
        const std::vector<Rational> point_betas{Rational(3, 2), Rational(1), Rational(2)};
        for (std::size_t p = 0; p < points.size(); ++p) {
            const MeixnerSpec spec(points[p], point_betas[p]);
            std::mt19937 rng(3000u + static_cast<unsigned>(10 * d + static_cast<int>(p)));
            std::vector<SparsePolynomial> samples;
            for (int s = 0; s < 10; ++s) {
                samples.push_back(random_polynomial(rng, d, 5, 2 * d + 3));
            }
            const VerificationReport report = verify_commutativity(spec, samples);
            const std::size_t pairs = static_cast<std::size_t>(d * (d - 1) / 2);
            if (report.checks().size() != 2 * pairs * samples.size()) {
                outcome.fail("unexpected check count");
                return outcome;
            }
            if (!report.all_passed()) {
                outcome.fail("commutator fails at " + describe(points[p], point_betas[p]));
                return outcome;
            }
        }
    }
    return outcome;
}

// criterion 6: orthogonality at d in {1,2}, beta in {1,2}, |n|,|m| <= 3,
// tails certified below 1e-10, diagonals matched to relative 1e-8
Outcome criterion_orthogonality() {
    Outcome outcome;

    // hand-anchored case first: d=1, c=1/3, beta=1, n=1 has norm exactly 9/2,
    // re-derived here from the closed geometric sums
    const Rational t(1, 3);
    const Rational geo0 = 1 / (1 - t);
    const Rational geo1 = t / ((1 - t) * (1 - t));
    const Rational geo2 = t * (1 + t) / ((1 - t) * (1 - t) * (1 - t));
    const Rational anchored = 4 * geo2 - 4 * geo1 + geo0;
    if (anchored != Rational(9, 2)) {
        outcome.fail("geometric-series oracle does not give 9/2");
        return outcome;
    }
    const MeixnerSpec gram(from_weights({Rational(1, 3)}), Rational(1));
    const MultiIndex one(std::vector<int>{1});
    const NormClosedForm closed = norm_closed_form(gram, one);
    if (!closed.exact.has_value() || *closed.exact != Rational(9, 2)) {
        outcome.fail("closed-form norm at the anchored case is not 9/2");
        return outcome;
    }
    const InnerProductResult anchored_ip = inner_product(gram, one, one, tol(10));
    if (!anchored_ip.converged || abs(anchored_ip.value - Rational(9, 2)) >
                                      anchored_ip.tail_estimate) {
        outcome.fail("anchored inner product drifts from 9/2");
        return outcome;
    }

    std::vector<std::pair<int, MeixnerPoint>> cases;
    cases.emplace_back(1, from_weights({Rational(1, 3)}));
    cases.emplace_back(1, family_triangular({Rational(1, 4)}));
    cases.emplace_back(2, family_triangular({Rational(1, 3), Rational(1, 4)}));
    cases.emplace_back(2, family_geometric(Rational(1, 2), 2));
    cases.emplace_back(2, from_weights({Rational(1, 3), Rational(1, 3)}));
    for (const auto& [d, point] : cases) {
        for (const Rational& beta : {Rational(1), Rational(2)}) {
            const MeixnerSpec spec(point, beta);
            const VerificationReport report =
                verify_orthogonality(spec, 3, tol(10), 512, tol(8));
            const std::size_t indices = indices_total_at_most(d, 3).size();
            if (report.checks().size() != indices * (indices + 1) / 2) {
                outcome.fail("unexpected check count");
                return outcome;
            }
            if (!report.all_passed()) {
                outcome.fail("orthogonality fails at " + describe(point, beta));
                return outcome;
            }
        }
    }
    return outcome;
}

// criterion 7: d=1 values match the independent Gauss term sum, n, x <= 4
Outcome criterion_classical_reduction() {
    Outcome outcome;
    const std::vector<MeixnerPoint> points{from_weights({Rational(1, 3)}),
                                           family_triangular({Rational(1, 3)}),
                                           family_geometric(Rational(1, 2), 1)};
    for (const MeixnerPoint& point : points) {
        for (const Rational& beta : betas()) {
            const MeixnerSpec spec(point, beta);
            const Rational t = 1 - point.u(1, 1);
            for (int n = 0; n <= 4; ++n) {
                for (int x = 0; x <= 4; ++x) {
                    const Rational value = evaluate(spec, MultiIndex(std::vector<int>{n}),
                                                    MultiIndex(std::vector<int>{x}));
                    if (value != oracle_2f1(n, x, beta, t)) {
                        outcome.fail("Gauss sum mismatch at " + describe(point, beta));
                        return outcome;
                    }
                }
            }
            if (!verify_classical_reduction(spec, 4, 4).all_passed()) {
                outcome.fail("library reduction check disagrees");
                return outcome;
            }
        }
    }
    return outcome;
}

// criterion 8: each single-entry corruption of the working block of U is
// caught by at least one of the identity suites
Outcome criterion_negative_controls() {
    Outcome outcome;
    const MeixnerPoint point = family_triangular({Rational(1, 3), Rational(1, 4)});
    const Rational beta(2);
    for (int row = 1; row <= 2; ++row) {
        for (int col = 1; col <= 2; ++col) {
            RationalMatrix u = point.U();
            u[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] += 1;
            const MeixnerSpec broken(
                MeixnerPoint::unchecked(2, point.c0(), point.c(), point.c_tilde(),
                                        std::move(u)),
                beta);
            std::size_t failures = 0;
            failures += verify_cross_representation(broken, 2, 2).failure_count();
            failures += verify_duality(broken, 2).failure_count();
            failures += verify_bispectrality(broken, 2, 2).failure_count();
            std::mt19937 rng(4000u + static_cast<unsigned>(2 * row + col));
            std::vector<SparsePolynomial> samples;
            for (int s = 0; s < 4; ++s) {
                samples.push_back(random_polynomial(rng, 2, 4, 6));
            }
            failures += verify_commutativity(broken, samples).failure_count();
            failures += verify_orthogonality(broken, 1, tol(8), 512, tol(6)).failure_count();
            if (failures == 0) {
                std::ostringstream text;
                text << "corrupting u_{" << row << "," << col << "} went undetected";
                outcome.fail(text.str());
                return outcome;
            }
        }
    }
    return outcome;
}

struct Criterion {
    int id;
    std::string label;
    double budget_seconds;
    Outcome (*run)();
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "parameter-set validity", 1.0, criterion_parameter_validity},
        {2, "representation equivalence", 60.0, criterion_cross_representation},
        {3, "duality", 60.0, criterion_duality},
        {4, "bispectral eigenvalue identities", 120.0, criterion_bispectrality},
        {5, "operator commutativity", 0.0, criterion_commutativity},
        {6, "orthogonality and norms", 120.0, criterion_orthogonality},
        {7, "classical reduction at d=1", 0.0, criterion_classical_reduction},
        {8, "negative controls", 0.0, criterion_negative_controls},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criterion.run();
        } catch (const std::exception& error) {
            outcome.pass = false;
            outcome.note = std::string("exception: ") + error.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criterion.budget_seconds > 0 && seconds > criterion.budget_seconds) {
            outcome.pass = false;
            if (outcome.note.empty()) {
                std::ostringstream text;
                text << "runtime " << seconds << " s exceeds budget "
                     << criterion.budget_seconds << " s";
                outcome.note = text.str();
            }
        }
        failures += outcome.pass ? 0 : 1;
        std::ostringstream line;
        line << "criterion " << criterion.id << ": " << (outcome.pass ? "PASS" : "FAIL")
             << "  " << criterion.label << "  (" << seconds << " s)";
        if (!outcome.note.empty()) {
            line << "  -- " << outcome.note;
        }
        std::cout << line.str() << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria passed" : "criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
