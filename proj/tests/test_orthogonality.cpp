#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "meixner/errors.hpp"
#include "meixner/orthogonality.hpp"
#include "meixner/parameter_space.hpp"

using namespace meixner;

namespace {

MeixnerSpec gram_d1(Rational beta = Rational(1)) {
    return MeixnerSpec(from_weights({Rational(1, 3)}), std::move(beta));
}

Rational tol(int exponent10) {
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(exponent10));
    return Rational(Integer(1), den);
}

// closed geometric sums: sum t^x, sum x t^x, sum x^2 t^x over x >= 0
Rational geo0(const Rational& t) { return 1 / (1 - t); }
Rational geo1(const Rational& t) { return t / ((1 - t) * (1 - t)); }
Rational geo2(const Rational& t) { return t * (1 + t) / ((1 - t) * (1 - t) * (1 - t)); }

}  // namespace

TEST_CASE("weight values") {
    CHECK(weight(gram_d1(), MultiIndex::zero(1)) == 1);
    CHECK(weight(gram_d1(), MultiIndex(std::vector<int>{2})) == Rational(1, 9));

    const MeixnerSpec spec(family_triangular({Rational(1, 3), Rational(1, 4)}), Rational(2));
    CHECK(weight(spec, MultiIndex::zero(2)) == 1);
    CHECK(weight(spec, MultiIndex(std::vector<int>{1, 1})) == Rational(1, 2));
}

TEST_CASE("diagonal sum at n = 0 is c0^{-beta}") {
    const MeixnerSpec spec = gram_d1(Rational(1));
    const InnerProductResult ip =
        inner_product(spec, MultiIndex::zero(1), MultiIndex::zero(1), tol(10));
    CHECK(ip.converged);
    CHECK(ip.tail_estimate < tol(10));
    CHECK(abs(ip.value - Rational(3, 2)) <= ip.tail_estimate);
}

TEST_CASE("hand-anchored diagonal: d=1, c=1/3, beta=1, n=1") {
    // independent oracle: sum (1-2x)^2 (1/3)^x via closed geometric sums,
    // using (1)_x / x! = 1
    const Rational t(1, 3);
    const Rational oracle = 4 * geo2(t) - 4 * geo1(t) + geo0(t);
    REQUIRE(oracle == Rational(9, 2));

    const MeixnerSpec spec = gram_d1(Rational(1));
    const MultiIndex one(std::vector<int>{1});
    const NormClosedForm closed = norm_closed_form(spec, one);
    REQUIRE(closed.exact.has_value());
    CHECK(*closed.exact == Rational(9, 2));

    const InnerProductResult ip = inner_product(spec, one, one, tol(10));
    CHECK(ip.converged);
    CHECK(abs(ip.value - Rational(9, 2)) <= ip.tail_estimate);
}

TEST_CASE("off-diagonal pair shrinks below tolerance") {
    const MeixnerSpec spec(family_triangular({Rational(1, 3), Rational(1, 4)}), Rational(2));
    const InnerProductResult ip =
        inner_product(spec, MultiIndex(std::vector<int>{1, 0}),
                      MultiIndex(std::vector<int>{0, 1}), tol(12));
    CHECK(ip.converged);
    CHECK(ip.tail_estimate < tol(12));
    CHECK(abs(ip.value) <= ip.tail_estimate);
}

TEST_CASE("norm closed form examples") {
    const MeixnerSpec spec = gram_d1(Rational(1));
    const NormClosedForm at_zero = norm_closed_form(spec, MultiIndex::zero(1));
    REQUIRE(at_zero.exact.has_value());
    CHECK(*at_zero.exact == Rational(3, 2));  // c0^{-1}

    const MeixnerSpec geometric(family_geometric(Rational(1, 2), 2), Rational(2));
    const NormClosedForm at_11 = norm_closed_form(geometric, MultiIndex(std::vector<int>{1, 1}));
    REQUIRE(at_11.exact.has_value());
    CHECK(*at_11.exact == Rational(64, 3));
}

TEST_CASE("rational powers") {
    CHECK(try_rational_power(Rational(1, 4), Rational(-3, 2)) == Rational(8));
    CHECK(try_rational_power(Rational(8, 27), Rational(2, 3)) == Rational(4, 9));
    CHECK(try_rational_power(Rational(2, 3), Rational(-2)) == Rational(9, 4));
    CHECK(!try_rational_power(Rational(1, 3), Rational(1, 2)).has_value());
    CHECK(!try_rational_power(Rational(-1, 4), Rational(1, 2)).has_value());
    CHECK(try_rational_power(Rational(-8), Rational(1, 3)) == Rational(-2));
}

TEST_CASE("half-integer beta diagonal uses the exact power when available") {
    // c0 = 1/4 is a perfect square, so c0^{-3/2} = 8 stays rational
    const MeixnerSpec spec(family_geometric(Rational(1, 2), 2), Rational(3, 2));
    const NormClosedForm closed = norm_closed_form(spec, MultiIndex(std::vector<int>{1, 0}));
    REQUIRE(closed.exact.has_value());
    CHECK(*closed.exact == Rational(8) * closed.rational_factor);
}

TEST_CASE("truncation is monotone") {
    const MeixnerSpec spec = gram_d1(Rational(2));
    const MultiIndex one(std::vector<int>{1});
    InnerProductResult previous;
    bool first = true;
    for (int exponent : {2, 4, 6, 8, 10}) {
        const InnerProductResult ip = inner_product(spec, one, one, tol(exponent));
        CHECK(ip.converged);
        if (!first) {
            CHECK(ip.truncation >= previous.truncation);
            CHECK(ip.tail_estimate <= previous.tail_estimate);
            // partial sums of nonnegative summands grow with the box
            CHECK(ip.value >= previous.value);
        }
        previous = ip;
        first = false;
    }
}

TEST_CASE("verification suite passes in the positivity region") {
    const MeixnerSpec spec(family_triangular({Rational(1, 3), Rational(1, 4)}), Rational(2));
    const VerificationReport report = verify_orthogonality(spec, 2, tol(10), 512, tol(8));
    CHECK(report.all_passed());
    CHECK(!report.checks().empty());

    // maxdeg = 0 is the single diagonal check sum W(x) = c0^{-beta}
    const VerificationReport trivial = verify_orthogonality(spec, 0, tol(10), 512, tol(8));
    CHECK(trivial.checks().size() == 1);
    CHECK(trivial.checks().front().identity == "orthogonality-diagonal");
    CHECK(trivial.all_passed());
}

TEST_CASE("perturbed polynomial breaks orthogonality") {
    const MeixnerSpec spec(family_triangular({Rational(1, 3), Rational(1, 4)}), Rational(2));
    std::vector<std::pair<MultiIndex, SparsePolynomial>> family;
    for (const MultiIndex& n : indices_total_at_most(2, 1)) {
        family.emplace_back(n, hypergeometric_polynomial(spec, n));
    }
    // bump one coefficient of P_{(1,0)}
    for (auto& [n, p] : family) {
        if (n == MultiIndex(std::vector<int>{1, 0})) {
            p.add_term(MultiIndex::zero(2), Rational(1, 7));
        }
    }
    const VerificationReport report =
        verify_orthogonality_polys(spec, family, tol(10), 512, tol(8));
    CHECK(!report.all_passed());
    bool diagonal_failed = false;
    bool offdiagonal_failed = false;
    for (const CheckResult& check : report.checks()) {
        if (!check.pass && check.identity == "orthogonality-diagonal") {
            diagonal_failed = true;
        }
        if (!check.pass && check.identity == "orthogonality-offdiagonal") {
            offdiagonal_failed = true;
        }
    }
    CHECK(diagonal_failed);
    CHECK(offdiagonal_failed);
}

TEST_CASE("irrational norm diagonals use the high-precision comparison") {
    // c0 = 5/12 and beta = 3/2: c0^{-beta} is irrational
    const MeixnerSpec spec(family_triangular({Rational(1, 3), Rational(1, 4)}),
                           Rational(3, 2));
    CHECK(!norm_closed_form(spec, MultiIndex(std::vector<int>{1, 0})).exact.has_value());
    const VerificationReport report = verify_orthogonality(spec, 1, tol(10), 512, tol(8));
    CHECK(report.all_passed());

    // and it still catches a corrupted family
    std::vector<std::pair<MultiIndex, SparsePolynomial>> family;
    for (const MultiIndex& n : indices_total_at_most(2, 1)) {
        family.emplace_back(n, hypergeometric_polynomial(spec, n));
    }
    for (auto& [n, p] : family) {
        if (n == MultiIndex(std::vector<int>{0, 1})) {
            p.add_term(MultiIndex(std::vector<int>{0, 1}), Rational(1, 9));
        }
    }
    const VerificationReport broken =
        verify_orthogonality_polys(spec, family, tol(10), 512, tol(8));
    bool diagonal_failed = false;
    for (const CheckResult& check : broken.checks()) {
        if (!check.pass && check.identity == "orthogonality-diagonal") {
            diagonal_failed = true;
        }
    }
    CHECK(diagonal_failed);
}

TEST_CASE("preconditions are enforced") {
    // negative weights (q > 1 makes c_1 < 0)
    const MeixnerSpec negative(family_geometric(Rational(3), 2), Rational(1));
    CHECK_THROWS_AS(inner_product(negative, MultiIndex::zero(2), MultiIndex::zero(2), tol(6)),
                    PreconditionViolated);
    // beta < 0
    const MeixnerSpec bad_beta(from_weights({Rational(1, 3)}), Rational(-1, 2));
    CHECK_THROWS_AS(inner_product(bad_beta, MultiIndex::zero(1), MultiIndex::zero(1), tol(6)),
                    PreconditionViolated);
}

TEST_CASE("tiny truncation caps raise NoConvergence") {
    const MeixnerSpec spec = gram_d1(Rational(1));
    CHECK_THROWS_AS(
        inner_product(spec, MultiIndex::zero(1), MultiIndex::zero(1), tol(10), 3),
        NoConvergence);
}
