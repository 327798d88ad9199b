#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "meixner/multi_index.hpp"
#include "meixner/polynomial.hpp"
#include "meixner/rational.hpp"
#include "meixner/series.hpp"

using namespace meixner;

namespace {

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    return make_rational(num(rng), den(rng));
}

SparsePolynomial random_polynomial(std::mt19937& rng, int d, int max_degree, int terms) {
    SparsePolynomial p(d);
    std::uniform_int_distribution<int> entry(0, max_degree);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> exponent(static_cast<std::size_t>(d), 0);
        int budget = max_degree;
        for (int i = 0; i < d; ++i) {
            std::uniform_int_distribution<int> pick(0, budget);
            exponent[static_cast<std::size_t>(i)] = pick(rng);
            budget -= exponent[static_cast<std::size_t>(i)];
        }
        p.add_term(MultiIndex(exponent), random_rational(rng));
    }
    return p;
}

// binomial-series oracle for one variable: coefficient of z^k in (1-z)^{-g}
// for integer g >= 1 is C(k+g-1, g-1)
Rational binomial_series_coefficient(int g, int k) {
    Integer value;
    mpz_bin_uiui(value.get_mpz_t(), static_cast<unsigned long>(k + g - 1),
                 static_cast<unsigned long>(g - 1));
    return Rational(value);
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(to_string(parse_rational("2/6")) == "1/3");
    CHECK(to_string(parse_rational("-4/6")) == "-2/3");
    CHECK(to_string(parse_rational("7")) == "7");
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("1e-3") == Rational(1, 1000));
    CHECK(parse_rational("-2.5e2") == Rational(-250));
    CHECK(parse_rational("1/-3") == Rational(-1, 3));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("rational canonical form") {
    const Rational r = parse_rational("6/-9");
    CHECK(r.get_num() == -2);
    CHECK(r.get_den() == 3);
    CHECK(is_nonpositive_integer(Rational(0)));
    CHECK(is_nonpositive_integer(Rational(-4)));
    CHECK(!is_nonpositive_integer(Rational(-1, 2)));
    CHECK(!is_nonpositive_integer(Rational(3)));
}

TEST_CASE("pochhammer base cases") {
    CHECK(pochhammer(Rational(5), 0) == 1);
    CHECK(pochhammer(Rational(2), 3) == 24);
    CHECK(pochhammer(Rational(1, 2), 2) == Rational(3, 4));
}

TEST_CASE("pochhammer splitting identity") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 40; ++trial) {
        const Rational a = random_rational(rng);
        for (int j = 0; j <= 10; j += 2) {
            for (int k = 0; k <= 10; k += 3) {
                CHECK(pochhammer(a, j + k) == pochhammer(a, j) * pochhammer(a + j, k));
            }
        }
    }
}

TEST_CASE("pow_int") {
    CHECK(pow_int(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(pow_int(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(pow_int(Rational(-2), 3) == Rational(-8));
    CHECK(pow_int(Rational(7), 0) == 1);
    CHECK_THROWS_AS(pow_int(Rational(0), -1), std::domain_error);
}

TEST_CASE("multi index basics") {
    const MultiIndex n(std::vector<int>{2, 0, 3});
    CHECK(n.total() == 5);
    CHECK(n.factorial() == 12);  // 2! 0! 3!
    CHECK_THROWS_AS(MultiIndex(std::vector<int>{1, -1}), std::invalid_argument);
    CHECK(MultiIndex::unit(3, 1)[1] == 1);
    CHECK(MultiIndex::zero(2).total() == 0);

    const int shift[] = {-1, 0, 1};
    const auto moved = n.shifted(shift);
    REQUIRE(moved.has_value());
    CHECK(moved->entries() == std::vector<int>{1, 0, 4});
    const int off[] = {0, -1, 0};
    CHECK(!n.shifted(off).has_value());
}

TEST_CASE("index enumeration") {
    const auto graded = indices_total_at_most(2, 2);
    REQUIRE(graded.size() == 6);
    CHECK(graded[0].entries() == std::vector<int>{0, 0});
    CHECK(graded[1].entries() == std::vector<int>{0, 1});
    CHECK(graded[2].entries() == std::vector<int>{1, 0});
    CHECK(graded[5].entries() == std::vector<int>{2, 0});
    for (std::size_t i = 1; i < graded.size(); ++i) {
        const bool ordered = graded[i - 1].total() < graded[i].total() ||
                             (graded[i - 1].total() == graded[i].total() &&
                              graded[i - 1] < graded[i]);
        CHECK(ordered);
    }

    const auto box = indices_in_box(2, 1);
    REQUIRE(box.size() == 4);
    CHECK(box[0].entries() == std::vector<int>{0, 0});
    CHECK(box[1].entries() == std::vector<int>{0, 1});
    CHECK(box[2].entries() == std::vector<int>{1, 0});
    CHECK(box[3].entries() == std::vector<int>{1, 1});
}

TEST_CASE("poly_shift examples") {
    // x_1 shifted by (+1, 0) is x_1 + 1
    const SparsePolynomial x1 = SparsePolynomial::variable(2, 0);
    const int forward[] = {1, 0};
    SparsePolynomial expected = x1 + SparsePolynomial::constant(2, Rational(1));
    CHECK(poly_shift(x1, forward) == expected);

    // constants are shift-invariant
    const SparsePolynomial one = SparsePolynomial::constant(2, Rational(1));
    const int any[] = {-1, 1};
    CHECK(poly_shift(one, any) == one);

    // x_1^2 shifted by (-1, 0) is x_1^2 - 2 x_1 + 1
    const SparsePolynomial x1sq = x1 * x1;
    const int backward[] = {-1, 0};
    SparsePolynomial quadratic = x1sq - x1 * Rational(2) +
                                 SparsePolynomial::constant(2, Rational(1));
    CHECK(poly_shift(x1sq, backward) == quadratic);
}

TEST_CASE("poly_shift round trip") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> step(-2, 2);
    for (int trial = 0; trial < 25; ++trial) {
        const int d = 1 + trial % 3;
        const SparsePolynomial p = random_polynomial(rng, d, 5, 6);
        std::vector<int> shift(static_cast<std::size_t>(d));
        std::vector<int> back(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) {
            shift[static_cast<std::size_t>(i)] = step(rng);
            back[static_cast<std::size_t>(i)] = -shift[static_cast<std::size_t>(i)];
        }
        CHECK(poly_shift(poly_shift(p, shift), back) == p);
    }
}

TEST_CASE("poly_eval examples") {
    const SparsePolynomial x1x2 =
        SparsePolynomial::variable(2, 0) * SparsePolynomial::variable(2, 1);
    const std::vector<Rational> point{Rational(2), Rational(3)};
    CHECK(poly_eval(x1x2, point) == 6);

    CHECK(poly_eval(SparsePolynomial(2), point) == 0);

    const SparsePolynomial affine = SparsePolynomial::constant(1, Rational(1)) -
                                    SparsePolynomial::variable(1, 0) * Rational(2);
    const std::vector<Rational> unit{Rational(1)};
    CHECK(poly_eval(affine, unit) == -1);
}

TEST_CASE("poly_eval after shift matches shifted argument") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coord(-4, 4);
    for (int trial = 0; trial < 25; ++trial) {
        const int d = 1 + trial % 3;
        const SparsePolynomial p = random_polynomial(rng, d, 4, 5);
        std::vector<int> shift(static_cast<std::size_t>(d));
        std::vector<Rational> x(static_cast<std::size_t>(d));
        std::vector<Rational> x_plus_s(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) {
            shift[static_cast<std::size_t>(i)] = coord(rng);
            x[static_cast<std::size_t>(i)] = coord(rng);
            x_plus_s[static_cast<std::size_t>(i)] =
                x[static_cast<std::size_t>(i)] + shift[static_cast<std::size_t>(i)];
        }
        CHECK(poly_eval(poly_shift(p, shift), x) == poly_eval(p, x_plus_s));
    }
}

TEST_CASE("series_negative_power small cases") {
    // constant term is 1 regardless of the exponent
    const TruncatedSeries s0 = series_negative_power(Rational(7, 3), 2, 3);
    CHECK(s0.coefficient(MultiIndex::zero(2)) == 1);

    // (1-z)^{-2} = 1 + 2z + 3z^2 + ..., checked against the binomial oracle
    const TruncatedSeries s1 = series_negative_power(Rational(2), 1, 2);
    CHECK(s1.coefficient(MultiIndex(std::vector<int>{0})) == 1);
    CHECK(s1.coefficient(MultiIndex(std::vector<int>{1})) == 2);
    CHECK(s1.coefficient(MultiIndex(std::vector<int>{2})) == 3);
    for (int k = 0; k <= 2; ++k) {
        CHECK(s1.coefficient(MultiIndex(std::vector<int>{k})) ==
              binomial_series_coefficient(2, k));
    }

    // (1-z1-z2)^{-1} = 1 + z1 + z2 + ... to order 1
    const TruncatedSeries s2 = series_negative_power(Rational(1), 2, 1);
    CHECK(s2.coefficients().size() == 3);
    CHECK(s2.coefficient(MultiIndex(std::vector<int>{0, 0})) == 1);
    CHECK(s2.coefficient(MultiIndex(std::vector<int>{1, 0})) == 1);
    CHECK(s2.coefficient(MultiIndex(std::vector<int>{0, 1})) == 1);
}

TEST_CASE("series_mul examples") {
    const TruncatedSeries one = TruncatedSeries::one(1, 4);
    TruncatedSeries s = series_negative_power(Rational(3, 2), 1, 4);
    CHECK(series_mul(one, s) == s);

    // (1+z)(1-z) = 1 - z^2
    SparsePolynomial z = SparsePolynomial::variable(1, 0);
    SparsePolynomial unit = SparsePolynomial::constant(1, Rational(1));
    const TruncatedSeries product = series_mul(
        TruncatedSeries::from_polynomial(unit + z, 2),
        TruncatedSeries::from_polynomial(unit - z, 2));
    CHECK(product.coefficient(MultiIndex(std::vector<int>{0})) == 1);
    CHECK(product.coefficient(MultiIndex(std::vector<int>{1})) == 0);
    CHECK(product.coefficient(MultiIndex(std::vector<int>{2})) == -1);

    // (1+z1+z2)^2 = 1 + 2z1 + 2z2 + z1^2 + 2z1z2 + z2^2
    SparsePolynomial linear = SparsePolynomial::constant(2, Rational(1)) +
                              SparsePolynomial::variable(2, 0) +
                              SparsePolynomial::variable(2, 1);
    const TruncatedSeries square =
        series_pow(TruncatedSeries::from_polynomial(linear, 2), 2);
    CHECK(square.coefficient(MultiIndex(std::vector<int>{0, 0})) == 1);
    CHECK(square.coefficient(MultiIndex(std::vector<int>{1, 0})) == 2);
    CHECK(square.coefficient(MultiIndex(std::vector<int>{0, 1})) == 2);
    CHECK(square.coefficient(MultiIndex(std::vector<int>{2, 0})) == 1);
    CHECK(square.coefficient(MultiIndex(std::vector<int>{1, 1})) == 2);
    CHECK(square.coefficient(MultiIndex(std::vector<int>{0, 2})) == 1);

    CHECK_THROWS_AS(series_mul(TruncatedSeries::one(1, 2), TruncatedSeries::one(2, 2)),
                    std::invalid_argument);
}

TEST_CASE("series inverse pairing at gamma = 1") {
    for (int d = 1; d <= 3; ++d) {
        for (int order = 0; order <= 5; ++order) {
            SparsePolynomial linear = SparsePolynomial::constant(d, Rational(1));
            for (int i = 0; i < d; ++i) {
                linear -= SparsePolynomial::variable(d, i);
            }
            const TruncatedSeries product =
                series_mul(series_negative_power(Rational(1), d, order),
                           TruncatedSeries::from_polynomial(linear, order));
            CHECK(product == TruncatedSeries::one(d, order));
        }
    }
}

TEST_CASE("series truncation discards high orders") {
    TruncatedSeries s(2, 1);
    s.add_term(MultiIndex(std::vector<int>{1, 1}), Rational(5));
    CHECK(s.coefficients().empty());
    s.add_term(MultiIndex(std::vector<int>{1, 0}), Rational(5));
    CHECK(s.coefficients().size() == 1);
}
