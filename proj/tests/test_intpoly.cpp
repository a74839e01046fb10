#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "peakpoly/errors.hpp"
#include "peakpoly/intpoly.hpp"

using namespace peakpoly;

namespace {

BinomialPolynomial p46() { return BinomialPolynomial(6, {0, 25, 50, 43, 18, 3}); }

std::vector<BigInt> ints(std::initializer_list<long> values)
{
    std::vector<BigInt> out;
    for (long v : values) {
        out.emplace_back(v);
    }
    return out;
}

std::vector<BigInt> coeffs_of(const BinomialPolynomial& p) { return {p.coefficients().begin(), p.coefficients().end()}; }

} // namespace

TEST_CASE("binomial handles negative and small arguments")
{
    for (std::int64_t t = -12; t <= 12; ++t) {
        for (int j = 0; j <= 8; ++j) {
            CHECK(binomial(big(t), j) == oracle::pascal_binomial(t, j));
        }
    }
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(-1, 3) == -1);
    CHECK(binomial(5, -1) == 0);
}

TEST_CASE("canonical form")
{
    BinomialPolynomial p(3, {1, 2, 0, 0});
    CHECK(p.degree() == 1);
    CHECK(BinomialPolynomial(3, {0, 0}).is_zero());
    CHECK(BinomialPolynomial().degree() == -1);
    CHECK_THROWS_AS(BinomialPolynomial(-1, {1}), InvalidArgument);
}

TEST_CASE("evaluate")
{
    CHECK(evaluate(BinomialPolynomial(2, {0, 1}), 5) == 3);
    CHECK(evaluate(BinomialPolynomial(), 17) == 0);
    CHECK(evaluate(p46(), 7) == 25);
    CHECK(evaluate(p46(), 6) == 0);
    CHECK(evaluate(p46(), 5) == -3);
    CHECK(evaluate(p46(), 0) == 4);
}

TEST_CASE("forward_difference")
{
    CHECK(forward_difference(BinomialPolynomial(2, {0, 1})) == BinomialPolynomial(2, {1}));
    CHECK(forward_difference(p46(), 6).is_zero());
    CHECK(forward_difference(p46(), 5) == BinomialPolynomial(6, {3}));
    CHECK(evaluate(forward_difference(p46()), 6) == 25);
    CHECK(forward_difference(BinomialPolynomial::constant(9, 4)).is_zero());
    CHECK_THROWS_AS(forward_difference(p46(), 0), InvalidArgument);
}

TEST_CASE("recenter")
{
    CHECK(coeffs_of(recenter(p46(), 0)) == ints({4, -2, 2, -2, 0, 3}));
    CHECK(recenter(p46(), 6) == p46());
    CHECK(recenter(BinomialPolynomial::constant(1, 3), 11) == BinomialPolynomial::constant(1, 11));
    CHECK(recenter(BinomialPolynomial(0, {4, -2, 2, -2, 0, 3}), 6) == p46());
    CHECK_THROWS_AS(recenter(p46(), -1), InvalidArgument);
}

TEST_CASE("antidifference")
{
    CHECK(antidifference(BinomialPolynomial(2, {1}), 2, 0) == BinomialPolynomial(2, {0, 1}));
    CHECK(antidifference(BinomialPolynomial::zero(4), 4, 7) == BinomialPolynomial::constant(7, 4));
    CHECK(antidifference(BinomialPolynomial(6, {25, 50, 43, 18, 3}), 6, 0) == p46());
    CHECK_THROWS_AS(antidifference(BinomialPolynomial(6, {1}), 5, 0), InvalidArgument);
}

TEST_CASE("difference_table")
{
    SUBCASE("{4,6} grid entries")
    {
        const auto t = difference_table(p46(), 6, 0, 6);
        CHECK(t.at(3, 3) == 7);
        CHECK(t.at(0, 5) == -3);
        CHECK(t.at(2, 6) == 50);
        CHECK(t.at(1, 0) == -2);
        for (std::int64_t k = 0; k <= 6; ++k) {
            CHECK(t.at(6, k) == 0);
            CHECK(t.at(5, k) == 3);
        }
        CHECK_THROWS_AS(t.at(7, 0), InvalidArgument);
    }
    SUBCASE("constant one")
    {
        const auto t = difference_table(BinomialPolynomial::constant(1), 3, -2, 4);
        for (std::int64_t k = -2; k <= 4; ++k) {
            CHECK(t.at(0, k) == 1);
            CHECK(t.at(1, k) == 0);
            CHECK(t.at(3, k) == 0);
        }
    }
    SUBCASE("single row is plain evaluation")
    {
        const auto t = difference_table(p46(), 0, 5, 9);
        REQUIRE(t.cells.size() == 1);
        for (std::int64_t k = 5; k <= 9; ++k) {
            CHECK(t.at(0, k) == evaluate(p46(), k));
        }
    }
    SUBCASE("bad ranges")
    {
        CHECK_THROWS_AS(difference_table(p46(), -1, 0, 1), InvalidArgument);
        CHECK_THROWS_AS(difference_table(p46(), 1, 3, 2), InvalidArgument);
    }
}

TEST_CASE("add")
{
    const BinomialPolynomial x_minus_2(2, {0, 1});
    const auto sum = add(std::vector{x_minus_2, BinomialPolynomial::constant(2)});
    CHECK(sum.center() == 2);
    // x at centre 2 is 2 + C(x-2,1)
    CHECK(sum == BinomialPolynomial(2, {2, 1}));
    CHECK(add(std::vector{p46(), BinomialPolynomial()}) == p46());
    CHECK(add(std::vector<BinomialPolynomial>{}).is_zero());
}

TEST_CASE("random polynomials: laws of the basis")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = oracle::random_polynomial(rng);
        const auto dp = forward_difference(p);
        for (std::int64_t x = -10; x <= 30; x += 3) {
            CHECK(evaluate(p, x) == oracle::naive_evaluate(p, x));
            CHECK(evaluate(dp, x) == evaluate(p, x + 1) - evaluate(p, x));
        }
        if (p.degree() >= 1) {
            CHECK(dp.degree() == p.degree() - 1);
        } else {
            CHECK(dp.is_zero());
        }
        CHECK(antidifference(dp, p.center(), evaluate(p, p.center())) == p);
        const auto moved = recenter(p, static_cast<std::int64_t>(rng() % 25));
        CHECK(same_function(moved, p));
        const auto t = difference_table(p, p.degree() + 1, moved.center(), moved.center());
        for (int j = 0; j <= p.degree(); ++j) {
            CHECK(t.at(j, moved.center()) == moved.coefficient(static_cast<std::size_t>(j)));
        }
        CHECK(t.at(p.degree() + 1, moved.center()) == 0);
    }
}
