#pragma once

// Test-only reference computations. Nothing here calls into the code paths it
// is used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "peakpoly/bigint.hpp"
#include "peakpoly/intpoly.hpp"
#include "peakpoly/perm.hpp"

namespace oracle {

using peakpoly::BigInt;

// C(t, j) from Pascal's rule for t >= 0, and C(-u, j) = (-1)^j C(u + j - 1, j).
inline BigInt pascal_binomial(std::int64_t t, int j)
{
    if (j < 0) {
        return 0;
    }
    if (t < 0) {
        BigInt v = pascal_binomial(-t + j - 1, j);
        return (j % 2 == 0) ? v : BigInt(-v);
    }
    if (j > t) {
        return 0;
    }
    std::vector<BigInt> row{1};
    for (std::int64_t r = 1; r <= t; ++r) {
        std::vector<BigInt> next(row.size() + 1);
        next.front() = 1;
        next.back() = 1;
        for (std::size_t i = 1; i < row.size(); ++i) {
            next[i] = row[i - 1] + row[i];
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(j)];
}

inline BigInt naive_evaluate(const peakpoly::BinomialPolynomial& p, std::int64_t x)
{
    BigInt sum = 0;
    const auto coeffs = p.coefficients();
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        sum += coeffs[j] * pascal_binomial(x - p.center(), static_cast<int>(j));
    }
    return sum;
}

// Peak set of a raw sequence, written out directly from the definition.
inline std::vector<int> naive_peaks(const std::vector<int>& a)
{
    std::vector<int> out;
    const int n = static_cast<int>(a.size());
    auto at = [&](int pos) { return a[static_cast<std::size_t>(pos - 1)]; };
    for (int i = 2; i <= n - 1; ++i) {
        if (at(i - 1) < at(i) && at(i) > at(i + 1)) {
            out.push_back(i);
        }
    }
    return out;
}

// |P_S(n)| by scanning S_n with naive_peaks.
inline std::uint64_t scan_count(const std::vector<int>& s, int n)
{
    std::vector<int> a(static_cast<std::size_t>(n));
    std::iota(a.begin(), a.end(), 1);
    std::uint64_t count = 0;
    do {
        if (naive_peaks(a) == s) {
            ++count;
        }
    } while (std::next_permutation(a.begin(), a.end()));
    return count;
}

inline std::uint64_t factorial(int n)
{
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= static_cast<std::uint64_t>(i);
    }
    return f;
}

// Uniform integer in [-bound, bound] with bound = 10^20.
inline BigInt random_big(std::mt19937_64& rng)
{
    static const BigInt bound = [] {
        BigInt b;
        mpz_ui_pow_ui(b.get_mpz_t(), 10, 20);
        return b;
    }();
    BigInt v = peakpoly::big_from_u64(rng());
    v <<= 64;
    v += peakpoly::big_from_u64(rng());
    v %= 2 * bound + 1;
    return v - bound;
}

inline peakpoly::BinomialPolynomial random_polynomial(std::mt19937_64& rng, int max_degree = 12,
                                                      std::int64_t max_center = 20)
{
    std::uniform_int_distribution<int> degree(0, max_degree);
    std::uniform_int_distribution<std::int64_t> center(0, max_center);
    const int d = degree(rng);
    std::vector<BigInt> coeffs;
    for (int j = 0; j <= d; ++j) {
        coeffs.push_back(random_big(rng));
    }
    if (coeffs.back() == 0) {
        coeffs.back() = 1;
    }
    return peakpoly::BinomialPolynomial(center(rng), std::move(coeffs));
}

} // namespace oracle
