#pragma once

// Integer-valued polynomials stored in the binomial basis C(x-k, j) centred at
// an integer k. In this basis the forward difference is a coefficient shift and
// the coefficients at centre k are exactly (Delta^j p)(k).

#include <cstdint>
#include <span>
#include <vector>

#include "peakpoly/bigint.hpp"

namespace peakpoly {

/// C(t, j) = t(t-1)...(t-j+1)/j! for any integer t (negative t gives signed values).
BigInt binomial(const BigInt& t, int j);

/// p(x) = sum_j coeffs[j] * C(x - center, j).
///
/// Always canonical: the last stored coefficient is non-zero, and the zero
/// polynomial has no coefficients. The centre is a non-negative integer.
class BinomialPolynomial {
public:
    /// Zero polynomial centred at 0.
    BinomialPolynomial() = default;
    BinomialPolynomial(std::int64_t center, std::vector<BigInt> coeffs);

    static BinomialPolynomial constant(const BigInt& value, std::int64_t center = 0);
    static BinomialPolynomial zero(std::int64_t center = 0) { return constant(0, center); }

    std::int64_t center() const noexcept { return center_; }
    std::span<const BigInt> coefficients() const noexcept { return coeffs_; }
    /// Coefficient j, zero past the degree.
    BigInt coefficient(std::size_t j) const;
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    bool operator==(const BinomialPolynomial&) const = default;

private:
    std::int64_t center_ = 0;
    std::vector<BigInt> coeffs_;
};

BigInt evaluate(const BinomialPolynomial& p, const BigInt& x);
BigInt evaluate(const BinomialPolynomial& p, std::int64_t x);

/// Delta^order p, same centre. order >= 1.
BinomialPolynomial forward_difference(const BinomialPolynomial& p, int order = 1);

/// Same function re-expanded at `new_center` (>= 0).
BinomialPolynomial recenter(const BinomialPolynomial& p, std::int64_t new_center);

/// q with Delta q = p and q(anchor) = value. The anchor must be p's centre.
BinomialPolynomial antidifference(const BinomialPolynomial& p, std::int64_t anchor, const BigInt& value);

/// Sum of all operands, expressed at the largest operand centre.
BinomialPolynomial add(std::span<const BinomialPolynomial> ps);

/// Same polynomial function, regardless of centre.
bool same_function(const BinomialPolynomial& a, const BinomialPolynomial& b);

/// cells[j][k - kmin] = (Delta^j p)(k) for 0 <= j <= jmax, kmin <= k <= kmax.
struct DifferenceTable {
    int jmax = 0;
    std::int64_t kmin = 0;
    std::int64_t kmax = 0;
    std::vector<std::vector<BigInt>> cells;

    const BigInt& at(int j, std::int64_t k) const;
};

DifferenceTable difference_table(const BinomialPolynomial& p, int jmax, std::int64_t kmin, std::int64_t kmax);

} // namespace peakpoly
