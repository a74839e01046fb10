#include "peakpoly/intpoly.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <string>

#include "peakpoly/errors.hpp"

namespace peakpoly {

namespace {

void check_center(std::int64_t center)
{
    if (center < 0) {
        throw InvalidArgument("binomial basis centre must be >= 0, got " + std::to_string(center));
    }
}

void canonicalize(std::vector<BigInt>& coeffs)
{
    while (!coeffs.empty() && coeffs.back() == 0) {
        coeffs.pop_back();
    }
}

// (x - center) as a big integer.
BigInt shifted(const BigInt& x, std::int64_t center) { return x - big(center); }

} // namespace

BigInt binomial(const BigInt& t, int j)
{
    if (j < 0) {
        return 0;
    }
    BigInt num = 1;
    BigInt den = 1;
    for (int i = 0; i < j; ++i) {
        num *= t - i;
        den *= i + 1;
    }
    assert(num % den == 0);
    BigInt out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

BinomialPolynomial::BinomialPolynomial(std::int64_t center, std::vector<BigInt> coeffs)
    : center_(center), coeffs_(std::move(coeffs))
{
    check_center(center_);
    canonicalize(coeffs_);
}

BinomialPolynomial BinomialPolynomial::constant(const BigInt& value, std::int64_t center)
{
    return BinomialPolynomial(center, {value});
}

BigInt BinomialPolynomial::coefficient(std::size_t j) const
{
    return j < coeffs_.size() ? coeffs_[j] : BigInt(0);
}

BigInt evaluate(const BinomialPolynomial& p, const BigInt& x)
{
    const auto coeffs = p.coefficients();
    const BigInt t = shifted(x, p.center());
    BigInt basis = 1; // C(t, j), updated in place
    BigInt sum = 0;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (j > 0) {
            // C(t, j) * j = C(t, j-1) * (t - j + 1), so the division is exact.
            basis *= t - static_cast<long>(j - 1);
            mpz_divexact_ui(basis.get_mpz_t(), basis.get_mpz_t(), static_cast<unsigned long>(j));
        }
        if (basis == 0 && t >= 0) {
            break; // C(t, j) = 0 for 0 <= t < j, and stays zero afterwards
        }
        sum += coeffs[j] * basis;
    }
    return sum;
}

BigInt evaluate(const BinomialPolynomial& p, std::int64_t x) { return evaluate(p, big(x)); }

BinomialPolynomial forward_difference(const BinomialPolynomial& p, int order)
{
    if (order < 1) {
        throw InvalidArgument("difference order must be >= 1, got " + std::to_string(order));
    }
    const auto coeffs = p.coefficients();
    if (static_cast<std::size_t>(order) >= coeffs.size()) {
        return BinomialPolynomial::zero(p.center());
    }
    return BinomialPolynomial(p.center(), std::vector<BigInt>(coeffs.begin() + order, coeffs.end()));
}

DifferenceTable difference_table(const BinomialPolynomial& p, int jmax, std::int64_t kmin, std::int64_t kmax)
{
    if (jmax < 0) {
        throw InvalidArgument("jmax must be >= 0");
    }
    if (kmin > kmax) {
        throw InvalidArgument("kmin must not exceed kmax");
    }
    DifferenceTable t{jmax, kmin, kmax, {}};
    const auto width = static_cast<std::size_t>(kmax - kmin + 1);
    // Row 0 needs jmax extra values to the right so every requested row is full.
    std::vector<BigInt> row;
    row.reserve(width + static_cast<std::size_t>(jmax));
    for (std::int64_t k = kmin; k <= kmax + jmax; ++k) {
        row.push_back(evaluate(p, k));
    }
    t.cells.reserve(static_cast<std::size_t>(jmax) + 1);
    for (int j = 0; j <= jmax; ++j) {
        t.cells.emplace_back(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(width));
        for (std::size_t i = 0; i + 1 < row.size(); ++i) {
            row[i] = row[i + 1] - row[i];
        }
        if (!row.empty()) {
            row.pop_back();
        }
    }
    return t;
}

const BigInt& DifferenceTable::at(int j, std::int64_t k) const
{
    if (j < 0 || j > jmax || k < kmin || k > kmax) {
        throw InvalidArgument("difference table index (" + std::to_string(j) + "," + std::to_string(k) +
                              ") out of range");
    }
    return cells[static_cast<std::size_t>(j)][static_cast<std::size_t>(k - kmin)];
}

BinomialPolynomial recenter(const BinomialPolynomial& p, std::int64_t new_center)
{
    check_center(new_center);
    if (new_center == p.center()) {
        return p;
    }
    if (p.is_zero()) {
        return BinomialPolynomial::zero(new_center);
    }
    const int d = p.degree();
    auto table = difference_table(p, d, new_center, new_center);
    std::vector<BigInt> coeffs;
    coeffs.reserve(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) {
        coeffs.push_back(table.at(j, new_center));
    }
    return BinomialPolynomial(new_center, std::move(coeffs));
}

BinomialPolynomial antidifference(const BinomialPolynomial& p, std::int64_t anchor, const BigInt& value)
{
    if (anchor != p.center()) {
        throw InvalidArgument("antidifference anchor " + std::to_string(anchor) + " must equal the centre " +
                              std::to_string(p.center()) + "; recenter first");
    }
    std::vector<BigInt> coeffs;
    coeffs.reserve(p.coefficients().size() + 1);
    coeffs.push_back(value);
    for (const auto& c : p.coefficients()) {
        coeffs.push_back(c);
    }
    return BinomialPolynomial(p.center(), std::move(coeffs));
}

BinomialPolynomial add(std::span<const BinomialPolynomial> ps)
{
    std::int64_t center = 0;
    for (const auto& p : ps) {
        center = std::max(center, p.center());
    }
    std::vector<BigInt> sum;
    for (const auto& p : ps) {
        const auto q = recenter(p, center);
        const auto coeffs = q.coefficients();
        if (sum.size() < coeffs.size()) {
            sum.resize(coeffs.size());
        }
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            sum[j] += coeffs[j];
        }
    }
    return BinomialPolynomial(center, std::move(sum));
}

bool same_function(const BinomialPolynomial& a, const BinomialPolynomial& b)
{
    return recenter(a, b.center()) == b;
}

BigInt parse_decimal(const std::string& text)
{
    std::string t;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            t += c;
        }
    }
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) {
        throw InvalidArgument("malformed decimal integer '" + text + "'");
    }
    for (std::size_t j = i; j < t.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(t[j]))) {
            throw InvalidArgument("malformed decimal integer '" + text + "'");
        }
    }
    if (t[0] == '+') {
        t.erase(0, 1);
    }
    return BigInt(t, 10);
}

} // namespace peakpoly
