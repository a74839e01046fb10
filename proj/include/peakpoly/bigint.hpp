#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace peakpoly {

using BigInt = mpz_class;

inline BigInt big(std::int64_t v)
{
    // mpz_class has no int64 constructor on every platform; go through long.
    static_assert(sizeof(long) == sizeof(std::int64_t));
    return BigInt(static_cast<long>(v));
}

inline BigInt big_from_u64(std::uint64_t v)
{
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    return BigInt(static_cast<unsigned long>(v));
}

inline BigInt pow2(unsigned long e)
{
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

// Throws InvalidArgument on anything that is not an optionally signed run of digits.
BigInt parse_decimal(const std::string& text);

} // namespace peakpoly
