#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cmposet {

using BigInt = boost::multiprecision::cpp_int;

class OverflowError : public std::overflow_error {
public:
    OverflowError() : std::overflow_error("64-bit integer overflow") {}
};

// Arithmetic that is exact for both scalar types: int64 throws on overflow,
// BigInt never does.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
    return r;
}
inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError();
    return r;
}
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
    return r;
}
inline std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }
inline std::int64_t abs_value(std::int64_t a) { return a < 0 ? checked_neg(a) : a; }

inline BigInt checked_add(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt checked_sub(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt checked_mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt checked_neg(const BigInt& a) { return -a; }
inline BigInt abs_value(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

inline BigInt to_big(std::int64_t a) { return BigInt(a); }
inline BigInt to_big(const BigInt& a) { return a; }

inline std::string to_string(const BigInt& a) { return a.str(); }

}  // namespace cmposet
