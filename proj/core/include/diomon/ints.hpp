#pragma once

// Exact 64-bit integer arithmetic. Every operation that could leave the
// representable range throws Errc::arithmetic_overflow instead of wrapping;
// callers never see a silently truncated value.

#include <cstdint>
#include <span>
#include <vector>

#include "diomon/errors.hpp"

namespace diomon {

using Int = std::int64_t;

inline Int checked_add(Int x, Int y) {
    Int r = 0;
    if (__builtin_add_overflow(x, y, &r)) fail(Errc::arithmetic_overflow, "addition out of range");
    return r;
}

inline Int checked_sub(Int x, Int y) {
    Int r = 0;
    if (__builtin_sub_overflow(x, y, &r)) fail(Errc::arithmetic_overflow, "subtraction out of range");
    return r;
}

inline Int checked_mul(Int x, Int y) {
    Int r = 0;
    if (__builtin_mul_overflow(x, y, &r)) fail(Errc::arithmetic_overflow, "multiplication out of range");
    return r;
}

inline Int checked_abs(Int x) {
    if (x == INT64_MIN) fail(Errc::arithmetic_overflow, "abs out of range");
    return x < 0 ? -x : x;
}

// Dot product of equal-length vectors.
Int checked_dot(std::span<const Int> xs, std::span<const Int> ys);

// gcd of absolute values; 0 when the input is empty or all-zero.
Int gcd_of(std::span<const Int> xs);

// Entry-wise difference y - x (equal lengths required by the caller).
std::vector<Int> vec_sub(std::span<const Int> y, std::span<const Int> x);

}  // namespace diomon
