#pragma once

#include <cstdint>
#include <stdexcept>

namespace pperm {

// Exact 64-bit arithmetic. Overflow throws; values are never allowed to wrap.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in addition");
    }
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in subtraction");
    }
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in multiplication");
    }
    return r;
}

inline std::int64_t checked_factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial requires n >= 0");
    std::int64_t r = 1;
    for (int i = 2; i <= n; ++i) r = checked_mul(r, i);
    return r;
}

}  // namespace pperm
