#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace multieuler {

// All counts in this library are exact 64-bit integers. The magnitudes are
// bounded by factorials of small symmetric groups, but every arithmetic step
// is still checked: an out-of-range request must fail loudly, never wrap.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow: " + std::to_string(a) +
                                  " + " + std::to_string(b));
    }
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow: " + std::to_string(a) +
                                  " - " + std::to_string(b));
    }
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow: " + std::to_string(a) +
                                  " * " + std::to_string(b));
    }
    return r;
}

/// base^exp with exp >= 0, overflow-checked.
inline std::int64_t checked_pow(std::int64_t base, int exp) {
    if (exp < 0) throw std::invalid_argument("checked_pow: negative exponent");
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

}  // namespace multieuler
