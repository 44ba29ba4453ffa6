#pragma once

#include <cstdint>
#include <stdexcept>

namespace alcove {

// All combinatorial quantities in this library are exact integers.  Desk-scale
// inputs keep every intermediate well below 2^63, but a silent wrap would
// corrupt a table without any visible symptom, so the arithmetic used in
// multiplicity sums goes through these checked helpers and throws instead.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

// Exact division; the callers rely on divisibility as a structural fact
// (Freudenthal numerators, symmetrizer ratios), so a remainder is a bug.
inline std::int64_t exact_div(std::int64_t a, std::int64_t b) {
    if (b == 0 || a % b != 0)
        throw std::logic_error("exact_div: non-exact division");
    return a / b;
}

} // namespace alcove
