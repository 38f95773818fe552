#pragma once

#include <toruskit/errors.hpp>

namespace toruskit {

// All record arithmetic is exact: silent wraparound is forbidden, so every
// sum/product that involves caller-supplied integers goes through these.

inline long long checked_add(long long a, long long b) {
    long long r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw overflow_error("integer overflow in addition");
    return r;
}

inline long long checked_sub(long long a, long long b) {
    long long r = 0;
    if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("integer overflow in subtraction");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("integer overflow in multiplication");
    return r;
}

inline long long checked_neg(long long a) {
    return checked_sub(0, a);
}

}  // namespace toruskit
