#pragma once

#include <cstdint>

#include "arq/error.hpp"

namespace arq::detail {

inline long long checked_add(long long x, long long y) {
    long long r;
    if (__builtin_add_overflow(x, y, &r)) throw Error(ErrorKind::Overflow, "integer addition overflow");
    return r;
}

inline long long checked_sub(long long x, long long y) {
    long long r;
    if (__builtin_sub_overflow(x, y, &r)) throw Error(ErrorKind::Overflow, "integer subtraction overflow");
    return r;
}

inline long long checked_mul(long long x, long long y) {
    long long r;
    if (__builtin_mul_overflow(x, y, &r)) throw Error(ErrorKind::Overflow, "integer multiplication overflow");
    return r;
}

}  // namespace arq::detail
