#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace egr {

/// Exact binomial coefficient. C(a,b) = 0 for a < b or b < 0.
/// Throws std::overflow_error if the value does not fit in int64.
inline long long binom(long long a, long long b) {
    if (b < 0 || a < b) return 0;
    if (a < 0) throw std::invalid_argument("binom: negative upper index");
    b = std::min(b, a - b);
    unsigned __int128 acc = 1;
    for (long long i = 1; i <= b; ++i) {
        acc = acc * static_cast<unsigned __int128>(a - b + i) / static_cast<unsigned __int128>(i);
        if (acc > static_cast<unsigned __int128>(INT64_MAX))
            throw std::overflow_error("binom: result exceeds int64");
    }
    return static_cast<long long>(acc);
}

} // namespace egr
