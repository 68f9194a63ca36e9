#pragma once

#include <stdexcept>

namespace hhcalc {

// Closed-form dimensions, used as oracles against the computed complex.
// Degrees are written n = 4m + r with 0 <= r <= 3; `char_div` is whether
// char K divides 2T + 1.

namespace detail {
struct Split {
    long m;
    int r;
};
inline Split split(long n) {
    // floor division so that n = -1 gives m = -1, r = 3
    long m = n >= 0 ? n / 4 : -((-n + 3) / 4);
    return {m, static_cast<int>(n - 4 * m)};
}
}  // namespace detail

/// dim Hom_{A^e}(R^n, A).
inline long hom_dim_formula(long n, long T) {
    if (n < 0) throw std::invalid_argument("hom_dim_formula: n must be >= 0");
    const auto [m, r] = detail::split(n);
    switch (r) {
        case 0: return 4 * (2 * T + 1) * (4 * m + 1);
        case 1: return 16 * (T + 1) * (2 * m + 1);
        case 2: return 4 * (2 * T + 1) * (4 * m + 3);
        default: return 32 * T * (m + 1);
    }
}

/// dim Hom_{A^e}(Ker ∂^idx, A) for idx >= -1 (Ker ∂^{-1} := A).
inline long ker_dim_formula(long idx, long T, bool char_div) {
    if (idx < -1) throw std::invalid_argument("ker_dim_formula: index must be >= -1");
    const auto [m, r] = detail::split(idx);
    if (m == -1) return 2 * T + 1;
    switch (r) {
        case 0:
            if (m == 0) return char_div ? 8 * T + 6 : 8 * T + 5;
            return char_div ? 2 * (8 * m + 3) + 8 * T * (2 * m + 1) : 4 * (4 * m + 1) + 8 * T * (2 * m + 1);
        case 1: return 4 * (4 * m + 3) + 2 * T * (8 * m + 5);
        case 2: return 16 * T * (m + 1);
        default: return 2 * T * (8 * m + 9);
    }
}

/// dim HH^n(A), valid when q0 q1 q2 q3 is not a root of unity.
inline long hh_formula(long n, long T, bool char_div) {
    if (n < 0) throw std::invalid_argument("hh_formula: n must be >= 0");
    const auto [m, r] = detail::split(n);
    if (r == 3) return 2 * T;
    if (m == 0) {
        switch (r) {
            case 0: return 2 * T + 1;
            case 1: return char_div ? 2 * T + 3 : 2 * T + 2;
            default: return char_div ? 2 * T + 2 : 2 * T + 1;
        }
    }
    if (r == 0) return 2 * T;
    return char_div ? 2 * T + 2 : 2 * T;
}

}  // namespace hhcalc
