#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "bony/common.hpp"

namespace bony {

using i64 = long long;
using i128 = __int128_t;

// 2x2 integer matrix ((a,b),(c,d)).
struct Mat2 {
    i64 a = 1, b = 0, c = 0, d = 1;

    static Mat2 identity() { return Mat2{}; }

    i64 det() const { return a * d - b * c; }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        auto m = [](i64 p, i64 q, i64 r, i64 s) {
            i128 v = static_cast<i128>(p) * q + static_cast<i128>(r) * s;
            return static_cast<i64>(v);
        };
        return Mat2{m(x.a, y.a, x.b, y.c), m(x.a, y.b, x.b, y.d),
                    m(x.c, y.a, x.d, y.c), m(x.c, y.b, x.d, y.d)};
    }

    Mat2 pow(int q) const {
        Mat2 r = identity();
        Mat2 base = *this;
        while (q > 0) {
            if (q & 1) r = r * base;
            base = base * base;
            q >>= 1;
        }
        return r;
    }

    friend Mat2 operator-(const Mat2& x, const Mat2& y) {
        return Mat2{x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
    }
};

inline i64 mod_floor(i64 x, i64 m) {
    i64 r = x % m;
    return r < 0 ? r + m : r;
}

// Point of the torus with both coordinates over a common denominator,
// numerators reduced into [0,den).
struct RatPoint {
    i64 nu = 0, nv = 0, den = 1;

    bool operator==(const RatPoint& o) const {
        // Compare after reducing to lowest terms.
        auto red = [](i64 n, i64 d) {
            i64 g = std::gcd(n, d);
            if (g == 0) g = 1;
            return std::pair<i64, i64>{n / g, d / g};
        };
        auto [an, ad] = red(nu, den);
        auto [bn, bd] = red(o.nu, o.den);
        if (an != bn || ad != bd) return false;
        auto [cn, cd] = red(nv, den);
        auto [dn, dd] = red(o.nv, o.den);
        return cn == dn && cd == dd;
    }

    double u() const { return static_cast<double>(nu) / static_cast<double>(den); }
    double v() const { return static_cast<double>(nv) / static_cast<double>(den); }
};

// Apply an integer matrix to a rational point mod 1; the denominator is
// preserved, so backward orbits of grid points never lose exactness.
inline RatPoint apply_mod1(const Mat2& M, const RatPoint& p) {
    i128 nu = static_cast<i128>(M.a) * p.nu + static_cast<i128>(M.b) * p.nv;
    i128 nv = static_cast<i128>(M.c) * p.nu + static_cast<i128>(M.d) * p.nv;
    i128 den = p.den;
    i128 ru = nu % den;
    if (ru < 0) ru += den;
    i128 rv = nv % den;
    if (rv < 0) rv += den;
    return RatPoint{static_cast<i64>(ru), static_cast<i64>(rv), p.den};
}

// All x in [0,1)^2 with M x ≡ 0 (mod Z^2), via column reduction to Smith-like
// diagonal form.  Exactly |det M| solutions.
inline std::vector<RatPoint> congruence_kernel(Mat2 M) {
    if (M.det() == 0) throw Error("congruence_kernel: singular matrix");

    // Column operations on M, mirrored into C so that solutions are x = C y.
    Mat2 C = Mat2::identity();
    auto swap_cols = [](Mat2& X) {
        std::swap(X.a, X.b);
        std::swap(X.c, X.d);
    };
    auto sub_col = [](Mat2& X, i64 q, int dst) {
        // col_dst -= q * col_other
        if (dst == 0) {
            X.a -= q * X.b;
            X.c -= q * X.d;
        } else {
            X.b -= q * X.a;
            X.d -= q * X.c;
        }
    };

    auto swap_rows = [](Mat2& X) {
        std::swap(X.a, X.c);
        std::swap(X.b, X.d);
    };

    // Alternate column and row Euclid until M is diagonal.  Row operations
    // are left-multiplications by unimodular matrices and do not change the
    // condition Mx ∈ Z^2, so only column operations are mirrored into C.
    int guard = 0;
    while (M.b != 0 || M.c != 0) {
        if (++guard > 512) throw Error("congruence_kernel: reduction failed");
        while (M.b != 0) {
            if (M.a == 0) {
                swap_cols(M);
                swap_cols(C);
                continue;
            }
            i64 q = M.b / M.a;
            sub_col(M, q, 1);
            sub_col(C, q, 1);
            if (M.b != 0) {
                swap_cols(M);
                swap_cols(C);
            }
        }
        while (M.c != 0) {
            if (M.a == 0) {
                swap_rows(M);
                continue;
            }
            i64 q = M.c / M.a;
            M.c -= q * M.a;
            M.d -= q * M.b;
            if (M.c != 0) swap_rows(M);
        }
    }

    i64 s1 = M.a < 0 ? -M.a : M.a;
    i64 s2 = M.d < 0 ? -M.d : M.d;
    if (s1 == 0 || s2 == 0) throw Error("congruence_kernel: zero invariant factor");
    i64 D = s1 * s2;

    std::vector<RatPoint> out;
    out.reserve(static_cast<size_t>(D));
    for (i64 i = 0; i < s1; ++i) {
        for (i64 j = 0; j < s2; ++j) {
            // x = C * (i/s1, j/s2), common denominator D = s1*s2.
            i128 nu = static_cast<i128>(C.a) * i * s2 + static_cast<i128>(C.b) * j * s1;
            i128 nv = static_cast<i128>(C.c) * i * s2 + static_cast<i128>(C.d) * j * s1;
            i128 ru = nu % D;
            if (ru < 0) ru += D;
            i128 rv = nv % D;
            if (rv < 0) rv += D;
            out.push_back(RatPoint{static_cast<i64>(ru), static_cast<i64>(rv), D});
        }
    }
    return out;
}

} // namespace bony
