#pragma once

#include <cmath>
#include <optional>

#include "bony/common.hpp"
#include "bony/rational.hpp"

namespace bony {

// Point of the flat torus [0,1)^2, optionally carrying an exact rational
// representation p/q, r/q.  Exactness survives both directions of the map,
// which is what makes deep backward orbits trustworthy.
struct TorusPoint {
    double u = 0.0, v = 0.0;
    bool exact = false;
    RatPoint rat;

    static double wrap(double x) {
        double r = x - std::floor(x);
        if (r >= 1.0) r -= 1.0; // guards against floor rounding at 1-ulp below integers
        return r;
    }

    static TorusPoint from_floats(double u, double v) {
        TorusPoint p;
        p.u = wrap(u);
        p.v = wrap(v);
        return p;
    }

    static TorusPoint from_rational(i64 nu, i64 nv, i64 den) {
        if (den <= 0) throw Error("TorusPoint: denominator must be positive");
        TorusPoint p;
        p.exact = true;
        p.rat = RatPoint{mod_floor(nu, den), mod_floor(nv, den), den};
        p.u = p.rat.u();
        p.v = p.rat.v();
        return p;
    }

    static TorusPoint from_rat(const RatPoint& r) { return from_rational(r.nu, r.nv, r.den); }
};

inline double torus_dist(const TorusPoint& a, const TorusPoint& b) {
    double du = std::fabs(a.u - b.u);
    double dv = std::fabs(a.v - b.v);
    du = std::min(du, 1.0 - du);
    dv = std::min(dv, 1.0 - dv);
    return std::sqrt(du * du + dv * dv);
}

// Linear Anosov automorphism ((m, m+1), (m-1, m)); determinant one, expanding
// eigenvalue m + sqrt(m^2-1).  The eigenvector slopes are ±sqrt((m-1)/(m+1)).
struct AnosovMap {
    i64 m = 0;
    Mat2 mat;    // forward matrix
    Mat2 inv;    // exact inverse ((m, -(m+1)), (-(m-1), m))
    double lambda = 0.0;
    double slope = 0.0;  // k = sqrt((m-1)/(m+1)); e_u has slope k, e_s has slope -k
    double eu[2] = {0, 0};
    double es[2] = {0, 0};
};

inline AnosovMap make_anosov(i64 m) {
    if (m <= 1) throw Error("make_anosov: not hyperbolic (need m >= 2, got m=" + std::to_string(m) + ")");
    AnosovMap A;
    A.m = m;
    A.mat = Mat2{m, m + 1, m - 1, m};
    A.inv = Mat2{m, -(m + 1), -(m - 1), m};
    double md = static_cast<double>(m);
    A.lambda = md + std::sqrt(md * md - 1.0);
    A.slope = std::sqrt((md - 1.0) / (md + 1.0));
    double x = std::sqrt(md + 1.0), y = std::sqrt(md - 1.0);
    double n = std::sqrt(x * x + y * y);
    A.eu[0] = x / n;
    A.eu[1] = y / n;
    A.es[0] = x / n;
    A.es[1] = -y / n;
    return A;
}

enum class Dir { Forward, Backward };

inline TorusPoint torus_step(const AnosovMap& A, const TorusPoint& p, Dir dir) {
    const Mat2& M = (dir == Dir::Forward) ? A.mat : A.inv;
    if (p.exact) {
        return TorusPoint::from_rat(apply_mod1(M, p.rat));
    }
    double u = static_cast<double>(M.a) * p.u + static_cast<double>(M.b) * p.v;
    double v = static_cast<double>(M.c) * p.u + static_cast<double>(M.d) * p.v;
    return TorusPoint::from_floats(u, v);
}

// All fixed points of A^q, exactly: solutions of (A^q - I)x ≡ 0 (mod Z^2).
inline std::vector<RatPoint> fixed_points(const AnosovMap& A, int q) {
    if (q < 1) throw Error("fixed_points: need q >= 1");
    Mat2 M = A.mat.pow(q) - Mat2::identity();
    return congruence_kernel(M);
}

inline i64 fixed_point_count_det(const AnosovMap& A, int q) {
    i64 d = (A.mat.pow(q) - Mat2::identity()).det();
    return d < 0 ? -d : d;
}

// Arc-length parametrized segment of the unstable line through b, centered
// at b and wrapped mod 1.
struct UnstableSegment {
    TorusPoint center;
    double dir[2] = {0, 0};
    double length = 0.0;

    TorusPoint at(double t) const {
        double s = t - 0.5 * length;
        return TorusPoint::from_floats(center.u + s * dir[0], center.v + s * dir[1]);
    }
    TorusPoint midpoint() const { return at(0.5 * length); }
};

inline UnstableSegment unstable_segment(const AnosovMap& A, const TorusPoint& b, double length) {
    if (length < 0) throw Error("unstable_segment: length must be >= 0");
    UnstableSegment s;
    s.center = b;
    s.dir[0] = A.eu[0];
    s.dir[1] = A.eu[1];
    s.length = length;
    return s;
}

} // namespace bony
