#pragma once

#include <array>

#include "flagdual/errors.hpp"
#include "flagdual/scalar.hpp"

namespace flagdual
{

template <Scalar S>
using Vec3 = std::array<S, 3>;

/** @brief 3x3 matrix, row major */
template <Scalar S>
struct Mat3 {
    std::array<std::array<S, 3>, 3> m;

    static Mat3 identity()
    {
        Mat3 r;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                r.m[i][j] = i == j ? one<S>() : zero<S>();
            }
        }
        return r;
    }

    static Mat3 diagonal(const S& a, const S& b, const S& c)
    {
        Mat3 r = identity();
        r.m[0][0] = a;
        r.m[1][1] = b;
        r.m[2][2] = c;
        return r;
    }

    /** Columns c0, c1, c2. */
    static Mat3 from_columns(const Vec3<S>& c0, const Vec3<S>& c1, const Vec3<S>& c2)
    {
        Mat3 r;
        for (int i = 0; i < 3; ++i) {
            r.m[i][0] = c0[i];
            r.m[i][1] = c1[i];
            r.m[i][2] = c2[i];
        }
        return r;
    }

    const S& operator()(int i, int j) const { return m[i][j]; }
    S& operator()(int i, int j) { return m[i][j]; }

    double max_abs() const
    {
        double s = 0;
        for (const auto& row : m) {
            for (const auto& x : row) {
                s = std::max(s, magnitude(x));
            }
        }
        return s;
    }

    friend bool operator==(const Mat3& a, const Mat3& b) { return a.m == b.m; }
};

template <Scalar S>
S det3(const Vec3<S>& a, const Vec3<S>& b, const Vec3<S>& c)
{
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

template <Scalar S>
Vec3<S> cross(const Vec3<S>& a, const Vec3<S>& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <Scalar S>
S dot(const Vec3<S>& a, const Vec3<S>& b)
{
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <Scalar S>
double norm(const Vec3<S>& v)
{
    return std::sqrt(magnitude(v[0]) * magnitude(v[0]) + magnitude(v[1]) * magnitude(v[1]) +
                     magnitude(v[2]) * magnitude(v[2]));
}

template <Scalar S>
S mat3_det(const Mat3<S>& a)
{
    return det3<S>(a.m[0], a.m[1], a.m[2]);
}

template <Scalar S>
Mat3<S> mat3_transpose(const Mat3<S>& a)
{
    Mat3<S> r;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            r.m[i][j] = a.m[j][i];
        }
    }
    return r;
}

template <Scalar S>
Mat3<S> mat3_mul(const Mat3<S>& a, const Mat3<S>& b)
{
    Mat3<S> r;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j] + a.m[i][2] * b.m[2][j];
        }
    }
    return r;
}

template <Scalar S>
Vec3<S> mat3_apply(const Mat3<S>& a, const Vec3<S>& v)
{
    return {dot<S>(a.m[0], v), dot<S>(a.m[1], v), dot<S>(a.m[2], v)};
}

/** Inverse via the adjugate; SingularMatrix when det vanishes. */
template <Scalar S>
Mat3<S> mat3_inv(const Mat3<S>& a)
{
    const S d = mat3_det(a);
    const double s = a.max_abs();
    if (is_zero(d, s * s * s)) {
        throw SingularMatrix("mat3_inv: determinant is zero");
    }
    // rows of the inverse are cross products of columns
    const Mat3<S> t = mat3_transpose(a);
    const Vec3<S> c0 = cross<S>(t.m[1], t.m[2]);
    const Vec3<S> c1 = cross<S>(t.m[2], t.m[0]);
    const Vec3<S> c2 = cross<S>(t.m[0], t.m[1]);
    Mat3<S> r;
    for (int j = 0; j < 3; ++j) {
        r.m[0][j] = c0[j] / d;
        r.m[1][j] = c1[j] / d;
        r.m[2][j] = c2[j] / d;
    }
    return r;
}

}  // namespace flagdual
