#pragma once

#include <array>
#include <string>
#include <vector>

#include "flagdual/errors.hpp"
#include "flagdual/mat3.hpp"
#include "flagdual/projective_line.hpp"
#include "flagdual/scalar.hpp"

namespace flagdual
{

/** @brief Point of CP^2 in homogeneous coordinates */
template <Scalar S>
struct Point2 {
    Vec3<S> v;
    friend bool operator==(const Point2&, const Point2&) = default;
};

/** @brief Line of CP^2, stored as the covector that vanishes on it */
template <Scalar S>
struct Line2 {
    Vec3<S> v;
    friend bool operator==(const Line2&, const Line2&) = default;
};

/** f(x) */
template <Scalar S>
S pairing(const Line2<S>& f, const Point2<S>& x)
{
    return dot<S>(f.v, x.v);
}

template <Scalar S>
bool projectively_equal(const Vec3<S>& a, const Vec3<S>& b)
{
    const Vec3<S> c = cross<S>(a, b);
    const double s = norm<S>(a) * norm<S>(b);
    return is_zero(c[0], s) && is_zero(c[1], s) && is_zero(c[2], s);
}

/** Line through two points. */
template <Scalar S>
Line2<S> join(const Point2<S>& a, const Point2<S>& b)
{
    return {cross<S>(a.v, b.v)};
}

/** Intersection point of two lines. */
template <Scalar S>
Point2<S> meet(const Line2<S>& f, const Line2<S>& g)
{
    return {cross<S>(f.v, g.v)};
}

/** @brief Incident (point, line) pair */
template <Scalar S>
struct Flag {
    Point2<S> point;
    Line2<S> line;

    /** Validating constructor; DegenerateInput unless f(x) = 0. */
    static Flag make(Point2<S> x, Line2<S> f)
    {
        if (norm<S>(x.v) == 0.0 || norm<S>(f.v) == 0.0) {
            throw DegenerateInput("flag: zero homogeneous vector");
        }
        if (!is_zero(pairing(f, x), norm<S>(f.v) * norm<S>(x.v))) {
            throw DegenerateInput("flag: point does not lie on line");
        }
        return Flag{std::move(x), std::move(f)};
    }

    friend bool operator==(const Flag&, const Flag&) = default;
};

template <Scalar S>
using FlagTuple = std::vector<Flag<S>>;

namespace detail
{

template <Scalar S>
bool pairing_vanishes(const Flag<S>& fi, const Flag<S>& fj)
{
    return is_zero(pairing(fi.line, fj.point), norm<S>(fi.line.v) * norm<S>(fj.point.v));
}

template <Scalar S>
bool dependent(const Vec3<S>& a, const Vec3<S>& b, const Vec3<S>& c)
{
    return is_zero(det3<S>(a, b, c), norm<S>(a) * norm<S>(b) * norm<S>(c));
}

}  // namespace detail

/** f_i(x_j) != 0 for i != j, and no three points collinear. */
template <Scalar S>
bool is_generic(const FlagTuple<S>& t)
{
    const std::size_t m = t.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (i != j && detail::pairing_vanishes(t[i], t[j])) {
                return false;
            }
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            for (std::size_t k = j + 1; k < m; ++k) {
                if (detail::dependent(t[i].point.v, t[j].point.v, t[k].point.v)) {
                    return false;
                }
            }
        }
    }
    return true;
}

/** Generic, and no three lines concurrent. */
template <Scalar S>
bool is_very_generic(const FlagTuple<S>& t)
{
    if (!is_generic(t)) {
        return false;
    }
    const std::size_t m = t.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            for (std::size_t k = j + 1; k < m; ++k) {
                if (detail::dependent(t[i].line.v, t[j].line.v, t[k].line.v)) {
                    return false;
                }
            }
        }
    }
    return true;
}

/** Swaps point and covector through the standard-basis identification. */
template <Scalar S>
Flag<S> dual_flag(const Flag<S>& f)
{
    return Flag<S>{Point2<S>{f.line.v}, Line2<S>{f.point.v}};
}

template <Scalar S>
FlagTuple<S> dual_tuple(const FlagTuple<S>& t)
{
    FlagTuple<S> out;
    out.reserve(t.size());
    for (const auto& f : t) {
        out.push_back(dual_flag(f));
    }
    return out;
}

template <Scalar S>
Flag<S> conjugate_flag(const Flag<S>& f)
{
    Flag<S> out = f;
    for (int i = 0; i < 3; ++i) {
        out.point.v[i] = conjugate(f.point.v[i]);
        out.line.v[i] = conjugate(f.line.v[i]);
    }
    return out;
}

/** Point x -> A x, covector f -> (A^T)^{-1} f. */
template <Scalar S>
Flag<S> apply(const Mat3<S>& a, const Flag<S>& f)
{
    const Mat3<S> inv_t = mat3_transpose(mat3_inv(a));
    return Flag<S>{Point2<S>{mat3_apply(a, f.point.v)}, Line2<S>{mat3_apply(inv_t, f.line.v)}};
}

template <Scalar S>
FlagTuple<S> apply(const Mat3<S>& a, const FlagTuple<S>& t)
{
    const Mat3<S> inv_t = mat3_transpose(mat3_inv(a));
    FlagTuple<S> out;
    out.reserve(t.size());
    for (const auto& f : t) {
        out.push_back(Flag<S>{Point2<S>{mat3_apply(a, f.point.v)},
                              Line2<S>{mat3_apply(inv_t, f.line.v)}});
    }
    return out;
}

/**
 * @brief Projective frame normalization
 *
 * Returns the unique (up to scale) A sending the first four points of t to
 * [1,0,0], [0,1,0], [0,0,1], [1,1,1].
 */
template <Scalar S>
Mat3<S> normalize_to_standard(const FlagTuple<S>& t)
{
    if (t.size() < 4) {
        throw DegenerateInput("normalize_to_standard: need four flags");
    }
    const Vec3<S>& p1 = t[0].point.v;
    const Vec3<S>& p2 = t[1].point.v;
    const Vec3<S>& p3 = t[2].point.v;
    const Vec3<S>& p4 = t[3].point.v;
    if (detail::dependent(p1, p2, p3) || detail::dependent(p1, p2, p4) ||
        detail::dependent(p1, p3, p4) || detail::dependent(p2, p3, p4)) {
        throw DegenerateInput("normalize_to_standard: points not in general position");
    }
    // B = [p1 p2 p3] diag(lambda) with [p1 p2 p3] lambda = p4 sends the
    // standard frame onto the points; A = B^{-1}.
    const Mat3<S> m = Mat3<S>::from_columns(p1, p2, p3);
    const Vec3<S> lambda = mat3_apply(mat3_inv(m), p4);
    const Mat3<S> b = mat3_mul(m, Mat3<S>::diagonal(lambda[0], lambda[1], lambda[2]));
    return mat3_inv(b);
}

/**
 * @brief Veronese flag of a point of CP^1
 *
 * Point [x^2, xy, y^2]; line is its polar for the form ac' + ca' - 2bb'
 * of the quadric xz - y^2, i.e. covector (c, -2b, a).
 */
template <Scalar S>
Flag<S> hyperbolic_flag(const ProjPoint1<S>& p)
{
    const S a = p.a * p.a;
    const S b = p.a * p.b;
    const S c = p.b * p.b;
    return Flag<S>::make(Point2<S>{{a, b, c}}, Line2<S>{{c, S(-2) * b, a}});
}

/** <x, x> for the Hermitian form with J = antidiag(1,1,1). */
template <Scalar S>
S hermitian_norm(const Point2<S>& x)
{
    return conjugate(x.v[0]) * x.v[2] + conjugate(x.v[1]) * x.v[1] + conjugate(x.v[2]) * x.v[0];
}

/**
 * @brief Flag of a point of the CR sphere
 *
 * The line is the complex tangent line at x, covector conj(x)^T J.
 */
template <Scalar S>
Flag<S> cr_flag(const Point2<S>& x)
{
    const double s = norm<S>(x.v);
    if (s == 0.0) {
        throw NotOnSphere("cr_flag: zero vector");
    }
    if (!is_zero(hermitian_norm(x), s * s)) {
        throw NotOnSphere("cr_flag: point is not on the null cone of J");
    }
    return Flag<S>::make(x, Line2<S>{{conjugate(x.v[2]), conjugate(x.v[1]), conjugate(x.v[0])}});
}

/**
 * Null point with Heisenberg coordinates (xi, t):
 * [1, xi, -|xi|^2/2 + i t]. t must be real.
 */
template <Scalar S>
Point2<S> heisenberg_point(const S& xi, const S& t)
{
    const S half_norm = conjugate(xi) * xi / S(2);
    S iu;
    if constexpr (is_exact_v<S>) {
        iu = Exact::i();
    } else {
        iu = Float(0.0, 1.0);
    }
    return Point2<S>{{one<S>(), xi, iu * t - half_norm}};
}

/**
 * Cross-ratio of four collinear points of CP^2 (or, applied to covectors,
 * of four concurrent lines), via coordinates on the common line.
 */
template <Scalar S>
S cross_ratio_collinear(const Vec3<S>& p1, const Vec3<S>& p2, const Vec3<S>& p3,
                        const Vec3<S>& p4)
{
    // a reference vector q off the line spanned by p1, p2
    const Vec3<S> ln = cross<S>(p1, p2);
    Vec3<S> q{zero<S>(), zero<S>(), zero<S>()};
    int best = 0;
    for (int k = 1; k < 3; ++k) {
        if (magnitude(ln[k]) > magnitude(ln[best])) {
            best = k;
        }
    }
    q[best] = one<S>();
    const S base = det3<S>(q, p1, p2);
    if (is_zero(base, norm<S>(p1) * norm<S>(p2))) {
        throw DegenerateInput("cross_ratio_collinear: first two points coincide");
    }
    // p = alpha p1 + beta p2 with alpha = [q p p2]/[q p1 p2], beta = [q p1 p]/[q p1 p2]
    auto coord = [&](const Vec3<S>& p) {
        return ProjPoint1<S>{det3<S>(q, p, p2), det3<S>(q, p1, p)};
    };
    return cross_ratio(coord(p1), coord(p2), coord(p3), coord(p4));
}

}  // namespace flagdual
