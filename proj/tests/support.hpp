#pragma once

// Hand-rolled generators shared by the unit and acceptance tests.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "flagdual/flagdual.hpp"

namespace testgen
{

using namespace flagdual;

class Gen
{
public:
    explicit Gen(unsigned long seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    mpq_class rational(long span, long den)
    {
        mpq_class q{mpz_class{integer(-span, span)}, mpz_class{integer(1, den)}};
        q.canonicalize();
        return q;
    }

    /** (a/b) + (c/d) i with small numerators and denominators. */
    Exact gaussian_rational(long span = 9, long den = 5)
    {
        const mpq_class re = rational(span, den);
        return Exact{re, rational(span, den)};
    }

    /** Gaussian rational avoiding 0 and 1. */
    Exact exact_generator()
    {
        for (;;) {
            const Exact z = gaussian_rational();
            if (!z.is_zero() && z != Exact(1)) {
                return z;
            }
        }
    }

    Float complex_in_box(double r = 3.0) { return {real(-r, r), real(-r, r)}; }

    /** Complex number at distance >= margin from 0 and 1. */
    Float float_generator(double r = 3.0, double margin = 0.05)
    {
        for (;;) {
            const Float z = complex_in_box(r);
            if (std::abs(z) > margin && std::abs(z - 1.0) > margin) {
                return z;
            }
        }
    }

    template <Scalar S>
    S generator()
    {
        if constexpr (is_exact_v<S>) {
            return exact_generator();
        } else {
            return float_generator();
        }
    }

    template <Scalar S>
    MinimalCoords<S> minimal()
    {
        return MinimalCoords<S>::make(generator<S>(), generator<S>(), generator<S>(), generator<S>());
    }

    /** Random chart coordinates whose tetrahedron is very generic. */
    template <Scalar S>
    TetraCoords<S> very_generic_coords()
    {
        for (;;) {
            const auto c = complete_from_minimal(minimal<S>());
            if (very_generic(c)) {
                return c;
            }
        }
    }

    template <Scalar S>
    Vec3<S> vec3(long span = 6)
    {
        if constexpr (is_exact_v<S>) {
            return {Exact{integer(-span, span), integer(-span, span)}, Exact{integer(-span, span), integer(-span, span)},
                    Exact{integer(-span, span), integer(-span, span)}};
        } else {
            return {complex_in_box(), complex_in_box(), complex_in_box()};
        }
    }

    /** Point and a random line through it. */
    template <Scalar S>
    Flag<S> flag()
    {
        for (;;) {
            const Vec3<S> x = vec3<S>();
            const Vec3<S> f = cross<S>(x, vec3<S>());
            if (norm<S>(x) > 0.5 && norm<S>(f) > 0.5) {
                return Flag<S>::make(Point2<S>{x}, Line2<S>{f});
            }
        }
    }

    template <Scalar S>
    FlagTuple<S> very_generic_tuple()
    {
        for (;;) {
            FlagTuple<S> t = {flag<S>(), flag<S>(), flag<S>(), flag<S>()};
            if (is_very_generic(t)) {
                return t;
            }
        }
    }

    template <Scalar S>
    Mat3<S> invertible()
    {
        for (;;) {
            const Mat3<S> m = Mat3<S>::from_columns(vec3<S>(4), vec3<S>(4), vec3<S>(4));
            if (!is_zero(mat3_det(m), 1.0)) {
                return m;
            }
        }
    }

    /** Four Heisenberg null points (float), generic, not very-generic-degenerate. */
    FlagTuple<Float> cr_tuple()
    {
        for (;;) {
            FlagTuple<Float> t;
            for (int k = 0; k < 4; ++k) {
                t.push_back(cr_flag(heisenberg_point<Float>(complex_in_box(2.0), Float(real(-2, 2), 0))));
            }
            if (is_very_generic(t)) {
                return t;
            }
        }
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline Float regular_shape() { return std::polar(1.0, std::numbers::pi / 3); }

}  // namespace testgen
