#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>

#include "flagdual/gaussian_rational.hpp"

namespace flagdual
{

/** Exact backend. */
using Exact = GaussianRational;
/** Floating backend. */
using Float = std::complex<double>;

/**
 * @brief The two scalar backends
 *
 * Every geometric type is a template over one of these. Mixing them is a
 * compile error; conversion happens only at load time.
 */
template <class S>
concept Scalar = std::same_as<S, Exact> || std::same_as<S, Float>;

template <Scalar S>
inline constexpr bool is_exact_v = std::same_as<S, Exact>;

/** Scale-invariant degeneracy threshold for the float backend. */
inline constexpr double kDegeneracyTol = 1e-10;
/** Relative distance under which two float generators are the same. */
inline constexpr double kMergeTol = 1e-12;
/** Relative tolerance when validating redundant float coordinates. */
inline constexpr double kRelationTol = 1e-9;

inline double magnitude(const Exact& z) { return std::abs(z.to_complex()); }
inline double magnitude(const Float& z) { return std::abs(z); }

inline std::complex<double> to_complex(const Exact& z) { return z.to_complex(); }
inline std::complex<double> to_complex(const Float& z) { return z; }

inline Exact conjugate(const Exact& z) { return z.conj(); }
inline Float conjugate(const Float& z) { return std::conj(z); }

/**
 * Zero test. Exact values compare exactly; floats against
 * kDegeneracyTol * scale, where scale is the magnitude of the terms
 * that produced the value.
 */
inline bool is_zero(const Exact& z, double /*scale*/ = 1.0) { return z.is_zero(); }
inline bool is_zero(const Float& z, double scale = 1.0)
{
    return std::abs(z) <= kDegeneracyTol * scale;
}

/** Equality: exact, or relative within tol for floats. */
inline bool same_value(const Exact& a, const Exact& b, double /*tol*/ = 0.0)
{
    return a == b;
}
inline bool same_value(const Float& a, const Float& b, double tol = kRelationTol)
{
    const double scale = std::max({std::abs(a), std::abs(b), 1.0});
    return std::abs(a - b) <= tol * scale;
}

template <Scalar S>
S one()
{
    return S(1);
}

template <Scalar S>
S zero()
{
    return S(0);
}

/** Maps a float into the backend; only meaningful for Float. */
template <Scalar S>
S from_complex(std::complex<double> z)
{
    if constexpr (is_exact_v<S>) {
        return Exact{mpq_class{z.real()}, mpq_class{z.imag()}};
    } else {
        return z;
    }
}

}  // namespace flagdual
