#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "flagdual/errors.hpp"
#include "flagdual/scalar.hpp"

namespace flagdual
{

/** @brief Element of Z[i] */
struct GaussInt {
    mpz_class re{0};
    mpz_class im{0};

    mpz_class norm() const { return re * re + im * im; }
    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

    friend GaussInt operator*(const GaussInt& a, const GaussInt& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussInt& a, const GaussInt& b)
    {
        return a.re == b.re && a.im == b.im;
    }
    /** Ordered by norm, then real part, then imaginary part. */
    friend bool operator<(const GaussInt& a, const GaussInt& b)
    {
        const int c = cmp(a.norm(), b.norm());
        if (c != 0) {
            return c < 0;
        }
        if (a.re != b.re) {
            return a.re < b.re;
        }
        return a.im < b.im;
    }

    std::string to_string() const { return GaussianRational{mpq_class{re}, mpq_class{im}}.to_string(); }
};

/**
 * @brief Unit times a product of Gaussian primes
 *
 * Primes are the first-quadrant associates (re > 0, im >= 0), pairwise
 * non-associate, sorted by norm. The unit is i^unit with unit in [0, 4).
 */
struct GaussianFactorization {
    int unit = 0;
    std::vector<std::pair<GaussInt, int>> primes;

    bool operator==(const GaussianFactorization&) const = default;
};

namespace detail
{

/** a / b in Z[i] if exact, otherwise nullopt-like flag. */
inline bool gauss_divides(const GaussInt& a, const GaussInt& b, GaussInt& quotient)
{
    const mpz_class n = b.norm();
    const mpz_class re = a.re * b.re + a.im * b.im;
    const mpz_class im = a.im * b.re - a.re * b.im;
    if (!mpz_divisible_p(re.get_mpz_t(), n.get_mpz_t()) ||
        !mpz_divisible_p(im.get_mpz_t(), n.get_mpz_t())) {
        return false;
    }
    quotient = {re / n, im / n};
    return true;
}

/** Euclidean remainder with the rounded quotient. */
inline GaussInt gauss_mod(const GaussInt& a, const GaussInt& b)
{
    const mpz_class n = b.norm();
    const mpz_class re = a.re * b.re + a.im * b.im;
    const mpz_class im = a.im * b.re - a.re * b.im;
    auto round_div = [&n](const mpz_class& x) {
        // floor((2x + n) / 2n)
        mpz_class q;
        mpz_class num = 2 * x + n;
        mpz_class den = 2 * n;
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        return q;
    };
    const GaussInt q{round_div(re), round_div(im)};
    const GaussInt qb = q * b;
    return {a.re - qb.re, a.im - qb.im};
}

inline GaussInt gauss_gcd(GaussInt a, GaussInt b)
{
    while (!b.is_zero()) {
        GaussInt r = gauss_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/** Rotates z into the first quadrant; returns k with z = i^k * result. */
inline int normalize_associate(GaussInt& z)
{
    int k = 0;
    while (!(sgn(z.re) > 0 && sgn(z.im) >= 0)) {
        // multiply by -i: (a + bi)(-i) = b - ai
        z = GaussInt{z.im, -z.re};
        ++k;
    }
    return k % 4;
}

inline mpz_class pollard_brent(const mpz_class& n)
{
    if (mpz_even_p(n.get_mpz_t())) {
        return 2;
    }
    for (unsigned long c = 1;; ++c) {
        mpz_class y = 2, x, g = 1, q = 1, ys;
        const unsigned long m = 128;
        unsigned long r = 1;
        auto f = [&](const mpz_class& v) {
            mpz_class w = v * v + c;
            mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
            return w;
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) {
                y = f(y);
            }
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    mpz_class d = abs(x - y);
                    q = q * d;
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                mpz_class d = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) {
            return g;
        }
    }
}

inline void factor_integer_into(mpz_class n, std::map<mpz_class, int>& out)
{
    if (n == 1) {
        return;
    }
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
        ++out[n];
        return;
    }
    const mpz_class d = pollard_brent(n);
    factor_integer_into(d, out);
    factor_integer_into(n / d, out);
}

}  // namespace detail

/** Prime factorization of a positive integer. */
inline std::map<mpz_class, int> factor_integer(mpz_class n)
{
    if (sgn(n) <= 0) {
        throw OutOfDomain("factor_integer: input must be positive");
    }
    std::map<mpz_class, int> out;
    for (unsigned long p = 2; p < 1000; ++p) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[mpz_class{p}];
            n /= p;
        }
        if (n == 1) {
            return out;
        }
    }
    detail::factor_integer_into(n, out);
    return out;
}

/** First-quadrant Gaussian prime of norm p, for a prime p = 1 mod 4. */
inline GaussInt split_prime(const mpz_class& p)
{
    // sqrt(-1) mod p from a quadratic non-residue
    mpz_class c = 2, r;
    const mpz_class e = (p - 1) / 4;
    const mpz_class pm1 = p - 1;
    for (;; ++c) {
        mpz_powm(r.get_mpz_t(), c.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        mpz_class sq = r * r;
        mpz_mod(sq.get_mpz_t(), sq.get_mpz_t(), p.get_mpz_t());
        if (sq == pm1) {
            break;
        }
    }
    GaussInt g = detail::gauss_gcd(GaussInt{p, 0}, GaussInt{r, 1});
    detail::normalize_associate(g);
    return g;
}

/** Factorization of a nonzero Gaussian integer. */
inline GaussianFactorization factor_gaussian_integer(GaussInt z)
{
    if (z.is_zero()) {
        throw OutOfDomain("factor_gaussian_integer: zero");
    }
    GaussianFactorization out;
    auto strip = [&z, &out](const GaussInt& prime) {
        int e = 0;
        GaussInt q;
        while (detail::gauss_divides(z, prime, q)) {
            z = q;
            ++e;
        }
        if (e > 0) {
            out.primes.emplace_back(prime, e);
        }
    };
    for (const auto& [p, e] : factor_integer(z.norm())) {
        (void)e;
        if (p == 2) {
            strip(GaussInt{1, 1});
        } else if (mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) {
            strip(GaussInt{p, 0});
        } else {
            const GaussInt pi = split_prime(p);
            GaussInt other{pi.re, -pi.im};
            detail::normalize_associate(other);
            strip(pi);
            strip(other);
        }
    }
    // what remains is a unit
    if (z == GaussInt{1, 0}) {
        out.unit = 0;
    } else if (z == GaussInt{0, 1}) {
        out.unit = 1;
    } else if (z == GaussInt{-1, 0}) {
        out.unit = 2;
    } else if (z == GaussInt{0, -1}) {
        out.unit = 3;
    } else {
        throw Error("factor_gaussian_integer: residual " + z.to_string() + " is not a unit");
    }
    std::sort(out.primes.begin(), out.primes.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

/**
 * @brief Factors a nonzero Gaussian rational q = num / den
 *
 * Returns the factorizations of a coprime numerator and denominator; the
 * denominator's unit is always 0 (the unit is carried by the numerator).
 * Only the exact backend is supported.
 */
inline std::pair<GaussianFactorization, GaussianFactorization> factor_gaussian(const Exact& q)
{
    if (q.is_zero()) {
        throw OutOfDomain("factor_gaussian: zero has no factorization");
    }
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), q.real().get_den().get_mpz_t(), q.imag().get_den().get_mpz_t());
    const mpq_class re = q.real() * l;
    const mpq_class im = q.imag() * l;
    const GaussianFactorization num = factor_gaussian_integer({re.get_num(), im.get_num()});
    const GaussianFactorization den = factor_gaussian_integer({l, 0});

    std::map<GaussInt, int> net;
    for (const auto& [p, e] : num.primes) {
        net[p] += e;
    }
    for (const auto& [p, e] : den.primes) {
        net[p] -= e;
    }
    std::pair<GaussianFactorization, GaussianFactorization> out;
    out.first.unit = ((num.unit - den.unit) % 4 + 4) % 4;
    for (const auto& [p, e] : net) {
        if (e > 0) {
            out.first.primes.emplace_back(p, e);
        } else if (e < 0) {
            out.second.primes.emplace_back(p, -e);
        }
    }
    return out;
}

template <Scalar S>
std::pair<GaussianFactorization, GaussianFactorization> factor_gaussian(const S&)
    requires(!is_exact_v<S>)
{
    throw Unsupported("factor_gaussian: float backend has no exact factorization");
}

inline Exact recompose(const GaussianFactorization& f)
{
    Exact r = 1;
    for (int k = 0; k < f.unit; ++k) {
        r *= Exact::i();
    }
    for (const auto& [p, e] : f.primes) {
        const Exact pe{mpq_class{p.re}, mpq_class{p.im}};
        for (int k = 0; k < e; ++k) {
            r *= pe;
        }
    }
    return r;
}

inline Exact recompose(const std::pair<GaussianFactorization, GaussianFactorization>& f)
{
    return recompose(f.first) / recompose(f.second);
}

/** Signed exponent vector over Gaussian primes; units are dropped. */
inline std::map<GaussInt, long> prime_exponents(const Exact& q)
{
    const auto [num, den] = factor_gaussian(q);
    std::map<GaussInt, long> out;
    for (const auto& [p, e] : num.primes) {
        out[p] += e;
    }
    for (const auto& [p, e] : den.primes) {
        out[p] -= e;
    }
    return out;
}

}  // namespace flagdual
