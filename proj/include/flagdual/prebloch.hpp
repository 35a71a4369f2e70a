#pragma once

#include <array>
#include <cmath>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "flagdual/dilog.hpp"
#include "flagdual/errors.hpp"
#include "flagdual/formal_sum.hpp"
#include "flagdual/gaussian_factor.hpp"
#include "flagdual/scalar.hpp"

namespace flagdual
{

template <Scalar S>
double dilog_D(const S& z)
    requires(is_exact_v<S>)
{
    return dilog_D(to_complex(z));
}

/** Linear extension of D to formal sums. */
template <Scalar S>
double eval_D(const FormalSum<S>& s)
{
    double total = 0.0;
    for (const auto& t : s.terms()) {
        total += static_cast<double>(t.coeff) * dilog_D(to_complex(t.gen));
    }
    return total;
}

namespace detail
{

template <Scalar S>
bool degenerate_generator(const S& z)
{
    return is_zero(z, 1.0) || is_zero(z - one<S>(), 1.0);
}

}  // namespace detail

/**
 * @brief Five-term relation
 *
 * [x] - [y] + [y/x] - [(1 - 1/x)/(1 - 1/y)] + [(1 - x)/(1 - y)].
 */
template <Scalar S>
FormalSum<S> five_term(const S& x, const S& y)
{
    if (detail::degenerate_generator(x) || detail::degenerate_generator(y)) {
        throw OutOfDomain("five_term: x and y must avoid 0 and 1");
    }
    if (same_value(x, y, kMergeTol)) {
        throw OutOfDomain("five_term: x and y must differ");
    }
    const S g3 = y / x;
    const S g4 = (one<S>() - one<S>() / x) / (one<S>() - one<S>() / y);
    const S g5 = (one<S>() - x) / (one<S>() - y);
    for (const S* g : {&g3, &g4, &g5}) {
        if (detail::degenerate_generator(*g)) {
            throw OutOfDomain("five_term: a generator degenerates to 0 or 1");
        }
    }
    FormalSum<S> s;
    s.add(1, x).add(-1, y).add(1, g3).add(-1, g4).add(1, g5);
    return s;
}

/**
 * Product identity
 * [ab] - [a] - [b] - [(1-a)/(1-1/b)] - [(1-b)/(1-1/a)], zero in P(C)
 * whenever ab != 1.
 */
template <Scalar S>
FormalSum<S> product_relation(const S& a, const S& b)
{
    const S ab = a * b;
    if (detail::degenerate_generator(a) || detail::degenerate_generator(b) ||
        detail::degenerate_generator(ab)) {
        throw OutOfDomain("product_relation: a, b, ab must avoid 0 and 1");
    }
    const S g1 = (one<S>() - a) / (one<S>() - one<S>() / b);
    const S g2 = (one<S>() - b) / (one<S>() - one<S>() / a);
    FormalSum<S> s;
    s.add(1, ab).add(-1, a).add(-1, b).add(-1, g1).add(-1, g2);
    return s;
}

/**
 * Orbit of z under z -> 1/z, z -> 1 - z with the sign each element
 * carries in P(C): z, 1/(1-z), 1-1/z are +; 1/z, 1-z, z/(z-1) are -.
 */
template <Scalar S>
std::array<std::pair<S, int>, 6> six_orbit(const S& z)
{
    const S o = one<S>();
    return {{{z, 1},
             {o / (o - z), 1},
             {o - o / z, 1},
             {o / z, -1},
             {o - z, -1},
             {z / (z - o), -1}}};
}

namespace detail
{

inline bool orbit_key_less(const Exact& a, const Exact& b) { return canonical_less(a, b); }

inline bool orbit_key_less(const Float& a, const Float& b)
{
    return std::make_tuple(std::abs(a), std::arg(a), a.real()) <
           std::make_tuple(std::abs(b), std::arg(b), b.real());
}

}  // namespace detail

/**
 * @brief Reduces a sum modulo [1/z] = -[z] and [1-z] = -[z]
 *
 * Each generator is replaced by a fixed representative of its six-orbit
 * with the sign tracked. Orbits containing an element together with its
 * negative (those of -1, 2, 1/2) are torsion and vanish.
 */
template <Scalar S>
FormalSum<S> canonicalize_six(const FormalSum<S>& s)
{
    std::vector<S> reps;
    FormalSum<S> out;
    for (const auto& t : s.terms()) {
        const auto orbit = six_orbit(t.gen);
        // reuse an existing representative when it is in this orbit
        const S* rep = nullptr;
        for (const auto& r : reps) {
            for (const auto& [w, sg] : orbit) {
                (void)sg;
                if (same_value(r, w, kMergeTol)) {
                    rep = &r;
                    break;
                }
            }
            if (rep != nullptr) {
                break;
            }
        }
        if (rep == nullptr) {
            std::size_t best = 0;
            for (std::size_t k = 1; k < orbit.size(); ++k) {
                if (detail::orbit_key_less(orbit[k].first, orbit[best].first)) {
                    best = k;
                }
            }
            reps.push_back(orbit[best].first);
            rep = &reps.back();
        }
        int plus = 0;
        int minus = 0;
        for (const auto& [w, sg] : orbit) {
            if (same_value(*rep, w, kMergeTol)) {
                (sg > 0 ? plus : minus) += 1;
            }
        }
        if (plus > 0 && minus > 0) {
            continue;
        }
        out.add(plus > 0 ? t.coeff : -t.coeff, *rep);
    }
    return out;
}

/**
 * @brief Element of (wedge^2 of Q(i)^*) tensor Q, units discarded
 *
 * Stored sparsely as coefficients of p ^ q for Gaussian primes p < q.
 */
class WedgeElement
{
public:
    void add(const GaussInt& p, const GaussInt& q, long c)
    {
        if (c == 0 || p == q) {
            return;
        }
        if (q < p) {
            add(q, p, -c);
            return;
        }
        auto key = std::make_pair(p, q);
        long& v = entries_[key];
        v += c;
        if (v == 0) {
            entries_.erase(key);
        }
    }

    bool is_zero() const noexcept { return entries_.empty(); }

    /** Coefficient of p ^ q (antisymmetric in p, q). */
    long coefficient(const GaussInt& p, const GaussInt& q) const
    {
        if (p == q) {
            return 0;
        }
        if (q < p) {
            return -coefficient(q, p);
        }
        auto it = entries_.find({p, q});
        return it == entries_.end() ? 0 : it->second;
    }

    /** Sorted primes occurring in a nonzero entry. */
    std::vector<GaussInt> basis() const
    {
        std::vector<GaussInt> b;
        for (const auto& [k, v] : entries_) {
            (void)v;
            b.push_back(k.first);
            b.push_back(k.second);
        }
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        return b;
    }

    /** Antisymmetric matrix over basis(). */
    std::vector<std::vector<long>> matrix() const
    {
        const auto b = basis();
        std::vector<std::vector<long>> m(b.size(), std::vector<long>(b.size(), 0));
        for (std::size_t i = 0; i < b.size(); ++i) {
            for (std::size_t j = 0; j < b.size(); ++j) {
                m[i][j] = coefficient(b[i], b[j]);
            }
        }
        return m;
    }

    const std::map<std::pair<GaussInt, GaussInt>, long>& entries() const noexcept
    {
        return entries_;
    }

private:
    std::map<std::pair<GaussInt, GaussInt>, long> entries_;
};

/**
 * delta(sum n[z]) = sum n z ^ (1 - z) modulo torsion. Vanishing is only
 * a necessary condition for membership in the Bloch group.
 */
inline WedgeElement delta_exact(const FormalSum<Exact>& s)
{
    WedgeElement w;
    for (const auto& t : s.terms()) {
        const auto u = prime_exponents(t.gen);
        const auto v = prime_exponents(Exact(1) - t.gen);
        for (const auto& [p, a] : u) {
            for (const auto& [q, b] : v) {
                w.add(p, q, t.coeff * a * b);
            }
        }
    }
    return w;
}

inline WedgeElement delta_exact(const FormalSum<Float>&)
{
    throw Unsupported("delta_exact requires exact generators");
}

}  // namespace flagdual
