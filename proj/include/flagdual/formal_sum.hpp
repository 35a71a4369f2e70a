#pragma once

#include <string>
#include <utility>
#include <vector>

#include "flagdual/errors.hpp"
#include "flagdual/scalar.hpp"

namespace flagdual
{

/** @brief One term n[z] of a formal sum */
template <Scalar S>
struct Term {
    long coeff;
    S gen;
};

/**
 * @brief Element of Z[C \ {0,1}]
 *
 * Like generators are combined on insertion (exact equality, or relative
 * distance below kMergeTol for floats) and zero coefficients are dropped.
 * Terms keep first-insertion order, which fixes the summation order of
 * every evaluation.
 */
template <Scalar S>
class FormalSum
{
public:
    FormalSum() = default;

    FormalSum(std::initializer_list<std::pair<long, S>> terms)
    {
        for (const auto& [c, z] : terms) {
            add(c, z);
        }
    }

    /** Adds coeff * [gen]; OutOfDomain if gen is 0 or 1. */
    FormalSum& add(long coeff, const S& gen)
    {
        if (same_value(gen, zero<S>(), 0.0) || same_value(gen, one<S>(), 0.0)) {
            throw OutOfDomain("formal sum generator must avoid 0 and 1");
        }
        if (coeff == 0) {
            return *this;
        }
        for (auto it = terms_.begin(); it != terms_.end(); ++it) {
            if (same_value(it->gen, gen, kMergeTol)) {
                it->coeff += coeff;
                if (it->coeff == 0) {
                    terms_.erase(it);
                }
                return *this;
            }
        }
        terms_.push_back({coeff, gen});
        return *this;
    }

    FormalSum& operator+=(const FormalSum& o)
    {
        for (const auto& t : o.terms_) {
            add(t.coeff, t.gen);
        }
        return *this;
    }
    FormalSum& operator-=(const FormalSum& o)
    {
        for (const auto& t : o.terms_) {
            add(-t.coeff, t.gen);
        }
        return *this;
    }
    friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
    friend FormalSum operator*(long k, const FormalSum& a)
    {
        FormalSum r;
        for (const auto& t : a.terms_) {
            r.add(k * t.coeff, t.gen);
        }
        return r;
    }

    const std::vector<Term<S>>& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /** Coefficient of gen (0 if absent). */
    long coefficient(const S& gen) const
    {
        for (const auto& t : terms_) {
            if (same_value(t.gen, gen, kMergeTol)) {
                return t.coeff;
            }
        }
        return 0;
    }

    /** Same terms regardless of order. */
    friend bool operator==(const FormalSum& a, const FormalSum& b)
    {
        return (a - b).empty();
    }

private:
    std::vector<Term<S>> terms_;
};

template <Scalar S>
FormalSum<S> conjugate_sum(const FormalSum<S>& s)
{
    FormalSum<S> r;
    for (const auto& t : s.terms()) {
        r.add(t.coeff, conjugate(t.gen));
    }
    return r;
}

}  // namespace flagdual
