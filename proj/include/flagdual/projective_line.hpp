#pragma once

#include "flagdual/errors.hpp"
#include "flagdual/scalar.hpp"

namespace flagdual
{

/** @brief Point [a:b] of a projective line */
template <Scalar S>
struct ProjPoint1 {
    S a;
    S b;

    static ProjPoint1 affine(S x) { return {std::move(x), one<S>()}; }
    static ProjPoint1 infinity() { return {one<S>(), zero<S>()}; }

    double scale() const { return std::hypot(magnitude(a), magnitude(b)); }
};

template <Scalar S>
S bracket(const ProjPoint1<S>& p, const ProjPoint1<S>& q)
{
    return p.a * q.b - q.a * p.b;
}

template <Scalar S>
bool projectively_equal(const ProjPoint1<S>& p, const ProjPoint1<S>& q)
{
    return is_zero(bracket(p, q), p.scale() * q.scale());
}

/**
 * @brief Cross-ratio X(x1,x2,x3,x4)
 *
 * Value at x4 of the Moebius map sending x1 -> inf, x2 -> 0, x3 -> 1,
 * computed homogeneously as [13][24] / ([14][23]).
 */
template <Scalar S>
S cross_ratio(const ProjPoint1<S>& x1, const ProjPoint1<S>& x2,
              const ProjPoint1<S>& x3, const ProjPoint1<S>& x4)
{
    const ProjPoint1<S>* pts[4] = {&x1, &x2, &x3, &x4};
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (projectively_equal(*pts[i], *pts[j])) {
                throw DegenerateInput("cross_ratio: points " + std::to_string(i + 1) +
                                      " and " + std::to_string(j + 1) + " coincide");
            }
        }
    }
    return (bracket(x1, x3) * bracket(x2, x4)) / (bracket(x1, x4) * bracket(x2, x3));
}

}  // namespace flagdual
