#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

namespace flagdual
{

namespace detail
{

/** B_{2k} / (2k+1)! for k = 1..; B_1 handled separately. */
inline const std::array<double, 22>& bernoulli_over_factorial()
{
    static const std::array<double, 22> table = [] {
        // Bernoulli numbers B_2, B_4, ..., B_44
        const std::array<double, 22> b2k = {
            1.0 / 6,
            -1.0 / 30,
            1.0 / 42,
            -1.0 / 30,
            5.0 / 66,
            -691.0 / 2730,
            7.0 / 6,
            -3617.0 / 510,
            43867.0 / 798,
            -174611.0 / 330,
            854513.0 / 138,
            -236364091.0 / 2730,
            8553103.0 / 6,
            -23749461029.0 / 870,
            8615841276005.0 / 14322,
            -7709321041217.0 / 510,
            2577687858367.0 / 6,
            -26315271553053477373.0 / 1919190,
            2929993913841559.0 / 6,
            -261082718496449122051.0 / 13530,
            1520097643918070802691.0 / 1806,
            -27833269579301024235023.0 / 690,
        };
        std::array<double, 22> out{};
        double fact = 1.0;  // (2k+1)!
        int n = 1;
        for (std::size_t k = 0; k < b2k.size(); ++k) {
            while (n < static_cast<int>(2 * k + 3)) {
                ++n;
                fact *= n;
            }
            out[k] = b2k[k] / fact;
        }
        return out;
    }();
    return table;
}

/**
 * Li2(z) for |z| <= 1, Re z <= 1/2, via the Bernoulli series in
 * u = -log(1 - z):  Li2 = u - u^2/4 + sum_k B_2k u^(2k+1) / (2k+1)!.
 */
inline std::complex<double> li2_reduced(std::complex<double> z)
{
    const std::complex<double> u = -std::log(1.0 - z);
    const std::complex<double> u2 = u * u;
    std::complex<double> sum = u - u2 / 4.0;
    std::complex<double> p = u;
    for (double c : bernoulli_over_factorial()) {
        p *= u2;
        const std::complex<double> term = c * p;
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) {
            break;
        }
    }
    return sum;
}

}  // namespace detail

/**
 * @brief Bloch-Wigner dilogarithm D(z) = Im Li2(z) + arg(1 - z) log|z|
 *
 * The argument is first moved into |w| <= 1, Re w <= 1/2 through the
 * six-element orbit of z -> 1/z, z -> 1 - z, under which D changes sign
 * with each generator. D vanishes at 0, 1 and on the real line.
 */
inline double dilog_D(std::complex<double> z)
{
    if (z.imag() == 0.0 || !std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        return 0.0;
    }
    double sign = 1.0;
    if (std::norm(z) > 1.0) {
        z = 1.0 / z;
        sign = -sign;
    }
    if (z.real() > 0.5) {
        z = 1.0 - z;
        sign = -sign;
        if (std::norm(z) > 1.0) {
            z = 1.0 / z;
            sign = -sign;
        }
    }
    const double value = detail::li2_reduced(z).imag() + std::arg(1.0 - z) * std::log(std::abs(z));
    return sign * value;
}

}  // namespace flagdual
