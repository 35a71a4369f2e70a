#pragma once

#include <array>
#include <string>

#include "flagdual/errors.hpp"
#include "flagdual/flags.hpp"
#include "flagdual/formal_sum.hpp"
#include "flagdual/scalar.hpp"
#include "flagdual/tetra.hpp"

namespace flagdual
{

namespace detail
{

template <Scalar S>
void require_very_generic(const TetraCoords<S>& c, const std::string& where)
{
    for (int l = 1; l <= 4; ++l) {
        if (is_zero(c.face_opposite(l) + one<S>(), 1.0)) {
            const auto f = oriented_face(l);
            throw NotVeryGeneric(where + ": face " + std::to_string(f[0]) + std::to_string(f[1]) +
                                 std::to_string(f[2]) + " has coordinate -1");
        }
    }
}

}  // namespace detail

/**
 * @brief Coordinates of the dual tetrahedron, closed form
 *
 * z*_ijk = 1/z_ijk and, with (i,j,k,l) even,
 * z*_ij = z_ji (1 + z_jil) / (1 + 1/z_ijk).
 * The four chart values come from the formula and the rest are completed
 * from them; the remaining eight formula values must agree.
 *
 *   z*_ij uses faces     z*_ij uses faces     z*_ij uses faces
 *   12: (214) (123)      23: (321) (234)      34: (432) (341)
 *   13: (312) (134)      24: (423) (241)      41: (143) (412)
 *   14: (413) (142)      31: (134) (312)      42: (241) (423)
 *   21: (123) (214)      32: (234) (321)      43: (341) (432)
 */
template <Scalar S>
TetraCoords<S> dual_coords_closed(const TetraCoords<S>& c)
{
    detail::require_very_generic(c, "dual_coords_closed");
    const S o = one<S>();
    std::array<std::array<S, 5>, 5> formula{};
    for (int i = 1; i <= 4; ++i) {
        for (int j = 1; j <= 4; ++j) {
            if (i == j) {
                continue;
            }
            const auto [k, l] = complement_even(i, j);
            formula[i][j] = c.edge(j, i) * (o + c.face(j, i, l)) / (o + o / c.face(i, j, k));
        }
    }
    const TetraCoords<S> dual = complete_from_minimal(
        MinimalCoords<S>::make(formula[1][2], formula[2][1], formula[3][4], formula[4][3]));
    for (int i = 1; i <= 4; ++i) {
        for (int j = 1; j <= 4; ++j) {
            if (i != j && !same_value(dual.edge(i, j), formula[i][j], kRelationTol)) {
                throw InconsistentCoords("dual_coords_closed: formula and completion disagree at z*" +
                                         std::to_string(i) + std::to_string(j));
            }
        }
        if (!same_value(dual.face_opposite(i) * c.face_opposite(i), o, kRelationTol)) {
            throw InconsistentCoords("dual_coords_closed: face duality fails");
        }
    }
    return dual;
}

/**
 * @brief Coordinates of the dual tetrahedron, measured geometrically
 *
 * Swaps point and line of every flag, moves the dual points to the
 * standard frame and measures. Independent of the closed form.
 */
template <Scalar S>
TetraCoords<S> dual_coords_matrix(const FlagTuple<S>& t)
{
    if (!is_very_generic(t)) {
        throw NotVeryGeneric("dual_coords_matrix: configuration is not very generic");
    }
    const FlagTuple<S> dual = dual_tuple(t);
    const Mat3<S> a = normalize_to_standard(dual);
    return edge_coords(apply(a, dual));
}

template <Scalar S>
TetraCoords<S> conjugate_coords(const TetraCoords<S>& c)
{
    typename TetraCoords<S>::EdgeTable e{};
    std::array<S, 5> f{};
    for (int i = 1; i <= 4; ++i) {
        f[i] = conjugate(c.face_opposite(i));
        for (int j = 1; j <= 4; ++j) {
            if (i != j) {
                e[i][j] = conjugate(c.edge(i, j));
            }
        }
    }
    return TetraCoords<S>::make(e, f);
}

/** @brief Symmetric coordinates w_ij = z_ij z_ji */
template <Scalar S>
class WCoords
{
public:
    WCoords() = default;

    const S& at(int i, int j) const { return values_[index(i, j)]; }
    S& at(int i, int j) { return values_[index(i, j)]; }

    friend bool operator==(const WCoords&, const WCoords&) = default;

private:
    static std::size_t index(int i, int j)
    {
        if (i > j) {
            std::swap(i, j);
        }
        if (i < 1 || j > 4 || i == j) {
            throw OutOfDomain("w-coordinate: bad vertex pair");
        }
        // 12 13 14 23 24 34
        static constexpr int offs[4] = {0, 0, 3, 5};
        return static_cast<std::size_t>(offs[i] + (j - i - 1));
    }

    std::array<S, 6> values_{};
};

template <Scalar S>
WCoords<S> to_w(const TetraCoords<S>& c)
{
    WCoords<S> w;
    for (int i = 1; i <= 4; ++i) {
        for (int j = i + 1; j <= 4; ++j) {
            w.at(i, j) = c.edge(i, j) * c.edge(j, i);
        }
    }
    return w;
}

/** Duality in w-coordinates: w*_ij = w_kl. */
template <Scalar S>
WCoords<S> w_dual(const WCoords<S>& w)
{
    WCoords<S> out;
    for (int i = 1; i <= 4; ++i) {
        for (int j = i + 1; j <= 4; ++j) {
            const auto [k, l] = complement_even(i, j);
            out.at(i, j) = w.at(k, l);
        }
    }
    return out;
}

/** Inverse of to_w on its birational domain; WSingular outside it. */
template <Scalar S>
MinimalCoords<S> from_w(const WCoords<S>& w)
{
    const S o = one<S>();
    const S d1 = w.at(1, 2) * w.at(1, 3) * w.at(2, 3) + o;
    const S d2 = w.at(1, 3) * w.at(2, 3) - w.at(2, 3) + o;
    const S d3 = w.at(1, 3) * w.at(1, 4) * w.at(3, 4) + o;
    const S d4 = w.at(1, 3) * w.at(1, 4) - w.at(1, 4) + o;
    for (const S* d : {&d1, &d2, &d3, &d4}) {
        if (is_zero(*d, 1.0)) {
            throw WSingular("from_w: vanishing denominator");
        }
    }
    MinimalCoords<S> m{w.at(1, 2) * d2 / d1, d1 / d2, w.at(3, 4) * d4 / d3, d3 / d4};
    try {
        m.validate();
    } catch (const OutOfDomain&) {
        throw WSingular("from_w: image leaves C \\ {0,1}");
    }
    return m;
}

/** [-z123] + [-z243] + [-z134] + [-z142]. */
template <Scalar S>
FormalSum<S> beta_defect(const TetraCoords<S>& c)
{
    detail::require_very_generic(c, "beta_defect");
    FormalSum<S> s;
    for (int l : {4, 1, 2, 3}) {
        s.add(1, -c.face_opposite(l));
    }
    return s;
}

}  // namespace flagdual
