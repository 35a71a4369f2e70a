#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "flagdual/duality.hpp"
#include "flagdual/errors.hpp"
#include "flagdual/formal_sum.hpp"
#include "flagdual/prebloch.hpp"
#include "flagdual/tetra.hpp"
#include "flagdual/triangulation.hpp"

namespace flagdual
{

/** @brief Per-tetrahedron coordinates, indexed from tetrahedron 1 */
template <Scalar S>
using Decoration = std::vector<TetraCoords<S>>;

/**
 * @brief Triangulation together with a decoration
 *
 * Consistency is not enforced on construction; it is what check_faces
 * and check_edges report.
 */
template <Scalar S>
struct DecoratedComplex {
    IdealTriangulation triangulation;
    Decoration<S> decoration;

    static DecoratedComplex make(IdealTriangulation k, Decoration<S> d)
    {
        if (static_cast<int>(d.size()) != k.size()) {
            throw MalformedPairing("decoration has " + std::to_string(d.size()) +
                                   " tetrahedra, triangulation has " + std::to_string(k.size()));
        }
        return {std::move(k), std::move(d)};
    }

    const TetraCoords<S>& tet(int t) const { return decoration.at(static_cast<std::size_t>(t - 1)); }

    bool has_boundary() const { return triangulation.has_boundary(); }
};

namespace detail
{

template <Scalar S>
double residual_from_one(const S& product)
{
    return magnitude(product - one<S>());
}

template <Scalar S>
bool passes(const S& product, double tol)
{
    if constexpr (is_exact_v<S>) {
        (void)tol;
        return product == one<S>();
    } else {
        return residual_from_one(product) <= tol;
    }
}

}  // namespace detail

/** @brief One face equation */
template <Scalar S>
struct FaceCheck {
    std::size_t pairing;  // 0-based index into the pairing list
    S product;
    double residual;
    bool ok;
};

template <Scalar S>
struct FaceReport {
    std::vector<FaceCheck<S>> items;
    double max_residual = 0.0;
    std::size_t failures = 0;

    bool ok() const noexcept { return failures == 0; }
};

/** @brief Both directed edge equations of one edge class */
template <Scalar S>
struct EdgeCheck {
    std::size_t edge_class;  // 0-based
    S forward;
    S backward;
    double residual;
    bool ok;
};

template <Scalar S>
struct EdgeReport {
    std::vector<EdgeCheck<S>> items;
    double max_residual = 0.0;
    std::size_t failures = 0;

    bool ok() const noexcept { return failures == 0; }
};

/**
 * Face equations: for each pairing the triple ratio of face_a in tet_a
 * times that of face_b (read in the opposite order) in tet_b equals 1.
 * Exact decorations pass only on exact equality; floats within tol.
 */
template <Scalar S>
FaceReport<S> check_faces(const DecoratedComplex<S>& dc, double tol = kRelationTol)
{
    FaceReport<S> r;
    const auto& ps = dc.triangulation.pairings();
    for (std::size_t n = 0; n < ps.size(); ++n) {
        const auto& p = ps[n];
        const S za = dc.tet(p.tet_a).face(p.face_a[0], p.face_a[1], p.face_a[2]);
        const S zb = dc.tet(p.tet_b).face(p.face_b[0], p.face_b[2], p.face_b[1]);
        const S prod = za * zb;
        FaceCheck<S> c{n, prod, detail::residual_from_one(prod), detail::passes(prod, tol)};
        r.max_residual = std::max(r.max_residual, c.residual);
        r.failures += c.ok ? 0 : 1;
        r.items.push_back(std::move(c));
    }
    return r;
}

template <Scalar S>
S edge_product(const DecoratedComplex<S>& dc, const std::vector<DirectedEdge>& orbit)
{
    S p = one<S>();
    for (const auto& e : orbit) {
        p = p * dc.tet(e.tet).edge(e.i, e.j);
    }
    return p;
}

/** Edge equations: both directed products around every edge class equal 1. */
template <Scalar S>
EdgeReport<S> check_edges(const DecoratedComplex<S>& dc, double tol = kRelationTol)
{
    EdgeReport<S> r;
    const auto classes = dc.triangulation.edge_classes();
    for (std::size_t n = 0; n < classes.size(); ++n) {
        const S fwd = edge_product(dc, classes[n].forward);
        const S bwd = classes[n].backward.empty() ? fwd : edge_product(dc, classes[n].backward);
        EdgeCheck<S> c{n, fwd, bwd,
                       std::max(detail::residual_from_one(fwd), detail::residual_from_one(bwd)),
                       detail::passes(fwd, tol) && detail::passes(bwd, tol)};
        r.max_residual = std::max(r.max_residual, c.residual);
        r.failures += c.ok ? 0 : 1;
        r.items.push_back(std::move(c));
    }
    return r;
}

/** Sum of beta_tetra over all tetrahedra. */
template <Scalar S>
FormalSum<S> beta_complex(const DecoratedComplex<S>& dc)
{
    FormalSum<S> s;
    for (const auto& c : dc.decoration) {
        s += beta_tetra(c);
    }
    return s;
}

/** D(beta(K, z)) / 4. */
template <Scalar S>
double volume(const DecoratedComplex<S>& dc)
{
    return eval_D(beta_complex(dc)) / 4.0;
}

/** Dual decoration; NotVeryGeneric names the tetrahedron. */
template <Scalar S>
DecoratedComplex<S> dualize(const DecoratedComplex<S>& dc)
{
    Decoration<S> d;
    d.reserve(dc.decoration.size());
    for (std::size_t t = 0; t < dc.decoration.size(); ++t) {
        try {
            d.push_back(dual_coords_closed(dc.decoration[t]));
        } catch (const NotVeryGeneric& e) {
            throw NotVeryGeneric("tetrahedron " + std::to_string(t + 1) + ": " + e.what());
        }
    }
    return {dc.triangulation, std::move(d)};
}

template <Scalar S>
DecoratedComplex<S> conjugate(const DecoratedComplex<S>& dc)
{
    Decoration<S> d;
    d.reserve(dc.decoration.size());
    for (const auto& c : dc.decoration) {
        d.push_back(conjugate_coords(c));
    }
    return {dc.triangulation, std::move(d)};
}

/**
 * Sum of [-z] over the four oriented faces of every tetrahedron, not
 * reduced. It equals beta(K,z) - beta(K,z*); after canonicalize_six the
 * faces of an orientation-compatible pairing cancel ([-z] + [-1/z]),
 * leaving the boundary faces.
 */
template <Scalar S>
FormalSum<S> duality_defect(const DecoratedComplex<S>& dc)
{
    FormalSum<S> s;
    for (std::size_t t = 0; t < dc.decoration.size(); ++t) {
        try {
            s += beta_defect(dc.decoration[t]);
        } catch (const NotVeryGeneric& e) {
            throw NotVeryGeneric("tetrahedron " + std::to_string(t + 1) + ": " + e.what());
        }
    }
    return s;
}

}  // namespace flagdual
