#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "flagdual/complex.hpp"
#include "flagdual/errors.hpp"
#include "flagdual/tetra.hpp"

namespace flagdual
{

/**
 * @brief Consistency equations as monomials in the 4N chart coordinates
 *
 * Unknown 4(t-1) + (i-1) is z_{i p(i)} of tetrahedron t, p the chart
 * partner. Every edge coordinate is x, 1/(1-x) or 1-1/x of one unknown,
 * so every equation is  sign * prod g(x_v)^e - 1.
 */
namespace solver
{

enum class Kind { Id, InvOneMinus, OneMinusInv };

struct Factor {
    int var;
    Kind kind;
    int exponent;
};

struct Monomial {
    double sign = 1.0;
    std::vector<Factor> factors;
};

using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

inline Factor edge_factor(int tet, int i, int j, int exponent)
{
    const int p = minimal_partner(i);
    const auto [k, l] = complement_even(i, p);
    const int var = 4 * (tet - 1) + (i - 1);
    if (j == p) {
        return {var, Kind::Id, exponent};
    }
    if (j == k) {
        return {var, Kind::InvOneMinus, exponent};
    }
    if (j != l) {
        throw OutOfDomain("edge_factor: bad vertex pair");
    }
    return {var, Kind::OneMinusInv, exponent};
}

/** Triple ratio of flags (i,j,k) raised to exponent: (-z_il z_jl z_kl)^(+-1). */
inline void append_face(Monomial& m, int tet, int i, int j, int k, int exponent)
{
    const int l = opposite_vertex(i, j, k);
    const int e = exponent * face_orientation(i, j, k);
    m.sign = -m.sign;
    const auto f = oriented_face(l);
    for (int v : f) {
        m.factors.push_back(edge_factor(tet, v, l, e));
    }
}

/** Face equations first (one per pairing), then each directed edge orbit. */
inline std::vector<Monomial> equations(const IdealTriangulation& k)
{
    std::vector<Monomial> eqs;
    for (const auto& p : k.pairings()) {
        Monomial m;
        append_face(m, p.tet_a, p.face_a[0], p.face_a[1], p.face_a[2], 1);
        append_face(m, p.tet_b, p.face_b[0], p.face_b[1], p.face_b[2], -1);
        eqs.push_back(std::move(m));
    }
    for (const auto& c : k.edge_classes()) {
        for (const auto* orbit : {&c.forward, &c.backward}) {
            if (orbit->empty()) {
                continue;
            }
            Monomial m;
            for (const auto& e : *orbit) {
                m.factors.push_back(edge_factor(e.tet, e.i, e.j, 1));
            }
            eqs.push_back(std::move(m));
        }
    }
    return eqs;
}

inline std::complex<double> g(Kind kind, std::complex<double> x)
{
    switch (kind) {
        case Kind::Id: return x;
        case Kind::InvOneMinus: return 1.0 / (1.0 - x);
        case Kind::OneMinusInv: return 1.0 - 1.0 / x;
    }
    return x;
}

/** g'/g. */
inline std::complex<double> dlog_g(Kind kind, std::complex<double> x)
{
    switch (kind) {
        case Kind::Id: return 1.0 / x;
        case Kind::InvOneMinus: return 1.0 / (1.0 - x);
        case Kind::OneMinusInv: return 1.0 / (x * (x - 1.0));
    }
    return 0.0;
}

inline std::complex<double> monomial_value(const Monomial& m, const Vector& x)
{
    std::complex<double> p = m.sign;
    for (const auto& f : m.factors) {
        p *= std::pow(g(f.kind, x[f.var]), f.exponent);
    }
    return p;
}

inline Vector residuals(const std::vector<Monomial>& eqs, const Vector& x)
{
    Vector r(static_cast<Eigen::Index>(eqs.size()));
    for (std::size_t n = 0; n < eqs.size(); ++n) {
        r[static_cast<Eigen::Index>(n)] = monomial_value(eqs[n], x) - 1.0;
    }
    return r;
}

/** Analytic Jacobian: d(P - 1)/dx_v = P * sum e g'/g over factors in x_v. */
inline Matrix jacobian(const std::vector<Monomial>& eqs, const Vector& x)
{
    Matrix j = Matrix::Zero(static_cast<Eigen::Index>(eqs.size()), x.size());
    for (std::size_t n = 0; n < eqs.size(); ++n) {
        const std::complex<double> p = monomial_value(eqs[n], x);
        for (const auto& f : eqs[n].factors) {
            j(static_cast<Eigen::Index>(n), f.var) +=
                p * static_cast<double>(f.exponent) * dlog_g(f.kind, x[f.var]);
        }
    }
    return j;
}

inline Vector pack(const Decoration<Float>& d)
{
    Vector x(static_cast<Eigen::Index>(4 * d.size()));
    for (std::size_t t = 0; t < d.size(); ++t) {
        const auto m = d[t].minimal();
        const auto base = static_cast<Eigen::Index>(4 * t);
        x[base] = m.z12;
        x[base + 1] = m.z21;
        x[base + 2] = m.z34;
        x[base + 3] = m.z43;
    }
    return x;
}

inline Decoration<Float> unpack(const Vector& x)
{
    Decoration<Float> d;
    for (Eigen::Index b = 0; b + 3 < x.size(); b += 4) {
        d.push_back(complete_from_minimal(MinimalCoords<Float>::make(x[b], x[b + 1], x[b + 2], x[b + 3])));
    }
    return d;
}

}  // namespace solver

struct SolveOptions {
    double tolerance = 1e-13;    // max-norm of the residual vector
    int max_steps = 100;
    int max_halvings = 40;
    double armijo = 1e-4;
    double exclusion = 1e-8;     // forbidden radius around 0 and 1
};

template <Scalar S>
struct SolveResult {
    DecoratedComplex<S> complex;
    int steps = 0;
    double residual = 0.0;
};

/**
 * @brief Damped Newton iteration on the face and edge equations
 *
 * Steps are minimum-norm least-squares solutions of J dx = -r (the
 * solution set is usually positive dimensional), backtracked by halving
 * until the Armijo condition on |r|^2 holds. Trial points within
 * `exclusion` of 0 or 1 are rejected like failed trials.
 */
inline SolveResult<Float> solve_consistency(const DecoratedComplex<Float>& dc,
                                            const SolveOptions& opt = {})
{
    using namespace solver;
    const auto eqs = equations(dc.triangulation);
    Vector x = pack(dc.decoration);
    auto in_domain = [&](const Vector& v) {
        for (Eigen::Index n = 0; n < v.size(); ++n) {
            if (!std::isfinite(v[n].real()) || !std::isfinite(v[n].imag()) ||
                std::abs(v[n]) < opt.exclusion || std::abs(v[n] - 1.0) < opt.exclusion) {
                return false;
            }
        }
        return true;
    };
    if (!in_domain(x)) {
        throw LeftDomain("initial guess lies within the exclusion radius of 0 or 1");
    }
    if (eqs.empty()) {
        return {dc, 0, 0.0};
    }
    Vector r = residuals(eqs, x);
    double f = r.squaredNorm();
    int step = 0;
    while (r.cwiseAbs().maxCoeff() > opt.tolerance) {
        if (step == opt.max_steps) {
            throw SolverDiverged("no convergence after " + std::to_string(step) + " steps",
                                 r.cwiseAbs().maxCoeff());
        }
        const Matrix j = jacobian(eqs, x);
        const Vector dx = Eigen::CompleteOrthogonalDecomposition<Matrix>(j).solve(-r);
        double t = 1.0;
        bool accepted = false;
        bool domain_hit = false;
        for (int h = 0; h <= opt.max_halvings; ++h, t *= 0.5) {
            const Vector trial = x + t * dx;
            if (!in_domain(trial)) {
                domain_hit = true;
                continue;
            }
            const Vector rt = residuals(eqs, trial);
            const double ft = rt.squaredNorm();
            if (std::isfinite(ft) && ft <= (1.0 - 2.0 * opt.armijo * t) * f) {
                x = trial;
                r = rt;
                f = ft;
                accepted = true;
                break;
            }
        }
        ++step;
        if (!accepted) {
            if (domain_hit) {
                throw LeftDomain("step " + std::to_string(step) +
                                 ": every damped trial point approaches 0 or 1");
            }
            throw SolverDiverged("step " + std::to_string(step) + ": line search failed",
                                 r.cwiseAbs().maxCoeff());
        }
    }
    return {DecoratedComplex<Float>{dc.triangulation, unpack(x)}, step, r.cwiseAbs().maxCoeff()};
}

/**
 * Exact decorations are not iterated: a consistent one is returned
 * unchanged after zero steps, anything else needs the float backend.
 */
inline SolveResult<Exact> solve_consistency(const DecoratedComplex<Exact>& dc,
                                            const SolveOptions& = {})
{
    if (check_faces(dc).ok() && check_edges(dc).ok()) {
        return {dc, 0, 0.0};
    }
    throw Unsupported("solve: inconsistent exact decoration; use the float backend");
}

}  // namespace flagdual
