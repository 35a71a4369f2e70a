#pragma once

#include <array>
#include <string>
#include <utility>

#include "flagdual/errors.hpp"
#include "flagdual/flags.hpp"
#include "flagdual/formal_sum.hpp"
#include "flagdual/prebloch.hpp"
#include "flagdual/scalar.hpp"

namespace flagdual
{

/**
 * Vertex labels are 1..4 throughout.
 *
 * For an edge (i, j) the pair (k, l) of remaining vertices is ordered so
 * that (1,2,3,4) -> (i,j,k,l) is an even permutation:
 *
 *   ij: kl    ij: kl    ij: kl    ij: kl
 *   12: 34    21: 43    31: 24    41: 32
 *   13: 42    23: 14    32: 41    42: 13
 *   14: 23    24: 31    34: 12    43: 21
 */
inline std::pair<int, int> complement_even(int i, int j)
{
    static constexpr int table[5][5][2] = {
        {},
        {{0, 0}, {0, 0}, {3, 4}, {4, 2}, {2, 3}},
        {{0, 0}, {4, 3}, {0, 0}, {1, 4}, {3, 1}},
        {{0, 0}, {2, 4}, {4, 1}, {0, 0}, {1, 2}},
        {{0, 0}, {3, 2}, {1, 3}, {2, 1}, {0, 0}},
    };
    if (i < 1 || i > 4 || j < 1 || j > 4 || i == j) {
        throw OutOfDomain("complement_even: bad edge " + std::to_string(i) + std::to_string(j));
    }
    return {table[i][j][0], table[i][j][1]};
}

/**
 * Face opposite vertex l, oriented as in the coordinate system:
 * 123 (l = 4), 243 (l = 1), 134 (l = 2), 142 (l = 3).
 */
inline std::array<int, 3> oriented_face(int l)
{
    switch (l) {
        case 1: return {2, 4, 3};
        case 2: return {1, 3, 4};
        case 3: return {1, 4, 2};
        case 4: return {1, 2, 3};
        default: throw OutOfDomain("oriented_face: vertex must be 1..4");
    }
}

/** Vertex missing from a face triple. */
inline int opposite_vertex(int i, int j, int k) { return 10 - i - j - k; }

/** +1 if (i,j,k) is an even rotation of the oriented face, -1 otherwise. */
inline int face_orientation(int i, int j, int k)
{
    const int l = opposite_vertex(i, j, k);
    const auto f = oriented_face(l);
    for (int r = 0; r < 3; ++r) {
        if (f[r] == i && f[(r + 1) % 3] == j && f[(r + 2) % 3] == k) {
            return 1;
        }
    }
    return -1;
}

/** The vertex j for which z_ij is a minimal coordinate: 1->2, 2->1, 3->4, 4->3. */
inline int minimal_partner(int i) { return ((i - 1) ^ 1) + 1; }

/** @brief Triple ratio of three flags */
template <Scalar S>
struct TripleRatio {
    S value;
};

/** f1(x2) f2(x3) f3(x1) / (f1(x3) f2(x1) f3(x2)). */
template <Scalar S>
TripleRatio<S> triple_ratio(const Flag<S>& f1, const Flag<S>& f2, const Flag<S>& f3)
{
    const Flag<S>* fl[3] = {&f1, &f2, &f3};
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            if (a != b && detail::pairing_vanishes(*fl[a], *fl[b])) {
                throw DegenerateInput("triple_ratio: f" + std::to_string(a + 1) + "(x" +
                                      std::to_string(b + 1) + ") vanishes");
            }
        }
    }
    const S num = pairing(f1.line, f2.point) * pairing(f2.line, f3.point) * pairing(f3.line, f1.point);
    const S den = pairing(f1.line, f3.point) * pairing(f2.line, f1.point) * pairing(f3.line, f2.point);
    return {num / den};
}

/** @brief The chart (z12, z21, z34, z43) */
template <Scalar S>
struct MinimalCoords {
    S z12;
    S z21;
    S z34;
    S z43;

    static MinimalCoords make(S z12, S z21, S z34, S z43)
    {
        MinimalCoords m{std::move(z12), std::move(z21), std::move(z34), std::move(z43)};
        m.validate();
        return m;
    }

    void validate() const
    {
        for (const S* z : {&z12, &z21, &z34, &z43}) {
            if (detail::degenerate_generator(*z)) {
                throw OutOfDomain("minimal coordinates must avoid 0 and 1");
            }
        }
    }

    /** Coordinate of vertex i's minimal edge. */
    const S& at_vertex(int i) const
    {
        switch (i) {
            case 1: return z12;
            case 2: return z21;
            case 3: return z34;
            case 4: return z43;
            default: throw OutOfDomain("vertex must be 1..4");
        }
    }

    friend bool operator==(const MinimalCoords&, const MinimalCoords&) = default;
};

/**
 * @brief All 12 edge and 4 face coordinates of a generic tetrahedron of flags
 *
 * Stored redundantly; construction checks the vertex relations
 * z_ik = 1/(1 - z_ij), z_il = 1 - 1/z_ij and the face relations
 * z_ijk = -z_il z_jl z_kl (exactly, or to kRelationTol for floats).
 */
template <Scalar S>
class TetraCoords
{
public:
    using EdgeTable = std::array<std::array<S, 5>, 5>;

    /** edges[i][j] for 1 <= i != j <= 4; faces[l] is the face opposite l. */
    static TetraCoords make(const EdgeTable& edges, const std::array<S, 5>& faces)
    {
        TetraCoords c;
        c.edges_ = edges;
        c.faces_ = faces;
        c.validate();
        return c;
    }

    const S& edge(int i, int j) const
    {
        check_edge(i, j);
        return edges_[i][j];
    }

    /** Triple ratio of flags (i, j, k) in that order. */
    S face(int i, int j, int k) const
    {
        const int l = opposite_vertex(i, j, k);
        if (i == j || j == k || i == k || l < 1 || l > 4) {
            throw OutOfDomain("face: bad vertex triple");
        }
        return face_orientation(i, j, k) > 0 ? faces_[l] : one<S>() / faces_[l];
    }

    /** Face coordinate of the oriented face opposite l. */
    const S& face_opposite(int l) const { return faces_.at(l); }

    MinimalCoords<S> minimal() const
    {
        return MinimalCoords<S>{edges_[1][2], edges_[2][1], edges_[3][4], edges_[4][3]};
    }

    friend bool operator==(const TetraCoords& a, const TetraCoords& b)
    {
        for (int i = 1; i <= 4; ++i) {
            if (a.faces_[i] != b.faces_[i]) {
                return false;
            }
            for (int j = 1; j <= 4; ++j) {
                if (i != j && a.edges_[i][j] != b.edges_[i][j]) {
                    return false;
                }
            }
        }
        return true;
    }

    /** Equality up to tol relative (exact when S is exact). */
    bool approx_equal(const TetraCoords& o, double tol) const
    {
        for (int i = 1; i <= 4; ++i) {
            if (!same_value(faces_[i], o.faces_[i], tol)) {
                return false;
            }
            for (int j = 1; j <= 4; ++j) {
                if (i != j && !same_value(edges_[i][j], o.edges_[i][j], tol)) {
                    return false;
                }
            }
        }
        return true;
    }

private:
    static void check_edge(int i, int j)
    {
        if (i < 1 || i > 4 || j < 1 || j > 4 || i == j) {
            throw OutOfDomain("edge: bad vertex pair");
        }
    }

    void validate() const
    {
        const S o = one<S>();
        for (int i = 1; i <= 4; ++i) {
            for (int j = 1; j <= 4; ++j) {
                if (i == j) {
                    continue;
                }
                const S& z = edges_[i][j];
                if (detail::degenerate_generator(z)) {
                    throw OutOfDomain("edge coordinate z" + std::to_string(i) + std::to_string(j) +
                                      " is 0 or 1");
                }
                const auto [k, l] = complement_even(i, j);
                if (!same_value(edges_[i][k], o / (o - z), kRelationTol) ||
                    !same_value(edges_[i][l], o - o / z, kRelationTol)) {
                    throw InconsistentCoords("vertex relation fails at edge " + std::to_string(i) +
                                             std::to_string(j));
                }
            }
        }
        for (int l = 1; l <= 4; ++l) {
            const auto f = oriented_face(l);
            const S expected = -(edges_[f[0]][l] * edges_[f[1]][l] * edges_[f[2]][l]);
            if (!same_value(faces_[l], expected, kRelationTol)) {
                throw InconsistentCoords("face relation fails on face " + std::to_string(f[0]) +
                                         std::to_string(f[1]) + std::to_string(f[2]));
            }
        }
    }

    EdgeTable edges_;
    std::array<S, 5> faces_;
};

/** Edge z_ij = f_i(x_k) det(x_i,x_j,x_l) / (f_i(x_l) det(x_i,x_j,x_k)), (i,j,k,l) even. */
template <Scalar S>
S edge_coordinate(const FlagTuple<S>& t, int i, int j)
{
    const auto [k, l] = complement_even(i, j);
    const auto& xi = t[i - 1].point.v;
    const auto& xj = t[j - 1].point.v;
    const auto& xk = t[k - 1].point.v;
    const auto& xl = t[l - 1].point.v;
    const auto& fi = t[i - 1].line;
    const S den = pairing(fi, t[l - 1].point) * det3<S>(xi, xj, xk);
    if (is_zero(den, norm<S>(fi.v) * norm<S>(xl) * norm<S>(xi) * norm<S>(xj) * norm<S>(xk))) {
        throw DegenerateInput("edge_coords: vanishing denominator for z" + std::to_string(i) +
                              std::to_string(j));
    }
    return pairing(fi, t[k - 1].point) * det3<S>(xi, xj, xl) / den;
}

/** Coordinates of a generic 4-tuple of flags. */
template <Scalar S>
TetraCoords<S> edge_coords(const FlagTuple<S>& t)
{
    if (t.size() != 4) {
        throw DegenerateInput("edge_coords: need exactly four flags");
    }
    if (!is_generic(t)) {
        throw DegenerateInput("edge_coords: configuration is not generic");
    }
    typename TetraCoords<S>::EdgeTable e{};
    std::array<S, 5> f{};
    for (int i = 1; i <= 4; ++i) {
        for (int j = 1; j <= 4; ++j) {
            if (i != j) {
                e[i][j] = edge_coordinate(t, i, j);
            }
        }
    }
    for (int l = 1; l <= 4; ++l) {
        const auto v = oriented_face(l);
        f[l] = triple_ratio(t[v[0] - 1], t[v[1] - 1], t[v[2] - 1]).value;
    }
    return TetraCoords<S>::make(e, f);
}

/** Canonical flags realizing the minimal coordinates. */
template <Scalar S>
FlagTuple<S> reconstruct(const MinimalCoords<S>& m)
{
    m.validate();
    const S o = one<S>();
    const S z = zero<S>();
    const S w = o / (o - m.z43);
    return {
        Flag<S>::make(Point2<S>{{o, z, z}}, Line2<S>{{z, o - o / m.z12, -o}}),
        Flag<S>::make(Point2<S>{{z, o, z}}, Line2<S>{{o - m.z21, z, -o}}),
        Flag<S>::make(Point2<S>{{z, z, o}}, Line2<S>{{m.z34, -o, z}}),
        Flag<S>::make(Point2<S>{{o, o, o}}, Line2<S>{{w, o - w, -o}}),
    };
}

/** Fills all 16 coordinates from the chart via the vertex and face relations. */
template <Scalar S>
TetraCoords<S> complete_from_minimal(const MinimalCoords<S>& m)
{
    m.validate();
    const S o = one<S>();
    typename TetraCoords<S>::EdgeTable e{};
    std::array<S, 5> f{};
    for (int i = 1; i <= 4; ++i) {
        const int j = minimal_partner(i);
        const auto [k, l] = complement_even(i, j);
        const S& zij = m.at_vertex(i);
        e[i][j] = zij;
        e[i][k] = o / (o - zij);
        e[i][l] = o - o / zij;
    }
    for (int l = 1; l <= 4; ++l) {
        const auto v = oriented_face(l);
        f[l] = -(e[v[0]][l] * e[v[1]][l] * e[v[2]][l]);
    }
    return TetraCoords<S>::make(e, f);
}

/** [z12] + [z21] + [z34] + [z43]. */
template <Scalar S>
FormalSum<S> beta_tetra(const TetraCoords<S>& c)
{
    FormalSum<S> s;
    s.add(1, c.edge(1, 2)).add(1, c.edge(2, 1)).add(1, c.edge(3, 4)).add(1, c.edge(4, 3));
    return s;
}

/** D(beta(T)) / 4. */
template <Scalar S>
double volume_tetra(const TetraCoords<S>& c)
{
    return eval_D(beta_tetra(c)) / 4.0;
}

/** No face coordinate equals -1. */
template <Scalar S>
bool very_generic(const TetraCoords<S>& c)
{
    for (int l = 1; l <= 4; ++l) {
        if (is_zero(c.face_opposite(l) + one<S>(), 1.0)) {
            return false;
        }
    }
    return true;
}

}  // namespace flagdual
