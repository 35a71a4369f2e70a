#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "flagdual/errors.hpp"
#include "flagdual/tetra.hpp"

namespace flagdual
{

/**
 * @brief Identification of face face_a of tet_a with face face_b of tet_b
 *
 * Tetrahedra are numbered from 1, vertices 1..4. map[v] is the image of
 * vertex v of face_a (0 for the vertex not on the face), and face_b lists
 * the images of face_a in order.
 */
struct FacePairing {
    int tet_a = 0;
    std::array<int, 3> face_a{};
    int tet_b = 0;
    std::array<int, 3> face_b{};
    std::array<int, 5> map{};

    friend bool operator==(const FacePairing&, const FacePairing&) = default;
};

/** @brief Oriented edge i -> j of tetrahedron tet */
struct DirectedEdge {
    int tet;
    int i;
    int j;

    friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

/** @brief Face of a tetrahedron, by the vertex it omits */
struct FaceRef {
    int tet;
    int opposite;

    friend auto operator<=>(const FaceRef&, const FaceRef&) = default;
};

/**
 * @brief Edge class: the directed orbit and, unless the edge is glued
 *        to itself reversed, the orbit of the reversed edges
 */
struct EdgeClass {
    std::vector<DirectedEdge> forward;
    std::vector<DirectedEdge> backward;
};

class IdealTriangulation
{
public:
    IdealTriangulation() = default;

    /** Validates the pairings; MalformedPairing on any violation. */
    static IdealTriangulation make(int tetrahedra, std::vector<FacePairing> pairings)
    {
        if (tetrahedra < 0) {
            throw MalformedPairing("negative tetrahedron count");
        }
        IdealTriangulation k;
        k.n_ = tetrahedra;
        k.pairings_ = std::move(pairings);
        k.validate();
        return k;
    }

    int size() const noexcept { return n_; }
    const std::vector<FacePairing>& pairings() const noexcept { return pairings_; }

    /** Faces in no pairing, ordered by tetrahedron then face. */
    std::vector<FaceRef> boundary_faces() const
    {
        std::set<FaceRef> used;
        for (const auto& p : pairings_) {
            used.insert({p.tet_a, opposite_vertex(p.face_a[0], p.face_a[1], p.face_a[2])});
            used.insert({p.tet_b, opposite_vertex(p.face_b[0], p.face_b[1], p.face_b[2])});
        }
        std::vector<FaceRef> out;
        for (int t = 1; t <= n_; ++t) {
            for (int l = 1; l <= 4; ++l) {
                if (used.count({t, l}) == 0) {
                    out.push_back({t, l});
                }
            }
        }
        return out;
    }

    bool has_boundary() const { return !boundary_faces().empty(); }

    /**
     * Orbits of the 12N directed edges under the pairing maps, paired
     * with their reverses. Classes and members are listed in order of
     * first appearance (tetrahedron, then i, then j).
     */
    std::vector<EdgeClass> edge_classes() const
    {
        const int total = 12 * n_;
        std::vector<int> parent(static_cast<std::size_t>(total));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };
        auto unite = [&](int a, int b) {
            a = find(a);
            b = find(b);
            if (a != b) {
                parent[std::max(a, b)] = std::min(a, b);
            }
        };
        for (const auto& p : pairings_) {
            for (int u : p.face_a) {
                for (int v : p.face_a) {
                    if (u != v) {
                        unite(index({p.tet_a, u, v}), index({p.tet_b, p.map[u], p.map[v]}));
                    }
                }
            }
        }
        std::vector<std::vector<DirectedEdge>> orbits;
        std::vector<int> orbit_of_root(static_cast<std::size_t>(total), -1);
        for (int x = 0; x < total; ++x) {
            const int r = find(x);
            if (orbit_of_root[r] < 0) {
                orbit_of_root[r] = static_cast<int>(orbits.size());
                orbits.emplace_back();
            }
            orbits[orbit_of_root[r]].push_back(edge_at(x));
        }
        std::vector<EdgeClass> classes;
        std::vector<bool> taken(orbits.size(), false);
        for (std::size_t o = 0; o < orbits.size(); ++o) {
            if (taken[o]) {
                continue;
            }
            taken[o] = true;
            const DirectedEdge& e = orbits[o].front();
            const auto rev = static_cast<std::size_t>(orbit_of_root[find(index({e.tet, e.j, e.i}))]);
            EdgeClass c{orbits[o], {}};
            if (rev != o) {
                taken[rev] = true;
                c.backward = orbits[rev];
            }
            classes.push_back(std::move(c));
        }
        return classes;
    }

private:
    static int slot(int i, int j) { return (i - 1) * 3 + (j < i ? j - 1 : j - 2); }

    int index(const DirectedEdge& e) const { return 12 * (e.tet - 1) + slot(e.i, e.j); }

    static DirectedEdge edge_at(int x)
    {
        const int t = x / 12 + 1;
        const int s = x % 12;
        const int i = s / 3 + 1;
        int j = s % 3 + 1;
        if (j >= i) {
            ++j;
        }
        return {t, i, j};
    }

    void validate() const
    {
        std::set<FaceRef> seen;
        for (std::size_t n = 0; n < pairings_.size(); ++n) {
            const auto& p = pairings_[n];
            const std::string where = "pairing " + std::to_string(n + 1) + ": ";
            for (int t : {p.tet_a, p.tet_b}) {
                if (t < 1 || t > n_) {
                    throw MalformedPairing(where + "tetrahedron " + std::to_string(t) + " out of range");
                }
            }
            for (const auto* f : {&p.face_a, &p.face_b}) {
                for (int v : *f) {
                    if (v < 1 || v > 4) {
                        throw MalformedPairing(where + "vertex label out of range");
                    }
                }
                if ((*f)[0] == (*f)[1] || (*f)[1] == (*f)[2] || (*f)[0] == (*f)[2]) {
                    throw MalformedPairing(where + "face repeats a vertex");
                }
            }
            std::array<bool, 5> hit{};
            for (int v = 1; v <= 4; ++v) {
                const bool on_face = std::find(p.face_a.begin(), p.face_a.end(), v) != p.face_a.end();
                const int w = p.map[v];
                if (on_face != (w != 0)) {
                    throw MalformedPairing(where + "vertex map is not defined exactly on face A");
                }
                if (w == 0) {
                    continue;
                }
                if (w < 1 || w > 4 || hit[w]) {
                    throw MalformedPairing(where + "vertex map is not a bijection");
                }
                hit[w] = true;
            }
            for (int r = 0; r < 3; ++r) {
                if (p.map[p.face_a[r]] != p.face_b[r]) {
                    throw MalformedPairing(where + "face B does not list the images of face A");
                }
            }
            const FaceRef a{p.tet_a, opposite_vertex(p.face_a[0], p.face_a[1], p.face_a[2])};
            const FaceRef b{p.tet_b, opposite_vertex(p.face_b[0], p.face_b[1], p.face_b[2])};
            if (a == b) {
                throw MalformedPairing(where + "face glued to itself");
            }
            for (const auto& f : {a, b}) {
                if (!seen.insert(f).second) {
                    throw MalformedPairing(where + "face of tetrahedron " + std::to_string(f.tet) +
                                           " opposite vertex " + std::to_string(f.opposite) +
                                           " is paired twice");
                }
            }
        }
    }

    int n_ = 0;
    std::vector<FacePairing> pairings_;
};

}  // namespace flagdual
