#include <gtest/gtest.h>

#include "support.hpp"

using namespace flagdual;

namespace
{

FlagTuple<Exact> standard_triple(const Exact& z)
{
    return {Flag<Exact>::make(Point2<Exact>{{1, 0, 0}}, Line2<Exact>{{0, 1, -1}}),
            Flag<Exact>::make(Point2<Exact>{{0, 1, 0}}, Line2<Exact>{{1, 0, -1}}),
            Flag<Exact>::make(Point2<Exact>{{0, 0, 1}}, Line2<Exact>{{z, 1, 0}})};
}

bool frame_matches(const FlagTuple<Exact>& t, const Mat3<Exact>& a)
{
    const Vec3<Exact> frame[4] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
    for (int k = 0; k < 4; ++k) {
        if (!projectively_equal<Exact>(mat3_apply(a, t[k].point.v), frame[k])) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST(Flag, IncidenceEnforced)
{
    EXPECT_THROW(Flag<Exact>::make(Point2<Exact>{{1, 0, 0}}, Line2<Exact>{{1, 0, 0}}), DegenerateInput);
    EXPECT_THROW(Flag<Exact>::make(Point2<Exact>{{0, 0, 0}}, Line2<Exact>{{1, 0, 0}}), DegenerateInput);
    EXPECT_NO_THROW(Flag<Float>::make(Point2<Float>{{1.0, 1e-14, 0.0}}, Line2<Float>{{0.0, 1.0, 3.0}}));
}

TEST(Genericity, StandardTripleAtTwo)
{
    const auto t = standard_triple(2);
    EXPECT_TRUE(is_generic(t));
    EXPECT_TRUE(is_very_generic(t));
    EXPECT_EQ(triple_ratio(t[0], t[1], t[2]).value, Exact(2));
}

TEST(Genericity, StandardTripleAtMinusOneIsNotVeryGeneric)
{
    const auto t = standard_triple(-1);
    EXPECT_TRUE(is_generic(t));
    EXPECT_FALSE(is_very_generic(t));
    EXPECT_EQ(triple_ratio(t[0], t[1], t[2]).value, Exact(-1));
}

TEST(Genericity, RepeatedPointIsNotGeneric)
{
    auto t = standard_triple(2);
    t[1] = Flag<Exact>::make(Point2<Exact>{{1, 0, 0}}, Line2<Exact>{{0, 1, 1}});
    EXPECT_FALSE(is_generic(t));
}

TEST(DualFlag, LiteralSwap)
{
    const auto f = Flag<Exact>::make(Point2<Exact>{{1, 0, 0}}, Line2<Exact>{{0, 1, -1}});
    const auto d = dual_flag(f);
    EXPECT_EQ(d.point.v, (Vec3<Exact>{0, 1, -1}));
    EXPECT_EQ(d.line.v, (Vec3<Exact>{1, 0, 0}));
}

TEST(DualFlag, InvolutionAndVeryGenericity)
{
    testgen::Gen g(21);
    for (int n = 0; n < 100; ++n) {
        const auto t = g.very_generic_tuple<Exact>();
        EXPECT_EQ(dual_tuple(dual_tuple(t)), t);
        EXPECT_TRUE(is_very_generic(dual_tuple(t)));
    }
}

TEST(Normalize, StandardIsIdentityUpToScale)
{
    FlagTuple<Exact> t;
    const Vec3<Exact> pts[4] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
    for (const auto& p : pts) {
        t.push_back(Flag<Exact>::make(Point2<Exact>{p}, Line2<Exact>{cross<Exact>(p, {1, 2, 5})}));
    }
    const auto a = normalize_to_standard(t);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            EXPECT_EQ(a(i, j), i == j ? a(0, 0) : Exact(0));
        }
    }
}

TEST(Normalize, PermutedStandardFrame)
{
    const Vec3<Exact> pts[4] = {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}, {1, 1, 1}};
    FlagTuple<Exact> t;
    for (const auto& p : pts) {
        t.push_back(Flag<Exact>::make(Point2<Exact>{p}, Line2<Exact>{cross<Exact>(p, {3, 1, 2})}));
    }
    const auto a = normalize_to_standard(t);
    EXPECT_TRUE(frame_matches(t, a));
    // a permutation matrix up to scale: one nonzero entry per row
    for (int i = 0; i < 3; ++i) {
        int nonzero = 0;
        for (int j = 0; j < 3; ++j) {
            nonzero += a(i, j).is_zero() ? 0 : 1;
        }
        EXPECT_EQ(nonzero, 1);
    }
}

TEST(Normalize, RandomPoints)
{
    testgen::Gen g(22);
    for (int n = 0; n < 100; ++n) {
        const auto t = g.very_generic_tuple<Exact>();
        const auto a = normalize_to_standard(t);
        EXPECT_TRUE(frame_matches(t, a));
        const auto moved = flagdual::apply(a, t);
        for (const auto& f : moved) {
            EXPECT_TRUE(pairing(f.line, f.point).is_zero());
        }
    }
}

TEST(Normalize, CollinearPointsRejected)
{
    FlagTuple<Exact> t;
    const Vec3<Exact> pts[4] = {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, 1, 1}};
    for (const auto& p : pts) {
        t.push_back(Flag<Exact>::make(Point2<Exact>{p}, Line2<Exact>{cross<Exact>(p, {1, 2, 5})}));
    }
    EXPECT_THROW(normalize_to_standard(t), DegenerateInput);
}

TEST(HyperbolicFlag, IncidenceAndShape)
{
    testgen::Gen g(23);
    for (int n = 0; n < 50; ++n) {
        const Exact z = g.exact_generator();
        const auto f = hyperbolic_flag(ProjPoint1<Exact>{z, Exact(1)});
        EXPECT_TRUE(pairing(f.line, f.point).is_zero());
        EXPECT_EQ(f.point.v, (Vec3<Exact>{z * z, z, 1}));
        EXPECT_EQ(f.line.v, (Vec3<Exact>{1, Exact(-2) * z, z * z}));
    }
}

TEST(CrFlag, BasePoint)
{
    const auto f = cr_flag(Point2<Exact>{{1, 0, 0}});
    EXPECT_EQ(f.line.v, (Vec3<Exact>{0, 0, 1}));
    EXPECT_THROW(cr_flag(Point2<Exact>{{1, 1, 1}}), NotOnSphere);
    EXPECT_THROW(cr_flag(Point2<Float>{{1.0, 0.0, 1e-3}}), NotOnSphere);
}

TEST(CrFlag, HeisenbergPointsAreNull)
{
    testgen::Gen g(24);
    for (int n = 0; n < 50; ++n) {
        const Exact xi = g.gaussian_rational();
        const Exact t = Exact(g.rational(9, 5));
        EXPECT_TRUE(hermitian_norm(heisenberg_point(xi, t)).is_zero());
    }
}

TEST(CrFlag, RelationNineAndUnitFaces)
{
    testgen::Gen g(25);
    for (int n = 0; n < 100; ++n) {
        const auto c = edge_coords(g.cr_tuple());
        for (int i = 1; i <= 4; ++i) {
            for (int j = 1; j <= 4; ++j) {
                if (i == j) {
                    continue;
                }
                const auto [k, l] = complement_even(i, j);
                EXPECT_TRUE(same_value(c.edge(i, j) * c.edge(j, i), std::conj(c.edge(k, l) * c.edge(l, k)), 1e-12));
            }
            EXPECT_NEAR(std::abs(c.face_opposite(i)), 1.0, 1e-12);
        }
    }
}
