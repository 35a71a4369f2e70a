#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "dilog_oracle.hpp"
#include "support.hpp"

using namespace flagdual;

using testgen::dilog_oracle;

TEST(Dilog, RegularShapeConstant)
{
    EXPECT_NEAR(dilog_D(testgen::regular_shape()), 1.014941606409653, 1e-11);
    EXPECT_NEAR(dilog_oracle(testgen::regular_shape()), 1.014941606409653, 1e-11);
}

TEST(Dilog, SeriesAgreesWithQuadrature)
{
    testgen::Gen g(61);
    for (int n = 0; n < 100; ++n) {
        const Float z = g.float_generator(4.0, 0.02);
        EXPECT_NEAR(dilog_D(z), dilog_oracle(z), 1e-11) << z;
    }
}

TEST(Dilog, Symmetries)
{
    testgen::Gen g(62);
    for (int n = 0; n < 200; ++n) {
        const Float z = g.float_generator();
        const double d = dilog_D(z);
        EXPECT_NEAR(dilog_D(std::conj(z)), -d, 1e-13);
        EXPECT_NEAR(dilog_D(1.0 / z), -d, 1e-13);
        EXPECT_NEAR(dilog_D(1.0 - z), -d, 1e-13);
        EXPECT_NEAR(dilog_D(1.0 / (1.0 - z)), d, 1e-13);
    }
    EXPECT_EQ(dilog_D(Float(3.5, 0.0)), 0.0);
    EXPECT_EQ(dilog_D(Float(-2.0, 0.0)), 0.0);
}

TEST(Dilog, MaximumAtRegularShape)
{
    testgen::Gen g(63);
    for (int n = 0; n < 500; ++n) {
        EXPECT_LE(dilog_D(g.float_generator()), 1.014941606409653 + 1e-12);
    }
}

TEST(FormalSum, MergingAndDomain)
{
    FormalSum<Exact> s;
    s.add(2, Exact(3)).add(-2, Exact(3)).add(1, Exact::parse("i"));
    EXPECT_EQ(s.size(), 1u);
    EXPECT_THROW(s.add(1, Exact(1)), OutOfDomain);
    EXPECT_THROW(s.add(1, Exact(0)), OutOfDomain);
    const FormalSum<Exact> a{{1, Exact(2)}, {3, Exact(5)}};
    const FormalSum<Exact> b{{3, Exact(5)}, {1, Exact(2)}};
    EXPECT_EQ(a, b);
    EXPECT_TRUE((a - b).empty());
    EXPECT_EQ((2 * a).coefficient(Exact(5)), 6);
}

TEST(FormalSum, FloatMergeTolerance)
{
    FormalSum<Float> s;
    s.add(1, Float(0.3, 0.4)).add(1, Float(0.3, 0.4 + 1e-14));
    EXPECT_EQ(s.size(), 1u);
    s.add(1, Float(0.3, 0.4 + 1e-9));
    EXPECT_EQ(s.size(), 2u);
}

TEST(EvalD, Linearity)
{
    EXPECT_EQ(eval_D(FormalSum<Float>{}), 0.0);
    const FormalSum<Float> s{{4, testgen::regular_shape()}};
    EXPECT_NEAR(eval_D(s), 4 * 1.014941606409653, 1e-11);
}

TEST(FiveTerm, TwoThree)
{
    const auto s = five_term(Exact(2), Exact(3));
    const FormalSum<Exact> expected{{1, Exact(2)},
                                    {-1, Exact(3)},
                                    {1, Exact::parse("3/2")},
                                    {-1, Exact::parse("3/4")},
                                    {1, Exact::parse("1/2")}};
    EXPECT_EQ(s, expected);
    EXPECT_EQ(eval_D(s), 0.0);
}

TEST(FiveTerm, DilogVanishes)
{
    testgen::Gen g(64);
    for (int n = 0; n < 1000; ++n) {
        try {
            EXPECT_NEAR(eval_D(five_term(g.float_generator(), g.float_generator())), 0.0, 1e-10);
        } catch (const OutOfDomain&) {
        }
    }
}

TEST(FiveTerm, DegenerateRejected)
{
    EXPECT_THROW(five_term(Exact(2), Exact(2)), OutOfDomain);
    EXPECT_THROW(five_term(Exact(1), Exact(2)), OutOfDomain);
}

TEST(ProductRelation, DilogVanishes)
{
    testgen::Gen g(65);
    for (int n = 0; n < 500; ++n) {
        try {
            EXPECT_NEAR(eval_D(product_relation(g.float_generator(), g.float_generator())), 0.0, 1e-10);
        } catch (const OutOfDomain&) {
        }
    }
}

TEST(Canonicalize, InversionAndReflection)
{
    EXPECT_TRUE(canonicalize_six(FormalSum<Exact>{{1, Exact(2)}, {1, Exact::parse("1/2")}}).empty());
    const Exact z = Exact::parse("3+i");
    EXPECT_TRUE(canonicalize_six(FormalSum<Exact>{{1, z}, {1, Exact(1) - z}}).empty());
    EXPECT_TRUE(canonicalize_six(FormalSum<Exact>{{1, z}, {1, Exact(1) / z}}).empty());
    EXPECT_EQ(canonicalize_six(FormalSum<Exact>{{1, z}}), canonicalize_six(FormalSum<Exact>{{-1, Exact(1) / z}}));
    EXPECT_EQ(canonicalize_six(FormalSum<Exact>{{1, z}}),
              canonicalize_six(FormalSum<Exact>{{1, Exact(1) / (Exact(1) - z)}}));
}

TEST(Canonicalize, TorsionOrbitsVanish)
{
    EXPECT_TRUE(canonicalize_six(FormalSum<Exact>{{5, Exact(-1)}}).empty());
    EXPECT_TRUE(canonicalize_six(FormalSum<Exact>{{3, Exact(2)}}).empty());
}

TEST(Canonicalize, IdempotentAndDilogInvariant)
{
    testgen::Gen g(66);
    for (int n = 0; n < 200; ++n) {
        FormalSum<Float> s;
        for (int k = 0; k < 6; ++k) {
            const auto orbit = six_orbit(g.float_generator());
            s.add(g.integer(-3, 3), orbit[static_cast<std::size_t>(g.integer(0, 5))].first);
        }
        const auto c = canonicalize_six(s);
        EXPECT_EQ(canonicalize_six(c), c);
        EXPECT_NEAR(eval_D(c), eval_D(s), 1e-12);
    }
}

TEST(Canonicalize, ExactOrbitElementsAgree)
{
    testgen::Gen g(67);
    for (int n = 0; n < 100; ++n) {
        const Exact z = g.exact_generator();
        const auto orbit = six_orbit(z);
        const auto base = canonicalize_six(FormalSum<Exact>{{1, z}});
        for (const auto& [w, sign] : orbit) {
            EXPECT_EQ(canonicalize_six(FormalSum<Exact>{{sign, w}}), base);
        }
    }
}

TEST(Delta, KillsFiveTermInstances)
{
    testgen::Gen g(68);
    int done = 0;
    while (done < 100) {
        try {
            EXPECT_TRUE(delta_exact(five_term(g.exact_generator(), g.exact_generator())).is_zero());
            ++done;
        } catch (const OutOfDomain&) {
        }
    }
}

TEST(Delta, KillsInversionAndReflection)
{
    testgen::Gen g(69);
    for (int n = 0; n < 100; ++n) {
        const Exact z = g.exact_generator();
        EXPECT_TRUE(delta_exact(FormalSum<Exact>{{1, z}, {1, Exact(1) / z}}).is_zero());
        EXPECT_TRUE(delta_exact(FormalSum<Exact>{{1, z}, {1, Exact(1) - z}}).is_zero());
    }
}

TEST(Delta, TorsionAndNonzero)
{
    EXPECT_TRUE(delta_exact(FormalSum<Exact>{{1, Exact(2)}}).is_zero());
    const auto w = delta_exact(FormalSum<Exact>{{1, Exact::parse("1/3")}});
    EXPECT_FALSE(w.is_zero());
    // 1/3 = 3^-1 and 2/3 = -i (1+i)^2 3^-1, so only 3 ^ (1+i) survives, with coefficient -2
    const GaussInt three{3, 0};
    const GaussInt one_i{1, 1};
    EXPECT_EQ(w.coefficient(three, one_i), -2);
    EXPECT_EQ(w.coefficient(one_i, three), 2);
    const auto m = w.matrix();
    ASSERT_EQ(m.size(), 2u);
    EXPECT_EQ(m[0][1], -m[1][0]);
}

TEST(Delta, FloatUnsupported)
{
    EXPECT_THROW(delta_exact(FormalSum<Float>{{1, Float(0.5, 0.5)}}), Unsupported);
}
