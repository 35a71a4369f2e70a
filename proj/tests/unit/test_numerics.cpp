#include <set>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace flagdual;

namespace
{

using P = ProjPoint1<Exact>;

P pt(long a) { return P::affine(Exact(a)); }

}  // namespace

TEST(GaussianRational, ArithmeticAndText)
{
    const Exact a = Exact::parse("1/2-3/4*i");
    EXPECT_EQ(a.to_string(), "1/2-3/4*i");
    EXPECT_EQ(Exact::parse("i") * Exact::parse("i"), Exact(-1));
    EXPECT_EQ(Exact::parse("2*i").to_string(), "0/1+2/1*i");
    EXPECT_EQ(Exact::parse("6/4"), Exact::parse("3/2"));
    EXPECT_EQ((a / a), Exact(1));
    EXPECT_EQ(a.conj(), Exact::parse("1/2+3/4*i"));
    EXPECT_THROW(Exact::parse("0.5"), ParseError);
    EXPECT_THROW(Exact::parse("1/0"), ParseError);
    EXPECT_THROW(Exact::parse(""), ParseError);
    EXPECT_THROW(Exact(1) / Exact(0), DegenerateInput);
}

TEST(CrossRatio, NormalizedFrameGivesParameter)
{
    const Exact z = Exact::parse("3-2*i");
    EXPECT_EQ(cross_ratio(P::infinity(), pt(0), pt(1), P::affine(z)), z);
}

TEST(CrossRatio, AffineExample)
{
    // (2, 0, 1, w) -> w / (2 - w)
    EXPECT_EQ(cross_ratio(pt(2), pt(0), pt(1), pt(4)), Exact(-2));
    const Exact w = Exact::parse("1/3+i");
    EXPECT_EQ(cross_ratio(pt(2), pt(0), pt(1), P::affine(w)), w / (Exact(2) - w));
}

TEST(CrossRatio, CoincidentPointsRejected)
{
    EXPECT_THROW(cross_ratio(pt(2), pt(2), pt(1), pt(4)), DegenerateInput);
    EXPECT_THROW(cross_ratio(P{2, 2}, pt(1), pt(0), pt(3)), DegenerateInput);
}

TEST(CrossRatio, MoebiusInvariance)
{
    testgen::Gen g(11);
    for (int n = 0; n < 200; ++n) {
        std::array<P, 4> x;
        for (auto& p : x) {
            p = P::affine(g.gaussian_rational());
        }
        bool distinct = true;
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
                distinct = distinct && !projectively_equal(x[i], x[j]);
            }
        }
        if (!distinct) {
            continue;
        }
        // affine formula as the oracle
        auto aff = [](const P& p) { return p.a / p.b; };
        const Exact expected = ((aff(x[0]) - aff(x[2])) * (aff(x[1]) - aff(x[3]))) /
                               ((aff(x[0]) - aff(x[3])) * (aff(x[1]) - aff(x[2])));
        EXPECT_EQ(cross_ratio(x[0], x[1], x[2], x[3]), expected);
        Exact a, b, c, d;
        do {
            a = g.gaussian_rational();
            b = g.gaussian_rational();
            c = g.gaussian_rational();
            d = g.gaussian_rational();
        } while ((a * d - b * c).is_zero());
        std::array<P, 4> y;
        for (int k = 0; k < 4; ++k) {
            y[k] = P{a * x[k].a + b * x[k].b, c * x[k].a + d * x[k].b};
        }
        EXPECT_EQ(cross_ratio(y[0], y[1], y[2], y[3]), expected);
    }
}

TEST(CrossRatio, FloatMoebiusInvariance)
{
    testgen::Gen g(12);
    using Q = ProjPoint1<Float>;
    for (int n = 0; n < 200; ++n) {
        std::array<Q, 4> x;
        for (auto& p : x) {
            p = Q::affine(g.complex_in_box());
        }
        const Float a = g.complex_in_box(), b = g.complex_in_box(), c = g.complex_in_box(), d = g.complex_in_box();
        if (std::abs(a * d - b * c) < 0.1) {
            continue;
        }
        std::array<Q, 4> y;
        for (int k = 0; k < 4; ++k) {
            y[k] = Q{a * x[k].a + b * x[k].b, c * x[k].a + d * x[k].b};
        }
        EXPECT_TRUE(same_value(cross_ratio(x[0], x[1], x[2], x[3]), cross_ratio(y[0], y[1], y[2], y[3]), 1e-12));
    }
}

TEST(CrossRatio, OneMinusSwap)
{
    testgen::Gen g(13);
    for (int n = 0; n < 100; ++n) {
        std::array<P, 4> x;
        for (auto& p : x) {
            p = P::affine(g.gaussian_rational());
        }
        try {
            EXPECT_EQ(cross_ratio(x[0], x[1], x[2], x[3]), Exact(1) - cross_ratio(x[0], x[2], x[1], x[3]));
        } catch (const DegenerateInput&) {
        }
    }
}

TEST(CrossRatio, MultiplicativeCocycle)
{
    testgen::Gen g(14);
    int checked = 0;
    while (checked < 100) {
        std::array<P, 6> p;  // a1, a2, b1, b2, b3, b4
        for (auto& q : p) {
            q = P::affine(g.gaussian_rational());
        }
        try {
            const Exact lhs = cross_ratio(p[0], p[1], p[2], p[5]);
            const Exact rhs = cross_ratio(p[0], p[1], p[2], p[3]) * cross_ratio(p[0], p[1], p[3], p[4]) *
                              cross_ratio(p[0], p[1], p[4], p[5]);
            EXPECT_EQ(lhs, rhs);
            ++checked;
        } catch (const DegenerateInput&) {
        }
    }
}

TEST(Mat3, Examples)
{
    const auto id = Mat3<Exact>::identity();
    EXPECT_EQ(mat3_det(id), Exact(1));
    const auto inv = mat3_inv(id);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            EXPECT_EQ(inv(i, j), id(i, j));
        }
    }
    EXPECT_EQ(mat3_det(Mat3<Exact>::diagonal(1, 2, 3)), Exact(6));
    EXPECT_THROW(mat3_inv(Mat3<Exact>::diagonal(1, 0, 3)), SingularMatrix);
}

TEST(Mat3, ExactInverse)
{
    testgen::Gen g(15);
    for (int n = 0; n < 100; ++n) {
        const auto m = g.invertible<Exact>();
        const auto p = mat3_mul(m, mat3_inv(m));
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                EXPECT_EQ(p(i, j), Exact(i == j ? 1 : 0));
            }
        }
        EXPECT_EQ(mat3_det(mat3_transpose(m)), mat3_det(m));
    }
}

TEST(FactorGaussian, Two)
{
    const auto [num, den] = factor_gaussian(Exact(2));
    ASSERT_EQ(num.primes.size(), 1u);
    EXPECT_EQ(num.primes[0].first, (GaussInt{1, 1}));
    EXPECT_EQ(num.primes[0].second, 2);
    EXPECT_EQ(num.unit, 3);  // (1+i)^2 = 2i, so 2 = -i (1+i)^2
    EXPECT_TRUE(den.primes.empty());
    EXPECT_EQ(recompose(std::make_pair(num, den)), Exact(2));
}

TEST(FactorGaussian, Unit)
{
    const auto [num, den] = factor_gaussian(Exact::i());
    EXPECT_TRUE(num.primes.empty());
    EXPECT_TRUE(den.primes.empty());
    EXPECT_EQ(num.unit, 1);
}

TEST(FactorGaussian, Five)
{
    const auto [num, den] = factor_gaussian(Exact(5));
    ASSERT_EQ(num.primes.size(), 2u);
    // first-quadrant associates of 2+i and 2-i
    std::set<std::pair<long, long>> got;
    for (const auto& [p, e] : num.primes) {
        EXPECT_EQ(e, 1);
        EXPECT_EQ(p.norm(), 5);
        got.insert({p.re.get_si(), p.im.get_si()});
    }
    EXPECT_EQ(got, (std::set<std::pair<long, long>>{{1, 2}, {2, 1}}));
    EXPECT_EQ(recompose(std::make_pair(num, den)), Exact(5));
}

TEST(FactorGaussian, RecomposesRandomRationals)
{
    testgen::Gen g(16);
    for (int n = 0; n < 300; ++n) {
        const Exact q = g.gaussian_rational(500, 300);
        if (q.is_zero()) {
            continue;
        }
        const auto f = factor_gaussian(q);
        EXPECT_EQ(recompose(f), q);
        for (const auto* part : {&f.first, &f.second}) {
            for (const auto& [p, e] : part->primes) {
                EXPECT_GT(p.re, 0);
                EXPECT_GE(p.im, 0);
                EXPECT_GT(e, 0);
            }
        }
    }
}

TEST(FactorGaussian, LargeSemiprime)
{
    // 1000033 = 1 mod 4 splits; 1000003 = 3 mod 4 stays prime
    const Exact q = Exact(1000033) * Exact(1000003);
    const auto f = factor_gaussian(q);
    EXPECT_EQ(recompose(f), q);
    EXPECT_EQ(f.first.primes.size(), 3u);
}

TEST(FactorGaussian, FloatUnsupported)
{
    EXPECT_THROW(factor_gaussian(Float(2.0, 0.0)), Unsupported);
}
