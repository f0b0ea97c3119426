#include <gtest/gtest.h>

#include "cayleyq/cayley.hpp"
#include "cayleyq/error.hpp"
#include "cayleyq/matrix.hpp"
#include "generators.hpp"

using namespace cayleyq;
using cayleyq::testing::random_rat_matrix;
using cayleyq::testing::random_ratfunc_matrix;

namespace {

const RatFunc e = RatFunc::e();
using MQ = Mat<Rat>;
using ME = Mat<RatFunc>;

}  // namespace

TEST(MatOps, Examples) {
    Rng rng(41);
    const ME a = random_ratfunc_matrix(rng, 3);
    EXPECT_EQ(ME::identity(3) * a, a);
    EXPECT_EQ(transpose(transpose(a)), a);

    const ME j{{0, e}, {-e, 0}};
    EXPECT_EQ(j * j, (ME{{-e * e, 0}, {0, -e * e}}));
}

TEST(MatOps, VectorAndScalar) {
    const MQ m{{1, 2}, {3, 4}};
    EXPECT_EQ((m * Vec<Rat>{1, -1}), (Vec<Rat>{-1, -1}));
    EXPECT_EQ(Rat(2) * m, (MQ{{2, 4}, {6, 8}}));
    EXPECT_EQ(m - m, MQ(2));
    EXPECT_EQ(power(m, 0), MQ::identity(2));
    EXPECT_EQ(power(m, 2), m * m);
}

TEST(MatOps, DimensionMismatch) {
    EXPECT_THROW(MQ::identity(2) * MQ::identity(3), DimensionMismatch);
    EXPECT_THROW(MQ::identity(2) + MQ::identity(3), DimensionMismatch);
    EXPECT_THROW(MQ::identity(2) * Vec<Rat>(3), DimensionMismatch);
    EXPECT_THROW(ME::identity(2) * ME::identity(3), DimensionMismatch);
    EXPECT_THROW((MQ{{1, 2}, {3}}), DimensionMismatch);
    EXPECT_THROW(MQ(0), DimensionMismatch);
}

TEST(Inverse, Examples) {
    EXPECT_EQ(inverse(ME{{1, e}, {0, 1}}), (ME{{1, -e}, {0, 1}}));

    // adjugate / det with det = 1 + e^2
    const RatFunc d = RatFunc(1) + e * e;
    EXPECT_EQ(inverse(ME{{1, e}, {-e, 1}}), (ME{{RatFunc(1) / d, -e / d}, {e / d, RatFunc(1) / d}}));
    EXPECT_EQ(inverse(ME::identity(4)), ME::identity(4));
}

TEST(Inverse, SingularReportsColumn) {
    try {
        inverse(MQ{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
        FAIL();
    } catch (const SingularMatrix& s) {
        EXPECT_EQ(s.column, 2U);
    }
    try {
        inverse(MQ{{0, 1}, {0, 1}});
        FAIL();
    } catch (const SingularMatrix& s) {
        EXPECT_EQ(s.column, 0U);
    }
}

TEST(Det, Examples) {
    EXPECT_EQ(det(MQ::identity(3)), Rat(1));
    EXPECT_EQ(det(MQ{{0, 1}, {-1, 0}}), Rat(1));
    EXPECT_EQ(det(MQ::diagonal({-1, 1, 1})), Rat(-1));
    EXPECT_EQ(det(ME{{1, e}, {-e, 1}}), RatFunc(1) + e * e);
    EXPECT_EQ(det(ME{{0, 1, 0}, {1, 0, 0}, {0, 0, e}}), -e);
    EXPECT_EQ(det(ME{{1, 2}, {2, 4}}), RatFunc());
}

TEST(FrobSq, Examples) {
    EXPECT_EQ(frob_sq(MQ::identity(3)), Rat(3));
    EXPECT_EQ(frob_sq(MQ(4)), Rat(0));
    // I - C(eJ) has entries 2e^2/(1+e^2) on the diagonal and +-2e/(1+e^2) off it.
    const ME a = cayley(ME{{0, e}, {-e, 0}});
    EXPECT_EQ(frob_sq(ME::identity(2) - a), RatFunc(8) * e * e / (RatFunc(1) + e * e));
}

TEST(IsOrthogonal, Examples) {
    EXPECT_TRUE(is_orthogonal(MQ::identity(3)));
    EXPECT_FALSE(is_orthogonal(MQ::diagonal({1, 2})));
    EXPECT_TRUE(is_orthogonal(ME{{0, 1}, {-1, 0}}));
    EXPECT_FALSE(is_orthogonal(ME{{1, e}, {0, 1}}));
    Rng rng(42);
    for (int t = 0; t < 20; ++t) EXPECT_TRUE(is_orthogonal(cayley(e * embed<RatFunc>(random_skew(rng, 4)))));
}

// The Q(e) overloads clear denominators and run fraction-free; the generic
// templates do plain field elimination. Both routes must agree exactly.
TEST(FractionFreeRoutes, AgreeWithGenericElimination) {
    Rng rng(43);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, 4));
        const ME a = random_ratfunc_matrix(rng, n);
        const ME b = random_ratfunc_matrix(rng, n);
        EXPECT_EQ(a * b, operator*<RatFunc>(a, b));
        EXPECT_EQ(det(a), det<RatFunc>(a));
        EXPECT_EQ(frob_sq(a), frob_sq<RatFunc>(a));
        EXPECT_EQ(is_orthogonal(a), is_orthogonal<RatFunc>(a));
        const std::vector<Rat> d{1, 2, 3, 4};
        const std::vector<Rat> dn(d.begin(), d.begin() + static_cast<long>(n));
        EXPECT_EQ(preserves_diagonal_form(a, dn), preserves_diagonal_form<RatFunc>(a, dn));
    }
    const ME rot = cayley(e * embed<RatFunc>(MQ{{0, 1, 2}, {-1, 0, 3}, {-2, -3, 0}}));
    EXPECT_TRUE(is_orthogonal(rot));
    EXPECT_TRUE(is_orthogonal<RatFunc>(rot));
    EXPECT_EQ(det(rot), det<RatFunc>(rot));
}

TEST(FrobSq, SquaredSubmultiplicativity) {
    Rng rng(44);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 2, 4));
        const ME a = random_ratfunc_matrix(rng, n), b = random_ratfunc_matrix(rng, n);
        EXPECT_TRUE(leq(frob_sq(a * b), frob_sq(a) * frob_sq(b)));
        const MQ c = random_rat_matrix(rng, n), d = random_rat_matrix(rng, n);
        EXPECT_LE(frob_sq(c * d), frob_sq(c) * frob_sq(d));
    }
}

TEST(FrobSq, WeakTriangleBound) {
    Rng rng(45);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 2, 4));
        const ME a = random_ratfunc_matrix(rng, n), b = random_ratfunc_matrix(rng, n);
        EXPECT_TRUE(leq(frob_sq(a + b), RatFunc(2) * frob_sq(a) + RatFunc(2) * frob_sq(b)));
    }
}

TEST(FrobSq, NonNegativeAndZeroOnlyForZero) {
    Rng rng(46);
    for (int t = 0; t < 100; ++t) {
        const ME a = random_ratfunc_matrix(rng, 3);
        EXPECT_GE(sign(frob_sq(a)), 0);
        EXPECT_EQ(frob_sq(a).is_zero(), a.is_zero());
    }
    EXPECT_TRUE(frob_sq(ME(3)).is_zero());
}

TEST(Inverse, RandomInvertibleSamples) {
    Rng rng(47);
    int tested = 0;
    while (tested < 60) {
        const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, 4));
        const ME a = random_ratfunc_matrix(rng, n);
        const RatFunc d = det(a);
        if (d.is_zero()) {
            EXPECT_THROW(inverse(a), SingularMatrix);
            continue;
        }
        ++tested;
        const ME inv = inverse(a);
        EXPECT_EQ(inv * a, ME::identity(n));
        EXPECT_EQ(a * inv, ME::identity(n));
        EXPECT_EQ(det(inv), d.inv());
    }
}

TEST(Det, Multiplicative) {
    Rng rng(48);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, 4));
        const ME a = random_ratfunc_matrix(rng, n), b = random_ratfunc_matrix(rng, n);
        EXPECT_EQ(det(a * b), det(a) * det(b));
        const MQ c = random_rat_matrix(rng, n), d = random_rat_matrix(rng, n);
        EXPECT_EQ(det(c * d), det(c) * det(d));
        EXPECT_EQ(det(transpose(c)), det(c));
    }
}
