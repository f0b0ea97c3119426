#include <gtest/gtest.h>

#include <algorithm>

#include "cayleyq/error.hpp"
#include "cayleyq/polynomial.hpp"
#include "generators.hpp"

using namespace cayleyq;
using cayleyq::testing::random_nonzero_poly;
using cayleyq::testing::random_poly;

namespace {
const Poly e = Poly::e();
const Poly one = 1;
}  // namespace

TEST(Poly, Basics) {
    const Poly p{1, 0, -3};  // 1 - 3e^2
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(p.leading(), Rat(-3));
    EXPECT_EQ(p.order_at_zero(), 0U);
    EXPECT_EQ(Poly({0, 0, 2, 1}).order_at_zero(), 2U);
    EXPECT_EQ(Poly({0, 0, 2, 1}).trailing(), Rat(2));
    EXPECT_EQ(Poly().degree(), -1);
    EXPECT_TRUE(Poly({0, 0}).is_zero());
    EXPECT_EQ(p.derivative(), Poly({0, -6}));
    EXPECT_EQ(p.eval(Rat(2)), Rat(-11));
    EXPECT_EQ((one + e) * (one - e), one - e * e);
}

TEST(Poly, DivMod) {
    const Poly a{-1, 0, 0, 1};  // e^3 - 1
    const Poly b{-1, 1};        // e - 1
    const auto [q, r] = Poly::divmod(a, b);
    EXPECT_EQ(q, Poly({1, 1, 1}));
    EXPECT_TRUE(r.is_zero());
    const auto [q2, r2] = Poly::divmod(Poly({1, 0, 1}), b);
    EXPECT_EQ(q2 * b + r2, Poly({1, 0, 1}));
    EXPECT_EQ(r2, Poly(2));
    EXPECT_THROW(Poly::divmod(a, Poly()), DivisionByZero);
}

TEST(Poly, GcdIsMonic) {
    const Poly f = Poly({2, 2}) * Poly({1, 0, 1});  // 2(1+e)(1+e^2)
    const Poly g = Poly({3, 3}) * Poly({-1, 1});    // 3(1+e)(e-1)
    EXPECT_EQ(gcd(f, g), Poly({1, 1}));
    EXPECT_EQ(gcd(f, Poly()), f.monic());
    EXPECT_TRUE(gcd(Poly(), Poly()).is_zero());
    EXPECT_TRUE(gcd(Poly({1, 1}), Poly({-1, 1})).is_one());
}

TEST(SquarefreePart, Examples) {
    EXPECT_EQ(squarefree_part(e * e * (one + e)), one + e);
    EXPECT_EQ(squarefree_part(one), one);
    EXPECT_EQ(squarefree_part(e * e * e), e);
    EXPECT_EQ(squarefree_part(Poly(Rat(-7)) * pow(e, 4)), one);
    EXPECT_THROW(squarefree_part(Poly()), std::invalid_argument);
}

// Oracle: p is assembled from distinct linear factors with known
// multiplicities, so the odd part is known without factoring.
TEST(SquarefreePart, MatchesKnownFactorization) {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<long> roots;
        const auto k = static_cast<std::size_t>(uniform_int(rng, 1, 4));
        while (roots.size() < k) {
            const long r = uniform_int(rng, -6, 6);
            if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
        }
        Poly p = Poly(Rat(uniform_int(rng, 1, 5) * (trial % 2 ? -1 : 1)));
        Poly odd = 1;
        for (long r : roots) {
            const Poly f{-r, 1};
            const auto mult = static_cast<unsigned>(uniform_int(rng, 1, 5));
            p = p * pow(f, mult);
            if (mult % 2 == 1) odd = odd * f;
        }
        EXPECT_EQ(squarefree_part(p), odd) << p.str();
    }
}

TEST(SquarefreeDecomposition, ReconstructsInput) {
    Rng rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        Poly p = 1;
        for (int f = 0; f < 3; ++f)
            p = p * pow(random_nonzero_poly(rng, 2, 3), static_cast<unsigned>(uniform_int(rng, 1, 3)));
        const auto factors = squarefree_decomposition(p);
        Poly back = p.leading();
        for (std::size_t i = 0; i < factors.size(); ++i) {
            back = back * pow(factors[i], static_cast<unsigned>(i + 1));
            if (!factors[i].is_constant()) {
                EXPECT_TRUE(gcd(factors[i], factors[i].derivative()).is_one()) << "factor not squarefree";
            }
            for (std::size_t j = i + 1; j < factors.size(); ++j) EXPECT_TRUE(gcd(factors[i], factors[j]).is_one());
        }
        EXPECT_EQ(back, p);
    }
}

TEST(Poly, RingLaws) {
    Rng rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        const Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + b - b, a);
        if (!b.is_zero()) {
            const auto [q, r] = Poly::divmod(a, b);
            EXPECT_EQ(q * b + r, a);
            EXPECT_LT(r.degree(), b.degree());
        }
    }
}
