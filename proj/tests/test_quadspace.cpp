#include <gtest/gtest.h>

#include "cayleyq/cayley.hpp"
#include "cayleyq/error.hpp"
#include "cayleyq/quadspace.hpp"
#include "cayleyq/sampling.hpp"
#include "generators.hpp"

using namespace cayleyq;

namespace {

const RatFunc e = RatFunc::e();
using MQ = Mat<Rat>;
using ME = Mat<RatFunc>;

BilinearSpace space(std::initializer_list<long> d) {
    std::vector<Rat> c;
    for (long x : d) c.emplace_back(x);
    return BilinearSpace(std::move(c));
}

BilinearSpace random_space(Rng& rng, std::size_t n) {
    std::vector<Rat> d;
    for (std::size_t i = 0; i < n; ++i) d.emplace_back(mpz_class(uniform_int(rng, 1, 6)), mpz_class(uniform_int(rng, 1, 3)));
    return BilinearSpace(std::move(d));
}

}  // namespace

TEST(BilinearSpace, Validation) {
    EXPECT_THROW(space({1}), std::invalid_argument);
    EXPECT_THROW(space({1, 0}), std::invalid_argument);
    EXPECT_THROW(space({1, -2}), std::invalid_argument);
    EXPECT_TRUE(BilinearSpace::identity(3).is_identity_form());
    EXPECT_FALSE(space({1, 2}).is_identity_form());
    EXPECT_EQ(space({2, 3, 5}).gram_det(), Rat(30));
}

TEST(FormValues, Examples) {
    const BilinearSpace sp = space({1, 2, 3});
    EXPECT_EQ(q_value(sp, Vec<Rat>{1, 1, 1}), Rat(6));
    EXPECT_EQ(b_value(sp, Vec<Rat>{1, 0, 2}, Vec<Rat>{3, 5, 1}), Rat(9));
    EXPECT_EQ(q_value(BilinearSpace::identity(2), Vec<RatFunc>{1, e}), RatFunc(1) + e * e);
    EXPECT_THROW(q_value(sp, Vec<Rat>{1, 1}), DimensionMismatch);
}

TEST(Reflect, Examples) {
    EXPECT_EQ(reflect(space({1, 1}), Vec<Rat>{1, 1}).matrix(), (MQ{{0, -1}, {-1, 0}}));
    EXPECT_EQ(reflect(space({1, 1}), Vec<Rat>{1, 0}).matrix(), MQ::diagonal({-1, 1}));
    // b = x1 y1 + 2 x2 y2, u = (1,1), q(u) = 3
    EXPECT_EQ(reflect(space({1, 2}), Vec<Rat>{1, 1}).matrix(),
              (MQ{{Rat(mpz_class(1), mpz_class(3)), Rat(mpz_class(-4), mpz_class(3))},
                  {Rat(mpz_class(-2), mpz_class(3)), Rat(mpz_class(-1), mpz_class(3))}}));
    EXPECT_THROW(reflect(space({1, 1}), Vec<Rat>{0, 0}), std::invalid_argument);
}

TEST(Reflect, StructuralProperties) {
    Rng rng(51);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 2, 5));
        const BilinearSpace sp = random_space(rng, n);
        const auto u = random_nonzero_vector<RatFunc>(rng, n);
        const Isometry<RatFunc> tau = reflect(sp, u);
        EXPECT_EQ(tau * tau, Isometry<RatFunc>::trusted(ME::identity(n)));
        EXPECT_EQ(tau.det_sign(), -1);
        EXPECT_EQ(tau.matrix() * u, RatFunc(-1) * u);
        EXPECT_EQ(reflect(sp, RatFunc(3) * e * u), tau);
        EXPECT_NO_THROW(Isometry<RatFunc>(sp, tau.matrix()));
        // A vector b-orthogonal to u is fixed: take v = q(u) e_0 - b(e_0, u) u.
        const auto e0 = Vec<RatFunc>::unit(n, 0);
        const Vec<RatFunc> v = q_value(sp, u) * e0 - b_value(sp, e0, u) * u;
        EXPECT_TRUE(b_value(sp, v, u).is_zero());
        EXPECT_EQ(tau.matrix() * v, v);
    }
}

TEST(Isometry, RejectsNonIsometries) {
    EXPECT_THROW(Isometry<Rat>(space({1, 1}), MQ{{1, 1}, {0, 1}}), NotAnIsometry);
    // orthogonal for the identity form but not for (1, 2)
    EXPECT_THROW(Isometry<Rat>(space({1, 2}), MQ{{0, 1}, {1, 0}}), NotAnIsometry);
    EXPECT_NO_THROW(Isometry<Rat>(space({2, 2}), MQ{{0, 1}, {1, 0}}));
    EXPECT_THROW(Isometry<Rat>(space({1, 1}), MQ::identity(3)), DimensionMismatch);
}

TEST(Isometry, InverseUsesTheForm) {
    const BilinearSpace sp = space({1, 2});
    const auto tau = reflect(sp, Vec<Rat>{1, 1});
    const auto sigma = tau * reflect(sp, Vec<Rat>{1, 0});
    EXPECT_EQ(sigma * sigma.inverse(sp), Isometry<Rat>::trusted(MQ::identity(2)));
    EXPECT_EQ(sigma.inverse(sp).matrix(), inverse(sigma.matrix()));
}

TEST(Decompose, Examples) {
    const BilinearSpace sp = BilinearSpace::identity(3);
    const ReflectionSeq<Rat> units{{Vec<Rat>::unit(3, 0), Vec<Rat>::unit(3, 1), Vec<Rat>::unit(3, 2)}};
    EXPECT_EQ(compose(sp, units).matrix(), -MQ::identity(3));

    const auto rs = decompose(sp, Isometry<Rat>::trusted(-MQ::identity(3)));
    ASSERT_EQ(rs.vectors.size(), 3U);
    EXPECT_EQ(rs.vectors[0], (Vec<Rat>{-2, 0, 0}));
    EXPECT_EQ(compose(sp, rs).matrix(), -MQ::identity(3));

    EXPECT_TRUE(decompose(sp, Isometry<Rat>::trusted(MQ::identity(3))).vectors.empty());
    EXPECT_THROW(decompose(space({1, 1}), Isometry<Rat>::trusted(MQ::identity(3))), DimensionMismatch);
}

TEST(Decompose, RoundTripOverRationals) {
    Rng rng(52);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 2, 5));
        const BilinearSpace sp = random_space(rng, n);
        const auto s = random_reflection_product<Rat>(rng, sp, static_cast<std::size_t>(uniform_int(rng, 0, 6)));
        const auto rs = decompose(sp, s.sigma);
        EXPECT_LE(rs.vectors.size(), n);
        EXPECT_EQ(compose(sp, rs), s.sigma);
        EXPECT_EQ(rs.vectors.size() % 2 == 0, s.sigma.is_rotation());
    }
}

TEST(Decompose, RoundTripOverLaurentField) {
    Rng rng(53);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 2, 4));
        const BilinearSpace sp = BilinearSpace::identity(n);
        const Isometry<RatFunc> sigma(sp, cayley(e * embed<RatFunc>(random_skew(rng, n))));
        const auto rs = decompose(sp, sigma);
        EXPECT_EQ(compose(sp, rs), sigma);
        EXPECT_EQ(rs.vectors.size() % 2, 0U);
    }
}

TEST(SpinorNorm, Examples) {
    const BilinearSpace sp = space({1, 1});
    const ReflectionSeq<Rat> rs{{Vec<Rat>{1, 0}, Vec<Rat>{1, 1}}};
    EXPECT_EQ(spinor_norm(sp, rs).str(), "2");
    EXPECT_EQ(spinor_norm(sp, compose(sp, rs)).str(), "2");
    EXPECT_TRUE(spinor_norm(sp, Isometry<Rat>::trusted(MQ::identity(2))).is_trivial());

    const ReflectionSeq<RatFunc> rse{{Vec<RatFunc>{1, e}, Vec<RatFunc>{1, 0}}};
    EXPECT_EQ(spinor_norm(sp, rse).str(), "1+e^2");
    EXPECT_EQ(spinor_norm(sp, compose(sp, rse)).str(), "1+e^2");
}

TEST(SpinorNorm, NegIdentityMatchesDeterminantClass) {
    for (const auto& sp : {space({1, 1}), space({2, 2}), space({1, 2}), space({1, 1, 1, 3})}) {
        const auto [theta, det_class] = check_neg_identity<Rat>(sp);
        EXPECT_EQ(theta, det_class);
    }
    EXPECT_TRUE(check_neg_identity<Rat>(space({1, 1})).first.is_trivial());
    EXPECT_TRUE(check_neg_identity<Rat>(space({2, 2})).first.is_trivial());
    EXPECT_EQ(check_neg_identity<Rat>(space({1, 2})).first.str(), "2");
    EXPECT_THROW(check_neg_identity<Rat>(space({1, 1, 1})), std::invalid_argument);
    EXPECT_EQ(check_neg_identity<RatFunc>(space({1, 3})).first.str(), "3");
}

// Oracle: the class of prod q(u_i) over the generating list is computed
// without decomposing, so agreement checks well-definedness of theta.
TEST(SpinorNorm, IndependentOfReflectionList) {
    Rng rng(54);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 2, 4));
        const BilinearSpace sp = random_space(rng, n);
        const auto s = random_reflection_product<Rat>(rng, sp, static_cast<std::size_t>(uniform_int(rng, 0, 5)));
        EXPECT_EQ(spinor_norm(sp, s.generators), spinor_norm(sp, s.sigma));
    }
}

TEST(SpinorNorm, Homomorphism) {
    Rng rng(55);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 2, 4));
        const BilinearSpace sp = random_space(rng, n);
        const auto a = random_rotation<RatFunc>(rng, sp);
        const auto b = random_rotation<RatFunc>(rng, sp);
        EXPECT_EQ(spinor_norm(sp, a.sigma * b.sigma), spinor_norm(sp, a.sigma) * spinor_norm(sp, b.sigma));
    }
}
