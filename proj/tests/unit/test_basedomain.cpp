#include <gtest/gtest.h>

#include "qvlab/basedomain.hpp"
#include "qvlab/errors.hpp"
#include "qvlab/sampling.hpp"

using namespace qvlab;

namespace {

using QD = BaseDomain<Rational>;
using TD = BaseDomain<RatFunc>;

Rational q(char const* s)
{
    return parse_rational(s);
}

TD composite2()
{
    return TD::valuation_ring(CompositeValuation(2));
}

RatFunc t()
{
    return RatFunc::t();
}

// Least positive integer s (brute force) with s*f in S, for S = Z or Z_(p):
// scanning s = 1, 2, ... and keeping only the part that S needs.
Rational scan_clear(QD const& S, Rational const& f)
{
    for (long s = 1; s <= 100000; ++s)
        if (S.contains(Rational(s) * f))
            return Rational(s);
    throw std::logic_error("scan range exceeded");
}

} // namespace

TEST(BaseDomain, ContainsExamples)
{
    EXPECT_TRUE(QD::local(2).contains(q("3/5")));
    EXPECT_FALSE(QD::local(2).contains(q("1/2")));
    EXPECT_FALSE(composite2().contains(RatFunc(Rational(3)) / (RatFunc(Rational(2)) * t())));
    EXPECT_TRUE(QD::integers().contains(q("-7")));
    EXPECT_FALSE(QD::integers().contains(q("1/3")));
    EXPECT_TRUE(QD::valuation_ring(PadicValuation(3)).contains(q("2/5")));
    EXPECT_TRUE(QD::local(2).contains(Rational(0)));
    EXPECT_TRUE(composite2().contains(RatFunc(0)));
}

TEST(BaseDomain, ClearExamples)
{
    EXPECT_EQ(QD::local(2).clear_to_domain(q("3/8")), Rational(8));
    EXPECT_EQ(QD::integers().clear_to_domain(q("5/6")), Rational(6));
    auto S = composite2();
    auto f = RatFunc(Rational(3)) / (RatFunc(Rational(2)) * t());
    auto s = S.clear_to_domain(f);
    EXPECT_EQ(s, RatFunc(Rational(2)) * t());
    EXPECT_EQ(S.value(s), GroupElement({1, 1}));
    EXPECT_GE(*composite_valuation(2, s * f), GroupElement::zero(2));
    EXPECT_EQ(QD::local(2).clear_to_domain(Rational(0)), Rational(1));
    EXPECT_EQ(S.clear_to_domain(RatFunc(0)), RatFunc(1));
}

TEST(BaseDomain, NoninvertibleExamples)
{
    EXPECT_EQ(QD::local(3).noninvertible(), Rational(3));
    EXPECT_EQ(QD::integers().noninvertible(), Rational(2));
    EXPECT_EQ(QD::valuation_ring(PadicValuation(5)).noninvertible(), Rational(5));
    EXPECT_EQ(composite2().noninvertible(), t());
    EXPECT_EQ(composite2().value(t()), GroupElement({1, 0}));
}

TEST(BaseDomain, NoninvertibleIsNotAUnit)
{
    for (auto const& S : {QD::integers(), QD::local(2), QD::local(7), QD::valuation_ring(PadicValuation(3))}) {
        auto s = S.noninvertible();
        EXPECT_TRUE(S.contains(s));
        EXPECT_FALSE(S.contains(Rational(1) / s));
        EXPECT_FALSE(S.is_unit(s));
        EXPECT_TRUE(S.is_unit(Rational(1)));
    }
    auto T = composite2();
    EXPECT_TRUE(T.contains(t()));
    EXPECT_FALSE(T.contains(RatFunc(1) / t()));
    EXPECT_FALSE(T.is_unit(t()));
    EXPECT_TRUE(T.is_unit(RatFunc(Rational(3)) + t()));
}

TEST(BaseDomain, ConstructionRejectsNonPrimes)
{
    EXPECT_THROW(QD::local(6), config_error);
    EXPECT_THROW(QD::local(0), config_error);
}

TEST(BaseDomain, ClearIsMinimalFuzzed)
{
    SplitMix64 rng(21);
    SampleSpec spec;
    for (auto const& S : {QD::integers(), QD::local(2), QD::local(3)}) {
        for (int i = 0; i < 500; ++i) {
            auto f = Sampler<Rational>::field(rng, S, spec);
            auto s = S.clear_to_domain(f);
            EXPECT_TRUE(S.contains(s));
            EXPECT_FALSE(s.is_zero());
            EXPECT_TRUE(S.contains(s * f));
            // Up to units of S, the brute-force least positive integer.
            EXPECT_TRUE(S.is_unit(s / scan_clear(S, f))) << to_string(f);
        }
    }
    auto T = composite2();
    for (int i = 0; i < 500; ++i) {
        auto f = Sampler<RatFunc>::field(rng, T, spec);
        auto s = T.clear_to_domain(f);
        EXPECT_TRUE(T.contains(s));
        EXPECT_TRUE(T.contains(s * f));
        if (!f.is_zero() && !T.contains(f))
            EXPECT_EQ(*T.value(s), -*T.value(f));
    }
}

TEST(BaseDomain, ChainInclusion)
{
    auto Z = QD::integers();
    auto Z2 = QD::local(2);
    EXPECT_TRUE(Z.subset_of(Z2));
    EXPECT_FALSE(Z2.subset_of(Z));
    SplitMix64 rng(4);
    SampleSpec spec;
    for (int i = 0; i < 500; ++i) {
        auto f = Sampler<Rational>::field(rng, Z, spec);
        if (Z.contains(f))
            EXPECT_TRUE(Z2.contains(f));
    }
}

TEST(BaseDomain, CommonDenominator)
{
    auto S = QD::local(2);
    std::vector<Rational> fs{q("1/4"), q("3/8"), q("5/3")};
    EXPECT_EQ(S.common_denominator(std::span<const Rational>(fs)), Rational(8));
    auto Z = QD::integers();
    EXPECT_EQ(Z.common_denominator(std::span<const Rational>(fs)), Rational(24));
}

TEST(BaseDomain, ScalarFiber)
{
    // Fiber {a : a*c in S for all c}.
    auto S = QD::local(2);
    std::vector<Rational> one{Rational(1)};
    EXPECT_FALSE(S.scalar_fiber_witness(std::span<const Rational>(one)).has_value());
    std::vector<Rational> two{Rational(2)};
    auto w = S.scalar_fiber_witness(std::span<const Rational>(two));
    ASSERT_TRUE(w.has_value());
    EXPECT_FALSE(S.contains(*w));
    EXPECT_TRUE(S.contains(*w * Rational(2)));
    std::vector<Rational> half{q("1/2")};
    auto w2 = S.scalar_fiber_witness(std::span<const Rational>(half));
    ASSERT_TRUE(w2.has_value());
    EXPECT_TRUE(S.contains(*w2));
    EXPECT_FALSE(S.contains(*w2 * q("1/2")));
    auto Z = QD::integers();
    std::vector<Rational> mixed{Rational(2), Rational(3)};
    EXPECT_FALSE(Z.scalar_fiber_witness(std::span<const Rational>(mixed)).has_value());
}
