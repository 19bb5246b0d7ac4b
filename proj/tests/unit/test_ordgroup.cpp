#include <gtest/gtest.h>

#include "fuzz.hpp"
#include "qvlab/errors.hpp"
#include "qvlab/ordgroup.hpp"

using namespace qvlab;

TEST(OrdGroup, LexCompareExamples)
{
    EXPECT_EQ(lex_compare(GroupElement{1, -5}, GroupElement{2, 100}), std::strong_ordering::less);
    EXPECT_EQ(lex_compare(GroupElement{3, 7}, GroupElement{3, 7}), std::strong_ordering::equal);
    EXPECT_EQ(lex_compare(GroupElement{0, 9}, GroupElement{0, 2}), std::strong_ordering::greater);
}

TEST(OrdGroup, AddNegExamples)
{
    EXPECT_EQ(GroupElement({1, 2}) + GroupElement({-1, 3}), GroupElement({0, 5}));
    EXPECT_EQ(-GroupElement({4, -7}), GroupElement({-4, 7}));
    GroupElement a{12, -3};
    EXPECT_TRUE((a + -a).is_zero());
    EXPECT_EQ(a + -a, GroupElement::zero(2));
}

TEST(OrdGroup, RankMismatchIsStructural)
{
    EXPECT_THROW((void)lex_compare(GroupElement{1}, GroupElement{1, 2}), structural_error);
    EXPECT_THROW((void)(GroupElement{1} + GroupElement{1, 2}), structural_error);
    EXPECT_THROW(GroupElement(std::vector<Integer>{}), structural_error);
}

TEST(OrdGroup, TextRoundTrip)
{
    EXPECT_EQ(to_string(GroupElement{3, -1}), "(3,-1)");
    EXPECT_EQ(parse_group_element("(3,-1)"), GroupElement({3, -1}));
    EXPECT_EQ(parse_group_element(" ( 12 ) "), GroupElement({12}));
    EXPECT_THROW(parse_group_element("3,-1"), parse_error);
    auto big = parse_group_element("(123456789012345678901234567890,-1)");
    EXPECT_EQ(to_string(big), "(123456789012345678901234567890,-1)");
}

TEST(OrdGroup, FuzzedOrderAndGroupLaws)
{
    SplitMix64 rng(7);
    for (std::size_t rank : {1u, 2u, 3u})
        for (int i = 0; i < 1000; ++i) {
            auto a = fuzz::group_element(rng, rank, 20);
            auto b = fuzz::group_element(rng, rank, 20);
            auto c = fuzz::group_element(rng, rank, 20);
            int outcomes = (a < b) + (a == b) + (a > b);
            EXPECT_EQ(outcomes, 1);
            if (a < b)
                EXPECT_LT(a + c, b + c);
            EXPECT_EQ((a + b) + c, a + (b + c));
            EXPECT_EQ(a + b, b + a);
            EXPECT_EQ(Integer(3) * a, a + a + a);
        }
}
