// SPDX-License-Identifier: MIT
// Unit tests for access structures, validation and symplectification.

#include <gtest/gtest.h>

#include <algorithm>

#include "mmsplab/access.hpp"

using namespace mmsplab;

namespace {

std::vector<Subset> sorted(std::vector<Subset> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

TEST(Threshold, TwoOneThree)
{
    auto fs = make_threshold(2, 1, 3);
    EXPECT_EQ(sorted(fs.accept_sets()), (std::vector<Subset>{0b011, 0b101, 0b110, 0b111}));
    EXPECT_EQ(sorted(fs.reject_sets()), (std::vector<Subset>{0b000, 0b001, 0b010, 0b100}));
    EXPECT_TRUE(validate(fs));
}

TEST(Threshold, ThreeOneThree)
{
    auto fs = make_threshold(3, 1, 3);
    EXPECT_EQ(fs.accept_sets(), (std::vector<Subset>{0b111}));
}

TEST(Threshold, BadParameters)
{
    for (auto [r, t, n] : std::vector<std::tuple<int, int, int>>{{1, 1, 3}, {4, 1, 3}, {2, -1, 3}, {2, 1, 21}}) {
        try {
            make_threshold(r, t, n);
            FAIL() << r << " " << t << " " << n;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), Errc::BadThreshold);
        }
    }
}

TEST(Threshold, MaterializedFormAlwaysValidates)
{
    for (int n = 1; n <= 7; ++n)
        for (int r = 1; r <= n; ++r)
            for (int t = 0; t < r; ++t) {
                auto fs = make_threshold(r, t, n);
                auto ex = make_explicit(n, fs.accept_sets(), fs.reject_sets());
                EXPECT_TRUE(validate(ex)) << r << t << n;
            }
}

TEST(Validate, Example1)
{
    auto fs = make_explicit(3, {subset_from_players({1, 2}), subset_from_players({2, 3}), subset_from_players({1, 2, 3})},
                            {0, subset_from_players({1}), subset_from_players({2}), subset_from_players({3})});
    std::string diag;
    EXPECT_TRUE(validate(fs, &diag)) << diag;
}

TEST(Validate, Intersection)
{
    std::string diag;
    EXPECT_FALSE(validate(make_explicit(1, {0b1}, {0, 0b1}), &diag));
    EXPECT_NE(diag.find("both accepted and rejected"), std::string::npos);
}

TEST(Validate, NotMonotone)
{
    std::string diag;
    EXPECT_FALSE(validate(make_explicit(3, {subset_from_players({1, 2})}, {0}), &diag));
    EXPECT_NE(diag.find("{1,2,3}"), std::string::npos);
    EXPECT_FALSE(validate(make_explicit(3, {0b111}, {0b001}), &diag));
    EXPECT_NE(diag.find("reject side"), std::string::npos);
}

TEST(Validate, OutOfRangeSets)
{
    EXPECT_THROW(make_explicit(2, {0b100}, {}), Error);
    EXPECT_THROW(make_explicit(21, {}, {}), Error);
}

TEST(Symplectify, Basic)
{
    EXPECT_EQ(symplectify(subset_from_players({1, 2}), 3), subset_from_players({1, 2, 4, 5}));
    EXPECT_EQ(symplectify(0, 3), 0u);
    EXPECT_EQ(subset_label(symplectify(subset_from_players({1, 2}), 3)), "{1,2,4,5}");
    EXPECT_EQ(subset_label(0), "{}");
}

TEST(Symplectify, InjectiveAndOrderPreserving)
{
    const int n = 5;
    std::vector<Subset> images;
    for (Subset a = 0; a < (1u << n); ++a) {
        Subset sa = symplectify(a, n);
        EXPECT_EQ(popcount(sa), 2 * popcount(a));
        images.push_back(sa);
        for (Subset b = 0; b < (1u << n); ++b) EXPECT_EQ((a & b) == a, (sa & symplectify(b, n)) == sa);
    }
    std::sort(images.begin(), images.end());
    EXPECT_EQ(std::unique(images.begin(), images.end()), images.end());
}

TEST(Symplectify, ThresholdStructure)
{
    auto fs = symplectify_structure(make_threshold(2, 1, 3));
    EXPECT_EQ(fs.n, 6);
    EXPECT_EQ(fs.base_n, 3);
    std::vector<Subset> acc, rej;
    for (Subset a : {0b011u, 0b101u, 0b110u, 0b111u}) acc.push_back(symplectify(a, 3));
    for (Subset b : {0b000u, 0b001u, 0b010u, 0b100u}) rej.push_back(symplectify(b, 3));
    EXPECT_EQ(sorted(fs.accept_sets()), sorted(acc));
    EXPECT_EQ(sorted(fs.reject_sets()), sorted(rej));
    EXPECT_TRUE(validate(fs));
    EXPECT_THROW(symplectify_structure(fs), Error);
}

TEST(Symplectify, ExplicitStructure)
{
    auto fs = symplectify_structure(make_explicit(3, {0b011, 0b111}, {0, 0b001}));
    EXPECT_EQ(fs.accept, (std::vector<Subset>{symplectify(0b011, 3), symplectify(0b111, 3)}));
    EXPECT_EQ(fs.reject, (std::vector<Subset>{0, symplectify(0b001, 3)}));
}

TEST(Subsets, OfSize)
{
    auto s = subsets_of_size(5, 2);
    EXPECT_EQ(s.size(), 10u);
    for (auto x : s) EXPECT_EQ(popcount(x), 2);
    EXPECT_EQ(subsets_of_size(4, 0), (std::vector<Subset>{0}));
    EXPECT_EQ(subset_players(0b1011), (std::vector<int>{1, 2, 4}));
}
