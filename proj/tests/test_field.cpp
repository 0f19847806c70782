// SPDX-License-Identifier: MIT
// Unit tests for GF(p^r) arithmetic, traces and the subfield tower.
// Expected constants come from tests/oracles/field_oracle.py.

#include <gtest/gtest.h>

#include "mmsplab/field.hpp"

using namespace mmsplab;

namespace {

std::vector<Elem> all_elements(const FieldCtx& F)
{
    std::vector<Elem> out;
    u128 q = *F.order();
    for (u128 i = 0; i < q; ++i) out.push_back(F.from_index(i));
    return out;
}

} // namespace

TEST(FieldBuild, PrimeFieldUsesModulusX)
{
    auto F = field_build(3, 1);
    EXPECT_EQ(F->p(), 3u);
    EXPECT_EQ(F->r(), 1);
    EXPECT_EQ(F->modulus(), (nt::Poly{0, 1}));
}

TEST(FieldBuild, RejectsNonPrime)
{
    try {
        field_build(4, 1);
        FAIL() << "expected NotPrime";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotPrime);
    }
}

TEST(FieldBuild, RejectsReducibleModulus)
{
    try {
        field_build(3, 2, nt::Poly{2, 0, 1}); // x^2 - 1 = (x-1)(x+1)
        FAIL() << "expected ReduciblePolynomial";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::ReduciblePolynomial);
    }
}

TEST(FieldBuild, DefaultModuliMatchOracle)
{
    struct Case {
        uint32_t p;
        int r;
        nt::Poly f;
    };
    const std::vector<Case> cases = {
        {2, 2, {1, 1, 1}},    {2, 3, {1, 0, 1, 1}},    {2, 4, {1, 0, 0, 1, 1}}, {3, 2, {1, 0, 1}},
        {3, 3, {1, 0, 2, 1}}, {3, 4, {1, 0, 1, 1, 1}}, {5, 2, {1, 1, 1}},       {7, 2, {1, 0, 1}},
    };
    for (const auto& c : cases) EXPECT_EQ(field_build(c.p, c.r)->modulus(), c.f) << c.p << "^" << c.r;
}

TEST(FieldArith, XSquaredInF9)
{
    auto F = field_build(3, 2, nt::Poly{2, 2, 1}); // x^2 - x - 1
    auto x = FieldElement(F, F->x());
    EXPECT_EQ((x * x).coeffs(), (std::vector<int64_t>{1, 1}));
}

TEST(FieldArith, PrimeFieldAddition)
{
    auto F = field_build(3, 1);
    auto two = FieldElement::scalar(F, 2);
    EXPECT_EQ((two + two).coeffs(), (std::vector<int64_t>{1}));
}

TEST(FieldArith, InverseExhaustiveSmallFields)
{
    for (auto [p, r] : std::vector<std::pair<uint32_t, int>>{{3, 2}, {2, 4}, {5, 2}, {3, 3}, {7, 1}}) {
        auto F = field_build(p, r);
        for (const auto& a : all_elements(*F)) {
            if (F->is_zero(a)) continue;
            EXPECT_TRUE(F->is_one(F->mul(a, F->inv(a))));
        }
    }
}

TEST(FieldArith, InverseOfZeroThrows)
{
    auto F = field_build(3, 2);
    EXPECT_THROW(F->inv(F->zero()), Error);
}

TEST(FieldArith, F16InverseOfXMatchesOracle)
{
    auto F = field_build(2, 4);
    EXPECT_EQ(F->coeffs(F->inv(F->x())), (std::vector<int64_t>{0, 0, 1, 1}));
}

TEST(FieldArith, MixingFieldsThrows)
{
    auto F3 = field_build(3, 1);
    auto F5 = field_build(5, 1);
    EXPECT_THROW(FieldElement::scalar(F3, 1) + FieldElement::scalar(F5, 1), Error);
}

TEST(FieldArith, FieldAxiomsF9)
{
    auto F = field_build(3, 2);
    auto els = all_elements(*F);
    for (const auto& a : els)
        for (const auto& b : els) {
            EXPECT_EQ(F->mul(a, b), F->mul(b, a));
            for (const auto& c : els) EXPECT_EQ(F->mul(a, F->add(b, c)), F->add(F->mul(a, b), F->mul(a, c)));
        }
}

TEST(FieldTrace, F9TracesMatchOracle)
{
    auto F = field_build(3, 2, nt::Poly{2, 2, 1});
    const std::vector<uint32_t> expected = {0, 2, 1, 1, 0, 2, 2, 1, 0};
    auto els = all_elements(*F);
    for (size_t i = 0; i < els.size(); ++i) EXPECT_EQ(F->trace(els[i]), expected[i]) << i;
    EXPECT_EQ(F->trace(F->x()), 1u);
}

TEST(FieldTrace, DefaultF9TracesMatchOracle)
{
    auto F = field_build(3, 2);
    const std::vector<uint32_t> expected = {0, 2, 1, 0, 2, 1, 0, 2, 1};
    auto els = all_elements(*F);
    for (size_t i = 0; i < els.size(); ++i) EXPECT_EQ(F->trace(els[i]), expected[i]) << i;
}

TEST(FieldTrace, TraceOfOneIsDegree)
{
    for (auto [p, r] : std::vector<std::pair<uint32_t, int>>{{3, 2}, {2, 4}, {5, 3}, {3, 5}}) {
        auto F = field_build(p, r);
        EXPECT_EQ(F->trace(F->one()), static_cast<uint32_t>(r % p));
        EXPECT_EQ(F->trace(F->zero()), 0u);
    }
}

TEST(FieldTrace, MatchesSumOfConjugates)
{
    for (auto [p, r] : std::vector<std::pair<uint32_t, int>>{{3, 2}, {2, 4}, {5, 2}, {3, 3}}) {
        auto F = field_build(p, r);
        for (const auto& a : all_elements(*F)) {
            Elem s = F->zero(), c = a;
            for (int k = 0; k < r; ++k) {
                s = F->add(s, c);
                c = F->frob(c);
            }
            EXPECT_EQ(s, F->scalar(F->trace(a)));
        }
    }
}

TEST(FieldTrace, LinearFrobeniusInvariantNondegenerate)
{
    for (auto [p, r] : std::vector<std::pair<uint32_t, int>>{{3, 2}, {2, 3}, {5, 2}}) {
        auto F = field_build(p, r);
        auto els = all_elements(*F);
        for (const auto& z : els) {
            EXPECT_EQ(F->trace(F->pow(z, p)), F->trace(z));
            bool witness = F->is_zero(z);
            for (const auto& w : els) {
                for (uint32_t a = 0; a < p; ++a)
                    for (uint32_t b = 0; b < p; ++b) {
                        Elem lhs = F->add(F->mul_scalar(z, a), F->mul_scalar(w, b));
                        EXPECT_EQ(F->trace(lhs), (a * F->trace(z) + b * F->trace(w)) % p);
                    }
                if (F->trace(F->mul(z, w)) != 0) witness = true;
            }
            EXPECT_TRUE(witness);
        }
    }
}

TEST(FieldFrobenius, MatchesPowP)
{
    auto F = field_build(3, 4);
    for (const auto& a : all_elements(*F)) EXPECT_EQ(F->frob(a), F->pow(a, 3));
}

TEST(Tower, DepthZeroRejected) { EXPECT_THROW(tower_build(3, 0), Error); }

TEST(Tower, F9GeneratorMatchesOracle)
{
    auto T = tower_build(3, 1);
    EXPECT_EQ(T->r(), 2);
    const Elem& e1 = T->tower_gen(1);
    EXPECT_EQ(T->coeffs(e1), (std::vector<int64_t>{1, 1}));
    EXPECT_EQ(T->frob_k(e1, 2), e1);
    EXPECT_NE(T->frob(e1), e1);
    EXPECT_EQ(T->tower_level(e1), 1);
    EXPECT_EQ(T->tower_level(T->one()), 0);
}

TEST(Tower, F16ChainMatchesOracle)
{
    auto T = tower_build(2, 2);
    EXPECT_EQ(T->modulus(), (nt::Poly{1, 0, 0, 1, 1}));
    EXPECT_EQ(T->coeffs(T->tower_gen(1)), (std::vector<int64_t>{1, 1, 0, 1}));
    EXPECT_EQ(T->coeffs(T->tower_gen(2)), (std::vector<int64_t>{0, 1, 0, 0}));
    /* F2 < F4 < F16: exactly 2, 4, 16 elements at levels <= 0, 1, 2. */
    int counts[3] = {0, 0, 0};
    for (const auto& a : all_elements(*T)) counts[T->tower_level(a)]++;
    EXPECT_EQ(counts[0], 2);
    EXPECT_EQ(counts[0] + counts[1], 4);
    EXPECT_EQ(counts[0] + counts[1] + counts[2], 16);
}

TEST(Tower, F81GeneratorsMatchOracle)
{
    auto T = tower_build(3, 2);
    EXPECT_EQ(T->coeffs(T->tower_gen(1)), (std::vector<int64_t>{1, 1, 2, 0}));
    EXPECT_EQ(T->coeffs(T->tower_gen(2)), (std::vector<int64_t>{1, 0, 1, 0}));
    Elem s = T->add(T->tower_gen(1), T->tower_gen(2));
    EXPECT_EQ(T->tower_level(s), 2);
}

TEST(Tower, LevelMonotoneUnderOperations)
{
    auto T = tower_build(3, 2);
    auto els = all_elements(*T);
    for (size_t i = 0; i < els.size(); i += 7)
        for (size_t j = 0; j < els.size(); j += 5) {
            int li = T->tower_level(els[i]), lj = T->tower_level(els[j]);
            EXPECT_LE(T->tower_level(T->mul(els[i], els[j])), std::max(li, lj));
            EXPECT_LE(T->tower_level(T->add(els[i], els[j])), std::max(li, lj));
        }
}

TEST(Tower, DeepTowersHaveExactLevels)
{
    for (auto [p, K] : std::vector<std::pair<uint32_t, int>>{{3, 4}, {2, 5}, {3, 6}, {2, 6}, {5, 5}}) {
        auto T = tower_build(p, K);
        ASSERT_EQ(T->r(), 1 << K);
        for (int j = 0; j <= K; ++j) EXPECT_EQ(T->tower_level(T->tower_gen(j)), j) << p << " " << K << " " << j;
    }
}

TEST(Tower, NoTowerOnPlainField)
{
    auto F = field_build(3, 2);
    try {
        F->tower_level(F->one());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NoTower);
    }
}
