// SPDX-License-Identifier: MIT
// Unit tests for linear CSS and linear CSPIR protocols and their audits.

#include <gtest/gtest.h>

#include <functional>

#include "mmsplab/classical.hpp"
#include "mmsplab/constructions.hpp"
#include "mmsplab/fixtures.hpp"

using namespace mmsplab;

namespace {

CssProtocol example1_css()
{
    auto fx = fixtures::example1();
    return make_css(fx.bundle.G1, fx.bundle.F, symplectify_structure(fx.structure));
}

SpirProtocol example1_spir(int f)
{
    auto fx = fixtures::example1();
    return make_spir(fx.bundle.G1, fx.bundle.F, f, symplectify_structure(fx.structure));
}

Errc code_of(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return Errc::ParseError;
}

} // namespace

TEST(Css, Example1ShareWithZeroRandomness)
{
    auto p = example1_css();
    auto F3 = p.F.ctx();
    VecGF z = css_share(p, VecGF::from_ints(F3, {1, 0}), VecGF::from_ints(F3, {0, 0}));
    EXPECT_EQ(z.to_ints(), (std::vector<int64_t>{2, 1, 1, 1, 0, 1}));
}

TEST(Css, Example1DecodeRoundTripOnTwoThree)
{
    auto p = example1_css();
    auto F3 = p.F.ctx();
    Subset A = symplectify(subset_from_players({2, 3}), 3);
    auto rows = mask_to_rows(A);
    for (u128 im = 0; im < 9; ++im)
        for (u128 iu = 0; iu < 9; ++iu) {
            VecGF m = vector_from_index(F3, 2, im);
            VecGF z = css_share(p, m, vector_from_index(F3, 2, iu));
            auto out = css_decode(p, A, restrict_vec(z, rows));
            ASSERT_TRUE(out.has_value());
            EXPECT_EQ(*out, m);
        }
}

TEST(Css, DecodeRejectsUnqualifiedSets)
{
    auto p = example1_css();
    Subset B = symplectify(subset_from_players({1, 3}), 3);
    EXPECT_EQ(code_of([&] { css_decode(p, B, VecGF(p.F.ctx(), 4)); }), Errc::NotQualified);
}

TEST(Css, Example1AuditIsSecureAndAgreesWithMmsp)
{
    auto rep = css_audit(example1_css());
    EXPECT_TRUE(rep.secure());
    EXPECT_TRUE(rep.mmsp);
    EXPECT_TRUE(rep.crosscheck_ok());
    EXPECT_GT(rep.cases, 0u);
}

TEST(Css, RandomnessEqualToMessageKeepsSecrecyButLosesCorrectness)
{
    auto fx = fixtures::example1();
    auto p = make_css(fx.bundle.F, fx.bundle.F, symplectify_structure(fx.structure));
    auto rep = css_audit(p);
    EXPECT_FALSE(rep.find("correctness")->ok);
    EXPECT_TRUE(rep.find("correctness")->has_witness);
    EXPECT_TRUE(rep.find("secrecy")->ok);
    EXPECT_FALSE(rep.mmsp);
    EXPECT_TRUE(rep.crosscheck_ok());
}

TEST(Css, ZeroRandomnessLeaksToRejectSets)
{
    auto fx = fixtures::example1();
    auto p = make_css(MatGF::empty(fx.bundle.F.ctx(), 6, 0), fx.bundle.F, symplectify_structure(fx.structure));
    auto rep = css_audit(p);
    EXPECT_TRUE(rep.find("correctness")->ok);
    const auto* sec = rep.find("secrecy");
    EXPECT_FALSE(sec->ok);
    EXPECT_TRUE(sec->has_witness);
    EXPECT_TRUE(p.access.is_reject(sec->witness));
    EXPECT_TRUE(rep.crosscheck_ok());
}

TEST(Css, ThresholdVandermondeAuditsSecure)
{
    auto F5 = field_build(5, 1);
    for (auto [r, t, n] : std::vector<std::tuple<int, int, int>>{{2, 1, 3}, {3, 1, 4}, {3, 2, 4}, {2, 0, 2}}) {
        auto [G, F] = construct_css_threshold(r, t, n, F5);
        auto rep = css_audit(make_css(G, F, make_threshold(r, t, n)));
        EXPECT_TRUE(rep.secure()) << r << t << n;
        EXPECT_TRUE(rep.mmsp) << r << t << n;
    }
}

TEST(Css, AuditBudgetGuard)
{
    auto F101 = field_build(101, 1);
    auto [G, F] = construct_css_threshold(4, 2, 5, F101);
    auto p = make_css(G, F, make_threshold(4, 2, 5));
    EXPECT_EQ(code_of([&] { css_audit(p); }), Errc::TooLarge);
}

TEST(Css, ShapeErrors)
{
    auto fx = fixtures::example1();
    EXPECT_EQ(code_of([&] { make_css(fx.bundle.G1, fx.bundle.F, fx.structure); }), Errc::DimensionMismatch);
    auto p = example1_css();
    EXPECT_EQ(code_of([&] { css_share(p, VecGF(p.F.ctx(), 3), VecGF(p.F.ctx(), 2)); }), Errc::DimensionMismatch);
}

TEST(Css, TranscriptIsReplayable)
{
    auto p = example1_css();
    VecGF m = VecGF::from_ints(p.F.ctx(), {2, 1});
    Subset A = symplectify(subset_from_players({1, 2}), 3);
    auto t1 = css_transcript(p, m, A, 17), t2 = css_transcript(p, m, A, 17), t3 = css_transcript(p, m, A, 18);
    EXPECT_TRUE(t1.success);
    EXPECT_TRUE(t1 == t2);
    EXPECT_TRUE(t3.success);
    EXPECT_EQ(t1.entries.back().values, (std::vector<int64_t>{2, 1}));
}

TEST(Spir, StandardQueryShape)
{
    auto p = example1_spir(2);
    auto F3 = p.F.ctx();
    MatGF UQ(F3, 2, 4);
    MatGF Q = spir_query(p, 2, UQ);
    EXPECT_EQ(Q.col_range(0, 2), MatGF(F3, 6, 2));
    EXPECT_EQ(Q.col_range(2, 2), p.F);
    EXPECT_EQ(code_of([&] { spir_query(p, 0, UQ); }), Errc::BadIndex);
    EXPECT_EQ(code_of([&] { spir_query(p, 3, UQ); }), Errc::BadIndex);
    EXPECT_EQ(code_of([&] { spir_query(p, 1, MatGF(F3, 2, 2)); }), Errc::DimensionMismatch);
}

TEST(Spir, Example1AuditSingleFile)
{
    auto rep = spir_audit(example1_spir(1));
    EXPECT_TRUE(rep.secure());
    EXPECT_TRUE(rep.mmsp);
}

TEST(Spir, Example1AuditTwoFiles)
{
    auto rep = spir_audit(example1_spir(2));
    for (const auto& it : rep.items) EXPECT_TRUE(it.ok) << it.name << ": " << it.detail;
    EXPECT_TRUE(rep.crosscheck_ok());
}

TEST(Spir, NonStandardOffsetLeaksOtherFile)
{
    auto p = example1_spir(2);
    auto F3 = p.F.ctx();
    MatGF O1 = MatGF::hcat({p.F, p.F}), O2 = MatGF::hcat({MatGF(F3, 6, 2), p.F});
    p.offsets = std::vector<MatGF>{O1, O2};
    auto rep = spir_audit(p);
    EXPECT_FALSE(rep.find("correctness")->ok);
    EXPECT_FALSE(rep.find("server secrecy (structural)")->ok);
    EXPECT_FALSE(rep.find("server secrecy (empirical)")->ok);
    EXPECT_FALSE(rep.secure());
}

TEST(Spir, NonStandardOffsetWithinImageOfGIsAccepted)
{
    auto p = example1_spir(2);
    MatGF g = p.G;
    MatGF O1 = MatGF::hcat({p.F, g}), O2 = MatGF::hcat({g, p.F});
    p.offsets = std::vector<MatGF>{O1, O2};
    auto rep = spir_audit(p);
    for (const auto& it : rep.items) EXPECT_TRUE(it.ok) << it.name << ": " << it.detail;
}

TEST(Spir, UserSecrecyFailsWithoutQueryRandomness)
{
    auto fx = fixtures::example1();
    auto p = make_spir(MatGF::empty(fx.bundle.F.ctx(), 6, 0), fx.bundle.F, 2, symplectify_structure(fx.structure));
    auto rep = spir_audit(p);
    EXPECT_TRUE(rep.find("correctness")->ok);
    EXPECT_FALSE(rep.find("user secrecy")->ok);
    EXPECT_TRUE(rep.find("user secrecy")->has_witness);
}

TEST(Spir, TranscriptRetrievesRequestedFile)
{
    auto p = example1_spir(3);
    auto F3 = p.F.ctx();
    std::vector<VecGF> files{VecGF::from_ints(F3, {1, 2}), VecGF::from_ints(F3, {0, 1}), VecGF::from_ints(F3, {2, 2})};
    for (int k = 1; k <= 3; ++k)
        for (Subset A : p.access.accept_sets()) {
            auto t = spir_transcript(p, k, files, A, 99 + k);
            EXPECT_TRUE(t.success) << k << " " << subset_label(A);
            EXPECT_TRUE(t == spir_transcript(p, k, files, A, 99 + k));
        }
}

TEST(Spir, DecodeRequiresQualifiedSet)
{
    auto p = example1_spir(1);
    EXPECT_EQ(code_of([&] { spir_decode(p, symplectify(subset_from_players({2}), 3), VecGF(p.F.ctx(), 2)); }),
              Errc::NotQualified);
}
