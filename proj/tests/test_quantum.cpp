// SPDX-License-Identifier: MIT
// Unit tests for the dense quantum oracle, the symplectic track and the quantum protocols.

#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "mmsplab/constructions.hpp"
#include "mmsplab/fixtures.hpp"
#include "mmsplab/quantum/protocols.hpp"

using namespace mmsplab;
using namespace mmsplab::quantum;

namespace {

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

FieldPtr F3() { return field_build(3, 1); }

VecGF v3(std::vector<int64_t> xs) { return VecGF::from_ints(F3(), xs); }

double max_abs(const Mat& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

} // namespace

/* ---------------------------- Weyl operators ---------------------------- */

TEST(Weyl, ZeroDisplacementIsIdentity)
{
    for (int q : {3, 5, 7}) EXPECT_LT(max_abs(weyl(q, 0, 0) - Mat::Identity(q, q)), 1e-14);
}

TEST(Weyl, CommutationRelationExhaustiveOverF3AndF5)
{
    for (int q : {3, 5})
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                for (int c = 0; c < q; ++c)
                    for (int d = 0; d < q; ++d) {
                        Mat lhs = weyl(q, a, b) * weyl(q, c, d);
                        Mat rhs = omega_pow(q, -(static_cast<int64_t>(a) * d - static_cast<int64_t>(c) * b)) * weyl(q, c, d) * weyl(q, a, b);
                        ASSERT_LT(max_abs(lhs - rhs), 1e-12) << q << a << b << c << d;
                    }
}

TEST(Weyl, PthPowerIsScalar)
{
    for (int q : {3, 5})
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                Mat P = Mat::Identity(q, q);
                for (int i = 0; i < q; ++i) P = P * weyl(q, a, b);
                EXPECT_LT(max_abs(P - P(0, 0) * Mat::Identity(q, q)), 1e-12);
                EXPECT_NEAR(std::abs(P(0, 0)), 1.0, 1e-12);
                Mat Pa = Mat::Identity(q, q);
                for (int i = 0; i < q; ++i) Pa = Pa * weyl_aligned(q, a, b);
                EXPECT_LT(max_abs(Pa - Mat::Identity(q, q)), 1e-12);
            }
}

TEST(Weyl, NonPrimeLocalDimensionRejected)
{
    EXPECT_EQ(code_of([] { weyl(4, 1, 1); }), Errc::NonPrimeLocalDim);
    EXPECT_EQ(code_of([] { Layout(9, 1); }), Errc::NonPrimeLocalDim);
    EXPECT_EQ(code_of([] { CodeBasis(MatGF::empty(field_build(3, 2), 4, 0)); }), Errc::NonPrimeLocalDim);
    EXPECT_EQ(code_of([] { Layout(3, 10); }), Errc::TooLarge);
}

/* ---------------------------- stabilizer states ---------------------------- */

TEST(Stabilizer, XTypeGivesUniformSuperposition)
{
    MatGF G = MatGF::from_ints(F3(), {{1, 0}, {0, 1}, {0, 0}, {0, 0}});
    auto s = stabilizer_state(G);
    for (Eigen::Index i = 0; i < s.amp.size(); ++i) EXPECT_NEAR(std::abs(s.amp(i)), 1.0 / 3.0, 1e-12);
}

TEST(Stabilizer, ZTypeGivesAllZeroState)
{
    MatGF G = MatGF::from_ints(F3(), {{0, 0}, {0, 0}, {1, 0}, {0, 1}});
    auto s = stabilizer_state(G);
    EXPECT_NEAR(std::abs(s.amp(0)), 1.0, 1e-12);
    EXPECT_NEAR(s.amp.norm(), 1.0, 1e-12);
}

TEST(Stabilizer, Example2LagrangianHasFixedVector)
{
    auto fx = fixtures::example2();
    auto s = stabilizer_state(fx.bundle.G1);
    const auto regs = iota_regs(0, 3);
    for (size_t j = 0; j < 3; ++j) EXPECT_LT((apply_displacement(s.layout, s.amp, regs, fx.bundle.G1.col(j), true) - s.amp).norm(), 1e-10);
}

TEST(Stabilizer, RejectsNonLagrangianInput)
{
    auto fx = fixtures::example1();
    EXPECT_EQ(code_of([&] { stabilizer_state(fx.bundle.G1); }), Errc::NotMaximalIsotropic);
    MatGF bad = MatGF::from_ints(F3(), {{1, 0}, {0, 0}, {0, 1}, {0, 0}});
    EXPECT_EQ(code_of([&] { stabilizer_state(bad); }), Errc::NotMaximalIsotropic);
}

TEST(CodeBasis, Example1IsOrthonormalAndLogicalWeylActsCorrectly)
{
    auto fx = fixtures::example1();
    CodeBasis code(fx.bundle.G1);
    Mat B(27, 27);
    for (int y0 = 0; y0 < 3; ++y0)
        for (int y1 = 0; y1 < 3; ++y1) {
            Mat V = code.isometry(v3({y0, y1}));
            B.middleCols(9 * y0 + 3 * y1, 3) = V;
        }
    EXPECT_LT(max_abs(B.adjoint() * B - Mat::Identity(27, 27)), 1e-12);
    /* What(Hbar a + Gbar b) maps |x,0> to a multiple of |x+a,0>. */
    const auto& sb = code.basis();
    const auto regs = iota_regs(0, 3);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            VecGF w = sb.Hbar * v3({a}) + sb.Gbar * v3({b});
            EXPECT_EQ(code.logical_of(w).to_ints(), (std::vector<int64_t>{a, b}));
            for (int x = 0; x < 3; ++x) {
                Vec out = apply_displacement(code.layout(), code.state(v3({x}), v3({0, 0})), regs, w, true);
                EXPECT_NEAR(std::abs(code.state(v3({(x + a) % 3}), v3({0, 0})).dot(out)), 1.0, 1e-10);
            }
        }
}

/* ---------------------------- resource states ---------------------------- */

TEST(Resource, EmptyG1GivesProductOfMaximallyEntangledPairs)
{
    auto r = ea_resource(MatGF::empty(F3(), 4, 0), VecGF(F3(), 0));
    ASSERT_EQ(r.layout.m, 4);
    /* registers D1 D2 E1 E2: pair (D1,E1) and (D2,E2). */
    for (size_t i = 0; i < r.layout.dim(); ++i) {
        auto d = r.layout.digits(i);
        const double expect = (d[0] == d[2] && d[1] == d[3]) ? 1.0 / 3.0 : 0.0;
        EXPECT_NEAR(std::abs(r.amp(static_cast<Eigen::Index>(i))), expect, 1e-12);
    }
}

TEST(Resource, FullG1GivesStabilizerState)
{
    auto fx = fixtures::example2();
    auto r = ea_resource(fx.bundle.G1, v3({0, 0, 0}));
    EXPECT_EQ(r.layout.m, 3);
    auto s = stabilizer_state(fx.bundle.G1);
    EXPECT_NEAR(std::abs(s.amp.dot(r.amp)), 1.0, 1e-10);
}

TEST(Resource, Example1HasSchmidtRankThree)
{
    auto fx = fixtures::example1();
    auto r = ea_resource(fx.bundle.G1, v3({0, 0}));
    Mat M = reshape_keep(r.layout, r.amp, {0, 1, 2});
    Eigen::JacobiSVD<Mat> svd(M);
    auto sv = svd.singularValues();
    ASSERT_EQ(sv.size(), 3);
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(sv(i), 1.0 / std::sqrt(3.0), 1e-12);
    for (int y0 = 0; y0 < 3; ++y0)
        for (int y1 = 0; y1 < 3; ++y1) {
            if (!y0 && !y1) continue;
            EXPECT_LT(std::abs(r.amp.dot(ea_resource(fx.bundle.G1, v3({y0, y1})).amp)), 1e-10);
        }
}

/* ---------------------------- measurement and partial trace ---------------------------- */

TEST(Measurement, BellMeasurementOnPairGivesPointMass)
{
    auto r = ea_resource(MatGF::empty(F3(), 2, 0), VecGF(F3(), 0));
    Povm P = bell_povm(r, {0}, {1});
    EXPECT_EQ(P.size(), 9u);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            Vec psi = apply_weyl(r.layout, r.amp, {0}, {a}, {b});
            Mat rho = psi * psi.adjoint();
            auto m = measure(rho, P, 5);
            EXPECT_EQ(m.outcome, static_cast<size_t>(3 * a + b));
            EXPECT_NEAR(m.distribution[static_cast<size_t>(3 * a + b)], 1.0, 1e-12);
        }
}

TEST(Measurement, LiteralDecoderFamilyIncompleteForUnbalancedBase)
{
    auto s = basis_state(3, {0, 0});
    EXPECT_EQ(code_of([&] { bell_povm(s, {0}, {1}); }), Errc::IncompletePovm);
}

TEST(PartialTrace, PairHalfIsMaximallyMixedAndTracingIsIdempotent)
{
    auto r = ea_resource(MatGF::empty(F3(), 4, 0), VecGF(F3(), 0));
    auto half = partial_trace(r, {0});
    EXPECT_LT(max_abs(half.rho - Mat::Identity(3, 3) / 3.0), 1e-12);
    auto two = partial_trace(r, {0, 2});
    auto again = partial_trace(two, {0, 1});
    EXPECT_LT(max_abs(two.rho - again.rho), 1e-14);
    auto one = partial_trace(two, {1});
    EXPECT_LT(max_abs(one.rho - Mat::Identity(3, 3) / 3.0), 1e-12);
}

TEST(PartialTrace, WeylTwirlOfOtherRegisterTracesItOut)
{
    /* (1/q^2) sum_{a,b} W_2(a,b) rho W_2(a,b)^dagger = Tr_2(rho) (x) I/q at n = 2. */
    Layout L(3, 2);
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g;
    Mat X(9, 9);
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) X(i, j) = cplx(g(rng), g(rng));
    Mat rho = X * X.adjoint();
    rho /= std::real(rho.trace());
    Mat acc = Mat::Zero(9, 9);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            Mat W = weyl_matrix(L, {0, a}, {0, b});
            acc += W * rho * W.adjoint() / 9.0;
        }
    EXPECT_LT(max_abs(acc - kron(partial_trace(L, rho, {0}), Mat::Identity(3, 3) / 3.0)), 1e-12);
}

/* ---------------------------- entanglement-assisted schemes ---------------------------- */

TEST(Eass, Example1DecodesOnEveryAcceptSetBothBackends)
{
    auto fx = fixtures::example1();
    auto s = make_eass(fx.bundle, fx.structure);
    for (Backend b : {Backend::Dense, Backend::Symplectic}) {
        for (Subset A : fx.structure.accept_sets())
            for (uint64_t seed = 1; seed <= 4; ++seed) {
                auto t = run_eass(s, v3({static_cast<int64_t>(seed % 3), 2}), A, seed, b);
                EXPECT_TRUE(t.success) << subset_label(A) << " " << backend_name(b);
                EXPECT_TRUE(t == run_eass(s, v3({static_cast<int64_t>(seed % 3), 2}), A, seed, b));
            }
    }
    EXPECT_EQ(code_of([&] { run_eass(s, v3({0, 0}), subset_from_players({1, 3}), 1); }), Errc::NotQualified);
}

TEST(Eass, Example1AuditSecureOnBothBackends)
{
    auto fx = fixtures::example1();
    auto s = make_eass(fx.bundle, fx.structure);
    for (Backend b : {Backend::Dense, Backend::Symplectic}) {
        auto rep = ea_audit(s, b);
        for (const auto& it : rep.items) EXPECT_TRUE(it.ok) << backend_name(b) << " " << it.name << ": " << it.detail;
        EXPECT_TRUE(rep.mmsp);
        EXPECT_TRUE(rep.crosscheck_ok());
    }
}

TEST(Eass, SinglePlayerStateIncludingEndUserIsIndependentOfMessage)
{
    auto fx = fixtures::example1();
    DenseEaEngine eng(fx.bundle.G1);
    for (int p = 1; p <= 3; ++p) {
        Subset B = subset_from_players({p});
        Mat ref = eng.reduced_state(B, {fx.bundle.F * v3({0, 0})});
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                EXPECT_LT(trace_distance(eng.reduced_state(B, {fx.bundle.F * v3({a, b})}), ref), 1e-10) << p;
    }
    /* {1,3} alone is not qualified, yet together with E it sees the message. */
    Subset B13 = subset_from_players({1, 3});
    EXPECT_GT(trace_distance(eng.reduced_state(B13, {fx.bundle.F * v3({1, 0})}), eng.reduced_state(B13, {fx.bundle.F * v3({0, 0})})),
              0.1);
}

TEST(Eass, ZeroSecretLeaksIsDetected)
{
    auto fx = fixtures::example1();
    /* The message block replaced by the G1 directions: secrecy holds but
       every message gives the same state, so correctness fails. */
    auto b = fx.bundle;
    b.F = fx.bundle.G1;
    EaScheme s;
    s.kind = "eass";
    s.G1 = b.G1;
    s.G2 = b.G2;
    s.F = b.F;
    s.n = 3;
    s.access = fx.structure;
    for (Backend be : {Backend::Dense, Backend::Symplectic}) {
        auto rep = ea_audit(s, be);
        EXPECT_FALSE(rep.find("correctness")->ok) << backend_name(be);
        EXPECT_TRUE(rep.find("secrecy")->ok) << backend_name(be);
        EXPECT_FALSE(rep.mmsp);
    }
}

TEST(Eass, ClassMismatchRejected)
{
    auto fx = fixtures::example1(BundleClass::QQ);
    EXPECT_EQ(code_of([&] { make_eass(fx.bundle, fx.structure); }), Errc::ClassMismatch);
    auto cq = fixtures::example2_variant();
    EXPECT_EQ(code_of([&] { make_eass(cq.bundle, cq.structure); }), Errc::ClassMismatch);
}

TEST(Eass, ModifiedSchemeMatchesPlainScheme)
{
    auto fx = fixtures::example1();
    auto s = make_eass(fx.bundle, fx.structure);
    auto t = make_modified_eass(fx.bundle, fx.structure);
    auto rt = ea_audit(t, Backend::Dense);
    for (const auto& it : rt.items) EXPECT_TRUE(it.ok) << it.name << ": " << it.detail;
    auto rs = ea_audit(t, Backend::Symplectic);
    for (const auto& it : rs.items) EXPECT_TRUE(it.ok) << it.name << ": " << it.detail;
    DenseEaEngine e0(fx.bundle.G1), e1(fx.bundle.G1, true);
    for (Subset A : fx.structure.accept_sets()) {
        for (int m = 0; m < 9; ++m) {
            VecGF mv = vector_from_index(F3(), 2, static_cast<u128>(m));
            auto d0 = e0.outcome_distribution(A, s.displacements(mv));
            auto d1 = e1.outcome_distribution(A, t.displacements(mv));
            EXPECT_LT(distribution_distance(d0, d1), 1e-10) << subset_label(A) << " " << m;
        }
        auto tr = run_modified_eass(t, v3({2, 1}), A, 7);
        EXPECT_TRUE(tr.success);
    }
    for (Subset B : fx.structure.reject_sets())
        EXPECT_LT(trace_distance(e1.reduced_state(B, {fx.bundle.F * v3({1, 2})}), e1.reduced_state(B, {fx.bundle.F * v3({0, 0})})),
                  1e-10);
}

TEST(Eass, ModifiedSchemeWithEmptyG1IsFeass)
{
    auto fx = fixtures::example1();
    MatGF G1 = MatGF::empty(F3(), 6, 0);
    DenseEaEngine plain(G1), twirled(G1, true);
    for (int m = 0; m < 9; ++m) {
        VecGF x = fx.bundle.F * vector_from_index(F3(), 2, static_cast<u128>(m));
        EXPECT_LT(distribution_distance(plain.outcome_distribution(subset_from_players({1, 2}), {x}),
                                        twirled.outcome_distribution(subset_from_players({1, 2}), {x})),
                  1e-12);
    }
}

TEST(Feass, AuditVerdictMatchesMmspOnBothBackends)
{
    auto F3f = F3();
    AccessStructure two = make_explicit(2, {subset_from_players({1, 2})}, {0, subset_from_players({1}), subset_from_players({2})});
    MatGF G = MatGF::from_ints(F3f, {{1}, {0}, {0}, {1}});
    MatGF F = MatGF::from_ints(F3f, {{0}, {1}, {0}, {0}});
    auto fx = fixtures::example1();
    for (const auto& s : {make_feass(G, F, two), make_feass(fx.bundle.G1, fx.bundle.F, fx.structure),
                          make_feass(MatGF::empty(F3f, 6, 0), fx.bundle.F, fx.structure)})
        for (Backend b : {Backend::Dense, Backend::Symplectic}) {
            auto rep = ea_audit(s, b);
            EXPECT_EQ(rep.secure(), rep.mmsp) << backend_name(b);
            EXPECT_TRUE(rep.crosscheck_ok());
        }
    auto s = make_feass(fx.bundle.G1, fx.bundle.F, fx.structure);
    EXPECT_TRUE(ea_audit(s).secure());
    EXPECT_TRUE(run_feass(s, v3({1, 2}), subset_from_players({2, 3}), 5).success);
}

TEST(Cqss, Example2PrintedDataFailsAcceptance)
{
    auto fx = fixtures::example2();
    auto s = make_cqss(fx.bundle, fx.structure);
    auto rep = ea_audit(s, Backend::Dense);
    EXPECT_FALSE(rep.find("correctness")->ok);
    EXPECT_TRUE(rep.find("correctness")->has_witness);
    EXPECT_FALSE(rep.mmsp);
    EXPECT_TRUE(rep.crosscheck_ok());
}

TEST(Cqss, Example2VariantSecureOnBothBackends)
{
    auto fx = fixtures::example2_variant();
    auto s = make_cqss(fx.bundle, fx.structure);
    for (Backend b : {Backend::Dense, Backend::Symplectic}) {
        auto rep = ea_audit(s, b);
        for (const auto& it : rep.items) EXPECT_TRUE(it.ok) << backend_name(b) << " " << it.name << ": " << it.detail;
        EXPECT_TRUE(rep.mmsp);
    }
    auto t = run_cqss(s, v3({1, 2}), subset_from_players({1, 2, 3}), 11);
    EXPECT_TRUE(t.success);
}

/* ---------------------------- symplectic track ---------------------------- */

TEST(SympTrack, AgreesWithDenseOutcomeDistribution)
{
    auto fx = fixtures::example1();
    DenseEaEngine eng(fx.bundle.G1);
    std::mt19937_64 rng(21);
    for (Subset A = 1; A < 8; ++A)
        for (int trial = 0; trial < 6; ++trial) {
            VecGF x = mmsplab::detail::random_vec(F3(), 6, rng);
            auto dense = eng.outcome_distribution(A, {x});
            auto track = track_distribution(symp_track(fx.bundle.G1, x, A, 3));
            EXPECT_LT(distribution_distance(dense, track), 1e-10) << subset_label(A);
        }
}

TEST(SympTrack, ZeroDisplacementAndEmptyG1)
{
    auto t = symp_track(MatGF::empty(F3(), 4, 0), VecGF(F3(), 4), subset_from_players({2}), 2);
    EXPECT_EQ(t.z.to_ints(), (std::vector<int64_t>{0, 0}));
    EXPECT_EQ(t.ambiguity.cols(), 0u);
    auto d = track_distribution(t);
    ASSERT_EQ(d.size(), 1u);
    EXPECT_NEAR(d.begin()->second, 1.0, 1e-15);
}

TEST(SympTrack, RunsWhereDenseOracleRefuses)
{
    auto F9 = field_build(3, 2);
    MatGF G1(F9, 16, 1);
    G1.at(0, 0) = F9->one();
    VecGF x(F9, 16);
    x[3] = F9->scalar(2);
    x[8] = F9->one();
    auto t = symp_track(G1, x, subset_from_players({1, 4}), 8);
    EXPECT_EQ(t.z.size(), 4u);
    EXPECT_EQ(t.ambiguity.cols(), 1u);
    EXPECT_EQ(track_distribution(t).size(), 9u);
    EXPECT_EQ(code_of([&] { DenseEaEngine e(G1); }), Errc::NonPrimeLocalDim);
}

/* ---------------------------- QQSS ---------------------------- */

TEST(Qqss, Example1RecoversInputOnAcceptSets)
{
    auto fx = fixtures::example1(BundleClass::QQ);
    auto s = make_qqss(fx.bundle, fx.structure);
    DenseQqEngine eng(s);
    for (Subset A : fx.structure.accept_sets()) {
        double f = identity_fidelity(compose(eng.recovery(A), eng.restriction(A)));
        EXPECT_GE(f, 1 - 1e-9) << subset_label(A);
    }
    Mat rho = Mat::Zero(3, 3);
    rho(0, 0) = 0.5;
    rho(1, 1) = 0.25;
    rho(2, 2) = 0.25;
    rho(0, 1) = rho(1, 0) = 0.2;
    auto r = run_qqss(s, rho, subset_from_players({2, 3}), 4);
    EXPECT_TRUE(r.transcript.success);
    EXPECT_LT(trace_distance(r.recovered, rho), 1e-9);
}

TEST(Qqss, Example1SinglePlayersLearnNothing)
{
    auto fx = fixtures::example1(BundleClass::QQ);
    auto s = make_qqss(fx.bundle, fx.structure);
    auto rep = qq_audit(s);
    for (const auto& it : rep.items) EXPECT_TRUE(it.ok) << it.name << ": " << it.detail;
    EXPECT_TRUE(rep.mmsp);
    DenseQqEngine eng(s);
    Channel L = eng.restriction(subset_from_players({1}));
    Mat J = choi(L);
    EXPECT_LT(max_abs(J - kron(Mat::Identity(3, 3) / 3.0, trace_first(J, 3, 3))), 1e-10);
}

TEST(Qqss, IdentityCodeOnOnePlayer)
{
    MatGF G1 = MatGF::empty(F3(), 2, 0);
    MatGF F = MatGF::from_ints(F3(), {{1, 0}, {0, 1}});
    MmspBundle b;
    b.cls = BundleClass::QQ;
    b.G1 = G1;
    b.G2 = MatGF::empty(F3(), 2, 0);
    b.F = F;
    b.n = 1;
    auto s = make_qqss(b, make_explicit(1, {subset_from_players({1})}, {0}));
    auto rep = qq_audit(s);
    EXPECT_TRUE(rep.secure());
    DenseQqEngine eng(s);
    EXPECT_LT(identity_choi_distance(compose(eng.recovery(1), eng.restriction(1))), 1e-10);
}

TEST(Qqss, ClassMismatchRejected)
{
    auto fx = fixtures::example1();
    EXPECT_EQ(code_of([&] { make_qqss(fx.bundle, fx.structure); }), Errc::ClassMismatch);
}

TEST(GammaBar, TeleportationRecoversIdentity)
{
    /* Bell POVM on B (x) R with outcome W(l) on B: recovery is the identity. */
    auto pair = ea_resource(MatGF::empty(F3(), 2, 0), VecGF(F3(), 0));
    Povm P = bell_povm(pair, {0}, {1});
    Channel G = gamma_bar(P, 3, 1, 3);
    EXPECT_LT(identity_choi_distance(G), 1e-10);
    EXPECT_GE(identity_fidelity(G), 1 - 1e-12);
}

TEST(GammaBar, DepolarizedInputIsNotRecovered)
{
    auto pair = ea_resource(MatGF::empty(F3(), 2, 0), VecGF(F3(), 0));
    Povm P = bell_povm(pair, {0}, {1});
    Channel G = compose(gamma_bar(P, 3, 1, 3), depolarizing_channel(3));
    EXPECT_GT(identity_choi_distance(G), 0.1);
}

/* ---------------------------- information identity ---------------------------- */

TEST(DenseCoding, DepolarizingChannelCarriesNothing)
{
    auto r = lemma_l6_check(depolarizing_channel(3), 3, 1);
    EXPECT_NEAR(r.i_dense_coding, 0.0, 1e-6);
    EXPECT_NEAR(r.i_channel, 0.0, 1e-6);
}

TEST(DenseCoding, IdentityChannelCarriesTwoLogQ)
{
    auto r = lemma_l6_check(identity_channel(3), 3, 1);
    EXPECT_NEAR(r.i_dense_coding, 2 * std::log2(3.0), 1e-6);
    EXPECT_NEAR(r.i_channel, 2 * std::log2(3.0), 1e-6);
}

TEST(DenseCoding, Example1ShareRestrictionsAgree)
{
    auto fx = fixtures::example1(BundleClass::QQ);
    DenseQqEngine eng(make_qqss(fx.bundle, fx.structure));
    for (Subset S : {subset_from_players({1}), subset_from_players({2, 3})}) {
        auto r = lemma_l6_check(eng.restriction(S), 3, 1);
        EXPECT_NEAR(r.i_dense_coding, r.i_channel, 1e-6) << subset_label(S);
    }
    auto b = lemma_l6_check(eng.restriction(subset_from_players({1})), 3, 1);
    EXPECT_NEAR(b.i_channel, 0.0, 1e-6);
}

TEST(InfoMetrics, RelativeEntropyAndMutualInformation)
{
    Mat rho = Mat::Identity(3, 3) / 3.0;
    rho(0, 1) = rho(1, 0) = 0.1;
    auto d = relative_entropy(rho, rho);
    EXPECT_FALSE(d.infinite);
    EXPECT_NEAR(d.value, 0.0, 1e-10);
    Mat pure = Mat::Zero(3, 3);
    pure(0, 0) = 1;
    Mat other = Mat::Zero(3, 3);
    other(1, 1) = 1;
    EXPECT_TRUE(relative_entropy(pure, other).infinite);
    Vec phi = max_entangled(3);
    EXPECT_NEAR(mutual_information(phi * phi.adjoint(), 3, 3), 2 * std::log2(3.0), 1e-9);
    EXPECT_NEAR(mutual_information(kron(rho, rho), 3, 3), 0.0, 1e-9);
}

/* ---------------------------- quantum SPIR ---------------------------- */

TEST(QSpir, Example2VariantCqspirTwoFilesExact)
{
    auto fx = fixtures::example2_variant();
    auto s = make_cqspir(fx.bundle, 2, fx.structure);
    auto rep = qspir_audit(s);
    for (const auto& it : rep.items) EXPECT_TRUE(it.ok) << it.name << ": " << it.detail;
    EXPECT_TRUE(rep.mmsp);
    std::vector<VecGF> files{v3({1, 2}), v3({0, 1})};
    for (int k = 1; k <= 2; ++k)
        for (Backend b : {Backend::Dense, Backend::Symplectic}) {
            auto t = run_qspir(s, files, k, subset_from_players({1, 2, 3}), 40 + k, b);
            EXPECT_TRUE(t.success) << k << " " << backend_name(b);
            EXPECT_TRUE(t == run_qspir(s, files, k, subset_from_players({1, 2, 3}), 40 + k, b));
        }
}

TEST(QSpir, Example1EaspirSecure)
{
    auto fx = fixtures::example1();
    auto s = make_easpir(fx.bundle, 2, fx.structure);
    auto rep = qspir_audit(s);
    for (const auto& it : rep.items) EXPECT_TRUE(it.ok) << it.name << ": " << it.detail;
    EXPECT_TRUE(rep.mmsp);
}

TEST(QSpir, SingleServerDegenerateCase)
{
    MmspBundle b;
    b.cls = BundleClass::CQ;
    b.G1 = MatGF::from_ints(F3(), {{0}, {1}});
    b.G2 = MatGF::empty(F3(), 2, 0);
    b.F = MatGF::from_ints(F3(), {{1}, {0}});
    b.n = 1;
    auto s = make_cqspir(b, 2, make_explicit(1, {subset_from_players({1})}, {0}));
    auto rep = qspir_audit(s);
    for (const auto& it : rep.items) EXPECT_TRUE(it.ok) << it.name << ": " << it.detail;
    auto t = run_qspir(s, {v3({2}), v3({1})}, 2, 1, 3, Backend::Dense);
    EXPECT_TRUE(t.success);
    EXPECT_EQ(t.entries.back().values, (std::vector<int64_t>{1}));
}

TEST(QSpir, NonStandardOffsetLeaksOtherFile)
{
    auto fx = fixtures::example1();
    auto s = make_easpir(fx.bundle, 2, fx.structure);
    auto F3f = F3();
    s.base.offsets = std::vector<MatGF>{MatGF::hcat({fx.bundle.F, fx.bundle.F}), MatGF::hcat({MatGF(F3f, 6, 2), fx.bundle.F})};
    auto rep = qspir_audit(s);
    EXPECT_FALSE(rep.find("server secrecy")->ok);
    EXPECT_FALSE(rep.secure());
    EXPECT_EQ(code_of([&] { run_qspir(s, {v3({0, 0}), v3({0, 0})}, 1, 3, 1, Backend::Dense); }), Errc::NonStandardQuery);
    EXPECT_EQ(code_of([&] { convert_flow5(s); }), Errc::NonStandardQuery);
}

TEST(QSpir, UserSecrecyNeedsQueryRandomness)
{
    auto fx = fixtures::example1();
    auto s = make_feaspir(MatGF::empty(F3(), 6, 0), fx.bundle.F, 2, fx.structure);
    auto rep = qspir_audit(s);
    EXPECT_FALSE(rep.find("user secrecy")->ok);
}

/* ---------------------------- conversion ---------------------------- */

TEST(Flow5, ConvertedSchemeMatchesDirectEass)
{
    auto fx = fixtures::example1();
    auto sp = make_easpir(fx.bundle, 1, fx.structure);
    auto conv = convert_flow5(sp);
    EXPECT_EQ(conv.kind, "converted-eass");
    auto direct = make_eass(fx.bundle, fx.structure);
    auto rc = ea_audit(conv, Backend::Dense);
    for (const auto& it : rc.items) EXPECT_TRUE(it.ok) << it.name << ": " << it.detail;
    DenseEaEngine eng(fx.bundle.G1);
    for (Subset B : fx.structure.reject_sets())
        for (int m = 0; m < 9; ++m) {
            VecGF mv = vector_from_index(F3(), 2, static_cast<u128>(m));
            EXPECT_LT(trace_distance(eng.reduced_state(B, conv.displacements(mv)), eng.reduced_state(B, direct.displacements(mv))), 1e-10);
        }
    for (Subset A : fx.structure.accept_sets()) EXPECT_TRUE(run_eass(conv, v3({1, 1}), A, 8).success);
}
