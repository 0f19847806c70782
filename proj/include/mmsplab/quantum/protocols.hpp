/**@file
 *****************************************************************************
 Linear quantum secret sharing and SPIR protocols on two backends: an exact
 dense state-vector oracle and a symplectic track that follows only the
 Weyl displacement. Covers FEASS, EASS, modified EASS, CQSS, QQSS with the
 teleportation decoder, FEASPIR, EASPIR, CQSPIR and the SPIR-to-EASS
 conversion, with exhaustive desk-scale audits.
 *****************************************************************************
 * @copyright  MIT license (see LICENSE file)
 *****************************************************************************/
#ifndef MMSPLAB_QUANTUM_PROTOCOLS_HPP_
#define MMSPLAB_QUANTUM_PROTOCOLS_HPP_

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mmsplab/access.hpp"
#include "mmsplab/classical.hpp"
#include "mmsplab/mmsp.hpp"
#include "mmsplab/quantum/dense.hpp"
#include "mmsplab/quantum/stabilizer.hpp"

namespace mmsplab::quantum {

enum class Backend { Dense, Symplectic };

inline const char* backend_name(Backend b) { return b == Backend::Dense ? "dense" : "symplectic"; }

inline Backend backend_from_name(const std::string& s)
{
    if (s == "dense") return Backend::Dense;
    if (s == "symplectic") return Backend::Symplectic;
    fail(Errc::ParseError, "unknown backend '" + s + "'");
}

/** Outcome z = (a_A, b_A) in F_q^{2|A|} -> probability. */
using Distribution = std::map<std::vector<int64_t>, double>;

inline double distribution_distance(const Distribution& a, const Distribution& b)
{
    double d = 0;
    for (const auto& [k, v] : a) {
        auto it = b.find(k);
        d += std::abs(v - (it == b.end() ? 0.0 : it->second));
    }
    for (const auto& [k, v] : b)
        if (!a.count(k)) d += v;
    return 0.5 * d;
}

/** Rows (j, n+j) of the players in A, ascending. */
inline std::vector<size_t> symplectic_rows(Subset A, int n) { return mask_to_rows(symplectify(A, n)); }

/** Player registers (0-based) of A. */
inline std::vector<int> player_regs(Subset A)
{
    std::vector<int> r;
    for (int p : subset_players(A)) r.push_back(p - 1);
    return r;
}

/* ------------------------------------------------------------------------- */
/* Symplectic track                                                          */
/* ------------------------------------------------------------------------- */

/** Outcome of the canonical decoder on A for one displacement: the point
    z = P_A x, ambiguous up to the span of P_A G1. */
struct TrackOutcome {
    VecGF z;
    MatGF ambiguity;
};

inline TrackOutcome symp_track(const MatGF& G1, const VecGF& x, Subset A, int n)
{
    require(x.size() == 2 * static_cast<size_t>(n) && G1.rows() == x.size(), Errc::DimensionMismatch,
            "symp_track: displacement length");
    auto rows = symplectic_rows(A, n);
    TrackOutcome t;
    t.z = restrict_vec(x, rows);
    MatGF PG = G1.restrict_rows(rows);
    t.ambiguity = PG.cols() ? column_basis(PG) : PG;
    return t;
}

/** Uniform distribution on z + span(ambiguity). */
inline Distribution track_distribution(const TrackOutcome& t, double weight = 1.0)
{
    Distribution d;
    const size_t k = t.ambiguity.cols();
    const u128 cnt = count_vectors(*t.z.ctx, k, kAuditBudget, "track_distribution");
    for (u128 i = 0; i < cnt; ++i) {
        VecGF z = t.z;
        if (k) z = z + t.ambiguity * vector_from_index(t.z.ctx, k, i);
        d[z.to_ints()] += weight / static_cast<double>(cnt);
    }
    return d;
}

/* ------------------------------------------------------------------------- */
/* Dense engine for the entanglement-assisted family                         */
/* ------------------------------------------------------------------------- */

/** Dense simulation of W_D(x)|Phi[0,G1]> on D (n registers) and E (n - y1
    registers) with the decoder POVM
      { c W_A(z) Tr_{D[A^c]}(|Phi[0,G1]><Phi[0,G1]|) W_A(z)^dagger }_z
    on D[A] (x) E, normalised by c so that it sums to the identity.
    With twirled = true the initial state is sum_y q^{-y1}|Phi[y]><Phi[y]|
    with E the full n-qudit copy of D, which equals |phi>^{(x) n} dephased by
    W_D(G1 u) over all u; the decoder is then the Bell measurement on the
    pairs (D_j, E_j) of A. */
class DenseEaEngine {
public:
    DenseEaEngine(const MatGF& G1, bool twirled = false) : code_(G1)
    {
        const int n = code_.n();
        const FieldPtr& ctx = G1.ctx();
        if (twirled) {
            e_ = n;
            layout_ = Layout(code_.q(), 2 * n);
            phi0_ = ea_resource(MatGF::empty(ctx, G1.rows(), 0), VecGF(ctx, 0)).amp;
            const u128 cnt = count_vectors(*ctx, G1.cols(), kDenseCap, "twirled resource");
            for (u128 i = 0; i < cnt; ++i)
                resources_.push_back(G1.cols() ? displaced(phi0_, G1 * vector_from_index(ctx, G1.cols(), i)) : phi0_);
        } else {
            e_ = code_.logical();
            layout_ = Layout(code_.q(), n + e_);
            phi0_ = ea_resource(code_, VecGF(ctx, G1.cols())).amp;
            resources_.push_back(phi0_);
        }
    }

    const CodeBasis& code() const { return code_; }
    const Layout& layout() const { return layout_; }
    int n() const { return code_.n(); }
    int e() const { return e_; }
    const Vec& resource() const { return phi0_; }
    std::vector<int> d_regs() const { return iota_regs(0, n()); }
    std::vector<int> e_regs() const { return iota_regs(n(), e()); }

    /** Initial states with their weights. */
    const std::vector<Vec>& resources() const { return resources_; }

    /** W_D(x) psi. */
    Vec displaced(const Vec& psi, const VecGF& x) const { return apply_displacement(layout_, psi, d_regs(), x); }

    /** Exact outcome distribution of the decoder on A for the uniform
        mixture over the displacements xs (and over y when twirled). */
    Distribution outcome_distribution(Subset A, const std::vector<VecGF>& xs) const
    {
        const Decoder& dec = decoder(A);
        std::vector<double> acc(dec.nz, 0.0);
        const double w = 1.0 / static_cast<double>(xs.size() * resources_.size());
        for (const auto& x : xs)
            for (const auto& r : resources_) {
                Mat M = reshape_keep(layout_, displaced(r, x), dec.keep);
                Mat P = dec.Nall.adjoint() * M;
                for (size_t z = 0; z < dec.nz; ++z)
                    acc[z] += w * dec.c *
                              P.block(static_cast<Eigen::Index>(z * dec.drest), 0, static_cast<Eigen::Index>(dec.drest), P.cols())
                                  .squaredNorm();
            }
        Distribution out;
        Layout Z(code_.q(), 2 * static_cast<int>(dec.na));
        for (size_t z = 0; z < dec.nz; ++z)
            if (acc[z] > kTolBuild) {
                std::vector<int64_t> key;
                for (int v : Z.digits(z)) key.push_back(v);
                out[key] = acc[z];
            }
        return out;
    }

    /** Reduced state on D[B] (x) E (with_e) or on D[B] alone. */
    Mat reduced_state(Subset B, const std::vector<VecGF>& xs, bool with_e = true) const
    {
        std::vector<int> keep = player_regs(B);
        if (with_e)
            for (int r : e_regs()) keep.push_back(r);
        const size_t dk = static_cast<size_t>(ipow(static_cast<uint64_t>(code_.q()), static_cast<int>(keep.size())));
        Mat rho = Mat::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
        const double w = 1.0 / static_cast<double>(xs.size() * resources_.size());
        for (const auto& x : xs)
            for (const auto& r : resources_) {
                Mat M = reshape_keep(layout_, displaced(r, x), keep);
                rho += w * M * M.adjoint();
            }
        return rho;
    }

    /** Explicit decoder POVM on D[A] (x) E, outcomes ordered like the
        digits of z = (a_A, b_A). */
    Povm decoder_povm(Subset A) const
    {
        const Decoder& dec = decoder(A);
        Povm P;
        for (size_t z = 0; z < dec.nz; ++z) {
            Mat N = dec.Nall.block(0, static_cast<Eigen::Index>(z * dec.drest), dec.Nall.rows(), static_cast<Eigen::Index>(dec.drest));
            P.elements.push_back(dec.c * N * N.adjoint());
        }
        return P;
    }

private:
    struct Decoder {
        std::vector<int> keep;
        size_t na = 0, nz = 0, drest = 0;
        double c = 1;
        Mat Nall;
    };

    const Decoder& decoder(Subset A) const
    {
        auto it = cache_.find(A);
        if (it != cache_.end()) return *it->second;
        require(A != 0 && (A >> n()) == 0, Errc::BadRegisters, "decoder subset out of range");
        auto dec = std::make_unique<Decoder>();
        dec->keep = player_regs(A);
        dec->na = dec->keep.size();
        for (int r : e_regs()) dec->keep.push_back(r);
        const int q = code_.q();
        Mat M0 = reshape_keep(layout_, phi0_, dec->keep);
        dec->drest = static_cast<size_t>(M0.cols());
        /* sum_z W_A(z) X W_A(z)^dagger = q^{|A|} I_A (x) Tr_A X, so the family
           is complete exactly when Tr_D |Phi0><Phi0| is proportional to I_E. */
        Mat M_e = reshape_keep(layout_, phi0_, e_regs());
        Mat rhoE = M_e * M_e.adjoint();
        const double lam = std::real(rhoE.trace()) / static_cast<double>(rhoE.rows());
        require((rhoE - lam * Mat::Identity(rhoE.rows(), rhoE.cols())).cwiseAbs().maxCoeff() <= kTolInvariant, Errc::IncompletePovm,
                "resource marginal on E is not maximally mixed");
        dec->c = 1.0 / (static_cast<double>(ipow(static_cast<uint64_t>(q), static_cast<int>(dec->na))) * lam);
        Layout Lk(q, static_cast<int>(dec->keep.size()));
        Layout Z(q, 2 * static_cast<int>(dec->na));
        dec->nz = Z.dim();
        dec->Nall = Mat(M0.rows(), static_cast<Eigen::Index>(dec->nz * dec->drest));
        const auto regs = iota_regs(0, static_cast<int>(dec->na));
        for (size_t z = 0; z < dec->nz; ++z) {
            auto d = Z.digits(z);
            std::vector<int> a(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(dec->na)),
                b(d.begin() + static_cast<std::ptrdiff_t>(dec->na), d.end());
            dec->Nall.block(0, static_cast<Eigen::Index>(z * dec->drest), M0.rows(), M0.cols()) = apply_weyl(Lk, M0, regs, a, b);
        }
        return *cache_.emplace(A, std::move(dec)).first->second;
    }

    CodeBasis code_;
    int e_ = 0;
    Layout layout_;
    Vec phi0_;
    std::vector<Vec> resources_;
    mutable std::map<Subset, std::unique_ptr<Decoder>> cache_;
};

/** The literal decoder family { c W_A(z) Tr_rest(|base><base|) W_A(z)^dagger }
    on the registers A_regs followed by E_regs; raises IncompletePovm when the
    family does not sum to the identity. */
inline Povm bell_povm(const DenseState& base, const std::vector<int>& A_regs, const std::vector<int>& E_regs)
{
    std::vector<int> keep = A_regs;
    keep.insert(keep.end(), E_regs.begin(), E_regs.end());
    const int q = base.layout.q;
    Mat M0 = reshape_keep(base.layout, base.amp, keep);
    Layout Lk(q, static_cast<int>(keep.size()));
    Layout Z(q, 2 * static_cast<int>(A_regs.size()));
    const double c = static_cast<double>(Lk.dim()) / static_cast<double>(Z.dim());
    const auto regs = iota_regs(0, static_cast<int>(A_regs.size()));
    Povm P;
    for (size_t z = 0; z < Z.dim(); ++z) {
        auto d = Z.digits(z);
        std::vector<int> a(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(A_regs.size())),
            b(d.begin() + static_cast<std::ptrdiff_t>(A_regs.size()), d.end());
        Mat N = apply_weyl(Lk, M0, regs, a, b);
        P.elements.push_back(c * N * N.adjoint());
    }
    check_povm(P);
    return P;
}

/* ------------------------------------------------------------------------- */
/* Entanglement-assisted secret sharing family                               */
/* ------------------------------------------------------------------------- */

/** A linear scheme whose shares are W_D(x)|Phi[0,G1]> (or its twirl) with x
    drawn uniformly from displacements(m). */
struct EaScheme {
    std::string kind; /* feass, eass, cqss, modified-eass, converted-eass */
    MatGF G1, G2, F;
    int n = 0;
    AccessStructure access;
    bool twirled = false;
    std::function<std::vector<VecGF>(const VecGF&)> encoder;

    size_t x() const { return F.cols(); }
    MatGF G() const { return MatGF::hcat(G1, G2); }
    std::vector<VecGF> displacements(const VecGF& m) const
    {
        require(m.size() == x(), Errc::DimensionMismatch, "message length");
        if (encoder) return encoder(m);
        std::vector<VecGF> out;
        const u128 cnt = count_vectors(*F.ctx(), G2.cols(), kAuditBudget, "dealer randomness");
        VecGF base = F * m;
        for (u128 i = 0; i < cnt; ++i) out.push_back(G2.cols() ? base + G2 * vector_from_index(F.ctx(), G2.cols(), i) : base);
        return out;
    }
};

namespace detail {

inline void check_ea_shapes(const MatGF& G1, const MatGF& G2, const MatGF& F, const AccessStructure& fs)
{
    require(F.rows() % 2 == 0, Errc::OddLength, "row count must be 2n");
    require(G1.rows() == F.rows() && G2.rows() == F.rows(), Errc::DimensionMismatch, "matrices have different row counts");
    require(static_cast<int>(F.rows() / 2) == fs.n, Errc::DimensionMismatch, "2n rows needed for n players");
    require(is_self_col_orth(G1), Errc::NotSelfOrthogonal, "G1 is not self-column-orthogonal");
    require(G1.cols() <= F.rows() / 2 && rank(G1) == G1.cols(), Errc::RankDeficient, "G1 columns are not independent");
}

} // namespace detail

/** EA-family scheme on arbitrary matrices, checking only shapes and the
    isotropy of G1 (used for cross-validation and negative fixtures). */
inline EaScheme make_ea_scheme(std::string kind, const MatGF& G1, const MatGF& G2, const MatGF& F, const AccessStructure& fs)
{
    detail::check_ea_shapes(G1, G2, F, fs);
    EaScheme s;
    s.kind = std::move(kind);
    s.G1 = G1;
    s.G2 = G2;
    s.F = F;
    s.n = fs.n;
    s.access = fs;
    return s;
}

/** FEASS with (G, F): maximally entangled resource, randomization G. */
inline EaScheme make_feass(const MatGF& G, const MatGF& F, const AccessStructure& fs)
{
    EaScheme s;
    s.kind = "feass";
    s.G1 = MatGF::empty(F.ctx(), F.rows(), 0);
    s.G2 = G;
    s.F = F;
    s.n = fs.n;
    s.access = fs;
    detail::check_ea_shapes(s.G1, s.G2, s.F, fs);
    return s;
}

inline EaScheme make_eass(const MmspBundle& b, const AccessStructure& fs)
{
    require(b.cls == BundleClass::EA, Errc::ClassMismatch, std::string("EASS needs an EA bundle, got ") + class_name(b.cls));
    detail::check_ea_shapes(b.G1, b.G2, b.F, fs);
    EaScheme s;
    s.kind = "eass";
    s.G1 = b.G1;
    s.G2 = b.G2;
    s.F = b.F;
    s.n = fs.n;
    s.access = fs;
    return s;
}

inline EaScheme make_modified_eass(const MmspBundle& b, const AccessStructure& fs)
{
    EaScheme s = make_eass(b, fs);
    s.kind = "modified-eass";
    s.twirled = true;
    return s;
}

/** CQSS is the EA scheme with y1 = n, whose end-user system is trivial. */
inline EaScheme make_cqss(const MmspBundle& b, const AccessStructure& fs)
{
    require(b.cls == BundleClass::CQ, Errc::ClassMismatch, std::string("CQSS needs a CQ bundle, got ") + class_name(b.cls));
    detail::check_ea_shapes(b.G1, b.G2, b.F, fs);
    require(b.G1.cols() == b.F.rows() / 2, Errc::ClassMismatch, "CQSS needs y1 = n");
    EaScheme s;
    s.kind = "cqss";
    s.G1 = b.G1;
    s.G2 = b.G2;
    s.F = b.F;
    s.n = fs.n;
    s.access = fs;
    return s;
}

/** Exact outcome distribution of the canonical decoder on A for message m. */
inline Distribution ea_distribution(const EaScheme& s, const VecGF& m, Subset A, Backend backend,
                                    const DenseEaEngine* engine = nullptr)
{
    auto xs = s.displacements(m);
    if (backend == Backend::Dense) {
        std::optional<DenseEaEngine> local;
        if (!engine) engine = &local.emplace(s.G1, s.twirled);
        return engine->outcome_distribution(A, xs);
    }
    Distribution d;
    for (const auto& x : xs)
        for (const auto& [k, v] : track_distribution(symp_track(s.G1, x, A, s.n), 1.0 / static_cast<double>(xs.size()))) d[k] += v;
    return d;
}

namespace detail {

/** Characteristic values avg_x omega^{tr symp(x, a)} over the shortened
    stabilizer directions a in G1^perp supported on B: these determine the
    reduced state on D[B] (x) E of a displaced stabilizer resource. */
inline std::vector<cplx> characteristic(const EaScheme& s, const std::vector<VecGF>& xs, Subset B)
{
    const FieldPtr& ctx = s.F.ctx();
    const size_t N = s.F.rows();
    MatGF Omega(ctx, N, N);
    for (size_t i = 0; i < N / 2; ++i) {
        Omega.at(i, N / 2 + i) = ctx->one();
        Omega.at(N / 2 + i, i) = ctx->neg(ctx->one());
    }
    /* a with symp_q(a, g) = 0 for g in G1 and a_j = 0 outside sympl(B). */
    auto rows_in = symplectic_rows(B, s.n);
    std::vector<bool> inside(N, false);
    for (auto r : rows_in) inside[r] = true;
    std::vector<VecGF> cons;
    if (s.G1.cols()) {
        MatGF OG = (Omega * s.G1).transpose();
        for (size_t i = 0; i < OG.rows(); ++i) cons.push_back(OG.row(i));
    }
    for (size_t r = 0; r < N; ++r)
        if (!inside[r]) {
            VecGF e(ctx, N);
            e[r] = ctx->one();
            cons.push_back(e);
        }
    MatGF C = cons.empty() ? MatGF::identity(ctx, N) : nullspace(MatGF::from_columns(ctx, N, cons).transpose());
    const u128 cnt = count_vectors(*ctx, C.cols(), kAuditBudget, "characteristic");
    const int p = static_cast<int>(ctx->p());
    std::vector<cplx> out;
    for (u128 i = 0; i < cnt; ++i) {
        VecGF a = C.cols() ? C * vector_from_index(ctx, C.cols(), i) : VecGF(ctx, N);
        cplx acc = 0;
        for (const auto& x : xs) {
            const double th = 2.0 * std::numbers::pi * static_cast<double>(symp(x, a)) / p;
            acc += cplx(std::cos(th), std::sin(th));
        }
        out.push_back(acc / static_cast<double>(xs.size()));
    }
    return out;
}

inline bool supports_disjoint(const std::vector<Distribution>& ds, std::string* detail = nullptr)
{
    std::map<std::vector<int64_t>, size_t> owner;
    for (size_t i = 0; i < ds.size(); ++i)
        for (const auto& [z, p] : ds[i]) {
            if (p <= kTolProtocol) continue;
            auto [it, fresh] = owner.emplace(z, i);
            if (!fresh && it->second != i) {
                if (detail) *detail = "outcome shared by messages " + std::to_string(it->second) + " and " + std::to_string(i);
                return false;
            }
        }
    return true;
}

} // namespace detail

/** Exhaustive audit of an EA-family scheme: correctness on every accept set
    (outcome supports of distinct messages are disjoint) and secrecy on every
    reject set (the state of D[B] (x) E does not depend on m, trace distance
    at most 1e-9). The dense backend computes states; the symplectic backend
    uses the displacement picture. mmsp holds the MMSP verdict of
    ((G1, G2), F) on the symplectified structure. */
inline AuditReport ea_audit(const EaScheme& s, Backend backend = Backend::Dense)
{
    const FieldPtr& ctx = s.F.ctx();
    const u128 cm = count_vectors(*ctx, s.x(), kAuditBudget, "ea_audit");
    AuditReport rep;
    rep.protocol = s.kind;
    AuditItem corr = audit_item("correctness"), sec = audit_item("secrecy");
    std::optional<DenseEaEngine> engine;
    if (backend == Backend::Dense) engine.emplace(s.G1, s.twirled);
    std::vector<std::vector<VecGF>> disp;
    for (u128 i = 0; i < cm; ++i) disp.push_back(s.displacements(vector_from_index(ctx, s.x(), i)));

    for (Subset A : s.access.accept_sets()) {
        if (A == 0) continue;
        std::vector<Distribution> ds;
        for (u128 i = 0; i < cm; ++i) {
            if (backend == Backend::Dense)
                ds.push_back(engine->outcome_distribution(A, disp[static_cast<size_t>(i)]));
            else
                ds.push_back(ea_distribution(s, vector_from_index(ctx, s.x(), i), A, backend));
            ++rep.cases;
        }
        std::string why;
        if (!detail::supports_disjoint(ds, &why)) {
            mmsplab::detail::mark_failure(corr, A, why);
            break;
        }
    }
    for (Subset B : s.access.reject_sets()) {
        bool ok = true;
        if (backend == Backend::Dense) {
            Mat ref = engine->reduced_state(B, disp[0]);
            for (u128 i = 1; i < cm && ok; ++i) {
                ++rep.cases;
                ok = trace_distance(engine->reduced_state(B, disp[static_cast<size_t>(i)]), ref) <= kTolProtocol;
            }
        } else {
            auto ref = detail::characteristic(s, disp[0], B);
            for (u128 i = 1; i < cm && ok; ++i) {
                ++rep.cases;
                auto c = detail::characteristic(s, disp[static_cast<size_t>(i)], B);
                for (size_t j = 0; j < c.size() && ok; ++j) ok = std::abs(c[j] - ref[j]) <= kTolProtocol;
            }
        }
        if (!ok) {
            mmsplab::detail::mark_failure(sec, B, "reduced state depends on the message");
            break;
        }
    }
    rep.items = {corr, sec};
    rep.mmsp = is_mmsp(s.G(), s.F, symplectify_structure(s.access));
    return rep;
}

/* ------------------------------------------------------------------------- */
/* Runs and transcripts                                                      */
/* ------------------------------------------------------------------------- */

namespace detail {

inline int64_t state_digest(const Vec& v)
{
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](int64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= static_cast<uint64_t>(x >> (8 * i)) & 0xffu;
            h *= 1099511628211ull;
        }
    };
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        mix(std::llround(v(i).real() * 1e8));
        mix(std::llround(v(i).imag() * 1e8));
    }
    return static_cast<int64_t>(h & 0x7fffffffffffffffull);
}

inline std::vector<int64_t> sample(const Distribution& d, std::mt19937_64& rng)
{
    std::vector<std::vector<int64_t>> keys;
    std::vector<double> w;
    for (const auto& [k, v] : d) {
        keys.push_back(k);
        w.push_back(v);
    }
    std::discrete_distribution<size_t> dist(w.begin(), w.end());
    return keys[dist(rng)];
}

} // namespace detail

/** One seeded run: the dealer draws its displacement, the decoder on A
    samples an outcome from the exact Born distribution and decodes m from
    it. */
inline Transcript run_ea(const EaScheme& s, const VecGF& m, Subset A, uint64_t seed, Backend backend)
{
    require(s.access.is_accept(A), Errc::NotQualified, "subset " + subset_label(A) + " is not an accept set");
    std::mt19937_64 rng(seed);
    Transcript t;
    t.protocol = s.kind;
    t.seed = seed;
    auto xs = s.displacements(m);
    std::uniform_int_distribution<size_t> pick(0, xs.size() - 1);
    const VecGF x = xs[pick(rng)];
    t.entries.push_back({"dealer", "message", m.to_ints()});
    t.entries.push_back({"dealer", "displacement", x.to_ints()});
    Distribution d;
    if (backend == Backend::Dense) {
        DenseEaEngine eng(s.G1, s.twirled);
        t.entries.push_back({"dealer", "shares state digest", {detail::state_digest(eng.displaced(eng.resource(), x))}});
        d = eng.outcome_distribution(A, {x});
    } else {
        d = track_distribution(symp_track(s.G1, x, A, s.n));
    }
    auto z = detail::sample(d, rng);
    t.entries.push_back({"end-user " + subset_label(A), "outcome", z});
    auto zv = VecGF::from_ints(s.F.ctx(), z);
    auto out = LinearDecoder(s.G(), s.F, symplectify(A, s.n)).decode(zv);
    t.entries.push_back({"end-user " + subset_label(A), "decoded", out ? out->to_ints() : std::vector<int64_t>{}});
    t.success = out.has_value() && *out == m;
    return t;
}

inline Transcript run_feass(const EaScheme& s, const VecGF& m, Subset A, uint64_t seed, Backend b = Backend::Dense)
{
    require(s.kind == "feass", Errc::ClassMismatch, "run_feass needs a FEASS scheme");
    return run_ea(s, m, A, seed, b);
}
inline Transcript run_eass(const EaScheme& s, const VecGF& m, Subset A, uint64_t seed, Backend b = Backend::Dense)
{
    require(s.kind == "eass" || s.kind == "converted-eass", Errc::ClassMismatch, "run_eass needs an EASS scheme");
    return run_ea(s, m, A, seed, b);
}
inline Transcript run_modified_eass(const EaScheme& s, const VecGF& m, Subset A, uint64_t seed)
{
    require(s.kind == "modified-eass", Errc::ClassMismatch, "run_modified_eass needs a modified EASS scheme");
    return run_ea(s, m, A, seed, Backend::Dense);
}
inline Transcript run_cqss(const EaScheme& s, const VecGF& m, Subset A, uint64_t seed, Backend b = Backend::Dense)
{
    require(s.kind == "cqss", Errc::ClassMismatch, "run_cqss needs a CQSS scheme");
    return run_ea(s, m, A, seed, b);
}

/* ------------------------------------------------------------------------- */
/* QQSS and the teleportation decoder                                        */
/* ------------------------------------------------------------------------- */

/** Gamma-bar[Pi](rho) = sum_l W(l) Tr_{B,R}((rho (x) |phi><phi|_{RR'}) Pi_l) W(l)^dagger,
    with Pi indexed by logical displacements l in F_q^{2k} (digit order of
    a layout of 2k qudits) acting on B (x) R, R and R' of k qudits. */
inline Channel gamma_bar(const Povm& Pi, int q, int k, size_t dB)
{
    check_povm(Pi);
    Layout R(q, k);
    const size_t d = R.dim();
    Layout Lz(q, 2 * k);
    require(Pi.size() == Lz.dim(), Errc::DimensionMismatch, "gamma_bar needs one element per logical displacement");
    require(Pi.dim() == dB * d, Errc::DimensionMismatch, "gamma_bar: POVM dimension");
    std::vector<Mat> W;
    for (size_t l = 0; l < Lz.dim(); ++l) {
        auto dg = Lz.digits(l);
        W.push_back(weyl_matrix(R, std::vector<int>(dg.begin(), dg.begin() + k), std::vector<int>(dg.begin() + k, dg.end())));
    }
    auto elements = Pi.elements;
    return {dB, d, [=](const Mat& rho) {
                /* Tr_{B,R}((rho (x) |i><j|_R)(Pi_l)) = Tr(rho Pi_l[j, i]) with Pi_l[j, i] the
                   B-block at R indices (j, i). */
                const auto db = static_cast<Eigen::Index>(dB);
                Mat out = Mat::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
                for (size_t l = 0; l < elements.size(); ++l) {
                    Mat o = Mat::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
                    for (size_t i = 0; i < d; ++i)
                        for (size_t j = 0; j < d; ++j) {
                            cplx acc = 0;
                            for (Eigen::Index b1 = 0; b1 < db; ++b1)
                                for (Eigen::Index b2 = 0; b2 < db; ++b2)
                                    acc += rho(b1, b2) * elements[l](b2 * static_cast<Eigen::Index>(d) + static_cast<Eigen::Index>(j),
                                                                     b1 * static_cast<Eigen::Index>(d) + static_cast<Eigen::Index>(i));
                            o(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = acc / static_cast<double>(d);
                        }
                    out += W[l] * o * W[l].adjoint();
                }
                return out;
            }};
}

struct QqScheme {
    MatGF G1, G2, F;
    int n = 0;
    AccessStructure access;
    size_t k() const { return F.cols() / 2; }
    MatGF G() const { return MatGF::hcat(G1, G2); }
};

inline QqScheme make_qqss(const MmspBundle& b, const AccessStructure& fs)
{
    require(b.cls == BundleClass::QQ, Errc::ClassMismatch, std::string("QQSS needs a QQ bundle, got ") + class_name(b.cls));
    detail::check_ea_shapes(b.G1, b.G2, b.F, fs);
    for (const auto& inv : class_invariants(b)) require(inv.ok, Errc::ClassMismatch, "QQ invariant violated: " + inv.name);
    return {b.G1, b.G2, b.F, fs.n, fs};
}

/** Dense QQSS: input on k logical qudits is encoded by |x> -> |x,0>,
    randomized by W(G2 u) and restricted to a player set. */
class DenseQqEngine {
public:
    explicit DenseQqEngine(const QqScheme& s) : s_(s), ea_(s.G1)
    {
        require(ea_.e() == static_cast<int>(s.k()), Errc::ClassMismatch, "logical qudit count differs from x'");
        V_ = ea_.code().isometry(VecGF(s.F.ctx(), s.G1.cols()));
        const u128 cnt = count_vectors(*s.F.ctx(), s.G2.cols(), kAuditBudget, "dealer randomness");
        for (u128 i = 0; i < cnt; ++i)
            rand_.push_back(s.G2.cols() ? s.G2 * vector_from_index(s.F.ctx(), s.G2.cols(), i) : VecGF(s.F.ctx(), s.F.rows()));
    }

    int q() const { return ea_.code().q(); }
    size_t d_in() const { return static_cast<size_t>(V_.cols()); }

    /** rho -> avg_u Tr_{A^c} W(G2 u) V rho V^dagger W(G2 u)^dagger. */
    Channel restriction(Subset S) const
    {
        const Layout L = ea_.code().layout();
        const auto keep = player_regs(S);
        const auto regs = iota_regs(0, s_.n);
        const size_t dout = static_cast<size_t>(ipow(static_cast<uint64_t>(q()), static_cast<int>(keep.size())));
        Mat V = V_;
        auto rand = rand_;
        return {d_in(), dout, [=](const Mat& X) {
                    Mat Y = V * X * V.adjoint();
                    Mat acc = Mat::Zero(static_cast<Eigen::Index>(dout), static_cast<Eigen::Index>(dout));
                    for (const auto& w : rand) {
                        std::vector<int> a, b;
                        split_ab(w, a, b);
                        Mat WY = apply_weyl(L, Y, regs, a, b);
                        Mat WYW = apply_weyl(L, Mat(WY.adjoint()), regs, a, b).adjoint();
                        acc += partial_trace(L, WYW, keep);
                    }
                    return Mat(acc / static_cast<double>(rand.size()));
                }};
    }

    /** Decoder POVM on A regrouped by the logical displacement of the
        decoded message. */
    Povm logical_povm(Subset A) const
    {
        Povm raw = ea_.decoder_povm(A);
        Layout Z(q(), 2 * static_cast<int>(subset_players(A).size()));
        Layout Lz(q(), 2 * static_cast<int>(s_.k()));
        LinearDecoder dec(s_.G(), s_.F, symplectify(A, s_.n));
        Povm out;
        out.elements.assign(Lz.dim(), Mat::Zero(static_cast<Eigen::Index>(raw.dim()), static_cast<Eigen::Index>(raw.dim())));
        for (size_t z = 0; z < raw.size(); ++z) {
            std::vector<int64_t> zi;
            for (int v : Z.digits(z)) zi.push_back(v);
            auto m = dec.decode(VecGF::from_ints(s_.F.ctx(), zi));
            size_t l = 0;
            if (m) {
                auto lv = to_ints(ea_.code().logical_of(s_.F * *m));
                l = Lz.index(lv);
            }
            out.elements[l] += raw.elements[z];
        }
        return out;
    }

    /** Gamma-bar built from the EASS decoder on A. */
    Channel recovery(Subset A) const
    {
        const size_t dA = static_cast<size_t>(ipow(static_cast<uint64_t>(q()), static_cast<int>(subset_players(A).size())));
        return gamma_bar(logical_povm(A), q(), static_cast<int>(s_.k()), dA);
    }

private:
    QqScheme s_;
    DenseEaEngine ea_;
    Mat V_;
    std::vector<VecGF> rand_;
};

/** Correctness: recovery after restriction is the identity channel (Choi
    fidelity at least 1 - 1e-9) on every accept set. Secrecy: the Choi state
    of the restriction to every reject set is I/d (x) sigma. */
inline AuditReport qq_audit(const QqScheme& s)
{
    DenseQqEngine eng(s);
    AuditReport rep;
    rep.protocol = "qqss";
    AuditItem corr = audit_item("correctness"), sec = audit_item("secrecy");
    for (Subset A : s.access.accept_sets()) {
        if (A == 0) continue;
        ++rep.cases;
        const double f = identity_fidelity(compose(eng.recovery(A), eng.restriction(A)));
        if (f < 1 - kTolProtocol) {
            mmsplab::detail::mark_failure(corr, A, "entanglement fidelity " + std::to_string(f));
            break;
        }
    }
    for (Subset B : s.access.reject_sets()) {
        ++rep.cases;
        Channel L = eng.restriction(B);
        Mat J = choi(L);
        Mat sigma = trace_first(J, L.din, L.dout);
        Mat I = Mat::Identity(static_cast<Eigen::Index>(L.din), static_cast<Eigen::Index>(L.din)) / static_cast<double>(L.din);
        if (trace_distance(J, kron(I, sigma)) > kTolProtocol) {
            mmsplab::detail::mark_failure(sec, B, "reduced state depends on the input");
            break;
        }
    }
    rep.items = {corr, sec};
    rep.mmsp = is_mmsp(s.G(), s.F, symplectify_structure(s.access));
    return rep;
}

/** QQ audit of a bundle whose class invariants may fail: a failed invariant
    is reported as an item instead of raising. */
inline AuditReport qq_audit_bundle(const MmspBundle& b, const AccessStructure& fs)
{
    AuditItem inv = audit_item("class invariants");
    for (const auto& i : class_invariants(b))
        if (!i.ok && inv.ok) {
            inv.ok = false;
            inv.detail = i.name;
        }
    if (b.cls != BundleClass::QQ) {
        inv.ok = false;
        inv.detail = std::string("bundle class is ") + class_name(b.cls);
    }
    if (!inv.ok) {
        AuditReport rep;
        rep.protocol = "qqss";
        rep.items = {inv};
        rep.mmsp = false;
        return rep;
    }
    AuditReport rep = qq_audit(make_qqss(b, fs));
    rep.items.insert(rep.items.begin(), inv);
    return rep;
}

struct QqRun {
    Transcript transcript;
    Mat recovered;
};

/** Encodes rho, restricts to A, and recovers; the logical outcome is sampled
    with the seed and the exact recovered state is returned. */
inline QqRun run_qqss(const QqScheme& s, const Mat& rho, Subset A, uint64_t seed)
{
    require(s.access.is_accept(A), Errc::NotQualified, "subset " + subset_label(A) + " is not an accept set");
    check_density(rho, "input state");
    DenseQqEngine eng(s);
    require(static_cast<size_t>(rho.rows()) == eng.d_in(), Errc::DimensionMismatch, "input dimension must be q^x'");
    Channel L = eng.restriction(A);
    Mat out = L(rho);
    Povm P = eng.logical_povm(A);
    Mat joint = kron(out, Mat::Identity(static_cast<Eigen::Index>(eng.d_in()), static_cast<Eigen::Index>(eng.d_in())) /
                              static_cast<double>(eng.d_in()));
    Measurement meas = measure(joint, P, seed);
    QqRun r;
    r.recovered = eng.recovery(A)(out);
    r.transcript.protocol = "qqss";
    r.transcript.seed = seed;
    r.transcript.entries.push_back({"dealer", "input dimension", {static_cast<int64_t>(eng.d_in())}});
    r.transcript.entries.push_back({"end-user " + subset_label(A), "logical outcome index", {static_cast<int64_t>(meas.outcome)}});
    const double td = trace_distance(r.recovered, rho);
    r.transcript.entries.push_back({"end-user " + subset_label(A), "trace distance to input x 1e9", {std::llround(td * 1e9)}});
    r.transcript.success = td <= kTolProtocol;
    return r;
}

/* ------------------------------------------------------------------------- */
/* Dense coding information identity                                         */
/* ------------------------------------------------------------------------- */

struct DenseCodingInfo {
    double i_dense_coding = 0; /* I(X;BR) */
    double i_channel = 0;      /* I(R;B) */
};

/** For a channel L on k qudits: rho_BRX from sending X uniform over
    F_q^{2k} as W(X) on half of |phi>, and sigma_RB = (id (x) L)(|phi><phi|). */
inline DenseCodingInfo lemma_l6_check(const Channel& L, int q, int k)
{
    Layout In(q, k);
    require(L.din == In.dim(), Errc::DimensionMismatch, "channel input must be k qudits");
    require(L.din * L.din * L.dout * L.dout <= kDenseCap * kDenseCap, Errc::TooLarge, "lemma_l6_check exceeds the dense cap");
    const size_t d = L.din;
    Vec phi = max_entangled(d);
    Mat P = phi * phi.adjoint();
    Layout Lz(q, 2 * k);
    Mat avg = Mat::Zero(static_cast<Eigen::Index>(d * L.dout), static_cast<Eigen::Index>(d * L.dout));
    double mean_s = 0;
    Mat Id = Mat::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (size_t x = 0; x < Lz.dim(); ++x) {
        auto dg = Lz.digits(x);
        Mat W = kron(Id, weyl_matrix(In, std::vector<int>(dg.begin(), dg.begin() + k), std::vector<int>(dg.begin() + k, dg.end())));
        Mat s = apply_second(L, W * P * W.adjoint(), d);
        avg += s / static_cast<double>(Lz.dim());
        mean_s += von_neumann_entropy(s) / static_cast<double>(Lz.dim());
    }
    DenseCodingInfo out;
    out.i_dense_coding = von_neumann_entropy(avg) - mean_s;
    out.i_channel = mutual_information(apply_second(L, P, d), d, L.dout);
    return out;
}

/* ------------------------------------------------------------------------- */
/* Quantum SPIR                                                              */
/* ------------------------------------------------------------------------- */

/** Linear quantum SPIR: server j applies W(Q_j m + R_j, Q_{n+j} m + R_{n+j})
    to its half of |Phi[0,G1]>, with R = G2 U_S and the query of the
    classical protocol base (whose G is (G1, G2)). */
struct QSpirScheme {
    std::string kind; /* feaspir, easpir, cqspir */
    MatGF G1, G2;
    SpirProtocol base;
    int n = 0;

    const MatGF& F() const { return base.F; }
    int f() const { return base.f; }
};

inline QSpirScheme make_feaspir(const MatGF& G, const MatGF& F, int f, const AccessStructure& fs)
{
    QSpirScheme s;
    s.kind = "feaspir";
    s.G1 = MatGF::empty(F.ctx(), F.rows(), 0);
    s.G2 = G;
    detail::check_ea_shapes(s.G1, s.G2, F, fs);
    s.base = make_spir(G, F, f, symplectify_structure(fs));
    s.n = fs.n;
    return s;
}

inline QSpirScheme make_easpir(const MmspBundle& b, int f, const AccessStructure& fs)
{
    require(b.cls == BundleClass::EA || b.cls == BundleClass::CQ, Errc::ClassMismatch,
            std::string("EASPIR needs an EA bundle, got ") + class_name(b.cls));
    detail::check_ea_shapes(b.G1, b.G2, b.F, fs);
    QSpirScheme s;
    s.kind = "easpir";
    s.G1 = b.G1;
    s.G2 = b.G2;
    s.base = make_spir(b.G(), b.F, f, symplectify_structure(fs));
    s.n = fs.n;
    return s;
}

inline QSpirScheme make_cqspir(const MmspBundle& b, int f, const AccessStructure& fs)
{
    require(b.cls == BundleClass::CQ, Errc::ClassMismatch, std::string("CQSPIR needs a CQ bundle, got ") + class_name(b.cls));
    require(b.G1.cols() == b.F.rows() / 2, Errc::ClassMismatch, "CQSPIR needs y1 = n");
    QSpirScheme s = make_easpir(b, f, fs);
    s.kind = "cqspir";
    return s;
}

namespace detail {

/** Answer displacements O_k M + G2 u_S over all u_S. */
inline std::vector<VecGF> spir_displacements(const QSpirScheme& s, const MatGF& O, const VecGF& M)
{
    std::vector<VecGF> out;
    const u128 cnt = count_vectors(*s.F().ctx(), s.G2.cols(), kAuditBudget, "server randomness");
    VecGF base = O * M;
    for (u128 i = 0; i < cnt; ++i) out.push_back(s.G2.cols() ? base + s.G2 * vector_from_index(s.F().ctx(), s.G2.cols(), i) : base);
    return out;
}

} // namespace detail

/** Exhaustive quantum SPIR audit (dense).
    query phase: every column of G1 fixes |Phi[0,G1]> up to a phase, so the
      G1 part of a query leaves the state unchanged; the G2 part is absorbed
      by the uniform U_S. States are therefore enumerated with U_Q = 0.
    correctness: outcome supports are disjoint for distinct m_k (all M).
    user secrecy: the classical query distribution restricted to B.
    server secrecy: the full state depends on M only through m_k. */
inline AuditReport qspir_audit(const QSpirScheme& s)
{
    const SpirProtocol& p = s.base;
    const FieldPtr& ctx = p.F.ctx();
    const size_t x = p.x(), xf = x * static_cast<size_t>(p.f);
    const u128 cM = count_vectors(*ctx, xf, kAuditBudget, "qspir_audit");
    DenseEaEngine eng(s.G1);
    AuditReport rep;
    rep.protocol = s.kind;
    AuditItem phase = audit_item("query G1 part acts as a phase"), corr = audit_item("correctness"), srv = audit_item("server secrecy");
    for (size_t j = 0; j < s.G1.cols(); ++j) {
        const cplx ov = eng.resource().dot(eng.displaced(eng.resource(), s.G1.col(j)));
        if (std::abs(std::abs(ov) - 1.0) > kTolProtocol) {
            phase.ok = false;
            phase.detail = "column " + std::to_string(j + 1) + " of G1 moves the resource";
        }
    }
    std::vector<VecGF> Ms;
    for (u128 i = 0; i < cM; ++i) Ms.push_back(vector_from_index(ctx, xf, i));
    auto mk_key = [&](const VecGF& M, int k) { return vec_key(M.slice(static_cast<size_t>(k - 1) * x, x)); };

    for (Subset A : s.base.access.accept_sets()) {
        if (A == 0 || !corr.ok) continue;
        const Subset players = [&] {
            Subset out = 0;
            for (int j = 0; j < s.n; ++j)
                if (A >> j & 1u) out |= Subset{1} << j;
            return out;
        }();
        for (int k = 1; k <= p.f && corr.ok; ++k) {
            MatGF O = p.offset(k);
            std::map<std::string, size_t> idx;
            std::vector<Distribution> ds;
            for (const auto& M : Ms) {
                ++rep.cases;
                auto key = mk_key(M, k);
                auto [it, fresh] = idx.emplace(key, ds.size());
                Distribution d = eng.outcome_distribution(players, detail::spir_displacements(s, O, M));
                if (fresh) {
                    ds.push_back(d);
                } else {
                    for (const auto& [z, v] : d) ds[it->second][z] = std::max(ds[it->second][z], v);
                }
            }
            std::string why;
            if (!detail::supports_disjoint(ds, &why)) mmsplab::detail::mark_failure(corr, players, "file " + std::to_string(k) + ": " + why);
        }
    }

    AuditItem user = spir_user_secrecy(p, &rep.cases);

    for (int k = 1; k <= p.f && srv.ok; ++k) {
        MatGF O = p.offset(k);
        std::map<std::string, std::vector<Vec>> ref;
        for (const auto& M : Ms) {
            ++rep.cases;
            std::vector<Vec> states;
            for (const auto& d : detail::spir_displacements(s, O, M)) states.push_back(eng.displaced(eng.resource(), d));
            auto key = mk_key(M, k);
            auto it = ref.find(key);
            if (it == ref.end()) {
                ref.emplace(key, states);
                continue;
            }
            std::vector<double> w(states.size(), 1.0 / static_cast<double>(states.size()));
            if (mixture_distance(states, w, it->second, w) > kTolProtocol) {
                srv.ok = false;
                srv.detail = "state for file " + std::to_string(k) + " depends on other files";
                break;
            }
        }
    }
    rep.items = {phase, corr, user, srv};
    rep.mmsp = p.standard() ? is_mmsp(p.G, p.F, p.access) : spir_audit(p).secure();
    return rep;
}

/** Seeded retrieval of file k by the servers in A (standard queries). */
inline Transcript run_qspir(const QSpirScheme& s, const std::vector<VecGF>& files, int k, Subset A, uint64_t seed, Backend backend)
{
    const SpirProtocol& p = s.base;
    require(p.standard(), Errc::NonStandardQuery, "runs need a standard query");
    require(static_cast<int>(files.size()) == p.f, Errc::DimensionMismatch, "file count");
    const Subset SA = symplectify(A, s.n);
    require(p.access.is_accept(SA), Errc::NotQualified, "subset " + subset_label(A) + " is not an accept set");
    const FieldPtr& ctx = p.F.ctx();
    std::mt19937_64 rng(seed);
    Transcript t;
    t.protocol = s.kind;
    t.seed = seed;
    VecGF M(ctx, 0);
    for (const auto& fl : files) M = VecGF::concat(M, fl);
    MatGF UQ(ctx, p.y(), p.x() * static_cast<size_t>(p.f));
    for (size_t i = 0; i < UQ.rows(); ++i)
        for (size_t j = 0; j < UQ.cols(); ++j) UQ.at(i, j) = ctx->random(rng);
    VecGF US = mmsplab::detail::random_vec(ctx, s.G2.cols(), rng);
    MatGF Q = spir_query(p, k, UQ);
    VecGF x = Q * M;
    if (s.G2.cols()) x = x + s.G2 * US;
    t.entries.push_back({"user", "file index", {k}});
    for (int j = 0; j < s.n; ++j) {
        std::vector<int64_t> row = Q.row(static_cast<size_t>(j)).to_ints();
        auto zr = Q.row(static_cast<size_t>(s.n + j)).to_ints();
        row.insert(row.end(), zr.begin(), zr.end());
        t.entries.push_back({"user", "query to server " + std::to_string(j + 1), row});
    }
    t.entries.push_back({"servers", "randomness seed", US.to_ints()});
    t.entries.push_back({"servers", "answer displacement", x.to_ints()});
    Distribution d;
    if (backend == Backend::Dense) {
        DenseEaEngine eng(s.G1);
        t.entries.push_back({"servers", "answer state digest", {detail::state_digest(eng.displaced(eng.resource(), x))}});
        d = eng.outcome_distribution(A, {x});
    } else {
        d = track_distribution(symp_track(s.G1, x, A, s.n));
    }
    auto z = detail::sample(d, rng);
    t.entries.push_back({"user " + subset_label(A), "outcome", z});
    auto out = LinearDecoder(p.G, p.F, SA).decode(VecGF::from_ints(ctx, z));
    t.entries.push_back({"user " + subset_label(A), "retrieved", out ? out->to_ints() : std::vector<int64_t>{}});
    t.success = out.has_value() && *out == files[static_cast<size_t>(k - 1)];
    return t;
}

/* ------------------------------------------------------------------------- */
/* SPIR to EASS conversion                                                   */
/* ------------------------------------------------------------------------- */

/** EASS protocol obtained from a standard linear EASPIR protocol by fixing
    K = 1 and M = (m, 0, ..., 0): the shares are the answers
    F m + G U m + G2 u_S with the query randomness U (the first y x x block of
    U_Q) and the server seed u_S both uniform. */
inline EaScheme convert_flow5(const QSpirScheme& s)
{
    require(s.base.standard(), Errc::NonStandardQuery, "conversion needs a standard query");
    EaScheme e;
    e.kind = "converted-eass";
    e.G1 = s.G1;
    e.G2 = s.G2;
    e.F = s.base.F;
    e.n = s.n;
    {
        std::vector<Subset> acc, rej;
        for (Subset a : s.base.access.accept_sets()) {
            Subset pl = 0;
            for (int j = 0; j < s.n; ++j)
                if (a >> j & 1u) pl |= Subset{1} << j;
            acc.push_back(pl);
        }
        for (Subset b : s.base.access.reject_sets()) {
            Subset pl = 0;
            for (int j = 0; j < s.n; ++j)
                if (b >> j & 1u) pl |= Subset{1} << j;
            rej.push_back(pl);
        }
        e.access = make_explicit(s.n, acc, rej);
    }
    const MatGF G = s.base.G, G2 = s.G2, F = s.base.F;
    const size_t y = G.cols(), x = F.cols();
    e.encoder = [G, G2, F, y, x](const VecGF& m) {
        const FieldPtr& ctx = F.ctx();
        const u128 cu = count_vectors(*ctx, y * x, kAuditBudget, "conversion query randomness");
        const u128 cs = count_vectors(*ctx, G2.cols(), kAuditBudget, "conversion server randomness");
        require(cu * cs <= kAuditBudget, Errc::TooLarge, "conversion enumeration exceeds the budget");
        std::vector<VecGF> out;
        VecGF base = F * m;
        for (u128 iu = 0; iu < cu; ++iu) {
            VecGF flat = vector_from_index(ctx, y * x, iu);
            VecGF v(ctx, y);
            for (size_t r = 0; r < y; ++r)
                for (size_t c = 0; c < x; ++c) v[r] = ctx->add(v[r], ctx->mul(flat[r * x + c], m[c]));
            VecGF a = y ? base + G * v : base;
            for (u128 is = 0; is < cs; ++is) out.push_back(G2.cols() ? a + G2 * vector_from_index(ctx, G2.cols(), is) : a);
        }
        return out;
    };
    return e;
}

} // namespace mmsplab::quantum

#endif // MMSPLAB_QUANTUM_PROTOCOLS_HPP_
