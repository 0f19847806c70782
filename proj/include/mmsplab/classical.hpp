/**@file
 *****************************************************************************
 Linear classical secret sharing Z = F m + G u and linear symmetric private
 information retrieval with queries Q^(k) = F E_k + G U_Q, with exhaustive
 desk-scale audits of correctness and secrecy.
 *****************************************************************************
 * @copyright  MIT license (see LICENSE file)
 *****************************************************************************/
#ifndef MMSPLAB_CLASSICAL_HPP_
#define MMSPLAB_CLASSICAL_HPP_

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mmsplab/access.hpp"
#include "mmsplab/matrix.hpp"
#include "mmsplab/mmsp.hpp"

namespace mmsplab {

/** Enumeration budget of the exhaustive audits. */
inline constexpr uint64_t kAuditBudget = 1000000;

/* ------------------------------------------------------------------------- */
/* Linear decoding                                                           */
/* ------------------------------------------------------------------------- */

/** Decoder for z = P_A F m + P_A G v: reduce modulo Im P_A G, then invert the
    image of P_A F on a set of independent coordinates. */
class LinearDecoder {
public:
    LinearDecoder(const MatGF& G, const MatGF& F, Subset A)
    {
        rows_ = mask_to_rows(A);
        for (auto r : rows_) require(r < F.rows(), Errc::IndexOutOfRange, "subset exceeds row count");
        MatGF PG = G.restrict_rows(rows_), PF = F.restrict_rows(rows_);
        reduce_ = quotient(PG).matrix();
        K_ = reduce_ * PF;
        x_ = F.cols();
        Rref e = rref(K_.transpose());
        injective_ = e.pivots.size() == x_;
        if (!injective_) return;
        sel_ = e.pivots;
        inv_ = inverse(K_.restrict_rows(sel_));
    }
    bool injective() const { return injective_; }
    const std::vector<size_t>& rows() const { return rows_; }
    /** The unique m consistent with z_A, if any. */
    std::optional<VecGF> decode(const VecGF& zA) const
    {
        require(zA.size() == rows_.size(), Errc::DimensionMismatch, "decode: share vector length");
        if (!injective_) return std::nullopt;
        VecGF c = reduce_ * zA;
        VecGF m = inv_ * restrict_vec(c, sel_);
        if (K_ * m != c) return std::nullopt;
        return m;
    }

private:
    std::vector<size_t> rows_, sel_;
    MatGF reduce_, K_, inv_;
    size_t x_ = 0;
    bool injective_ = false;
};

/* ------------------------------------------------------------------------- */
/* Linear CSS                                                                */
/* ------------------------------------------------------------------------- */

struct CssProtocol {
    MatGF G, F;
    AccessStructure access;

    size_t N() const { return F.rows(); }
    size_t x() const { return F.cols(); }
    size_t y() const { return G.cols(); }
};

inline void check_protocol_shapes(const MatGF& G, const MatGF& F, const AccessStructure& fs)
{
    require(G.rows() == F.rows(), Errc::DimensionMismatch, "G and F have different row counts");
    require(!G.ctx() || !F.ctx() || G.ctx()->same_field(*F.ctx()), Errc::CtxMismatch, "G and F use different fields");
    require(static_cast<int>(F.rows()) == fs.n, Errc::DimensionMismatch, "row count does not match the access structure");
}

inline CssProtocol make_css(MatGF G, MatGF F, AccessStructure fs)
{
    check_protocol_shapes(G, F, fs);
    return {std::move(G), std::move(F), std::move(fs)};
}

/** Shares F m + G u. */
inline VecGF css_share(const CssProtocol& p, const VecGF& m, const VecGF& u)
{
    require(m.size() == p.x() && u.size() == p.y(), Errc::DimensionMismatch, "css_share: message or randomness length");
    if (p.y() == 0) return p.F * m;
    return p.F * m + p.G * u;
}

/** Message from the shares of an accept set (ascending row order). */
inline std::optional<VecGF> css_decode(const CssProtocol& p, Subset A, const VecGF& zA)
{
    require(p.access.is_accept(A), Errc::NotQualified, "subset " + subset_label(A) + " is not an accept set");
    return LinearDecoder(p.G, p.F, A).decode(zA);
}

/** Outcome of one audited condition with an optional counterexample. */
struct AuditItem {
    std::string name;
    bool ok = true;
    bool has_witness = false;
    Subset witness = 0;
    std::string detail;
};

inline AuditItem audit_item(std::string name)
{
    AuditItem it;
    it.name = std::move(name);
    return it;
}

struct AuditReport {
    std::string protocol;
    std::vector<AuditItem> items;
    bool mmsp = false;       /* independent is_mmsp verdict */
    uint64_t cases = 0;      /* enumerated cases */

    bool secure() const
    {
        for (const auto& i : items)
            if (!i.ok) return false;
        return true;
    }
    bool crosscheck_ok() const { return secure() == mmsp; }
    const AuditItem* find(const std::string& name) const
    {
        for (const auto& i : items)
            if (i.name == name) return &i;
        return nullptr;
    }
};

namespace detail {

inline void mark_failure(AuditItem& item, Subset S, std::string detail)
{
    if (!item.ok) return;
    item.ok = false;
    item.has_witness = true;
    item.witness = S;
    item.detail = std::move(detail);
}

inline std::string ints_str(const VecGF& v)
{
    std::string s = "(";
    auto xs = v.to_ints();
    for (size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s + ")";
}

/** Multiset of P_B(c + G u) over all u. */
inline std::map<std::string, uint64_t> coset_multiset(const MatGF& PG, const VecGF& c, u128 count_u)
{
    std::map<std::string, uint64_t> out;
    for (u128 iu = 0; iu < count_u; ++iu) {
        VecGF v = c;
        if (PG.cols()) v = v + PG * vector_from_index(PG.ctx(), PG.cols(), iu);
        ++out[vec_key(v)];
    }
    return out;
}

} // namespace detail

/** Exhaustive audit: correctness on every accept set for every (m, u), and
    exact equality of share distributions on every reject set. */
inline AuditReport css_audit(const CssProtocol& p)
{
    check_protocol_shapes(p.G, p.F, p.access);
    const FieldPtr& ctx = p.F.ctx();
    const u128 cm = count_vectors(*ctx, p.x(), kAuditBudget, "css_audit");
    const u128 cu = count_vectors(*ctx, p.y(), kAuditBudget, "css_audit");
    require(cm * cu <= kAuditBudget, Errc::TooLarge, "css_audit: q^(x+y) exceeds the enumeration budget");
    AuditReport rep;
    rep.protocol = "css";
    AuditItem corr = audit_item("correctness"), sec = audit_item("secrecy");
    for (Subset A : p.access.accept_sets()) {
        LinearDecoder dec(p.G, p.F, A);
        for (u128 im = 0; im < cm && corr.ok; ++im) {
            VecGF m = vector_from_index(ctx, p.x(), im);
            for (u128 iu = 0; iu < cu; ++iu) {
                VecGF z = css_share(p, m, vector_from_index(ctx, p.y(), iu));
                auto out = dec.decode(restrict_vec(z, dec.rows()));
                ++rep.cases;
                if (!out || *out != m) {
                    detail::mark_failure(corr, A, "message " + detail::ints_str(m) + " not recovered");
                    break;
                }
            }
        }
        if (!corr.ok) break;
    }
    for (Subset B : p.access.reject_sets()) {
        auto rows = mask_to_rows(B);
        MatGF PG = p.G.restrict_rows(rows), PF = p.F.restrict_rows(rows);
        auto ref = detail::coset_multiset(PG, VecGF(ctx, rows.size()), cu);
        for (u128 im = 1; im < cm; ++im) {
            VecGF m = vector_from_index(ctx, p.x(), im);
            rep.cases += static_cast<uint64_t>(cu);
            if (detail::coset_multiset(PG, PF * m, cu) != ref) {
                detail::mark_failure(sec, B, "share distribution differs for message " + detail::ints_str(m));
                break;
            }
        }
        if (!sec.ok) break;
    }
    rep.items = {corr, sec};
    rep.mmsp = is_mmsp(p.G, p.F, p.access);
    return rep;
}

/* ------------------------------------------------------------------------- */
/* Linear CSPIR                                                              */
/* ------------------------------------------------------------------------- */

/** Servers j hold F rows; files are f vectors in F_q^x. By default the query
    is in standard form Q^(k) = F E_k + G U_Q; a protocol may instead carry
    explicit offsets Q^(k) = O_k + G U_Q. */
struct SpirProtocol {
    MatGF G, F;
    int f = 1;
    AccessStructure access;
    std::optional<std::vector<MatGF>> offsets;

    size_t N() const { return F.rows(); }
    size_t x() const { return F.cols(); }
    size_t y() const { return G.cols(); }
    bool standard() const { return !offsets.has_value(); }

    /** O_k (N x xf): F E_k in standard form. */
    MatGF offset(int k) const
    {
        require(k >= 1 && k <= f, Errc::BadIndex, "file index " + std::to_string(k) + " outside [1, " + std::to_string(f) + "]");
        if (offsets) return (*offsets)[static_cast<size_t>(k - 1)];
        MatGF O(F.ctx(), N(), x() * static_cast<size_t>(f));
        for (size_t i = 0; i < N(); ++i)
            for (size_t c = 0; c < x(); ++c) O.at(i, static_cast<size_t>(k - 1) * x() + c) = F.at(i, c);
        return O;
    }
};

inline SpirProtocol make_spir(MatGF G, MatGF F, int f, AccessStructure fs)
{
    check_protocol_shapes(G, F, fs);
    require(f >= 1, Errc::OutOfRange, "file count must be positive");
    SpirProtocol p;
    p.G = std::move(G);
    p.F = std::move(F);
    p.f = f;
    p.access = std::move(fs);
    return p;
}

/** Q^(k) = O_k + G U_Q with U_Q of size y x (x f). */
inline MatGF spir_query(const SpirProtocol& p, int k, const MatGF& UQ)
{
    MatGF O = p.offset(k);
    require(UQ.rows() == p.y() && UQ.cols() == p.x() * static_cast<size_t>(p.f), Errc::DimensionMismatch,
            "query randomness must be y x (x f)");
    if (p.y() == 0) return O;
    return O + p.G * UQ;
}

/** D_j = q_j . files + r_j. */
inline Elem spir_answer(const SpirProtocol& p, const VecGF& qj, const VecGF& files, const Elem& rj)
{
    require(qj.size() == files.size() && files.size() == p.x() * static_cast<size_t>(p.f), Errc::DimensionMismatch,
            "spir_answer: query row and file vector lengths");
    const FieldCtx& F = *p.F.ctx();
    Elem acc = rj;
    for (size_t i = 0; i < qj.size(); ++i) acc = F.add(acc, F.mul(qj[i], files[i]));
    return acc;
}

/** Decodes file k from the answers of an accept set A: answers are
    P_A F m_k + P_A G v for standard queries. */
inline std::optional<VecGF> spir_decode(const SpirProtocol& p, Subset A, const VecGF& dA)
{
    require(p.access.is_accept(A), Errc::NotQualified, "subset " + subset_label(A) + " is not an accept set");
    return LinearDecoder(p.G, p.F, A).decode(dA);
}

/** User secrecy of a linear query: on every reject set the rows of
    Q^(k) = O_k + G U_Q restricted to B have the same distribution for every
    k. Columns of U_Q are independent, so each column is compared
    exhaustively over F^y. */
inline AuditItem spir_user_secrecy(const SpirProtocol& p, uint64_t* cases = nullptr)
{
    const u128 cu = count_vectors(*p.F.ctx(), p.y(), kAuditBudget, "spir_user_secrecy");
    const size_t xf = p.x() * static_cast<size_t>(p.f);
    AuditItem user = audit_item("user secrecy");
    for (Subset B : p.access.reject_sets()) {
        auto rows = mask_to_rows(B);
        MatGF PG = p.G.restrict_rows(rows);
        std::vector<std::map<std::string, uint64_t>> ref;
        MatGF O1 = p.offset(1).restrict_rows(rows);
        for (size_t c = 0; c < xf; ++c) ref.push_back(detail::coset_multiset(PG, O1.col(c), cu));
        for (int k = 2; k <= p.f && user.ok; ++k) {
            MatGF Ok = p.offset(k).restrict_rows(rows);
            for (size_t c = 0; c < xf; ++c) {
                if (cases) *cases += static_cast<uint64_t>(cu);
                if (detail::coset_multiset(PG, Ok.col(c), cu) != ref[c]) {
                    detail::mark_failure(user, B, "query column " + std::to_string(c + 1) + " distinguishes file 1 from file " +
                                                      std::to_string(k));
                    break;
                }
            }
        }
        if (!user.ok) break;
    }
    return user;
}

/** Exhaustive SPIR audit.
    correctness: for every accept set and k, the answers P_A(O_k M + G v)
      decode to m_k for every M and v (v = U_Q M + U_S ranges over F^y; for
      standard queries only m_k enters O_k M, so (m_k, v) is enumerated).
    user secrecy: on every reject set the distribution of P_B Q^(k) is the
      same for all k; columns of U_Q are independent, so each column's
      distribution is compared exhaustively over F^y.
    server secrecy (structural): every column of the blocks j != k of O_k
      lies in Im G.
    server secrecy (empirical): the coset of O_k M modulo Im G, which is
      exactly what the user learns beyond U_Q, depends on M only through m_k. */
inline AuditReport spir_audit(const SpirProtocol& p)
{
    check_protocol_shapes(p.G, p.F, p.access);
    const FieldPtr& ctx = p.F.ctx();
    const size_t x = p.x(), xf = x * static_cast<size_t>(p.f);
    const u128 cu = count_vectors(*ctx, p.y(), kAuditBudget, "spir_audit");
    const u128 cM = count_vectors(*ctx, p.standard() ? x : xf, kAuditBudget, "spir_audit");
    require(cM * cu <= kAuditBudget, Errc::TooLarge, "spir_audit: enumeration exceeds the budget");
    const u128 cAll = count_vectors(*ctx, xf, kAuditBudget, "spir_audit");
    AuditReport rep;
    rep.protocol = "spir";
    AuditItem corr = audit_item("correctness"), user = audit_item("user secrecy"),
              srv = audit_item("server secrecy (structural)"), srv_emp = audit_item("server secrecy (empirical)");

    for (Subset A : p.access.accept_sets()) {
        LinearDecoder dec(p.G, p.F, A);
        for (int k = 1; k <= p.f && corr.ok; ++k) {
            MatGF O = p.offset(k).restrict_rows(dec.rows());
            MatGF PG = p.G.restrict_rows(dec.rows());
            for (u128 iM = 0; iM < cM && corr.ok; ++iM) {
                VecGF M(ctx, xf);
                VecGF mk;
                if (p.standard()) {
                    mk = vector_from_index(ctx, x, iM);
                    for (size_t c = 0; c < x; ++c) M[static_cast<size_t>(k - 1) * x + c] = mk[c];
                } else {
                    M = vector_from_index(ctx, xf, iM);
                    mk = M.slice(static_cast<size_t>(k - 1) * x, x);
                }
                VecGF base = O * M;
                for (u128 iv = 0; iv < cu; ++iv) {
                    VecGF d = base;
                    if (p.y()) d = d + PG * vector_from_index(ctx, p.y(), iv);
                    auto out = dec.decode(d);
                    ++rep.cases;
                    if (!out || *out != mk) {
                        detail::mark_failure(corr, A, "file " + std::to_string(k) + " content " + detail::ints_str(mk) +
                                                          " not recovered");
                        break;
                    }
                }
            }
        }
        if (!corr.ok) break;
    }

    user = spir_user_secrecy(p, &rep.cases);

    for (int k = 1; k <= p.f && srv.ok; ++k) {
        MatGF O = p.offset(k);
        for (int j = 1; j <= p.f && srv.ok; ++j) {
            if (j == k) continue;
            for (size_t c = 0; c < x; ++c)
                if (!in_span(p.G, O.col(static_cast<size_t>(j - 1) * x + c))) {
                    srv.ok = false;
                    srv.detail = "query for file " + std::to_string(k) + " has a column of block " + std::to_string(j) +
                                 " outside Im G";
                    break;
                }
        }
    }

    const MatGF qmat = quotient(p.G).matrix();
    for (int k = 1; k <= p.f && srv_emp.ok; ++k) {
        MatGF O = qmat * p.offset(k);
        std::map<std::string, std::string> seen; /* m_k -> coset of O_k M */
        for (u128 iM = 0; iM < cAll; ++iM) {
            VecGF M = vector_from_index(ctx, xf, iM);
            std::string key = vec_key(M.slice(static_cast<size_t>(k - 1) * x, x)), coset = vec_key(O * M);
            ++rep.cases;
            auto [it, fresh] = seen.emplace(key, coset);
            if (!fresh && it->second != coset) {
                srv_emp.ok = false;
                srv_emp.detail = "answers for file " + std::to_string(k) + " depend on other files";
                break;
            }
        }
    }

    rep.items = {corr, user, srv, srv_emp};
    rep.mmsp = is_mmsp(p.G, p.F, p.access);
    return rep;
}

/* ------------------------------------------------------------------------- */
/* Transcripts                                                               */
/* ------------------------------------------------------------------------- */

struct TranscriptEntry {
    std::string role;
    std::string label;
    std::vector<int64_t> values;
};

/** Replayable record of one run; the same seed reproduces it exactly. */
struct Transcript {
    std::string protocol;
    uint64_t seed = 0;
    std::vector<TranscriptEntry> entries;
    bool success = false;

    bool operator==(const Transcript& o) const
    {
        if (protocol != o.protocol || seed != o.seed || success != o.success || entries.size() != o.entries.size()) return false;
        for (size_t i = 0; i < entries.size(); ++i)
            if (entries[i].role != o.entries[i].role || entries[i].label != o.entries[i].label ||
                entries[i].values != o.entries[i].values)
                return false;
        return true;
    }
};

namespace detail {

inline VecGF random_vec(const FieldPtr& ctx, size_t len, std::mt19937_64& rng)
{
    VecGF v(ctx, len);
    for (size_t i = 0; i < len; ++i) v[i] = ctx->random(rng);
    return v;
}

} // namespace detail

/** Shares m with seeded randomness and decodes from A. */
inline Transcript css_transcript(const CssProtocol& p, const VecGF& m, Subset A, uint64_t seed)
{
    std::mt19937_64 rng(seed);
    Transcript t;
    t.protocol = "css";
    t.seed = seed;
    VecGF u = detail::random_vec(p.F.ctx(), p.y(), rng);
    VecGF z = css_share(p, m, u);
    t.entries.push_back({"dealer", "message", m.to_ints()});
    t.entries.push_back({"dealer", "randomness", u.to_ints()});
    for (size_t j = 0; j < z.size(); ++j) t.entries.push_back({"player " + std::to_string(j + 1), "share", {z.to_ints()[j]}});
    auto out = css_decode(p, A, restrict_vec(z, mask_to_rows(A)));
    t.entries.push_back({"decoder " + subset_label(A), "output", out ? out->to_ints() : std::vector<int64_t>{}});
    t.success = out.has_value() && *out == m;
    return t;
}

/** Retrieves file k from the answers of A with seeded query and server
    randomness. */
inline Transcript spir_transcript(const SpirProtocol& p, int k, const std::vector<VecGF>& files, Subset A, uint64_t seed)
{
    require(static_cast<int>(files.size()) == p.f, Errc::DimensionMismatch, "spir_transcript: file count");
    const FieldPtr& ctx = p.F.ctx();
    std::mt19937_64 rng(seed);
    Transcript t;
    t.protocol = "spir";
    t.seed = seed;
    VecGF M(ctx, 0);
    for (const auto& fl : files) {
        require(fl.size() == p.x(), Errc::DimensionMismatch, "spir_transcript: file length");
        M = VecGF::concat(M, fl);
    }
    MatGF UQ(ctx, p.y(), p.x() * static_cast<size_t>(p.f));
    for (size_t i = 0; i < UQ.rows(); ++i)
        for (size_t j = 0; j < UQ.cols(); ++j) UQ.at(i, j) = ctx->random(rng);
    VecGF US = detail::random_vec(ctx, p.y(), rng);
    MatGF Q = spir_query(p, k, UQ);
    VecGF R = p.y() ? p.G * US : VecGF(ctx, p.N());
    t.entries.push_back({"user", "file index", {k}});
    for (size_t j = 0; j < p.N(); ++j) t.entries.push_back({"user", "query to server " + std::to_string(j + 1), Q.row(j).to_ints()});
    t.entries.push_back({"servers", "shared randomness seed", US.to_ints()});
    VecGF D(ctx, p.N());
    for (size_t j = 0; j < p.N(); ++j) {
        D[j] = spir_answer(p, Q.row(j), M, R[j]);
        t.entries.push_back({"server " + std::to_string(j + 1), "answer", {VecGF(ctx, std::vector<Elem>{D[j]}).to_ints()[0]}});
    }
    auto out = spir_decode(p, A, restrict_vec(D, mask_to_rows(A)));
    t.entries.push_back({"user " + subset_label(A), "output", out ? out->to_ints() : std::vector<int64_t>{}});
    t.success = out.has_value() && *out == files[static_cast<size_t>(k - 1)];
    return t;
}

} // namespace mmsplab

#endif // MMSPLAB_CLASSICAL_HPP_
