/**@file
 *****************************************************************************
 Multi-target monotone span programs: the acceptance and rejection
 predicates, their row-space characterisations, MMSP bundles with class
 tags (plain, EA, CQ, QQ), classification, EAMDS/QQMDS checks and the
 closed-form rates of the threshold protocols.
 *****************************************************************************
 * @copyright  MIT license (see LICENSE file)
 *****************************************************************************/
#ifndef MMSPLAB_MMSP_HPP_
#define MMSPLAB_MMSP_HPP_

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "mmsplab/access.hpp"
#include "mmsplab/error.hpp"
#include "mmsplab/matrix.hpp"

namespace mmsplab {

/* ------------------------------------------------------------------------- */
/* Acceptance and rejection                                                  */
/* ------------------------------------------------------------------------- */

inline void check_pair(const MatGF& G, const MatGF& F)
{
    require(G.rows() == F.rows(), Errc::DimensionMismatch, "G and F have different row counts");
}

/** The columns of P_A F stay linearly independent modulo Im P_A G. */
inline bool accepts_one(const MatGF& G, const MatGF& F, Subset A)
{
    check_pair(G, F);
    auto rows = mask_to_rows(A);
    for (auto r : rows) require(r < G.rows(), Errc::IndexOutOfRange, "subset exceeds row count");
    MatGF PG = G.restrict_rows(rows), PF = F.restrict_rows(rows);
    return rank(MatGF::hcat(PG, PF)) == rank(PG) + F.cols();
}

/** Every column of P_B F lies in the span of the columns of P_B G. */
inline bool rejects_one(const MatGF& G, const MatGF& F, Subset B)
{
    check_pair(G, F);
    auto rows = mask_to_rows(B);
    for (auto r : rows) require(r < G.rows(), Errc::IndexOutOfRange, "subset exceeds row count");
    MatGF PG = G.restrict_rows(rows), PF = F.restrict_rows(rows);
    return rank(MatGF::hcat(PG, PF)) == rank(PG);
}

namespace detail {

/** Row space of (P_S G, P_S F) as columns, plus the block E = span(e_{y+1..y+x}). */
inline std::pair<MatGF, MatGF> rowspace_and_e(const MatGF& G, const MatGF& F, Subset S)
{
    auto rows = mask_to_rows(S);
    MatGF M = MatGF::hcat(G.restrict_rows(rows), F.restrict_rows(rows));
    const FieldPtr& ctx = G.ctx() ? G.ctx() : F.ctx();
    MatGF E(ctx, G.cols() + F.cols(), F.cols());
    for (size_t i = 0; i < F.cols(); ++i) E.at(G.cols() + i, i) = ctx->one();
    return {M.transpose(), E};
}

} // namespace detail

/** Row-space form of acceptance: the row space contains E. */
inline bool accepts_rowspace(const MatGF& G, const MatGF& F, Subset A)
{
    check_pair(G, F);
    auto [R, E] = detail::rowspace_and_e(G, F, A);
    for (size_t i = 0; i < E.cols(); ++i)
        if (!in_span(R, E.col(i))) return false;
    return true;
}

/** Row-space form of rejection: the row space meets E only in 0. */
inline bool rejects_rowspace(const MatGF& G, const MatGF& F, Subset B)
{
    check_pair(G, F);
    auto [R, E] = detail::rowspace_and_e(G, F, B);
    size_t rr = rank(R), re = rank(E);
    size_t joint = rank(MatGF::hcat(R, E));
    return rr + re - joint == 0;
}

inline bool a1_a2_agree(const MatGF& G, const MatGF& F, Subset A)
{
    return accepts_one(G, F, A) == accepts_rowspace(G, F, A);
}
inline bool b1_b2_agree(const MatGF& G, const MatGF& F, Subset B)
{
    return rejects_one(G, F, B) == rejects_rowspace(G, F, B);
}

/** First failing subset of an MMSP check, if any. */
struct MmspCheck {
    bool ok = true;
    bool accept_failed = false;
    Subset witness = 0;
};

inline MmspCheck check_mmsp(const MatGF& G, const MatGF& F, const AccessStructure& fs)
{
    check_pair(G, F);
    require(static_cast<int>(G.rows()) == fs.n, Errc::DimensionMismatch,
            "row count " + std::to_string(G.rows()) + " does not match ground set size " + std::to_string(fs.n));
    MmspCheck out;
    for (auto A : fs.accept_check_sets())
        if (!accepts_one(G, F, A)) return {false, true, A};
    for (auto B : fs.reject_check_sets())
        if (!rejects_one(G, F, B)) return {false, false, B};
    return out;
}

inline bool is_mmsp(const MatGF& G, const MatGF& F, const AccessStructure& fs)
{
    std::string diag;
    if (!validate(fs, &diag)) return false;
    return check_mmsp(G, F, fs).ok;
}

/** (G, F) is an (N, r)-MDS code and G an (N, t)-MDS code. */
inline bool is_threshold_mmsp_via_mds(const MatGF& G, const MatGF& F, int r, int t)
{
    check_pair(G, F);
    require(static_cast<int>(G.cols()) == t && static_cast<int>(F.cols()) == r - t, Errc::DimensionMismatch,
            "expected cols(G) = t and cols(F) = r - t");
    return is_mds(MatGF::hcat(G, F)) && is_mds(G);
}

/* ------------------------------------------------------------------------- */
/* Bundles and classification                                                */
/* ------------------------------------------------------------------------- */

enum class BundleClass { Plain, EA, CQ, QQ };

inline const char* class_name(BundleClass c)
{
    switch (c) {
    case BundleClass::Plain: return "plain";
    case BundleClass::EA: return "ea";
    case BundleClass::CQ: return "cq";
    case BundleClass::QQ: return "qq";
    }
    return "?";
}

inline BundleClass class_from_name(const std::string& s)
{
    if (s == "plain") return BundleClass::Plain;
    if (s == "ea") return BundleClass::EA;
    if (s == "cq") return BundleClass::CQ;
    if (s == "qq") return BundleClass::QQ;
    fail(Errc::ParseError, "unknown bundle class '" + s + "'");
}

/** A triple (G1, G2, F) with a class tag. G1 may be empty; for the plain
    class the whole G is G1 | G2 and no orthogonality is assumed. */
struct MmspBundle {
    BundleClass cls = BundleClass::Plain;
    MatGF G1, G2, F;
    int n = 0, r = 0, t = 0;

    FieldPtr ctx() const { return F.ctx(); }
    MatGF G() const { return MatGF::hcat(G1, G2); }
    size_t rows() const { return F.rows(); }
    size_t y1() const { return G1.cols(); }
    size_t y2() const { return G2.cols(); }
    size_t x() const { return F.cols(); }
    /** Number of players (rows for plain, rows/2 otherwise). */
    int players() const { return cls == BundleClass::Plain ? static_cast<int>(rows()) : static_cast<int>(rows() / 2); }
};

/** Named structural check outcome. */
struct InvariantResult {
    std::string name;
    bool ok;
};

struct ClassVerdict {
    std::vector<InvariantResult> invariants;
    bool structural_ok = true;
    bool mmsp_ok = false;
    MmspCheck mmsp;
    bool verdict() const { return structural_ok && mmsp_ok; }
    std::string first_failure() const
    {
        for (const auto& i : invariants)
            if (!i.ok) return i.name;
        return mmsp.ok ? "" : (mmsp.accept_failed ? "accept " : "reject ") + subset_label(mmsp.witness);
    }
};

/** The access structure a bundle is classified against: plain bundles use
    the structure on rows, quantum classes its symplectification. */
inline AccessStructure classification_structure(const MmspBundle& b, const AccessStructure& fs)
{
    if (b.cls == BundleClass::Plain) return fs;
    return symplectify_structure(fs);
}

/** Structural invariants of the class, without the MMSP test. */
inline std::vector<InvariantResult> class_invariants(const MmspBundle& b)
{
    std::vector<InvariantResult> out;
    const size_t N = b.rows();
    out.push_back({"shared row count", b.G1.rows() == N && b.G2.rows() == N});
    if (b.cls == BundleClass::Plain) return out;
    const bool even = N % 2 == 0;
    out.push_back({"even row count 2n", even});
    if (!even || b.G1.rows() != N || b.G2.rows() != N) return out;
    const size_t n = N / 2;
    out.push_back({"G1 self-column-orthogonal", is_self_col_orth(b.G1)});
    MatGF all = MatGF::hcat({b.G1, b.G2, b.F});
    out.push_back({"columns of (G1,G2,F) linearly independent", all.cols() <= N && rank(all) == all.cols()});
    if (b.cls == BundleClass::CQ) out.push_back({"y1 = n", b.y1() == n});
    if (b.cls == BundleClass::QQ) {
        const bool even_f = b.x() % 2 == 0;
        out.push_back({"F has 2x' columns", even_f});
        out.push_back({"G1 has n - x' columns", even_f && b.y1() + b.x() / 2 == n});
        out.push_back({"F column-orthogonal to G1", is_col_orth(b.F, b.G1)});
    }
    return out;
}

/** Non-throwing classification against an arbitrary access structure on [n]. */
inline ClassVerdict classify_report(const MmspBundle& b, const AccessStructure& fs)
{
    ClassVerdict v;
    v.invariants = class_invariants(b);
    for (const auto& i : v.invariants) v.structural_ok = v.structural_ok && i.ok;
    if (!v.invariants.empty() && !v.invariants[0].ok) return v;
    AccessStructure s = classification_structure(b, fs);
    if (static_cast<int>(b.rows()) != s.n) {
        v.invariants.push_back({"row count matches the access structure", false});
        v.structural_ok = false;
        return v;
    }
    v.mmsp = check_mmsp(b.G(), b.F, s);
    v.mmsp_ok = v.mmsp.ok && validate(fs);
    return v;
}

inline ClassVerdict classify_report(const MmspBundle& b, int r, int t, int n)
{
    return classify_report(b, make_threshold(r, t, n));
}

/** Class verdict; a violated structural invariant raises ClassInvariantViolated. */
inline bool classify(const MmspBundle& b, const AccessStructure& fs)
{
    ClassVerdict v = classify_report(b, fs);
    for (const auto& i : v.invariants)
        if (!i.ok) fail(Errc::ClassInvariantViolated, i.name);
    return v.verdict();
}

inline bool classify(const MmspBundle& b, int r, int t, int n) { return classify(b, make_threshold(r, t, n)); }

/** (n, ceil((y1+x)/2))-EAMDS: accepts every symplectified set of that size. */
inline bool is_eamds(const MatGF& G1, const MatGF& F)
{
    require(G1.rows() == F.rows() && G1.rows() % 2 == 0, Errc::ClassInvariantViolated, "rows must be 2n");
    require(is_self_col_orth(G1), Errc::ClassInvariantViolated, "G1 self-column-orthogonal");
    const int n = static_cast<int>(G1.rows() / 2);
    const int r = static_cast<int>((G1.cols() + F.cols() + 1) / 2);
    if (r > n) return false;
    for (auto A : subsets_of_size(n, r))
        if (!accepts_one(G1, F, symplectify(A, n))) return false;
    return true;
}

/** (n, r)-QQMDS with r = ceil((n + x')/2): G1 is 2n x (n - x'), F is
    2n x 2x' column-orthogonal to G1, and every symplectified r-set accepts. */
inline bool is_qqmds(const MatGF& G1, const MatGF& F)
{
    require(G1.rows() == F.rows() && G1.rows() % 2 == 0, Errc::ClassInvariantViolated, "rows must be 2n");
    require(F.cols() % 2 == 0, Errc::ClassInvariantViolated, "F has 2x' columns");
    const int n = static_cast<int>(G1.rows() / 2);
    const int xp = static_cast<int>(F.cols() / 2);
    require(static_cast<int>(G1.cols()) == n - xp, Errc::ClassInvariantViolated, "G1 has n - x' columns");
    require(is_self_col_orth(G1), Errc::ClassInvariantViolated, "G1 self-column-orthogonal");
    require(is_col_orth(F, G1), Errc::ClassInvariantViolated, "F column-orthogonal to G1");
    if (rank(MatGF::hcat(G1, F)) != G1.cols() + F.cols()) return false;
    const int r = (n + xp + 1) / 2;
    for (auto A : subsets_of_size(n, r))
        if (!accepts_one(G1, F, symplectify(A, n))) return false;
    return true;
}

/* ------------------------------------------------------------------------- */
/* Rates                                                                     */
/* ------------------------------------------------------------------------- */

/** Exact nonnegative rational in lowest terms. */
struct Rational {
    int64_t num = 0, den = 1;
    static Rational make(int64_t a, int64_t b)
    {
        require(b != 0, Errc::DivisionByZero, "zero denominator");
        if (b < 0) {
            a = -a;
            b = -b;
        }
        int64_t g = std::gcd(a < 0 ? -a : a, b);
        if (g == 0) g = 1;
        return {a / g, b / g};
    }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
};

enum class RateKind { Css, Cqss, Qqss, Eass, Cqspir, Easpir };

inline RateKind rate_kind_from_name(const std::string& s)
{
    if (s == "css") return RateKind::Css;
    if (s == "cqss") return RateKind::Cqss;
    if (s == "qqss") return RateKind::Qqss;
    if (s == "eass") return RateKind::Eass;
    if (s == "cqspir") return RateKind::Cqspir;
    if (s == "easpir") return RateKind::Easpir;
    fail(Errc::ParseError, "unknown rate kind '" + s + "'");
}

/** Whether (r, t, n) satisfies the hypotheses under which the closed form holds. */
inline bool rate_admissible(RateKind k, int r, int t, int n)
{
    if (!(n >= r && r > t && t >= 0 && n >= 1)) return false;
    switch (k) {
    case RateKind::Css: return true;
    case RateKind::Cqss: return t > 0 && 2 * r >= n;
    case RateKind::Qqss: return 2 * r >= n + 1;
    case RateKind::Eass:
    case RateKind::Easpir: return t > 0;
    case RateKind::Cqspir: return 2 * t >= n;
    }
    return false;
}

inline Rational rate(RateKind k, int r, int t, int n)
{
    require(rate_admissible(k, r, t, n), Errc::OutOfRange, "parameters outside the admissible range");
    switch (k) {
    case RateKind::Css: return Rational::make(r - t, n);
    case RateKind::Cqss: return Rational::make(2 * r - std::max(2 * t, n), n);
    case RateKind::Qqss: return Rational::make(r - std::max(t, n - r), n);
    case RateKind::Eass:
    case RateKind::Easpir:
    case RateKind::Cqspir: return Rational::make(2 * (r - t), n);
    }
    return {};
}

/** Realized rate log|M| / log D of the protocol built on a bundle: message
    symbols per share symbol (qudits for quantum shares, and x' qudits of
    quantum message for QQSS). */
inline Rational realized_rate(RateKind k, const MmspBundle& b)
{
    switch (k) {
    case RateKind::Css: return Rational::make(static_cast<int64_t>(b.x()), static_cast<int64_t>(b.rows()));
    case RateKind::Qqss: return Rational::make(static_cast<int64_t>(b.x() / 2), static_cast<int64_t>(b.rows() / 2));
    case RateKind::Cqss:
    case RateKind::Eass:
    case RateKind::Cqspir:
    case RateKind::Easpir: return Rational::make(static_cast<int64_t>(b.x()), static_cast<int64_t>(b.rows() / 2));
    }
    return {};
}

} // namespace mmsplab

#endif // MMSPLAB_MMSP_HPP_
