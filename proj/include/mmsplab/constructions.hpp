/**@file
 *****************************************************************************
 MDS matrices from subfield towers, the isotropic pair (A, B) with its
 extension C, and the EA, CQ and QQ threshold constructions built on them.

 Every construction is self-checking: the returned report lists each
 verified invariant, and a failed required check raises
 ConstructionFailedVerification.
 *****************************************************************************
 * @copyright  MIT license (see LICENSE file)
 *****************************************************************************/
#ifndef MMSPLAB_CONSTRUCTIONS_HPP_
#define MMSPLAB_CONSTRUCTIONS_HPP_

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "mmsplab/matrix.hpp"
#include "mmsplab/mmsp.hpp"

namespace mmsplab {

/* ------------------------------------------------------------------------- */
/* Element pickers                                                           */
/* ------------------------------------------------------------------------- */

/** How free entries are chosen.
    Tower: entry at level L is the level-L tower generator (1 at level 0).
    Generic: seeded random nonzero elements of GF(p^s).
    Search: seeded random nonzero elements of a small GF(p^s), accepted once
    the access-structure check passes (MDS checks become informational).
    Auto: Tower when the required depth is at most 6, Generic otherwise. */
enum class FieldMode { Auto, Tower, Generic, Search };

inline const char* field_mode_name(FieldMode m)
{
    switch (m) {
    case FieldMode::Auto: return "auto";
    case FieldMode::Tower: return "tower";
    case FieldMode::Generic: return "generic";
    case FieldMode::Search: return "search";
    }
    return "?";
}

inline FieldMode field_mode_from_name(const std::string& s)
{
    if (s == "auto") return FieldMode::Auto;
    if (s == "tower") return FieldMode::Tower;
    if (s == "generic") return FieldMode::Generic;
    if (s == "search") return FieldMode::Search;
    fail(Errc::ParseError, "unknown field mode '" + s + "'");
}

/** Supplies the entry for a given tower level. */
class Picker {
public:
    static Picker tower(FieldPtr ctx)
    {
        require(ctx->has_tower(), Errc::NoTower, "tower picker needs a tower context");
        Picker pk;
        pk.ctx_ = std::move(ctx);
        pk.tower_ = true;
        return pk;
    }
    static Picker random(FieldPtr ctx, uint64_t seed)
    {
        Picker pk;
        pk.ctx_ = std::move(ctx);
        pk.rng_.seed(seed);
        return pk;
    }
    const FieldPtr& ctx() const { return ctx_; }
    bool is_tower() const { return tower_; }
    Elem pick(int level)
    {
        if (!tower_) return ctx_->random(rng_, true);
        require(level <= ctx_->tower_depth(), Errc::TowerTooShallow,
                "level " + std::to_string(level) + " exceeds tower depth " + std::to_string(ctx_->tower_depth()));
        return level <= 0 ? ctx_->one() : ctx_->tower_gen(level);
    }

private:
    FieldPtr ctx_;
    bool tower_ = false;
    std::mt19937_64 rng_;
};

/* ------------------------------------------------------------------------- */
/* MDS matrices from towers                                                  */
/* ------------------------------------------------------------------------- */

/** (rows x k) matrix: identity on the top l rows (zero beyond column l),
    entry (i, j) of the lower block at level i + j - 2 with (1,1) = 1. */
inline MatGF staircase_mds(size_t l, size_t k, size_t rows, Picker& pk)
{
    const FieldPtr& ctx = pk.ctx();
    MatGF M(ctx, rows, k);
    for (size_t i = 0; i < l && i < k; ++i) M.at(i, i) = ctx->one();
    for (size_t i = l; i < rows; ++i)
        for (size_t j = 0; j < k; ++j) {
            size_t ii = i - l + 1, jj = j + 1;
            M.at(i, j) = (ii == 1 && jj == 1) ? ctx->one() : pk.pick(static_cast<int>(ii + jj - 2));
        }
    return M;
}

/** Identity over l columns stacked on tower entries: an (rows, l)-MDS code. */
inline MatGF mds_pp8(size_t l, size_t rows, const FieldPtr& ctx)
{
    require(l >= 1 && l < rows, Errc::OutOfRange, "require 1 <= l < rows");
    require(ctx->has_tower(), Errc::NoTower, "mds_pp8 needs a tower context");
    require(static_cast<int>(rows) - 2 <= ctx->tower_depth(), Errc::TowerTooShallow,
            "need tower depth " + std::to_string(rows - 2));
    Picker pk = Picker::tower(ctx);
    MatGF M = staircase_mds(l, l, rows, pk);
    require(is_mds(M), Errc::ConstructionFailedVerification, "mds_pp8 output is not MDS");
    return M;
}

/** As mds_pp8 with k > l columns: an (rows, k)-MDS code. */
inline MatGF mds_l78(size_t l, size_t k, size_t rows, const FieldPtr& ctx)
{
    require(l >= 1 && l < k && k < rows, Errc::OutOfRange, "require 1 <= l < k < rows");
    require(ctx->has_tower(), Errc::NoTower, "mds_l78 needs a tower context");
    require(static_cast<int>(rows - l + k) - 2 <= ctx->tower_depth(), Errc::TowerTooShallow,
            "need tower depth " + std::to_string(rows - l + k - 2));
    Picker pk = Picker::tower(ctx);
    MatGF M = staircase_mds(l, k, rows, pk);
    require(is_mds(M), Errc::ConstructionFailedVerification, "mds_l78 output is not MDS");
    return M;
}

/* ------------------------------------------------------------------------- */
/* Verification reports                                                      */
/* ------------------------------------------------------------------------- */

/** One verified invariant. Informational checks do not affect ok(). */
struct Check {
    std::string name;
    bool ok = false;
    bool required = true;
    bool applicable = true;
};

struct ConstructionReport {
    std::string what;
    std::string field;
    std::string field_mode;
    uint64_t seed = 0;
    int attempts = 0;
    std::vector<Check> checks;

    bool ok() const
    {
        for (const auto& c : checks)
            if (c.required && c.applicable && !c.ok) return false;
        return true;
    }
    std::string first_failure() const
    {
        for (const auto& c : checks)
            if (c.required && c.applicable && !c.ok) return c.name;
        return "";
    }
    void add(std::string name, bool ok, bool required = true) { checks.push_back({std::move(name), ok, required, true}); }
    void not_applicable(std::string name) { checks.push_back({std::move(name), false, false, false}); }
};

/* ------------------------------------------------------------------------- */
/* The isotropic pair (A, B) and its extension C                             */
/* ------------------------------------------------------------------------- */

/** A = (A2; A3; A1; I) (2b x a) with A^T J A = 0, and
    B = ((I,0,0); (-A1^T, A2^T, A3^T); (0,I,0); (0,0,I)) (2b x (2b-a)). */
struct AmtPair {
    size_t a = 0, b = 0;
    MatGF A1, A2, A3, A, B;
};

/** C = (C2; C3; C1; 0) (2b x c). */
struct AmxExtension {
    size_t c = 0;
    MatGF C1, C2, C3, C;
};

/** Highest level used by the A block (stacked entry (i,j) at level i+j-2). */
inline int amt_depth(size_t a, size_t b) { return a >= 1 ? static_cast<int>(2 * b) - 2 : 0; }

/** Highest level used by A and C together; C entries sit at i+j-1 above A. */
inline int amx_depth(size_t a, size_t b, size_t c)
{
    return amt_depth(a, b) + (c >= 1 ? static_cast<int>(2 * b - a + c) - 1 : 0);
}

namespace detail {

inline MatGF assemble_amt_B(const AmtPair& p, const FieldPtr& ctx)
{
    const size_t a = p.a, b = p.b, m = b - a;
    MatGF B(ctx, 2 * b, 2 * b - a);
    for (size_t i = 0; i < m; ++i) B.at(i, i) = ctx->one();
    for (size_t i = 0; i < a; ++i) {
        for (size_t k = 0; k < m; ++k) {
            B.at(m + i, k) = ctx->neg(p.A1.at(k, i));
            B.at(m + i, m + k) = p.A2.at(k, i);
        }
        for (size_t k = 0; k < a; ++k) B.at(m + i, 2 * m + k) = p.A3.at(k, i);
    }
    for (size_t i = 0; i < m; ++i) B.at(b + i, m + i) = ctx->one();
    for (size_t i = 0; i < a; ++i) B.at(b + m + i, 2 * m + i) = ctx->one();
    return B;
}

} // namespace detail

/** Builds (A, B) for 0 < a <= b (a = 0 gives A empty and B = I). Entries of
    the stacked (A1; A2; A3) sit at level i + j - 2 with (1,1) = 1; the
    diagonal and upper triangle of A3 are fresh and the lower triangle is
    solved so that A3 + A1^T A2 is symmetric. */
inline AmtPair build_amt_raw(size_t a, size_t b, Picker& pk)
{
    require(a <= b, Errc::OutOfRange, "require a <= b");
    require(b >= 1, Errc::OutOfRange, "require b >= 1");
    const FieldPtr& ctx = pk.ctx();
    const FieldCtx& F = *ctx;
    const size_t m = b - a;
    AmtPair p;
    p.a = a;
    p.b = b;
    p.A1 = MatGF(ctx, m, a);
    p.A2 = MatGF(ctx, m, a);
    p.A3 = MatGF(ctx, a, a);
    auto entry = [&](size_t si, size_t j) -> Elem { /* 1-based stacked row si, column j */
        if (si == 1 && j == 1) return F.one();
        return pk.pick(static_cast<int>(si + j) - 2);
    };
    for (size_t k = 0; k < m; ++k)
        for (size_t j = 0; j < a; ++j) {
            p.A1.at(k, j) = entry(k + 1, j + 1);
            p.A2.at(k, j) = entry(m + k + 1, j + 1);
        }
    for (size_t i = 0; i < a; ++i)
        for (size_t j = i; j < a; ++j) p.A3.at(i, j) = entry(2 * m + i + 1, j + 1);
    MatGF S = p.A1.transpose() * p.A2; /* S[i][j] = sum_k A1[k,i] A2[k,j] */
    for (size_t r = 0; r < a; ++r)
        for (size_t c = 0; c < r; ++c) p.A3.at(r, c) = F.sub(F.add(p.A3.at(c, r), S.at(c, r)), S.at(r, c));
    p.A = MatGF::vcat({p.A2, p.A3, p.A1, MatGF::identity(ctx, a)});
    if (a == 0) p.A = MatGF(ctx, 2 * b, 0);
    p.B = detail::assemble_amt_B(p, ctx);
    return p;
}

/** Conditions N1 to N4 on an (A, B) pair. */
inline void check_amt(const AmtPair& p, ConstructionReport& rep, bool mds_required = true)
{
    rep.add("N1: A^T J A = 0", is_self_col_orth(p.A));
    rep.add("N2: A^T J B = 0", is_col_orth(p.B, p.A));
    rep.add("N3: A is (2b, a)-MDS", p.A.cols() == 0 || is_mds(p.A), mds_required);
    rep.add("N4: B is (2b, 2b-a)-MDS", is_mds(p.B), mds_required);
}

/** Extension C for the pair; entries of the stacked (C1; C2; C3) sit at
    level i + j - 1 above the levels used by A. */
inline AmxExtension build_amx_raw(const AmtPair& p, size_t c, Picker& pk)
{
    require(c >= 1, Errc::OutOfRange, "require c >= 1");
    const FieldPtr& ctx = pk.ctx();
    const size_t a = p.a, b = p.b, m = b - a;
    const int base = amt_depth(a, b);
    AmxExtension x;
    x.c = c;
    x.C1 = MatGF(ctx, m, c);
    x.C2 = MatGF(ctx, m, c);
    x.C3 = MatGF(ctx, a, c);
    for (size_t j = 0; j < c; ++j) {
        for (size_t k = 0; k < m; ++k) {
            x.C1.at(k, j) = pk.pick(base + static_cast<int>(k + 1 + j + 1) - 1);
            x.C2.at(k, j) = pk.pick(base + static_cast<int>(m + k + 1 + j + 1) - 1);
        }
        for (size_t k = 0; k < a; ++k) x.C3.at(k, j) = pk.pick(base + static_cast<int>(2 * m + k + 1 + j + 1) - 1);
    }
    x.C = MatGF::vcat({x.C2, x.C3, x.C1, MatGF::zeros(ctx, a, c)});
    return x;
}

/** Conditions N5 to N7 (N7 only when c <= a, otherwise (B, C) has more
    columns than rows). */
inline void check_amx(const AmtPair& p, const AmxExtension& x, ConstructionReport& rep, bool mds_required = true)
{
    rep.add("N5: (A,C) is (2b, a+c)-MDS", is_mds(MatGF::hcat(p.A, x.C)), mds_required);
    bool prefix = true;
    for (size_t s = 1; s < x.c && prefix; ++s) prefix = is_mds(MatGF::hcat(p.A, x.C.col_range(0, s)));
    rep.add("N6: every (A,C^(s)) is MDS", prefix, mds_required);
    if (x.c <= p.a)
        rep.add("N7: (B,C) is (2b, 2b-a+c)-MDS", is_mds(MatGF::hcat(p.B, x.C)), mds_required);
    else
        rep.not_applicable("N7: (B,C) is (2b, 2b-a+c)-MDS");
}

/* ------------------------------------------------------------------------- */
/* Field selection and the retry loop                                        */
/* ------------------------------------------------------------------------- */

struct ConstructOptions {
    FieldMode mode = FieldMode::Auto;
    int degree = 0;       /* extension degree s for generic/search; 0 picks a default */
    uint64_t seed = 1;    /* first seed for generic/search */
    int max_attempts = 4000;
};

namespace detail {

/** Largest s with p^s <= 2^16. */
inline int generic_degree(uint32_t p)
{
    int s = 0;
    uint64_t q = 1;
    while (q * p <= (uint64_t(1) << 16)) {
        q *= p;
        ++s;
    }
    return std::max(s, 1);
}

/** Runs build(picker, report) until the report is ok. Tower mode tries once. */
template <class Build>
inline auto run_construction(uint32_t p, int depth, const ConstructOptions& opt, const std::string& what, Build&& build)
{
    require(nt::is_prime(p) && p <= kMaxChar, Errc::NotPrime, "p must be a prime below 256");
    FieldMode mode = opt.mode;
    if (mode == FieldMode::Auto) mode = depth <= 6 ? FieldMode::Tower : FieldMode::Generic;
    if (mode == FieldMode::Tower) {
        require(depth <= 6, Errc::TowerTooShallow,
                what + " needs tower depth " + std::to_string(depth) + " but at most 6 is supported");
        auto ctx = FieldCtx::tower(p, std::max(depth, 1));
        Picker pk = Picker::tower(ctx);
        ConstructionReport rep;
        rep.what = what;
        rep.field = ctx->describe();
        rep.field_mode = "tower";
        rep.attempts = 1;
        auto out = build(pk, rep, true);
        if (!rep.ok()) fail(Errc::ConstructionFailedVerification, what + ": " + rep.first_failure());
        return std::make_pair(out, rep);
    }
    const int s = opt.degree > 0 ? opt.degree : (mode == FieldMode::Search ? 1 : generic_degree(p));
    auto ctx = field_build(p, s);
    const bool mds_required = mode == FieldMode::Generic;
    for (int attempt = 0; attempt < opt.max_attempts; ++attempt) {
        ConstructionReport rep;
        rep.what = what;
        rep.field = ctx->describe();
        rep.field_mode = field_mode_name(mode);
        rep.seed = opt.seed + static_cast<uint64_t>(attempt);
        rep.attempts = attempt + 1;
        Picker pk = Picker::random(ctx, rep.seed);
        auto out = build(pk, rep, mds_required);
        if (rep.ok()) return std::make_pair(out, rep);
    }
    fail(Errc::ConstructionFailedVerification,
         what + ": no seed passed verification in " + std::to_string(opt.max_attempts) + " attempts over " + ctx->describe());
}

} // namespace detail

/** (A, B) with N1 to N4 verified. */
inline std::pair<AmtPair, ConstructionReport> build_amt(size_t a, size_t b, const ConstructOptions& opt, uint32_t p)
{
    require(a >= 1 && a <= b, Errc::OutOfRange, "require 0 < a <= b");
    return detail::run_construction(p, amt_depth(a, b), opt, "amt", [&](Picker& pk, ConstructionReport& rep, bool req) {
        AmtPair out = build_amt_raw(a, b, pk);
        check_amt(out, rep, req);
        return out;
    });
}

/** (A, B) with the extension C; N1 to N7 verified. */
inline std::pair<std::pair<AmtPair, AmxExtension>, ConstructionReport> build_amx(size_t a, size_t b, size_t c,
                                                                                 const ConstructOptions& opt, uint32_t p)
{
    require(a >= 1 && a <= b, Errc::OutOfRange, "require 0 < a <= b");
    require(c >= 1, Errc::OutOfRange, "require c >= 1");
    return detail::run_construction(p, amx_depth(a, b, c), opt, "amx", [&](Picker& pk, ConstructionReport& rep, bool req) {
        AmtPair amt = build_amt_raw(a, b, pk);
        AmxExtension x = build_amx_raw(amt, c, pk);
        check_amt(amt, rep, req);
        check_amx(amt, x, rep, req);
        return std::make_pair(amt, x);
    });
}

/* ------------------------------------------------------------------------- */
/* Threshold constructions                                                   */
/* ------------------------------------------------------------------------- */

/** Bundle together with its verification report. */
struct Construction {
    MmspBundle bundle;
    ConstructionReport report;
};

namespace detail {

inline void check_bundle_class(const MmspBundle& b, ConstructionReport& rep)
{
    ClassVerdict v = classify_report(b, b.r, b.t, b.n);
    for (const auto& inv : v.invariants) rep.add(std::string("class invariant: ") + inv.name, inv.ok);
    rep.add(std::string(class_name(b.cls)) + " access structure (symplectified threshold)", v.mmsp_ok);
}

} // namespace detail

/** (r,t,n)-EAMMSP with a 2n x y1 isotropic G1, G2 with 2t - y1 columns and
    F with 2(r - t) columns. */
inline Construction construct_eammsp(int r, int t, int n, int y1, uint32_t p, const ConstructOptions& opt = {})
{
    require(n >= r && r > t && 2 * t >= y1 && y1 > 0, Errc::OutOfRange, "require n >= r > t >= y1/2 > 0");
    require(y1 <= n, Errc::OutOfRange, "require y1 <= n (an isotropic subspace has dimension at most n)");
    require(n <= kMaxPlayers, Errc::OutOfRange, "n must be at most 20");
    const size_t a = y1, b = n, y2 = 2 * t - y1, x = 2 * (r - t), c = y2 + x;
    auto res = detail::run_construction(
        p, amx_depth(a, b, c), opt, "eammsp", [&](Picker& pk, ConstructionReport& rep, bool req) {
            AmtPair amt = build_amt_raw(a, b, pk);
            AmxExtension ext = build_amx_raw(amt, c, pk);
            MmspBundle bd;
            bd.cls = BundleClass::EA;
            bd.n = n;
            bd.r = r;
            bd.t = t;
            bd.G1 = amt.A;
            bd.G2 = ext.C.col_range(0, y2);
            bd.F = ext.C.col_range(y2, x);
            rep.add("G1 self-column-orthogonal", is_self_col_orth(bd.G1));
            rep.add("(G1,G2) is (2n, 2t)-MDS", is_mds(bd.G()), req);
            rep.add("((G1,G2),F) is (2n, 2r)-MDS", is_mds(MatGF::hcat(bd.G(), bd.F)), req);
            detail::check_bundle_class(bd, rep);
            return bd;
        });
    return {res.first, res.second};
}

/** (r,t,n)-CQMMSP: G1 is 2n x n isotropic, G2 has [2t-n]_+ columns and F
    has 2r - max(2t, n) columns. */
inline Construction construct_cqmmsp(int r, int t, int n, uint32_t p, const ConstructOptions& opt = {})
{
    require(n >= r && r > t && t > 0, Errc::OutOfRange, "require n >= r > t > 0");
    require(2 * r > n, Errc::OutOfRange, "require r > n/2");
    require(n <= kMaxPlayers, Errc::OutOfRange, "n must be at most 20");
    const size_t a = n, b = n, y2 = std::max(2 * t - n, 0), x = 2 * r - std::max(2 * t, n), c = y2 + x;
    auto res = detail::run_construction(
        p, amx_depth(a, b, c), opt, "cqmmsp", [&](Picker& pk, ConstructionReport& rep, bool req) {
            AmtPair amt = build_amt_raw(a, b, pk);
            AmxExtension ext = build_amx_raw(amt, c, pk);
            MmspBundle bd;
            bd.cls = BundleClass::CQ;
            bd.n = n;
            bd.r = r;
            bd.t = t;
            bd.G1 = amt.A;
            bd.G2 = ext.C.col_range(0, y2);
            bd.F = ext.C.col_range(y2, x);
            rep.add("G1 self-column-orthogonal", is_self_col_orth(bd.G1));
            rep.add("(G1,G2) is (2n, n+y2)-MDS", is_mds(bd.G()), req);
            rep.add("((G1,G2),F) is (2n, 2r)-MDS", is_mds(MatGF::hcat(bd.G(), bd.F)), req);
            detail::check_bundle_class(bd, rep);
            return bd;
        });
    return {res.first, res.second};
}

/** (r,t',n)-QQMMSP with t' = max(t, n-r): G1 = A (2n x (n-r+t')),
    G2 = C (2n x (t'+r-n)), F = ((I,0); (-A1^T, A2^T); (0,I); (0,0)). */
inline Construction construct_qqmmsp(int r, int t, int n, uint32_t p, const ConstructOptions& opt = {})
{
    require(n >= r && r > t && t > 0, Errc::OutOfRange, "require n >= r > t > 0");
    require(2 * r >= n + 1, Errc::OutOfRange, "(n+1)/2 bound violated: require r >= (n+1)/2");
    require(n <= kMaxPlayers, Errc::OutOfRange, "n must be at most 20");
    const int tp = std::max(t, n - r);
    const size_t a = n - r + tp, b = n, c = tp + r - n, m = b - a;
    auto res = detail::run_construction(
        p, c ? amx_depth(a, b, c) : amt_depth(a, b), opt, "qqmmsp", [&](Picker& pk, ConstructionReport& rep, bool req) {
            AmtPair amt = build_amt_raw(a, b, pk);
            MmspBundle bd;
            bd.cls = BundleClass::QQ;
            bd.n = n;
            bd.r = r;
            bd.t = tp;
            bd.G1 = amt.A;
            bd.G2 = c ? build_amx_raw(amt, c, pk).C : MatGF(pk.ctx(), 2 * b, 0);
            bd.F = amt.B.col_range(0, 2 * m);
            rep.add("N1: G1 self-column-orthogonal", is_self_col_orth(bd.G1));
            rep.add("N2: F column-orthogonal to G1", is_col_orth(bd.F, bd.G1));
            rep.add("(G1,G2) is (2n, 2t')-MDS", bd.G().cols() == 0 || is_mds(bd.G()), req);
            rep.add("(G1,G2,F) is (2n, 2r)-MDS", is_mds(MatGF::hcat(bd.G(), bd.F)), req);
            detail::check_bundle_class(bd, rep);
            return bd;
        });
    return {res.first, res.second};
}

/** (n, r)-QQMDS pair (G1, F): the t = n - r case without G2. */
struct QqmdsResult {
    MatGF G1, F;
    ConstructionReport report;
};

inline QqmdsResult construct_qqmds(int r, int n, uint32_t p, const ConstructOptions& opt = {})
{
    require(n >= r && 2 * r > n, Errc::OutOfRange, "require n >= r > n/2");
    require(n <= kMaxPlayers, Errc::OutOfRange, "n must be at most 20");
    const size_t a = 2 * (n - r), b = n, m = b - a;
    auto res = detail::run_construction(p, amt_depth(a, b), opt, "qqmds", [&](Picker& pk, ConstructionReport& rep, bool req) {
        AmtPair amt = build_amt_raw(a, b, pk);
        QqmdsResult out;
        out.G1 = amt.A;
        out.F = amt.B.col_range(0, 2 * m);
        rep.add("N1: G1 self-column-orthogonal", is_self_col_orth(out.G1));
        rep.add("N2: F column-orthogonal to G1", is_col_orth(out.F, out.G1));
        rep.add("(n, r)-QQMDS", is_qqmds(out.G1, out.F));
        (void)req;
        return out;
    });
    res.first.report = res.second;
    return res.first;
}

/** Classical threshold (r, t, n) MMSP (G, F) over GF(q) from a Vandermonde
    matrix on distinct nonzero points: every r rows of (G, F) and every t
    rows of G are independent. */
inline std::pair<MatGF, MatGF> construct_css_threshold(int r, int t, int n, const FieldPtr& ctx)
{
    require(n >= r && r > t && t >= 0, Errc::BadThreshold, "require n >= r > t >= 0");
    auto q = ctx->order();
    require(q && *q > static_cast<u128>(n), Errc::OutOfRange, "field must have more than n elements");
    MatGF V(ctx, n, r);
    for (int i = 0; i < n; ++i) {
        Elem pt = ctx->from_index(static_cast<u128>(i + 1)), pw = ctx->one();
        for (int j = 0; j < r; ++j) {
            V.at(i, j) = pw;
            pw = ctx->mul(pw, pt);
        }
    }
    return {V.col_range(0, t), V.col_range(t, r - t)};
}

} // namespace mmsplab

#endif // MMSPLAB_CONSTRUCTIONS_HPP_
