/**@file
 *****************************************************************************
 Exact arithmetic in GF(p^r) in the power basis 1, x, ..., x^{r-1}, with an
 optional subfield tower F_p = L_0 < L_1 < ... < L_K of degrees 2^j.
 *****************************************************************************
 * @copyright  MIT license (see LICENSE file)
 *****************************************************************************/
#ifndef MMSPLAB_FIELD_HPP_
#define MMSPLAB_FIELD_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mmsplab/error.hpp"
#include "mmsplab/numtheory.hpp"

namespace mmsplab {

/** Largest supported extension degree. A tower of depth 6 fits exactly. */
constexpr int kMaxDegree = 64;
/** Characteristics are stored in one byte per coefficient. */
constexpr uint32_t kMaxChar = 251;

/** Raw field element: little-endian coefficients over F_p. Entries at or
    above the context degree are always zero, so equality is bytewise. */
struct Elem {
    std::array<uint8_t, kMaxDegree> c{};
    bool operator==(const Elem& o) const { return c == o.c; }
    bool operator!=(const Elem& o) const { return c != o.c; }
    bool operator<(const Elem& o) const { return c < o.c; }
};

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

/** A finite field GF(p^r) given by a monic irreducible modulus. All values
    are immutable after construction. */
class FieldCtx {
public:
    /** Build GF(p^r). When poly is empty the lexicographically smallest
        irreducible monic polynomial over the coefficient list (a_0,...,a_{r-1})
        is used. poly, when given, lists r+1 coefficients with a_r = 1. */
    static FieldPtr build(uint32_t p, int r, std::optional<nt::Poly> poly = std::nullopt)
    {
        require(nt::is_prime(p), Errc::NotPrime, std::to_string(p) + " is not prime");
        require(p <= kMaxChar, Errc::OutOfRange, "characteristic above " + std::to_string(kMaxChar));
        require(r >= 1 && r <= kMaxDegree, Errc::OutOfRange, "degree must lie in [1, 64]");
        nt::Poly f;
        if (poly) {
            f = *poly;
            require(static_cast<int>(f.size()) == r + 1 && f.back() == 1, Errc::ReduciblePolynomial,
                    "modulus must be monic of degree r");
            for (auto& a : f) require(a < p, Errc::OutOfRange, "modulus coefficient not reduced mod p");
            require(nt::is_irreducible(f, p), Errc::ReduciblePolynomial, "modulus is reducible over F_p");
        } else {
            f = smallest_irreducible(p, r);
        }
        return std::shared_ptr<FieldCtx>(new FieldCtx(p, r, std::move(f)));
    }

    /** GF(p^{2^K}) with tower generators e_j = g^{(Q-1)/(p^{2^j}-1)} for the
        smallest primitive element g. Results are cached per (p, K). */
    static FieldPtr tower(uint32_t p, int K)
    {
        require(K >= 1, Errc::OutOfRange, "tower depth must be at least 1");
        require(K <= 6, Errc::OutOfRange, "tower depth above 6 exceeds the supported degree");
        static std::mutex mu;
        static std::map<std::pair<uint32_t, int>, FieldPtr> cache;
        {
            std::lock_guard<std::mutex> lock(mu);
            auto it = cache.find({p, K});
            if (it != cache.end()) return it->second;
        }
        auto base = build(p, 1 << K);
        auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx(*base));
        ctx->attach_tower(K);
        std::lock_guard<std::mutex> lock(mu);
        cache[{p, K}] = ctx;
        return ctx;
    }

    uint32_t p() const { return p_; }
    int r() const { return r_; }
    const nt::Poly& modulus() const { return f_; }
    bool has_tower() const { return !tower_deg_.empty(); }
    /** Degrees d_0 = 1, d_1, ..., d_K. Empty without a tower. */
    const std::vector<int>& tower_degrees() const { return tower_deg_; }
    int tower_depth() const { return has_tower() ? static_cast<int>(tower_deg_.size()) - 1 : 0; }
    /** Generator of level j; level 0 returns 1. */
    const Elem& tower_gen(int j) const
    {
        require(has_tower(), Errc::NoTower, "context has no tower");
        require(j >= 0 && j <= tower_depth(), Errc::TowerTooShallow, "tower level " + std::to_string(j) + " unavailable");
        return gens_[j];
    }
    /** q as u128 when it fits. */
    std::optional<u128> order() const { return nt::checked_pow(p_, static_cast<unsigned>(r_)); }

    /** Same arithmetic: equal characteristic and modulus. */
    bool same_field(const FieldCtx& o) const { return p_ == o.p_ && f_ == o.f_; }

    Elem zero() const { return Elem{}; }
    Elem one() const { return scalar(1); }
    Elem scalar(int64_t v) const
    {
        Elem e;
        int64_t m = v % static_cast<int64_t>(p_);
        if (m < 0) m += p_;
        e.c[0] = static_cast<uint8_t>(m);
        return e;
    }
    /** Element whose coefficients are the base-p digits of v. */
    Elem from_index(u128 v) const
    {
        Elem e;
        for (int i = 0; i < r_ && v; ++i) {
            e.c[i] = static_cast<uint8_t>(v % p_);
            v /= p_;
        }
        require(v == 0, Errc::OutOfRange, "index exceeds field order");
        return e;
    }
    u128 to_index(const Elem& a) const
    {
        u128 v = 0;
        for (int i = r_ - 1; i >= 0; --i) v = v * p_ + a.c[i];
        return v;
    }
    Elem from_coeffs(const std::vector<int64_t>& cs) const
    {
        require(static_cast<int>(cs.size()) <= r_, Errc::DimensionMismatch, "too many coefficients for field degree");
        Elem e;
        for (size_t i = 0; i < cs.size(); ++i) {
            int64_t m = cs[i] % static_cast<int64_t>(p_);
            if (m < 0) m += p_;
            e.c[i] = static_cast<uint8_t>(m);
        }
        return e;
    }
    std::vector<int64_t> coeffs(const Elem& a) const
    {
        std::vector<int64_t> v(r_);
        for (int i = 0; i < r_; ++i) v[i] = a.c[i];
        return v;
    }
    /** The generator x of the power basis (equals 1 for a prime field). */
    Elem x() const
    {
        if (r_ == 1) return one();
        Elem e;
        e.c[1] = 1;
        return e;
    }

    bool is_zero(const Elem& a) const
    {
        for (int i = 0; i < r_; ++i)
            if (a.c[i]) return false;
        return true;
    }
    bool is_one(const Elem& a) const { return a == one(); }

    Elem add(const Elem& a, const Elem& b) const
    {
        Elem s;
        for (int i = 0; i < r_; ++i) {
            unsigned v = a.c[i] + b.c[i];
            s.c[i] = static_cast<uint8_t>(v >= p_ ? v - p_ : v);
        }
        return s;
    }
    Elem sub(const Elem& a, const Elem& b) const
    {
        Elem s;
        for (int i = 0; i < r_; ++i) {
            int v = static_cast<int>(a.c[i]) - b.c[i];
            s.c[i] = static_cast<uint8_t>(v < 0 ? v + static_cast<int>(p_) : v);
        }
        return s;
    }
    Elem neg(const Elem& a) const { return sub(Elem{}, a); }
    Elem mul_scalar(const Elem& a, uint32_t s) const
    {
        Elem out;
        s %= p_;
        for (int i = 0; i < r_; ++i) out.c[i] = static_cast<uint8_t>(a.c[i] * s % p_);
        return out;
    }
    Elem mul(const Elem& a, const Elem& b) const
    {
        Elem out;
        if (r_ == 1) {
            out.c[0] = static_cast<uint8_t>(static_cast<unsigned>(a.c[0]) * b.c[0] % p_);
            return out;
        }
        uint64_t t[2 * kMaxDegree] = {};
        int ta = r_, tb = r_;
        while (ta > 0 && a.c[ta - 1] == 0) --ta;
        while (tb > 0 && b.c[tb - 1] == 0) --tb;
        if (ta == 0 || tb == 0) return out;
        for (int i = 0; i < ta; ++i) {
            if (!a.c[i]) continue;
            for (int j = 0; j < tb; ++j) t[i + j] += static_cast<uint64_t>(a.c[i]) * b.c[j];
        }
        for (int d = ta + tb - 2; d >= r_; --d) {
            uint64_t c = t[d] % p_;
            if (!c) continue;
            uint64_t nc = p_ - c;
            for (int i = 0; i < r_; ++i)
                if (f_[i]) t[d - r_ + i] += nc * f_[i];
        }
        for (int i = 0; i < r_; ++i) out.c[i] = static_cast<uint8_t>(t[i] % p_);
        return out;
    }
    Elem inv(const Elem& a) const
    {
        require(!is_zero(a), Errc::DivisionByZero, "inverse of zero");
        if (r_ == 1) {
            Elem out;
            out.c[0] = static_cast<uint8_t>(nt::inv_mod(a.c[0], p_));
            return out;
        }
        /* Extended Euclid in F_p[x]: maintain s with s*a = rem (mod f). */
        nt::Poly r0 = f_, r1(a.c.begin(), a.c.begin() + r_);
        nt::trim(r1);
        nt::Poly s0{}, s1{1};
        while (r1.size() > 1) {
            /* divide r0 by r1 */
            nt::Poly quo(r0.size() - r1.size() + 1, 0), rem = r0;
            uint32_t li = nt::inv_mod(r1.back(), p_);
            while (rem.size() >= r1.size()) {
                uint32_t c = static_cast<uint32_t>((uint64_t)rem.back() * li % p_);
                size_t sh = rem.size() - r1.size();
                quo[sh] = c;
                for (size_t i = 0; i < r1.size(); ++i)
                    rem[sh + i] = static_cast<uint32_t>((rem[sh + i] + (uint64_t)(p_ - c) * r1[i]) % p_);
                nt::trim(rem);
            }
            nt::Poly qs = poly_mul_plain(quo, s1);
            nt::Poly s2 = nt::poly_sub(s0, qs, p_);
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        /* r1 is a nonzero constant since f is irreducible. */
        uint32_t ci = nt::inv_mod(r1[0], p_);
        nt::Poly res = nt::poly_mod(s1, f_, p_);
        Elem out;
        for (size_t i = 0; i < res.size(); ++i) out.c[i] = static_cast<uint8_t>((uint64_t)res[i] * ci % p_);
        return out;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, u128 e) const
    {
        Elem r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    /** a^p via the precomputed matrix of x^{p i} mod f. */
    Elem frob(const Elem& a) const
    {
        if (r_ == 1) return a;
        uint64_t acc[kMaxDegree] = {};
        for (int i = 0; i < r_; ++i) {
            if (!a.c[i]) continue;
            const Elem& row = frob_rows_[i];
            for (int j = 0; j < r_; ++j) acc[j] += static_cast<uint64_t>(a.c[i]) * row.c[j];
        }
        Elem out;
        for (int j = 0; j < r_; ++j) out.c[j] = static_cast<uint8_t>(acc[j] % p_);
        return out;
    }
    /** a^{p^k}. */
    Elem frob_k(Elem a, int k) const
    {
        k %= r_;
        for (int i = 0; i < k; ++i) a = frob(a);
        return a;
    }
    /** Absolute trace to F_p: the trace of multiplication by a. */
    uint32_t trace(const Elem& a) const
    {
        uint64_t s = 0;
        for (int i = 0; i < r_; ++i) s += static_cast<uint64_t>(a.c[i]) * trace_basis_[i];
        return static_cast<uint32_t>(s % p_);
    }
    /** Smallest tower level containing a. */
    int tower_level(const Elem& a) const
    {
        require(has_tower(), Errc::NoTower, "context has no tower");
        for (int j = 0; j < static_cast<int>(tower_deg_.size()); ++j)
            if (frob_k(a, tower_deg_[j]) == a) return j;
        return tower_depth();
    }
    /** True when a lies in the subfield of degree d (d | r). */
    bool in_subfield(const Elem& a, int d) const { return frob_k(a, d) == a; }

    /** Uniformly random element; nonzero when requested. */
    template <class Rng>
    Elem random(Rng& rng, bool nonzero = false) const
    {
        std::uniform_int_distribution<uint32_t> dist(0, p_ - 1);
        for (;;) {
            Elem e;
            for (int i = 0; i < r_; ++i) e.c[i] = static_cast<uint8_t>(dist(rng));
            if (!nonzero || !is_zero(e)) return e;
        }
    }
    /** Uniformly random element of the level-j subfield (tower only). */
    template <class Rng>
    Elem random_in_level(Rng& rng, int j) const
    {
        const Elem& g = tower_gen(j);
        const int d = tower_deg_[j];
        std::uniform_int_distribution<uint32_t> dist(0, p_ - 1);
        Elem acc = zero(), pw = one();
        for (int i = 0; i < d; ++i) {
            acc = add(acc, mul_scalar(pw, dist(rng)));
            pw = mul(pw, g);
        }
        return acc;
    }

    std::string describe() const
    {
        std::string s = "GF(" + std::to_string(p_) + "^" + std::to_string(r_) + ")";
        return s;
    }

private:
    FieldCtx(uint32_t p, int r, nt::Poly f) : p_(p), r_(r), f_(std::move(f)) { precompute(); }

    static nt::Poly smallest_irreducible(uint32_t p, int r)
    {
        nt::Poly f(r + 1, 0);
        f[r] = 1;
        if (r == 1) return f; /* modulus x: the prime field itself */
        /* Lexicographic order on (a_0, ..., a_{r-1}): a_{r-1} varies fastest. */
        f[0] = 1; /* every candidate with a_0 = 0 is divisible by x */
        for (;;) {
            if (nt::is_irreducible(f, p)) return f;
            int i = r - 1;
            while (i >= 0) {
                if (++f[i] < p) break;
                f[i] = 0;
                --i;
            }
            require(i >= 0, Errc::ReduciblePolynomial, "no irreducible polynomial found");
        }
    }

    nt::Poly poly_mul_plain(const nt::Poly& a, const nt::Poly& b) const
    {
        if (a.empty() || b.empty()) return {};
        nt::Poly r(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] = static_cast<uint32_t>((r[i + j] + (uint64_t)a[i] * b[j]) % p_);
        nt::trim(r);
        return r;
    }

    void precompute()
    {
        /* x^k mod f for k < 2r, used for traces. */
        std::vector<Elem> xp(2 * r_);
        xp[0] = one();
        Elem xe = r_ == 1 ? Elem{} : x();
        if (r_ == 1) {
            /* In F_p the generator of the power basis is the constant -f_0. */
            xe = scalar(static_cast<int64_t>(p_) - f_[0]);
        }
        for (int k = 1; k < 2 * r_; ++k) xp[k] = mul(xp[k - 1], xe);
        trace_basis_.assign(r_, 0);
        for (int i = 0; i < r_; ++i) {
            uint64_t s = 0;
            for (int j = 0; j < r_; ++j) s += xp[i + j].c[j];
            trace_basis_[i] = static_cast<uint32_t>(s % p_);
        }
        /* Frobenius rows x^{p i} mod f. */
        frob_rows_.assign(r_, Elem{});
        Elem xpow = pow(xe, p_);
        Elem acc = one();
        for (int i = 0; i < r_; ++i) {
            frob_rows_[i] = acc;
            acc = mul(acc, xpow);
        }
    }

    void attach_tower(int K)
    {
        const u128 Q = *nt::checked_pow(p_, static_cast<unsigned>(r_));
        /* Q - 1 = (p - 1) * prod_{i<K} (p^{2^i} + 1). */
        std::vector<uint64_t> primes = nt::prime_factors(p_ - 1 == 0 ? 1 : p_ - 1);
        for (int i = 0; i < K; ++i) {
            auto pe = nt::checked_pow(p_, 1u << i);
            require(pe && *pe < ((u128)1 << 63), Errc::OutOfRange, "tower too large to factor the multiplicative order");
            auto fs = nt::prime_factors(static_cast<uint64_t>(*pe) + 1);
            primes.insert(primes.end(), fs.begin(), fs.end());
        }
        std::sort(primes.begin(), primes.end());
        primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
        Elem g;
        for (u128 k = 1;; ++k) {
            g = from_index(k);
            if (is_zero(g)) continue;
            bool primitive = true;
            for (uint64_t l : primes) {
                if (is_one(pow(g, (Q - 1) / l))) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) break;
        }
        primitive_ = g;
        tower_deg_.clear();
        gens_.clear();
        for (int j = 0; j <= K; ++j) {
            tower_deg_.push_back(1 << j);
            if (j == 0) {
                gens_.push_back(one());
            } else {
                u128 sub = *nt::checked_pow(p_, 1u << j) - 1;
                gens_.push_back(pow(g, (Q - 1) / sub));
            }
        }
    }

    uint32_t p_;
    int r_;
    nt::Poly f_;
    std::vector<uint32_t> trace_basis_;
    std::vector<Elem> frob_rows_;
    std::vector<int> tower_deg_;
    std::vector<Elem> gens_;
    Elem primitive_{};
};

/** Value type pairing an element with its field. Mixing fields throws. */
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldPtr ctx, Elem v) : ctx_(std::move(ctx)), v_(v) {}
    static FieldElement from_coeffs(const FieldPtr& ctx, const std::vector<int64_t>& cs) { return {ctx, ctx->from_coeffs(cs)}; }
    static FieldElement scalar(const FieldPtr& ctx, int64_t v) { return {ctx, ctx->scalar(v)}; }

    const FieldPtr& ctx() const { return ctx_; }
    const Elem& raw() const { return v_; }
    std::vector<int64_t> coeffs() const { return ctx_->coeffs(v_); }
    bool is_zero() const { return ctx_->is_zero(v_); }

    FieldElement operator+(const FieldElement& o) const { check(o); return {ctx_, ctx_->add(v_, o.v_)}; }
    FieldElement operator-(const FieldElement& o) const { check(o); return {ctx_, ctx_->sub(v_, o.v_)}; }
    FieldElement operator-() const { return {ctx_, ctx_->neg(v_)}; }
    FieldElement operator*(const FieldElement& o) const { check(o); return {ctx_, ctx_->mul(v_, o.v_)}; }
    FieldElement operator/(const FieldElement& o) const { check(o); return {ctx_, ctx_->div(v_, o.v_)}; }
    FieldElement inv() const { return {ctx_, ctx_->inv(v_)}; }
    FieldElement pow(u128 e) const { return {ctx_, ctx_->pow(v_, e)}; }
    uint32_t trace() const { return ctx_->trace(v_); }
    int tower_level() const { return ctx_->tower_level(v_); }
    bool operator==(const FieldElement& o) const { check(o); return v_ == o.v_; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

private:
    void check(const FieldElement& o) const
    {
        require(ctx_ && o.ctx_ && (ctx_ == o.ctx_ || ctx_->same_field(*o.ctx_)), Errc::CtxMismatch,
                "elements belong to different fields");
    }
    FieldPtr ctx_;
    Elem v_{};
};

inline FieldPtr field_build(uint32_t p, int r, std::optional<nt::Poly> poly = std::nullopt)
{
    return FieldCtx::build(p, r, std::move(poly));
}
inline FieldPtr tower_build(uint32_t p, int K) { return FieldCtx::tower(p, K); }

} // namespace mmsplab

#endif // MMSPLAB_FIELD_HPP_
