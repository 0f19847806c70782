/**@file
 *****************************************************************************
 Integer and F_p[x] helpers: primality, factorisation of 64-bit integers,
 and the Rabin irreducibility test used to validate field moduli.
 *****************************************************************************
 * @copyright  MIT license (see LICENSE file)
 *****************************************************************************/
#ifndef MMSPLAB_NUMTHEORY_HPP_
#define MMSPLAB_NUMTHEORY_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace mmsplab {

using u128 = unsigned __int128;

namespace nt {

inline uint64_t mulmod64(uint64_t a, uint64_t b, uint64_t m) { return static_cast<uint64_t>((u128)a * b % m); }

inline uint64_t powmod64(uint64_t a, uint64_t e, uint64_t m)
{
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

/* Deterministic Miller-Rabin for all 64-bit inputs. */
inline bool is_prime(uint64_t n)
{
    if (n < 2) return false;
    for (uint64_t sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % sp == 0) return n == sp;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/* Pollard rho with Brent's cycle detection; n must be composite and odd. */
inline uint64_t pollard_rho(uint64_t n)
{
    for (uint64_t c = 1;; ++c) {
        uint64_t x = 2, y = 2, d = 1, q = 1, ys = 2;
        auto f = [&](uint64_t v) { return (mulmod64(v, v, n) + c) % n; };
        uint64_t r = 1;
        const uint64_t m = 128;
        do {
            x = y;
            for (uint64_t i = 0; i < r; ++i) y = f(y);
            uint64_t k = 0;
            do {
                ys = y;
                for (uint64_t i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod64(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
                k += m;
            } while (k < r && d == 1);
            r <<= 1;
        } while (d == 1);
        if (d == n) {
            do {
                ys = f(ys);
                d = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

inline void factor_into(uint64_t n, std::vector<uint64_t>& out)
{
    if (n == 1) return;
    for (uint64_t sp = 2; sp < 1000 && sp * sp <= n; ++sp) {
        while (n % sp == 0) {
            out.push_back(sp);
            n /= sp;
        }
    }
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    uint64_t d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

/** Distinct prime factors of n, ascending. */
inline std::vector<uint64_t> prime_factors(uint64_t n)
{
    std::vector<uint64_t> f;
    factor_into(n, f);
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
}

/** p^e as u128, or nullopt on overflow. */
inline std::optional<u128> checked_pow(uint64_t p, unsigned e)
{
    u128 r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (r > (~(u128)0) / p) return std::nullopt;
        r *= p;
    }
    return r;
}

/* ---------------- dense polynomials over F_p, little-endian ---------------- */

using Poly = std::vector<uint32_t>;

inline void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline uint32_t inv_mod(uint32_t a, uint32_t p) { return static_cast<uint32_t>(powmod64(a, p - 2, p)); }

inline Poly poly_sub(Poly a, const Poly& b, uint32_t p)
{
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

/** Remainder of a modulo b (b nonzero). */
inline Poly poly_mod(Poly a, const Poly& b, uint32_t p)
{
    trim(a);
    const size_t db = b.size() - 1;
    const uint32_t lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        uint32_t c = static_cast<uint32_t>((uint64_t)a.back() * lead_inv % p);
        size_t shift = a.size() - 1 - db;
        for (size_t i = 0; i <= db; ++i) a[shift + i] = static_cast<uint32_t>((a[shift + i] + (uint64_t)(p - c) * b[i]) % p);
        trim(a);
    }
    return a;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, uint32_t p)
{
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = static_cast<uint32_t>((r[i + j] + (uint64_t)a[i] * b[j]) % p);
    return poly_mod(std::move(r), f, p);
}

inline Poly poly_gcd(Poly a, Poly b, uint32_t p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/** x^(p^k) mod f by k successive p-th powers. */
inline Poly x_pow_p_k(const Poly& f, uint32_t p, unsigned k)
{
    Poly h = poly_mod(Poly{0, 1}, f, p);
    for (unsigned it = 0; it < k; ++it) {
        Poly base = h, acc{1};
        uint64_t e = p;
        while (e) {
            if (e & 1) acc = poly_mulmod(acc, base, f, p);
            base = poly_mulmod(base, base, f, p);
            e >>= 1;
        }
        h = acc;
    }
    return h;
}

/** Rabin's test: a monic f of degree r over F_p is irreducible iff
    x^(p^r) = x mod f and gcd(x^(p^(r/l)) - x, f) = 1 for each prime l | r. */
inline bool is_irreducible(const Poly& f, uint32_t p)
{
    const unsigned r = static_cast<unsigned>(f.size() - 1);
    if (r == 1) return true;
    if (f[0] == 0) return false;
    const Poly x{0, 1};
    for (uint64_t l : prime_factors(r)) {
        Poly h = poly_sub(x_pow_p_k(f, p, r / static_cast<unsigned>(l)), x, p);
        Poly g = poly_gcd(f, h, p);
        if (g.size() != 1) return false;
    }
    Poly h = poly_sub(x_pow_p_k(f, p, r), x, p);
    return h.empty();
}

} // namespace nt
} // namespace mmsplab

#endif // MMSPLAB_NUMTHEORY_HPP_
