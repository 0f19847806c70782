/**@file
 *****************************************************************************
 Access structures (accept, reject) over a ground set [n], threshold
 instances, validity checks and symplectification A -> {a, a+n}.

 Subsets are bitmasks over 0-based player indices; the JSON and text
 interfaces use 1-based player labels.
 *****************************************************************************
 * @copyright  MIT license (see LICENSE file)
 *****************************************************************************/
#ifndef MMSPLAB_ACCESS_HPP_
#define MMSPLAB_ACCESS_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mmsplab/error.hpp"

namespace mmsplab {

using Subset = uint64_t;

constexpr int kMaxPlayers = 20;

inline int popcount(Subset s) { return std::popcount(s); }

/** {a, a+n : a in S}. */
inline Subset symplectify(Subset S, int n) { return S | (S << n); }

/** 1-based labels of a subset, e.g. {1,3}. */
inline std::string subset_label(Subset s)
{
    std::string out = "{";
    bool first = true;
    for (int i = 0; s >> i; ++i)
        if ((s >> i) & 1) {
            if (!first) out += ",";
            out += std::to_string(i + 1);
            first = false;
        }
    return out + "}";
}

inline std::vector<int> subset_players(Subset s)
{
    std::vector<int> out;
    for (int i = 0; s >> i; ++i)
        if ((s >> i) & 1) out.push_back(i + 1);
    return out;
}

inline Subset subset_from_players(const std::vector<int>& players)
{
    Subset s = 0;
    for (int a : players) {
        require(a >= 1 && a <= 64, Errc::IndexOutOfRange, "player label " + std::to_string(a));
        s |= Subset(1) << (a - 1);
    }
    return s;
}

/** All subsets of [n] with exactly k elements, ascending as integers. */
inline std::vector<Subset> subsets_of_size(int n, int k)
{
    std::vector<Subset> out;
    if (k < 0 || k > n) return out;
    if (k == 0) return {0};
    Subset s = (Subset(1) << k) - 1;
    const Subset limit = Subset(1) << n;
    while (s < limit) {
        out.push_back(s);
        Subset c = s & (~s + 1), r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    return out;
}

/** A pair (accept, reject) of monotone collections over [n]. Either side is
    either a threshold (|A| >= r, resp. |B| <= t) or an explicit list. After
    symplectify_structure the ground set is [2n] and base_n records n. */
struct AccessStructure {
    int n = 0;
    std::optional<int> accept_threshold;
    std::optional<int> reject_threshold;
    std::vector<Subset> accept;
    std::vector<Subset> reject;
    int base_n = 0; /* nonzero for symplectified structures */

    bool symplectified() const { return base_n != 0; }

    /** Every accept set (explicit lists as stored; thresholds enumerated). */
    std::vector<Subset> accept_sets() const
    {
        if (!accept_threshold) return accept;
        std::vector<Subset> out;
        for (int k = *accept_threshold; k <= ground(); ++k) {
            auto s = subsets_of_size(ground(), k);
            out.insert(out.end(), s.begin(), s.end());
        }
        return map_out(out);
    }
    std::vector<Subset> reject_sets() const
    {
        if (!reject_threshold) return reject;
        std::vector<Subset> out;
        for (int k = 0; k <= *reject_threshold; ++k) {
            auto s = subsets_of_size(ground(), k);
            out.insert(out.end(), s.begin(), s.end());
        }
        return map_out(out);
    }
    /** Sets that suffice for checking: minimal accept / maximal reject for
        thresholds, the full lists otherwise. */
    std::vector<Subset> accept_check_sets() const
    {
        if (!accept_threshold) return accept;
        return map_out(subsets_of_size(ground(), *accept_threshold));
    }
    std::vector<Subset> reject_check_sets() const
    {
        if (!reject_threshold) return reject;
        return map_out(subsets_of_size(ground(), *reject_threshold));
    }
    /** Number of underlying players (n, or base_n when symplectified). */
    int ground() const { return symplectified() ? base_n : n; }

    /** Membership of S (a subset of [n], or of [2n] when symplectified). */
    bool is_accept(Subset S) const { return contains(S, accept_threshold, accept, true); }
    bool is_reject(Subset S) const { return contains(S, reject_threshold, reject, false); }

private:
    bool contains(Subset S, const std::optional<int>& thr, const std::vector<Subset>& list, bool at_least) const
    {
        if (!thr) return std::find(list.begin(), list.end(), S) != list.end();
        Subset base = S;
        if (symplectified()) {
            base = S & ((Subset(1) << base_n) - 1);
            if (symplectify(base, base_n) != S) return false;
        }
        return at_least ? popcount(base) >= *thr : popcount(base) <= *thr;
    }
    std::vector<Subset> map_out(const std::vector<Subset>& v) const
    {
        if (!symplectified()) return v;
        std::vector<Subset> out;
        for (auto s : v) out.push_back(symplectify(s, base_n));
        return out;
    }
};

inline AccessStructure make_threshold(int r, int t, int n)
{
    require(n >= 1 && n <= kMaxPlayers, Errc::BadThreshold, "n must lie in [1, 20]");
    require(n >= r && r > t && t >= 0, Errc::BadThreshold, "require n >= r > t >= 0");
    AccessStructure fs;
    fs.n = n;
    fs.accept_threshold = r;
    fs.reject_threshold = t;
    return fs;
}

inline AccessStructure make_explicit(int n, std::vector<Subset> accept, std::vector<Subset> reject)
{
    require(n >= 1 && n <= kMaxPlayers, Errc::OutOfRange, "n must lie in [1, 20]");
    AccessStructure fs;
    fs.n = n;
    std::sort(accept.begin(), accept.end());
    accept.erase(std::unique(accept.begin(), accept.end()), accept.end());
    std::sort(reject.begin(), reject.end());
    reject.erase(std::unique(reject.begin(), reject.end()), reject.end());
    const Subset full = (Subset(1) << n) - 1;
    for (auto s : accept) require((s & ~full) == 0, Errc::IndexOutOfRange, "accept set outside [n]");
    for (auto s : reject) require((s & ~full) == 0, Errc::IndexOutOfRange, "reject set outside [n]");
    fs.accept = std::move(accept);
    fs.reject = std::move(reject);
    return fs;
}

/** Checks monotonicity of both sides and disjointness. Diagnostics, if
    requested, name the first violation. */
inline bool validate(const AccessStructure& fs, std::string* diag = nullptr)
{
    auto say = [&](const std::string& m) {
        if (diag) *diag = m;
        return false;
    };
    const int n = fs.ground();
    if (n < 1 || n > kMaxPlayers) return say("ground set size out of range");
    if (fs.symplectified()) {
        AccessStructure base = fs;
        base.base_n = 0;
        base.n = n;
        auto unmap = [&](std::vector<Subset>& v) {
            for (auto& s : v) s &= (Subset(1) << n) - 1;
        };
        unmap(base.accept);
        unmap(base.reject);
        return validate(base, diag);
    }
    const Subset full = (Subset(1) << n) - 1;
    auto acc = fs.accept_sets(), rej = fs.reject_sets();
    std::vector<bool> in_acc(full + 1, false), in_rej(full + 1, false);
    for (auto s : acc) in_acc[s] = true;
    for (auto s : rej) in_rej[s] = true;
    for (Subset s = 0; s <= full; ++s) {
        if (in_acc[s] && in_rej[s]) return say("set " + subset_label(s) + " is both accepted and rejected");
        for (int i = 0; i < n; ++i) {
            Subset bit = Subset(1) << i;
            if (in_acc[s] && !(s & bit) && !in_acc[s | bit])
                return say("accept side not monotone: " + subset_label(s | bit) + " missing");
            if (in_rej[s] && (s & bit) && !in_rej[s & ~bit])
                return say("reject side not monotone: " + subset_label(s & ~bit) + " missing");
        }
    }
    return true;
}

/** Elementwise symplectification onto [2n]. Threshold sides stay symbolic. */
inline AccessStructure symplectify_structure(const AccessStructure& fs)
{
    require(!fs.symplectified(), Errc::OutOfRange, "structure already symplectified");
    AccessStructure out = fs;
    out.base_n = fs.n;
    out.n = 2 * fs.n;
    for (auto& s : out.accept) s = symplectify(s, fs.n);
    for (auto& s : out.reject) s = symplectify(s, fs.n);
    return out;
}

} // namespace mmsplab

#endif // MMSPLAB_ACCESS_HPP_
