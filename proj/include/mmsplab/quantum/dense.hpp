/**@file
 *****************************************************************************
 Dense complex state vectors and density matrices over (C^q)^{(x)m} for an
 odd prime local dimension q: Weyl operators, partial traces, POVMs,
 channels, Choi matrices and entropic quantities.
 *****************************************************************************
 * @copyright  MIT license (see LICENSE file)
 *****************************************************************************/
#ifndef MMSPLAB_QUANTUM_DENSE_HPP_
#define MMSPLAB_QUANTUM_DENSE_HPP_

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "mmsplab/error.hpp"

namespace mmsplab::quantum {

using cplx = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

/** Largest number of amplitudes the dense oracle allocates. */
inline constexpr uint64_t kDenseCap = 1u << 14;

/* Tolerances for construction, invariants, protocol-level and entropic checks. */
inline constexpr double kTolBuild = 1e-12;
inline constexpr double kTolInvariant = 1e-10;
inline constexpr double kTolProtocol = 1e-9;
inline constexpr double kTolEntropy = 1e-6;

inline bool is_odd_prime(int q)
{
    if (q < 3 || q % 2 == 0) return false;
    for (int d = 3; d * d <= q; d += 2)
        if (q % d == 0) return false;
    return true;
}

inline void require_local_dim(int q)
{
    require(is_odd_prime(q), Errc::NonPrimeLocalDim, "dense oracle needs an odd prime local dimension, got " + std::to_string(q));
}

inline uint64_t ipow(uint64_t b, int e)
{
    uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

inline int mod(int64_t a, int q)
{
    int64_t r = a % q;
    return static_cast<int>(r < 0 ? r + q : r);
}

/** omega^k with omega = exp(2 pi i / q). */
inline cplx omega_pow(int q, int64_t k)
{
    const double th = 2.0 * std::numbers::pi * static_cast<double>(mod(k, q)) / q;
    return {std::cos(th), std::sin(th)};
}

/** Register layout of m qudits; register 0 is the most significant digit. */
struct Layout {
    int q = 3;
    int m = 0;

    Layout() = default;
    Layout(int q_, int m_) : q(q_), m(m_)
    {
        require_local_dim(q);
        require(m >= 0 && ipow(static_cast<uint64_t>(q), m) <= kDenseCap, Errc::TooLarge,
                "dense oracle capped at " + std::to_string(kDenseCap) + " amplitudes");
    }
    size_t dim() const { return static_cast<size_t>(ipow(static_cast<uint64_t>(q), m)); }
    std::vector<int> digits(size_t idx) const
    {
        std::vector<int> d(static_cast<size_t>(m));
        for (int i = m - 1; i >= 0; --i) {
            d[static_cast<size_t>(i)] = static_cast<int>(idx % static_cast<size_t>(q));
            idx /= static_cast<size_t>(q);
        }
        return d;
    }
    size_t index(const std::vector<int>& d) const
    {
        size_t idx = 0;
        for (int v : d) idx = idx * static_cast<size_t>(q) + static_cast<size_t>(v);
        return idx;
    }
};

/* ------------------------------------------------------------------------- */
/* States                                                                    */
/* ------------------------------------------------------------------------- */

/** Pure state on (C^q)^{(x)m} with optional register labels. */
struct DenseState {
    Layout layout;
    Vec amp;
    std::vector<std::string> labels;

    int q() const { return layout.q; }
    int m() const { return layout.m; }
    double norm() const { return amp.norm(); }
};

inline DenseState make_state(int q, int m, Vec amp, std::vector<std::string> labels = {})
{
    DenseState s{Layout(q, m), std::move(amp), std::move(labels)};
    require(static_cast<size_t>(s.amp.size()) == s.layout.dim(), Errc::DimensionMismatch, "amplitude count");
    require(std::abs(s.amp.norm() - 1.0) <= kTolBuild * 1e2, Errc::NotAState, "state is not normalized");
    return s;
}

inline DenseState basis_state(int q, const std::vector<int>& digits)
{
    Layout L(q, static_cast<int>(digits.size()));
    Vec v = Vec::Zero(static_cast<Eigen::Index>(L.dim()));
    v(static_cast<Eigen::Index>(L.index(digits))) = 1.0;
    return {L, v, {}};
}

/** Hermitian, unit trace, positive semidefinite operator. */
struct DensityMatrix {
    Layout layout;
    Mat rho;

    size_t dim() const { return static_cast<size_t>(rho.rows()); }
};

inline void check_density(const Mat& rho, const std::string& what = "operator")
{
    require(rho.rows() == rho.cols(), Errc::NotAState, what + " is not square");
    require((rho - rho.adjoint()).cwiseAbs().maxCoeff() <= kTolInvariant, Errc::NotAState, what + " is not Hermitian");
    require(std::abs(rho.trace() - cplx(1.0, 0.0)) <= 1e-9, Errc::NotAState, what + " does not have unit trace");
    Eigen::SelfAdjointEigenSolver<Mat> es(rho, Eigen::EigenvaluesOnly);
    require(es.eigenvalues().minCoeff() >= -kTolInvariant, Errc::NotAState, what + " is not positive semidefinite");
}

inline DensityMatrix make_density(int q, int m, Mat rho)
{
    DensityMatrix d{Layout(q, m), std::move(rho)};
    require(d.dim() == d.layout.dim(), Errc::DimensionMismatch, "density matrix dimension");
    check_density(d.rho, "density matrix");
    return d;
}

inline DensityMatrix to_density(const DenseState& s) { return {s.layout, s.amp * s.amp.adjoint()}; }

/* ------------------------------------------------------------------------- */
/* Weyl operators                                                            */
/* ------------------------------------------------------------------------- */

/** W(a,b) = X(a) Z(b) = sum_j omega^{b j} |j+a><j|. */
inline Mat weyl(int q, int a, int b)
{
    require_local_dim(q);
    Mat W = Mat::Zero(q, q);
    for (int j = 0; j < q; ++j) W(mod(j + a, q), j) = omega_pow(q, static_cast<int64_t>(b) * j);
    return W;
}

/** Phase-aligned omega^{ab/2} W(a,b); these multiply without phase along
    isotropic directions. */
inline Mat weyl_aligned(int q, int a, int b)
{
    const int half = (q + 1) / 2;
    return weyl(q, a, b) * omega_pow(q, static_cast<int64_t>(half) * a * b);
}

/** Phase exponent of the aligned operator: sum_r a_r b_r / 2 mod q. */
inline int aligned_phase(int q, const std::vector<int>& a, const std::vector<int>& b)
{
    int64_t s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += static_cast<int64_t>(a[i]) * b[i];
    return mod(s * ((q + 1) / 2), q);
}

/** Applies (x)_{r in regs} W(a_r, b_r) (or its adjoint) to every column of
    X, whose rows index the layout L. a and b are indexed like regs. */
inline Mat apply_weyl(const Layout& L, const Mat& X, const std::vector<int>& regs, const std::vector<int>& a,
                      const std::vector<int>& b, bool aligned = false, bool adjoint = false)
{
    require(a.size() == regs.size() && b.size() == regs.size(), Errc::DimensionMismatch, "Weyl vector length");
    require(static_cast<size_t>(X.rows()) == L.dim(), Errc::DimensionMismatch, "Weyl operand dimension");
    for (int r : regs) require(r >= 0 && r < L.m, Errc::BadRegisters, "register out of range");
    const int q = L.q;
    const int extra = aligned ? aligned_phase(q, a, b) : 0;
    Mat out = Mat::Zero(X.rows(), X.cols());
    for (size_t idx = 0; idx < L.dim(); ++idx) {
        auto d = L.digits(idx);
        int64_t ph = extra;
        if (!adjoint) {
            for (size_t i = 0; i < regs.size(); ++i) {
                auto& v = d[static_cast<size_t>(regs[i])];
                ph += static_cast<int64_t>(b[i]) * v;
                v = mod(v + a[i], q);
            }
        } else {
            /* W^dagger |k> = omega^{-b (k - a)} |k - a> */
            ph = -ph;
            for (size_t i = 0; i < regs.size(); ++i) {
                auto& v = d[static_cast<size_t>(regs[i])];
                v = mod(v - a[i], q);
                ph -= static_cast<int64_t>(b[i]) * v;
            }
        }
        out.row(static_cast<Eigen::Index>(L.index(d))) = omega_pow(q, ph) * X.row(static_cast<Eigen::Index>(idx));
    }
    return out;
}

inline Vec apply_weyl(const Layout& L, const Vec& v, const std::vector<int>& regs, const std::vector<int>& a,
                      const std::vector<int>& b, bool aligned = false, bool adjoint = false)
{
    Mat X = v;
    return apply_weyl(L, X, regs, a, b, aligned, adjoint).col(0);
}

/** Full matrix of W on all registers of L; intended for small layouts. */
inline Mat weyl_matrix(const Layout& L, const std::vector<int>& a, const std::vector<int>& b, bool aligned = false)
{
    std::vector<int> regs(static_cast<size_t>(L.m));
    for (int i = 0; i < L.m; ++i) regs[static_cast<size_t>(i)] = i;
    Mat I = Mat::Identity(static_cast<Eigen::Index>(L.dim()), static_cast<Eigen::Index>(L.dim()));
    return apply_weyl(L, I, regs, a, b, aligned);
}

/* ------------------------------------------------------------------------- */
/* Partial traces                                                            */
/* ------------------------------------------------------------------------- */

namespace detail {

/** Splits every basis index into (index over keep, index over the rest). */
inline void split_indices(const Layout& L, const std::vector<int>& keep, std::vector<size_t>& ki, std::vector<size_t>& ri)
{
    std::vector<bool> in(static_cast<size_t>(L.m), false);
    for (int r : keep) {
        require(r >= 0 && r < L.m, Errc::BadRegisters, "register out of range");
        require(!in[static_cast<size_t>(r)], Errc::BadRegisters, "register listed twice");
        in[static_cast<size_t>(r)] = true;
    }
    ki.resize(L.dim());
    ri.resize(L.dim());
    for (size_t idx = 0; idx < L.dim(); ++idx) {
        auto d = L.digits(idx);
        size_t k = 0, r = 0;
        for (int reg : keep) k = k * static_cast<size_t>(L.q) + static_cast<size_t>(d[static_cast<size_t>(reg)]);
        for (int reg = 0; reg < L.m; ++reg)
            if (!in[static_cast<size_t>(reg)]) r = r * static_cast<size_t>(L.q) + static_cast<size_t>(d[static_cast<size_t>(reg)]);
        ki[idx] = k;
        ri[idx] = r;
    }
}

} // namespace detail

/** psi reshaped to (keep) x (rest); rho_keep = M M^dagger. */
inline Mat reshape_keep(const Layout& L, const Vec& psi, const std::vector<int>& keep)
{
    std::vector<size_t> ki, ri;
    detail::split_indices(L, keep, ki, ri);
    const size_t dk = static_cast<size_t>(ipow(static_cast<uint64_t>(L.q), static_cast<int>(keep.size())));
    Mat M = Mat::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(L.dim() / dk));
    for (size_t idx = 0; idx < L.dim(); ++idx)
        M(static_cast<Eigen::Index>(ki[idx]), static_cast<Eigen::Index>(ri[idx])) = psi(static_cast<Eigen::Index>(idx));
    return M;
}

/** Reduced operator on the registers keep (in the listed order). */
inline Mat partial_trace(const Layout& L, const Mat& rho, const std::vector<int>& keep)
{
    require(static_cast<size_t>(rho.rows()) == L.dim() && rho.rows() == rho.cols(), Errc::DimensionMismatch,
            "partial_trace: operator dimension");
    std::vector<size_t> ki, ri;
    detail::split_indices(L, keep, ki, ri);
    const size_t dk = static_cast<size_t>(ipow(static_cast<uint64_t>(L.q), static_cast<int>(keep.size())));
    const size_t dr = L.dim() / dk;
    std::vector<std::vector<size_t>> by_rest(dr);
    for (size_t idx = 0; idx < L.dim(); ++idx) by_rest[ri[idx]].push_back(idx);
    Mat out = Mat::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
    for (const auto& group : by_rest)
        for (size_t i : group)
            for (size_t j : group)
                out(static_cast<Eigen::Index>(ki[i]), static_cast<Eigen::Index>(ki[j])) +=
                    rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    return out;
}

inline DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep)
{
    return {Layout(rho.layout.q, static_cast<int>(keep.size())), partial_trace(rho.layout, rho.rho, keep)};
}

inline DensityMatrix partial_trace(const DenseState& psi, const std::vector<int>& keep)
{
    Mat M = reshape_keep(psi.layout, psi.amp, keep);
    return {Layout(psi.layout.q, static_cast<int>(keep.size())), M * M.adjoint()};
}

/** Frobenius distance between the mixtures sum_i w_i |a_i><a_i| and
    sum_j v_j |b_j><b_j|, computed from inner products only. */
inline double mixture_distance(const std::vector<Vec>& A, const std::vector<double>& wa, const std::vector<Vec>& B,
                               const std::vector<double>& wb)
{
    double s = 0;
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = 0; j < A.size(); ++j) s += wa[i] * wa[j] * std::norm(A[i].dot(A[j]));
    for (size_t i = 0; i < B.size(); ++i)
        for (size_t j = 0; j < B.size(); ++j) s += wb[i] * wb[j] * std::norm(B[i].dot(B[j]));
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = 0; j < B.size(); ++j) s -= 2 * wa[i] * wb[j] * std::norm(A[i].dot(B[j]));
    return std::sqrt(std::max(0.0, s));
}

/* ------------------------------------------------------------------------- */
/* Entropic quantities (base 2)                                              */
/* ------------------------------------------------------------------------- */

inline Eigen::VectorXd eigenvalues(const Mat& H) { return Eigen::SelfAdjointEigenSolver<Mat>(H, Eigen::EigenvaluesOnly).eigenvalues(); }

inline double von_neumann_entropy(const Mat& rho)
{
    double s = 0;
    for (double l : eigenvalues(rho))
        if (l > kTolBuild) s -= l * std::log2(l);
    return s;
}

inline double trace_distance(const Mat& a, const Mat& b)
{
    require(a.rows() == b.rows() && a.cols() == b.cols(), Errc::DimensionMismatch, "trace_distance: dimensions");
    return 0.5 * eigenvalues(a - b).cwiseAbs().sum();
}

struct RelativeEntropy {
    double value = 0;
    bool infinite = false;
};

/** D(rho||sigma) = Tr rho (log rho - log sigma); infinite when the support
    of rho is not inside the support of sigma. */
inline RelativeEntropy relative_entropy(const Mat& rho, const Mat& sigma)
{
    check_density(rho, "rho");
    check_density(sigma, "sigma");
    Eigen::SelfAdjointEigenSolver<Mat> es(sigma);
    RelativeEntropy out;
    double cross = 0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double l = es.eigenvalues()(i);
        const Vec v = es.eigenvectors().col(i);
        const double w = std::real(v.dot(rho * v));
        if (l <= kTolBuild) {
            if (w > kTolInvariant) out.infinite = true;
            continue;
        }
        cross += w * std::log2(l);
    }
    if (out.infinite) {
        out.value = std::numeric_limits<double>::infinity();
        return out;
    }
    out.value = -von_neumann_entropy(rho) - cross;
    return out;
}

inline Mat kron(const Mat& a, const Mat& b)
{
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

/** Reduced operators of a bipartite operator on C^{dA} (x) C^{dB}. */
inline Mat trace_second(const Mat& rho, size_t dA, size_t dB)
{
    Mat out = Mat::Zero(static_cast<Eigen::Index>(dA), static_cast<Eigen::Index>(dA));
    for (size_t i = 0; i < dA; ++i)
        for (size_t j = 0; j < dA; ++j)
            for (size_t k = 0; k < dB; ++k)
                out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) +=
                    rho(static_cast<Eigen::Index>(i * dB + k), static_cast<Eigen::Index>(j * dB + k));
    return out;
}

inline Mat trace_first(const Mat& rho, size_t dA, size_t dB)
{
    Mat out = Mat::Zero(static_cast<Eigen::Index>(dB), static_cast<Eigen::Index>(dB));
    for (size_t k = 0; k < dA; ++k)
        out += rho.block(static_cast<Eigen::Index>(k * dB), static_cast<Eigen::Index>(k * dB), static_cast<Eigen::Index>(dB),
                         static_cast<Eigen::Index>(dB));
    return out;
}

/** I(A;B) = D(rho_AB || rho_A (x) rho_B). */
inline double mutual_information(const Mat& rhoAB, size_t dA, size_t dB)
{
    require(static_cast<size_t>(rhoAB.rows()) == dA * dB, Errc::DimensionMismatch, "mutual_information: dimensions");
    Mat a = trace_second(rhoAB, dA, dB), b = trace_first(rhoAB, dA, dB);
    return relative_entropy(rhoAB, kron(a, b)).value;
}

/* ------------------------------------------------------------------------- */
/* POVMs and measurement                                                     */
/* ------------------------------------------------------------------------- */

struct Povm {
    std::vector<Mat> elements;

    size_t size() const { return elements.size(); }
    size_t dim() const { return elements.empty() ? 0 : static_cast<size_t>(elements[0].rows()); }
};

/** Checks positivity of every element and completeness sum = I. */
inline void check_povm(const Povm& P)
{
    require(!P.elements.empty(), Errc::IncompletePovm, "empty POVM");
    const Eigen::Index d = P.elements[0].rows();
    Mat S = Mat::Zero(d, d);
    for (const auto& E : P.elements) {
        require(E.rows() == d && E.cols() == d, Errc::DimensionMismatch, "POVM element dimensions");
        require(eigenvalues(E).minCoeff() >= -kTolInvariant, Errc::IncompletePovm, "POVM element is not positive");
        S += E;
    }
    require((S - Mat::Identity(d, d)).cwiseAbs().maxCoeff() <= kTolInvariant, Errc::IncompletePovm,
            "POVM elements do not sum to the identity");
}

struct Measurement {
    size_t outcome = 0;
    std::vector<double> distribution;
};

/** Born distribution and one outcome sampled with a seeded 64-bit generator. */
inline Measurement measure(const Mat& rho, const Povm& P, uint64_t seed)
{
    check_povm(P);
    require(static_cast<size_t>(rho.rows()) == P.dim(), Errc::DimensionMismatch, "measure: dimensions");
    Measurement m;
    for (const auto& E : P.elements) m.distribution.push_back(std::max(0.0, std::real((E * rho).trace())));
    std::mt19937_64 rng(seed);
    std::discrete_distribution<size_t> dist(m.distribution.begin(), m.distribution.end());
    m.outcome = dist(rng);
    return m;
}

inline Measurement measure(const DensityMatrix& rho, const Povm& P, uint64_t seed) { return measure(rho.rho, P, seed); }

/* ------------------------------------------------------------------------- */
/* Channels                                                                  */
/* ------------------------------------------------------------------------- */

/** Linear map L(C^din) -> L(C^dout). */
struct Channel {
    size_t din = 0, dout = 0;
    std::function<Mat(const Mat&)> map;

    Mat operator()(const Mat& X) const
    {
        require(static_cast<size_t>(X.rows()) == din, Errc::DimensionMismatch, "channel input dimension");
        return map(X);
    }
};

inline Channel compose(const Channel& second, const Channel& first)
{
    require(first.dout == second.din, Errc::DimensionMismatch, "channel composition dimensions");
    return {first.din, second.dout, [=](const Mat& X) { return second(first(X)); }};
}

inline Channel identity_channel(size_t d) { return {d, d, [](const Mat& X) { return X; }}; }

inline Channel depolarizing_channel(size_t d)
{
    return {d, d, [d](const Mat& X) {
                Mat I = Mat::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
                return Mat(X.trace() / static_cast<double>(d) * I);
            }};
}

/** (id_R (x) L)(X) for X on C^dR (x) C^{din}. */
inline Mat apply_second(const Channel& L, const Mat& X, size_t dR)
{
    const auto din = static_cast<Eigen::Index>(L.din), dout = static_cast<Eigen::Index>(L.dout);
    require(X.rows() == static_cast<Eigen::Index>(dR) * din, Errc::DimensionMismatch, "apply_second: dimensions");
    Mat out = Mat::Zero(static_cast<Eigen::Index>(dR) * dout, static_cast<Eigen::Index>(dR) * dout);
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(dR); ++i)
        for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(dR); ++j)
            out.block(i * dout, j * dout, dout, dout) = L(X.block(i * din, j * din, din, din));
    return out;
}

/** Maximally entangled |phi> = d^{-1/2} sum_i |i>|i> on C^d (x) C^d. */
inline Vec max_entangled(size_t d)
{
    Vec v = Vec::Zero(static_cast<Eigen::Index>(d * d));
    for (size_t i = 0; i < d; ++i) v(static_cast<Eigen::Index>(i * d + i)) = 1.0 / std::sqrt(static_cast<double>(d));
    return v;
}

/** Choi state (id (x) L)(|phi><phi|), reference first. */
inline Mat choi(const Channel& L)
{
    Vec phi = max_entangled(L.din);
    return apply_second(L, phi * phi.adjoint(), L.din);
}

/** <phi| J(L) |phi>, the entanglement fidelity with the identity channel. */
inline double identity_fidelity(const Channel& L)
{
    require(L.din == L.dout, Errc::DimensionMismatch, "identity_fidelity needs equal dimensions");
    Vec phi = max_entangled(L.din);
    return std::real(phi.dot(choi(L) * phi));
}

/** Trace distance between J(L) and the Choi state of the identity. */
inline double identity_choi_distance(const Channel& L)
{
    require(L.din == L.dout, Errc::DimensionMismatch, "identity_choi_distance needs equal dimensions");
    Vec phi = max_entangled(L.din);
    return trace_distance(choi(L), phi * phi.adjoint());
}

} // namespace mmsplab::quantum

#endif // MMSPLAB_QUANTUM_DENSE_HPP_
