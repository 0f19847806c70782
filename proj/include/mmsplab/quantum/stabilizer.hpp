/**@file
 *****************************************************************************
 Stabilizer states, code bases |x,y> of an isotropic G1 and the
 entanglement resource |Phi[y,G1]> for the dense oracle over a prime field.
 *****************************************************************************
 * @copyright  MIT license (see LICENSE file)
 *****************************************************************************/
#ifndef MMSPLAB_QUANTUM_STABILIZER_HPP_
#define MMSPLAB_QUANTUM_STABILIZER_HPP_

#include <vector>

#include "mmsplab/matrix.hpp"
#include "mmsplab/quantum/dense.hpp"

namespace mmsplab::quantum {

/** Local dimension of a field usable by the dense oracle. */
inline int dense_q(const FieldPtr& ctx)
{
    require(ctx != nullptr, Errc::CtxMismatch, "missing field");
    require(ctx->r() == 1 && is_odd_prime(static_cast<int>(ctx->p())), Errc::NonPrimeLocalDim,
            "dense oracle needs a prime field of odd order, got " + ctx->describe());
    return static_cast<int>(ctx->p());
}

inline std::vector<int> to_ints(const VecGF& v)
{
    std::vector<int> out;
    for (auto x : v.to_ints()) out.push_back(static_cast<int>(x));
    return out;
}

/** Splits w in F_q^{2n} into its X part (a) and Z part (b). */
inline void split_ab(const VecGF& w, std::vector<int>& a, std::vector<int>& b)
{
    require(w.size() % 2 == 0, Errc::OddLength, "symplectic vector of odd length");
    auto xs = to_ints(w);
    const size_t n = xs.size() / 2;
    a.assign(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(n));
    b.assign(xs.begin() + static_cast<std::ptrdiff_t>(n), xs.end());
}

inline std::vector<int> iota_regs(int from, int count)
{
    std::vector<int> r(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) r[static_cast<size_t>(i)] = from + i;
    return r;
}

/** W_{[n]}(w) (optionally phase aligned) on registers regs of psi. */
inline Vec apply_displacement(const Layout& L, const Vec& psi, const std::vector<int>& regs, const VecGF& w, bool aligned = false)
{
    std::vector<int> a, b;
    split_ab(w, a, b);
    require(a.size() == regs.size(), Errc::DimensionMismatch, "displacement length does not match the registers");
    return apply_weyl(L, psi, regs, a, b, aligned);
}

/** Joint +1 eigenvector of the phase-aligned Weyl operators of a maximal
    isotropic (Lagrangian) column space, from the group-average projector. */
inline DenseState stabilizer_state(const MatGF& G)
{
    const int q = dense_q(G.ctx());
    require(G.rows() % 2 == 0, Errc::OddLength, "stabilizer_state: odd row count");
    const int n = static_cast<int>(G.rows() / 2);
    require(static_cast<int>(G.cols()) == n && is_self_col_orth(G) && rank(G) == G.cols(), Errc::NotMaximalIsotropic,
            "columns do not span a maximal isotropic subspace");
    Layout L(q, n);
    const auto regs = iota_regs(0, n);
    const u128 count = count_vectors(*G.ctx(), G.cols(), kDenseCap * kDenseCap, "stabilizer_state");
    std::vector<VecGF> group;
    for (u128 i = 0; i < count; ++i) group.push_back(G * vector_from_index(G.ctx(), G.cols(), i));
    Vec psi;
    for (size_t seed = 0; seed < L.dim(); ++seed) {
        Vec e = Vec::Zero(static_cast<Eigen::Index>(L.dim()));
        e(static_cast<Eigen::Index>(seed)) = 1.0;
        Vec acc = Vec::Zero(e.size());
        for (const auto& w : group) acc += apply_displacement(L, e, regs, w, true);
        if (acc.norm() > 1e-6) {
            psi = acc / acc.norm();
            break;
        }
    }
    require(psi.size() > 0, Errc::NoFixedVector, "the group average vanishes on every basis vector");
    for (size_t j = 0; j < G.cols(); ++j) {
        Vec moved = apply_displacement(L, psi, regs, G.col(j), true);
        require((moved - psi).norm() <= kTolInvariant, Errc::NoFixedVector, "generator " + std::to_string(j + 1) + " does not fix the state");
    }
    return {L, psi, {}};
}

/** Basis |x,y> = What(H1 y + Hbar x)|0,0> of C^{q^n}, where |0,0> is fixed
    by span(G1, Gbar). For an empty G1 the canonical pairs Gbar = (0|I),
    Hbar = (I|0) are used, so |x> is the computational basis. */
class CodeBasis {
public:
    explicit CodeBasis(const MatGF& G1) : q_(dense_q(G1.ctx()))
    {
        require(G1.rows() % 2 == 0, Errc::OddLength, "CodeBasis: odd row count");
        n_ = static_cast<int>(G1.rows() / 2);
        y1_ = static_cast<int>(G1.cols());
        const FieldPtr& ctx = G1.ctx();
        if (y1_ == 0) {
            basis_.G1 = G1;
            basis_.H1 = MatGF::empty(ctx, G1.rows(), 0);
            basis_.Gbar = MatGF(ctx, G1.rows(), static_cast<size_t>(n_));
            basis_.Hbar = MatGF(ctx, G1.rows(), static_cast<size_t>(n_));
            for (int j = 0; j < n_; ++j) {
                basis_.Gbar.at(static_cast<size_t>(n_ + j), static_cast<size_t>(j)) = ctx->one();
                basis_.Hbar.at(static_cast<size_t>(j), static_cast<size_t>(j)) = ctx->one();
            }
        } else {
            require(is_self_col_orth(G1), Errc::NotSelfOrthogonal, "G1 is not self-column-orthogonal");
            basis_ = symplectic_completion(G1);
        }
        layout_ = Layout(q_, n_);
        zero_ = stabilizer_state(MatGF::hcat(basis_.G1, basis_.Gbar)).amp;
    }

    int q() const { return q_; }
    int n() const { return n_; }
    int y1() const { return y1_; }
    int logical() const { return n_ - y1_; }
    const SymplecticBasis& basis() const { return basis_; }
    const Layout& layout() const { return layout_; }
    const Vec& zero() const { return zero_; }

    /** |x,y> with x in F^{n-y1}, y in F^{y1}. */
    Vec state(const VecGF& x, const VecGF& y) const
    {
        require(x.size() == static_cast<size_t>(logical()) && y.size() == static_cast<size_t>(y1_), Errc::DimensionMismatch,
                "code label lengths");
        VecGF w(basis_.G1.ctx(), 2 * static_cast<size_t>(n_));
        if (y1_) w = w + basis_.H1 * y;
        if (logical()) w = w + basis_.Hbar * x;
        return apply_displacement(layout_, zero_, iota_regs(0, n_), w, true);
    }

    /** Encoding isometry V: |x> -> |x,y> (columns indexed like a register
        layout of n - y1 qudits). */
    Mat isometry(const VecGF& y) const
    {
        Layout X(q_, logical());
        Mat V(static_cast<Eigen::Index>(layout_.dim()), static_cast<Eigen::Index>(X.dim()));
        for (size_t i = 0; i < X.dim(); ++i) V.col(static_cast<Eigen::Index>(i)) = state(label(X, i), y);
        return V;
    }

    /** Logical Weyl coordinates (a, b) of w orthogonal to G1:
        a_j = symp_q(w, gbar_j), b_j = -symp_q(w, hbar_j). */
    VecGF logical_of(const VecGF& w) const
    {
        const FieldCtx& F = *w.ctx;
        VecGF out(w.ctx, 2 * static_cast<size_t>(logical()));
        for (int j = 0; j < logical(); ++j) {
            out[static_cast<size_t>(j)] = symp_q(w, basis_.Gbar.col(static_cast<size_t>(j)));
            out[static_cast<size_t>(logical() + j)] = F.neg(symp_q(w, basis_.Hbar.col(static_cast<size_t>(j))));
        }
        return out;
    }

    /** Digits of basis index i of the layout X as a field vector. */
    VecGF label(const Layout& X, size_t i) const
    {
        std::vector<int64_t> d;
        for (int v : X.digits(i)) d.push_back(v);
        return VecGF::from_ints(basis_.G1.ctx(), d);
    }

private:
    int q_ = 3, n_ = 0, y1_ = 0;
    SymplecticBasis basis_;
    Layout layout_;
    Vec zero_;
};

/** |Phi[y,G1]> = q^{-(n-y1)/2} sum_x |x,y>_D |x>_E on n + (n - y1) registers.
    The end-user register E carries the logical label x in the computational
    basis, which differs from a copy of the code space only by a local
    isometry on E. */
inline DenseState ea_resource(const CodeBasis& code, const VecGF& y)
{
    const int n = code.n(), e = code.logical();
    Layout L(code.q(), n + e);
    Layout X(code.q(), e);
    Vec amp = Vec::Zero(static_cast<Eigen::Index>(L.dim()));
    const double s = 1.0 / std::sqrt(static_cast<double>(X.dim()));
    for (size_t xi = 0; xi < X.dim(); ++xi) {
        Vec cx = code.state(code.label(X, xi), y);
        for (size_t d = 0; d < code.layout().dim(); ++d)
            amp(static_cast<Eigen::Index>(d * X.dim() + xi)) += s * cx(static_cast<Eigen::Index>(d));
    }
    std::vector<std::string> labels;
    for (int j = 0; j < n; ++j) labels.push_back("D" + std::to_string(j + 1));
    for (int j = 0; j < e; ++j) labels.push_back("E" + std::to_string(j + 1));
    return {L, amp, labels};
}

inline DenseState ea_resource(const MatGF& G1, const VecGF& y) { return ea_resource(CodeBasis(G1), y); }

} // namespace mmsplab::quantum

#endif // MMSPLAB_QUANTUM_STABILIZER_HPP_
