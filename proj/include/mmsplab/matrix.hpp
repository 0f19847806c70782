/**@file
 *****************************************************************************
 Dense vectors and matrices over GF(q): elimination, solving, quotient
 coordinates, row restriction, the symplectic form, orthogonality predicates,
 MDS checks and symplectic basis completion.

 Row convention for F_q^{2n}: rows 0..n-1 are the X part and rows n..2n-1
 the Z part, so player a owns rows a and a+n.
 *****************************************************************************
 * @copyright  MIT license (see LICENSE file)
 *****************************************************************************/
#ifndef MMSPLAB_MATRIX_HPP_
#define MMSPLAB_MATRIX_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mmsplab/error.hpp"
#include "mmsplab/field.hpp"

namespace mmsplab {

/** Vector over a field. */
struct VecGF {
    FieldPtr ctx;
    std::vector<Elem> v;

    VecGF() = default;
    VecGF(FieldPtr c, size_t n) : ctx(std::move(c)), v(n) {}
    VecGF(FieldPtr c, std::vector<Elem> e) : ctx(std::move(c)), v(std::move(e)) {}
    static VecGF from_ints(const FieldPtr& c, const std::vector<int64_t>& xs)
    {
        VecGF out(c, xs.size());
        for (size_t i = 0; i < xs.size(); ++i) out.v[i] = c->scalar(xs[i]);
        return out;
    }
    size_t size() const { return v.size(); }
    const Elem& operator[](size_t i) const { return v[i]; }
    Elem& operator[](size_t i) { return v[i]; }
    bool is_zero() const
    {
        for (const auto& e : v)
            if (!ctx->is_zero(e)) return false;
        return true;
    }
    bool operator==(const VecGF& o) const { return v == o.v; }
    bool operator!=(const VecGF& o) const { return v != o.v; }
    bool operator<(const VecGF& o) const { return v < o.v; }
    VecGF operator+(const VecGF& o) const
    {
        require(o.size() == size(), Errc::DimensionMismatch, "vector add");
        VecGF out(ctx, size());
        for (size_t i = 0; i < size(); ++i) out.v[i] = ctx->add(v[i], o.v[i]);
        return out;
    }
    VecGF operator-(const VecGF& o) const
    {
        require(o.size() == size(), Errc::DimensionMismatch, "vector sub");
        VecGF out(ctx, size());
        for (size_t i = 0; i < size(); ++i) out.v[i] = ctx->sub(v[i], o.v[i]);
        return out;
    }
    VecGF scaled(const Elem& s) const
    {
        VecGF out(ctx, size());
        for (size_t i = 0; i < size(); ++i) out.v[i] = ctx->mul(v[i], s);
        return out;
    }
    std::vector<int64_t> to_ints() const
    {
        std::vector<int64_t> out;
        for (const auto& e : v) out.push_back(static_cast<int64_t>(ctx->to_index(e)));
        return out;
    }
    VecGF slice(size_t from, size_t len) const
    {
        require(from + len <= size(), Errc::IndexOutOfRange, "slice");
        return VecGF(ctx, std::vector<Elem>(v.begin() + from, v.begin() + from + len));
    }
    static VecGF concat(const VecGF& a, const VecGF& b)
    {
        VecGF out = a;
        if (!out.ctx) out.ctx = b.ctx;
        out.v.insert(out.v.end(), b.v.begin(), b.v.end());
        return out;
    }
};

/** Dense row-major matrix over a field. */
class MatGF {
public:
    MatGF() = default;
    MatGF(FieldPtr ctx, size_t rows, size_t cols) : ctx_(std::move(ctx)), rows_(rows), cols_(cols), data_(rows * cols) {}

    static MatGF zeros(const FieldPtr& ctx, size_t r, size_t c) { return MatGF(ctx, r, c); }
    static MatGF identity(const FieldPtr& ctx, size_t n)
    {
        MatGF m(ctx, n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = ctx->one();
        return m;
    }
    /** Entries given as integers, interpreted as prime-field scalars. */
    static MatGF from_ints(const FieldPtr& ctx, const std::vector<std::vector<int64_t>>& rows)
    {
        size_t r = rows.size(), c = r ? rows[0].size() : 0;
        MatGF m(ctx, r, c);
        for (size_t i = 0; i < r; ++i) {
            require(rows[i].size() == c, Errc::DimensionMismatch, "ragged matrix rows");
            for (size_t j = 0; j < c; ++j) m.at(i, j) = ctx->scalar(rows[i][j]);
        }
        return m;
    }
    /** Matrix with zero rows and the given column count, or the reverse. */
    static MatGF empty(const FieldPtr& ctx, size_t rows, size_t cols = 0) { return MatGF(ctx, rows, cols); }
    static MatGF from_columns(const FieldPtr& ctx, size_t rows, const std::vector<VecGF>& cols)
    {
        MatGF m(ctx, rows, cols.size());
        for (size_t j = 0; j < cols.size(); ++j) {
            require(cols[j].size() == rows, Errc::DimensionMismatch, "column length");
            for (size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
        }
        return m;
    }

    const FieldPtr& ctx() const { return ctx_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Elem& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const Elem& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }
    const std::vector<Elem>& data() const { return data_; }

    bool operator==(const MatGF& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }
    bool operator!=(const MatGF& o) const { return !(*this == o); }

    VecGF col(size_t j) const
    {
        require(j < cols_, Errc::IndexOutOfRange, "column index");
        VecGF v(ctx_, rows_);
        for (size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
        return v;
    }
    VecGF row(size_t i) const
    {
        require(i < rows_, Errc::IndexOutOfRange, "row index");
        return VecGF(ctx_, std::vector<Elem>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_));
    }
    void set_col(size_t j, const VecGF& v)
    {
        require(v.size() == rows_, Errc::DimensionMismatch, "set_col");
        for (size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
    }
    /** Columns [from, from+len). */
    MatGF col_range(size_t from, size_t len) const
    {
        require(from + len <= cols_, Errc::IndexOutOfRange, "column range");
        MatGF m(ctx_, rows_, len);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < len; ++j) m.at(i, j) = at(i, from + j);
        return m;
    }
    MatGF row_range(size_t from, size_t len) const
    {
        require(from + len <= rows_, Errc::IndexOutOfRange, "row range");
        MatGF m(ctx_, len, cols_);
        for (size_t i = 0; i < len; ++i)
            for (size_t j = 0; j < cols_; ++j) m.at(i, j) = at(from + i, j);
        return m;
    }
    /** Rows indexed by the ascending list S. */
    MatGF restrict_rows(const std::vector<size_t>& S) const
    {
        MatGF m(ctx_, S.size(), cols_);
        for (size_t a = 0; a < S.size(); ++a) {
            require(S[a] < rows_, Errc::IndexOutOfRange, "row index " + std::to_string(S[a]));
            for (size_t j = 0; j < cols_; ++j) m.at(a, j) = at(S[a], j);
        }
        return m;
    }
    MatGF transpose() const
    {
        MatGF m(ctx_, cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
        return m;
    }
    MatGF operator*(const MatGF& o) const
    {
        require(cols_ == o.rows_, Errc::DimensionMismatch, "matrix product");
        MatGF m(ctx_ ? ctx_ : o.ctx_, rows_, o.cols_);
        const FieldCtx& F = *m.ctx_;
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                const Elem& a = at(i, k);
                if (F.is_zero(a)) continue;
                for (size_t j = 0; j < o.cols_; ++j) m.at(i, j) = F.add(m.at(i, j), F.mul(a, o.at(k, j)));
            }
        return m;
    }
    VecGF operator*(const VecGF& v) const
    {
        require(cols_ == v.size(), Errc::DimensionMismatch, "matrix-vector product");
        VecGF out(ctx_, rows_);
        const FieldCtx& F = *ctx_;
        for (size_t i = 0; i < rows_; ++i) {
            Elem s = F.zero();
            for (size_t k = 0; k < cols_; ++k) s = F.add(s, F.mul(at(i, k), v[k]));
            out[i] = s;
        }
        return out;
    }
    MatGF operator+(const MatGF& o) const
    {
        require(rows_ == o.rows_ && cols_ == o.cols_, Errc::DimensionMismatch, "matrix sum");
        MatGF m(ctx_, rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = ctx_->add(data_[i], o.data_[i]);
        return m;
    }
    MatGF operator-(const MatGF& o) const
    {
        require(rows_ == o.rows_ && cols_ == o.cols_, Errc::DimensionMismatch, "matrix difference");
        MatGF m(ctx_, rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = ctx_->sub(data_[i], o.data_[i]);
        return m;
    }
    MatGF neg() const
    {
        MatGF m(ctx_, rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = ctx_->neg(data_[i]);
        return m;
    }
    bool is_zero() const
    {
        for (const auto& e : data_)
            if (!ctx_->is_zero(e)) return false;
        return true;
    }

    /** Horizontal concatenation (A | B). Either side may have zero columns. */
    static MatGF hcat(const MatGF& a, const MatGF& b)
    {
        require(a.rows_ == b.rows_, Errc::DimensionMismatch, "hcat row counts differ");
        MatGF m(a.ctx_ ? a.ctx_ : b.ctx_, a.rows_, a.cols_ + b.cols_);
        for (size_t i = 0; i < a.rows_; ++i) {
            for (size_t j = 0; j < a.cols_; ++j) m.at(i, j) = a.at(i, j);
            for (size_t j = 0; j < b.cols_; ++j) m.at(i, a.cols_ + j) = b.at(i, j);
        }
        return m;
    }
    static MatGF hcat(std::initializer_list<MatGF> parts)
    {
        MatGF acc;
        bool first = true;
        for (const auto& p : parts) {
            acc = first ? p : hcat(acc, p);
            first = false;
        }
        return acc;
    }
    /** Vertical concatenation (A ; B). */
    static MatGF vcat(const MatGF& a, const MatGF& b)
    {
        require(a.cols_ == b.cols_, Errc::DimensionMismatch, "vcat column counts differ");
        MatGF m(a.ctx_ ? a.ctx_ : b.ctx_, a.rows_ + b.rows_, a.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t j = 0; j < a.cols_; ++j) m.at(i, j) = a.at(i, j);
        for (size_t i = 0; i < b.rows_; ++i)
            for (size_t j = 0; j < b.cols_; ++j) m.at(a.rows_ + i, j) = b.at(i, j);
        return m;
    }
    static MatGF vcat(std::initializer_list<MatGF> parts)
    {
        MatGF acc;
        bool first = true;
        for (const auto& p : parts) {
            acc = first ? p : vcat(acc, p);
            first = false;
        }
        return acc;
    }

    /** Integer view of entries (field index encoding). */
    std::vector<std::vector<int64_t>> to_ints() const
    {
        std::vector<std::vector<int64_t>> out(rows_, std::vector<int64_t>(cols_));
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) out[i][j] = static_cast<int64_t>(ctx_->to_index(at(i, j)));
        return out;
    }

private:
    FieldPtr ctx_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<Elem> data_;
};

/* ------------------------------------------------------------------------- */
/* Elimination                                                               */
/* ------------------------------------------------------------------------- */

/** Reduced row echelon form and pivot columns. */
struct Rref {
    MatGF R;
    std::vector<size_t> pivots;
};

inline Rref rref(MatGF M)
{
    const FieldCtx& F = *M.ctx();
    std::vector<size_t> piv;
    size_t r = 0;
    for (size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
        size_t sel = r;
        while (sel < M.rows() && F.is_zero(M.at(sel, c))) ++sel;
        if (sel == M.rows()) continue;
        if (sel != r)
            for (size_t j = 0; j < M.cols(); ++j) std::swap(M.at(sel, j), M.at(r, j));
        Elem inv = F.inv(M.at(r, c));
        for (size_t j = c; j < M.cols(); ++j) M.at(r, j) = F.mul(M.at(r, j), inv);
        for (size_t i = 0; i < M.rows(); ++i) {
            if (i == r || F.is_zero(M.at(i, c))) continue;
            Elem f = M.at(i, c);
            for (size_t j = c; j < M.cols(); ++j) M.at(i, j) = F.sub(M.at(i, j), F.mul(f, M.at(r, j)));
        }
        piv.push_back(c);
        ++r;
    }
    return {std::move(M), std::move(piv)};
}

inline size_t rank(const MatGF& M)
{
    if (M.rows() == 0 || M.cols() == 0) return 0;
    return rref(M).pivots.size();
}

/** Some solution of M x = b, with free variables set to zero; nullopt if none. */
inline std::optional<VecGF> solve(const MatGF& M, const VecGF& b)
{
    require(b.size() == M.rows(), Errc::DimensionMismatch, "solve: rhs length");
    MatGF aug(M.ctx(), M.rows(), M.cols() + 1);
    for (size_t i = 0; i < M.rows(); ++i) {
        for (size_t j = 0; j < M.cols(); ++j) aug.at(i, j) = M.at(i, j);
        aug.at(i, M.cols()) = b[i];
    }
    Rref e = rref(aug);
    VecGF x(M.ctx(), M.cols());
    for (size_t k = 0; k < e.pivots.size(); ++k) {
        if (e.pivots[k] == M.cols()) return std::nullopt;
        x[e.pivots[k]] = e.R.at(k, M.cols());
    }
    return x;
}

inline bool in_span(const MatGF& M, const VecGF& v)
{
    require(v.size() == M.rows(), Errc::DimensionMismatch, "in_span: vector length");
    if (v.is_zero()) return true;
    if (M.cols() == 0) return false;
    return solve(M, v).has_value();
}

/** Basis of the right kernel {x : M x = 0}, as columns. */
inline MatGF nullspace(const MatGF& M)
{
    Rref e = rref(M);
    const FieldCtx& F = *M.ctx();
    std::vector<bool> is_piv(M.cols(), false);
    for (auto c : e.pivots) is_piv[c] = true;
    std::vector<VecGF> basis;
    for (size_t fcol = 0; fcol < M.cols(); ++fcol) {
        if (is_piv[fcol]) continue;
        VecGF x(M.ctx(), M.cols());
        x[fcol] = F.one();
        for (size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = F.neg(e.R.at(k, fcol));
        basis.push_back(x);
    }
    return MatGF::from_columns(M.ctx(), M.cols(), basis);
}

/** Inverse of a square matrix; throws RankDeficient when singular. */
inline MatGF inverse(const MatGF& M)
{
    require(M.rows() == M.cols(), Errc::DimensionMismatch, "inverse of non-square matrix");
    const size_t n = M.rows();
    Rref e = rref(MatGF::hcat(M, MatGF::identity(M.ctx(), n)));
    require(e.pivots.size() >= n && (n == 0 || e.pivots[n - 1] == n - 1), Errc::RankDeficient, "singular matrix");
    return e.R.col_range(n, n);
}

/** Columns of M selected by the pivot positions (a basis of Im M). */
inline MatGF column_basis(const MatGF& M)
{
    if (M.cols() == 0) return M;
    Rref e = rref(M);
    std::vector<VecGF> cols;
    for (auto c : e.pivots) cols.push_back(M.col(c));
    return MatGF::from_columns(M.ctx(), M.rows(), cols);
}

/** The quotient map F_q^N -> F_q^N / Im G with fixed coset coordinates. */
class QuotientMap {
public:
    QuotientMap() = default;
    explicit QuotientMap(const MatGF& G) : ctx_(G.ctx()), N_(G.rows())
    {
        MatGF basis = column_basis(G);
        dim_sub_ = basis.cols();
        /* Complete with unit vectors in index order. */
        MatGF full = basis;
        for (size_t i = 0; i < N_ && full.cols() < N_; ++i) {
            VecGF e(ctx_, N_);
            e[i] = ctx_->one();
            MatGF trial = MatGF::hcat(full, MatGF::from_columns(ctx_, N_, {e}));
            if (rank(trial) == trial.cols()) full = trial;
        }
        inv_ = N_ ? inverse(full) : MatGF(ctx_, 0, 0);
        subspace_ = basis;
    }
    size_t ambient_dim() const { return N_; }
    size_t subspace_dim() const { return dim_sub_; }
    size_t quotient_dim() const { return N_ - dim_sub_; }
    const MatGF& subspace_basis() const { return subspace_; }
    /** Coordinates of the coset v + Im G. */
    VecGF coords(const VecGF& v) const
    {
        require(v.size() == N_, Errc::DimensionMismatch, "coset_coords: vector length");
        VecGF all = inv_ * v;
        return all.slice(dim_sub_, N_ - dim_sub_);
    }
    /** Matrix of the linear map v -> coords(v). */
    MatGF matrix() const { return inv_.row_range(dim_sub_, N_ - dim_sub_); }

private:
    FieldPtr ctx_;
    size_t N_ = 0, dim_sub_ = 0;
    MatGF inv_, subspace_;
};

inline QuotientMap quotient(const MatGF& G) { return QuotientMap(G); }
inline VecGF coset_coords(const QuotientMap& qm, const VecGF& v) { return qm.coords(v); }

/* ------------------------------------------------------------------------- */
/* Exhaustive enumeration helpers                                            */
/* ------------------------------------------------------------------------- */

/** q^len, or TooLarge when it exceeds the given budget. */
inline u128 count_vectors(const FieldCtx& F, size_t len, u128 budget, const std::string& what)
{
    u128 q = *F.order(), total = 1;
    for (size_t i = 0; i < len; ++i) {
        total *= q;
        require(total <= budget, Errc::TooLarge, what + ": more than " + std::to_string(static_cast<uint64_t>(budget)) +
                                                     " cases to enumerate");
    }
    return total;
}

/** The idx-th vector of F_q^len (little-endian base-q digits). */
inline VecGF vector_from_index(const FieldPtr& ctx, size_t len, u128 idx)
{
    const u128 q = *ctx->order();
    VecGF v(ctx, len);
    for (size_t i = 0; i < len; ++i) {
        v[i] = ctx->from_index(idx % q);
        idx /= q;
    }
    return v;
}

/** Compact byte key of a vector, for multiset comparisons. */
inline std::string vec_key(const VecGF& v)
{
    const int r = v.ctx ? v.ctx->r() : 0;
    std::string k;
    k.reserve(v.size() * static_cast<size_t>(r));
    for (const auto& e : v.v) k.append(reinterpret_cast<const char*>(e.c.data()), static_cast<size_t>(r));
    return k;
}

/* ------------------------------------------------------------------------- */
/* Restriction and subsets                                                   */
/* ------------------------------------------------------------------------- */

/** Ascending row list of a bitmask subset. */
inline std::vector<size_t> mask_to_rows(uint64_t mask)
{
    std::vector<size_t> out;
    for (size_t i = 0; mask; ++i, mask >>= 1)
        if (mask & 1) out.push_back(i);
    return out;
}

inline MatGF restrict_rows(const MatGF& M, const std::vector<size_t>& S) { return M.restrict_rows(S); }
inline MatGF restrict_mask(const MatGF& M, uint64_t mask) { return M.restrict_rows(mask_to_rows(mask)); }
inline VecGF restrict_vec(const VecGF& v, const std::vector<size_t>& S)
{
    VecGF out(v.ctx, S.size());
    for (size_t a = 0; a < S.size(); ++a) {
        require(S[a] < v.size(), Errc::IndexOutOfRange, "vector index");
        out[a] = v[S[a]];
    }
    return out;
}

/* ------------------------------------------------------------------------- */
/* Bilinear and symplectic forms                                             */
/* ------------------------------------------------------------------------- */

/** tr(sum x_i y_i). */
inline uint32_t bilinear(const VecGF& x, const VecGF& y)
{
    require(x.size() == y.size(), Errc::DimensionMismatch, "bilinear: lengths differ");
    const FieldCtx& F = *x.ctx;
    Elem s = F.zero();
    for (size_t i = 0; i < x.size(); ++i) s = F.add(s, F.mul(x[i], y[i]));
    return F.trace(s);
}

/** F_q-valued symplectic form sum_i (v_i w_{n+i} - w_i v_{n+i}). */
inline Elem symp_q(const VecGF& v, const VecGF& w)
{
    require(v.size() == w.size(), Errc::DimensionMismatch, "symp: lengths differ");
    require(v.size() % 2 == 0, Errc::OddLength, "symp: odd length");
    const FieldCtx& F = *v.ctx;
    const size_t n = v.size() / 2;
    Elem s = F.zero();
    for (size_t i = 0; i < n; ++i) {
        s = F.add(s, F.mul(v[i], w[n + i]));
        s = F.sub(s, F.mul(w[i], v[n + i]));
    }
    return s;
}

/** F_p-valued symplectic product <v_X, w_Z> - <w_X, v_Z>. */
inline uint32_t symp(const VecGF& v, const VecGF& w) { return v.ctx->trace(symp_q(v, w)); }

/** Gram matrix of the F_q-valued symplectic form between the columns of A and B. */
inline MatGF symp_gram(const MatGF& A, const MatGF& B)
{
    require(A.rows() == B.rows(), Errc::DimensionMismatch, "symp_gram: row counts differ");
    require(A.rows() % 2 == 0, Errc::OddLength, "symp_gram: odd row count");
    MatGF g(A.ctx() ? A.ctx() : B.ctx(), A.cols(), B.cols());
    for (size_t i = 0; i < A.cols(); ++i)
        for (size_t j = 0; j < B.cols(); ++j) g.at(i, j) = symp_q(A.col(i), B.col(j));
    return g;
}

inline bool is_self_col_orth(const MatGF& G)
{
    require(G.rows() % 2 == 0, Errc::OddLength, "is_self_col_orth: odd row count");
    return symp_gram(G, G).is_zero();
}

inline bool is_col_orth(const MatGF& F, const MatGF& G)
{
    require(F.rows() % 2 == 0, Errc::OddLength, "is_col_orth: odd row count");
    return symp_gram(F, G).is_zero();
}

/* ------------------------------------------------------------------------- */
/* MDS                                                                        */
/* ------------------------------------------------------------------------- */

/** Calls fn(mask) for every k-subset of {0..n-1}; stops when fn returns false. */
template <class Fn>
inline bool for_each_ksubset(size_t n, size_t k, Fn&& fn)
{
    if (k > n) return true;
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        uint64_t m = 0;
        for (auto i : idx) m |= (uint64_t)1 << i;
        if (!fn(m)) return false;
        size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return true;
        ++idx[i - 1];
        for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/** True iff every k-row submatrix of the N x k matrix M is invertible.
    Optionally reports the first failing row subset. */
inline bool is_mds(const MatGF& M, uint64_t* witness = nullptr)
{
    const size_t N = M.rows(), k = M.cols();
    require(k <= N, Errc::TooManyColumns, "is_mds: more columns than rows");
    require(N <= 24, Errc::TooLarge, "is_mds: more than 24 rows");
    if (k == 0) return true;
    return for_each_ksubset(N, k, [&](uint64_t m) {
        if (rank(restrict_mask(M, m)) != k) {
            if (witness) *witness = m;
            return false;
        }
        return true;
    });
}

/** Minimum Hamming weight over nonzero codewords of Im M (q^k <= 10^4). */
inline size_t min_weight(const MatGF& M)
{
    const FieldCtx& F = *M.ctx();
    auto q = F.order();
    const size_t k = M.cols();
    u128 total = 1;
    for (size_t i = 0; i < k; ++i) total *= *q;
    require(total <= 10000, Errc::TooLarge, "min_weight: q^k above 10^4");
    size_t best = M.rows() + 1;
    for (u128 idx = 1; idx < total; ++idx) {
        VecGF c(M.ctx(), k);
        u128 t = idx;
        for (size_t i = 0; i < k; ++i) {
            c[i] = F.from_index(t % *q);
            t /= *q;
        }
        VecGF w = M * c;
        size_t wt = 0;
        for (size_t i = 0; i < w.size(); ++i)
            if (!F.is_zero(w[i])) ++wt;
        if (wt > 0) best = std::min(best, wt);
    }
    return best;
}

/* ------------------------------------------------------------------------- */
/* Symplectic completion                                                     */
/* ------------------------------------------------------------------------- */

/** Full symplectic basis extending an isotropic G1: G1, Gbar are isotropic,
    H1 is dual to G1, Hbar is dual to Gbar, and all cross pairs vanish. */
struct SymplecticBasis {
    MatGF G1, Gbar, H1, Hbar;
};

namespace detail {

/** Smallest-index element of trace 1 (1 itself over a prime field). */
inline Elem trace_one(const FieldCtx& F)
{
    if (F.trace(F.one()) == 1) return F.one();
    for (u128 i = 1;; ++i) {
        Elem e = F.from_index(i);
        if (F.trace(e) == 1) return e;
    }
}

/** v - symp_q(v, f) e + symp_q(v, e) f removes the (e, f) hyperbolic part
    of v when symp_q(e, f) = 1. */
inline VecGF project_off_pair(const VecGF& v, const VecGF& e, const VecGF& f)
{
    const FieldCtx& F = *v.ctx;
    Elem a = symp_q(v, f), b = symp_q(v, e);
    VecGF out = v - e.scaled(a);
    return out + f.scaled(b);
    (void)F;
}

} // namespace detail

inline SymplecticBasis symplectic_completion(const MatGF& G1)
{
    require(G1.rows() % 2 == 0, Errc::OddLength, "symplectic_completion: odd row count");
    const FieldPtr& ctx = G1.ctx();
    const FieldCtx& F = *ctx;
    const size_t N = G1.rows(), n = N / 2, y1 = G1.cols();
    require(is_self_col_orth(G1), Errc::NotSelfOrthogonal, "G1 is not self-column-orthogonal");
    require(rank(G1) == y1, Errc::RankDeficient, "G1 columns are linearly dependent");
    require(y1 <= n, Errc::RankDeficient, "isotropic rank exceeds n");
    const Elem c = detail::trace_one(F);

    /* Omega with symp_q(v, w) = v^T Omega w. */
    MatGF Omega(ctx, N, N);
    for (size_t i = 0; i < n; ++i) {
        Omega.at(i, n + i) = F.one();
        Omega.at(n + i, i) = F.neg(F.one());
    }

    /* Step 1: h_j with symp_q(h_j, g_i) = delta_ij, then isotropic fix-up. */
    std::vector<VecGF> H;
    if (y1 > 0) {
        MatGF M = (Omega * G1).transpose(); /* row i: (Omega g_i)^T, so M h = (symp_q(h, g_i))_i */
        for (size_t j = 0; j < y1; ++j) {
            VecGF e(ctx, y1);
            e[j] = F.one();
            auto h = solve(M, e);
            require(h.has_value(), Errc::RankDeficient, "dual vector does not exist");
            H.push_back(*h);
        }
        std::vector<VecGF> Hfix = H;
        for (size_t j = 0; j < y1; ++j)
            for (size_t k = j + 1; k < y1; ++k) Hfix[j] = Hfix[j] + G1.col(k).scaled(symp_q(H[j], H[k]));
        H = Hfix;
    }

    /* Step 2: symplectic complement of span(G1, H1), then greedy hyperbolic pairs. */
    std::vector<VecGF> rest;
    {
        MatGF GH = MatGF::hcat(G1, MatGF::from_columns(ctx, N, H));
        MatGF C = GH.cols() ? nullspace((Omega * GH).transpose()) : MatGF::identity(ctx, N);
        for (size_t j = 0; j < C.cols(); ++j) rest.push_back(C.col(j));
    }
    std::vector<VecGF> gbar, hbar;
    while (!rest.empty()) {
        VecGF e = rest.front();
        size_t partner = rest.size();
        for (size_t k = 1; k < rest.size(); ++k)
            if (!F.is_zero(symp_q(e, rest[k]))) {
                partner = k;
                break;
            }
        require(partner < rest.size(), Errc::RankDeficient, "degenerate symplectic complement");
        VecGF f = rest[partner].scaled(F.inv(symp_q(e, rest[partner])));
        std::vector<VecGF> next;
        for (size_t k = 1; k < rest.size(); ++k)
            if (k != partner) next.push_back(detail::project_off_pair(rest[k], e, f));
        /* symp_q(e, f) = 1, so (gbar, hbar) = (f, e) has symp_q(hbar, gbar) = 1. */
        gbar.push_back(f);
        hbar.push_back(e);
        rest = std::move(next);
    }

    SymplecticBasis out;
    out.G1 = G1;
    out.Gbar = MatGF::from_columns(ctx, N, gbar);
    /* Scale the dual vectors by an element of trace 1 so that the F_p-valued
       products are exactly delta (a no-op over prime fields). */
    for (auto& h : H) h = h.scaled(c);
    for (auto& h : hbar) h = h.scaled(c);
    out.H1 = MatGF::from_columns(ctx, N, H);
    out.Hbar = MatGF::from_columns(ctx, N, hbar);
    return out;
}

/** (Gbar, H1) completing an isotropic G1. */
inline std::pair<MatGF, MatGF> dual_and_completion(const MatGF& G1)
{
    auto b = symplectic_completion(G1);
    return {b.Gbar, b.H1};
}

} // namespace mmsplab

#endif // MMSPLAB_MATRIX_HPP_
