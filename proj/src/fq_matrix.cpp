#include "pbec/fq_matrix.hpp"

#include <algorithm>

#include "pbec/errors.hpp"

namespace pbec {

FqMatrix::FqMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0)
{
    if (!field_) throw ParameterError("matrix: null field");
}

FqMatrix FqMatrix::from_rows(Field field, std::size_t cols, const std::vector<std::vector<Elem>>& rows)
{
    FqMatrix m(std::move(field), 0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

FqMatrix FqMatrix::identity(Field field, std::size_t n)
{
    FqMatrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FqVector FqMatrix::column(std::size_t c) const
{
    FqVector v(field_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

void FqMatrix::append_row(std::span<const Elem> row)
{
    if (row.size() != cols_) throw ParameterError("matrix: row length mismatch");
    for (Elem x : row) {
        if (x >= field_->order()) throw ParameterError("matrix: entry outside the field");
    }
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

FqMatrix FqMatrix::transpose() const
{
    FqMatrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    }
    return t;
}

bool FqMatrix::is_zero() const noexcept
{
    return std::all_of(data_.begin(), data_.end(), [](Elem x) { return x == 0; });
}

void axpy(const FieldSpec& f, std::span<Elem> dst, Elem s, std::span<const Elem> src) noexcept
{
    if (s == 0) return;
    if (f.characteristic() == 2 && s == 1) {
        for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
        return;
    }
    for (std::size_t i = 0; i < dst.size(); ++i) {
        if (src[i] != 0) dst[i] = f.add(dst[i], f.mul(s, src[i]));
    }
}

RowEchelon rref(const FqMatrix& m)
{
    const FieldSpec& f = *m.field();
    FqMatrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && a.at(piv, c) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != r) std::swap_ranges(a.row(piv).begin(), a.row(piv).end(), a.row(r).begin());
        const Elem inv = f.inv(a.at(r, c));
        if (inv != 1) {
            for (Elem& x : a.row(r)) x = f.mul(x, inv);
        }
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            axpy(f, a.row(i), f.neg(a.at(i, c)), a.row(r));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), r, std::move(pivots)};
}

std::size_t rank(const FqMatrix& m) { return rref(m).rank; }

FqMatrix row_basis(const FqMatrix& m)
{
    RowEchelon e = rref(m);
    FqMatrix out(m.field(), 0, m.cols());
    for (std::size_t i = 0; i < e.rank; ++i) out.append_row(e.reduced.row(i));
    return out;
}

FqMatrix kernel(const FqMatrix& m)
{
    const FieldSpec& f = *m.field();
    RowEchelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;
    FqMatrix out(m.field(), 0, m.cols());
    std::vector<Elem> v(m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::fill(v.begin(), v.end(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < e.rank; ++i) v[e.pivots[i]] = f.neg(e.reduced.at(i, free));
        out.append_row(v);
    }
    return out;
}

FqMatrix multiply(const FqMatrix& a, const FqMatrix& b)
{
    if (a.field() != b.field() || a.cols() != b.rows()) throw ParameterError("multiply: shape or field mismatch");
    FqMatrix out(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) axpy(*a.field(), out.row(i), a.at(i, k), b.row(k));
    }
    return out;
}

void mat_vec(const FqMatrix& m, std::span<const Elem> v, std::span<Elem> out)
{
    const FieldSpec& f = *m.field();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Elem acc = 0;
        const auto row = m.row(r);
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (row[c] != 0 && v[c] != 0) acc = f.add(acc, f.mul(row[c], v[c]));
        }
        out[r] = acc;
    }
}

void vec_mat_acc(const FqMatrix& m, std::span<const Elem> v, std::span<Elem> out)
{
    for (std::size_t r = 0; r < m.rows(); ++r) axpy(*m.field(), out, v[r], m.row(r));
}

} // namespace pbec
