#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pbec/finite_field.hpp"

namespace pbec {

/// Dense row-major matrix over GF(q).
class FqMatrix {
public:
    FqMatrix(Field field, std::size_t rows, std::size_t cols);
    /// Builds a matrix from explicit rows, each of length `cols`.
    static FqMatrix from_rows(Field field, std::size_t cols, const std::vector<std::vector<Elem>>& rows);
    static FqMatrix identity(Field field, std::size_t n);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Elem at(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    Elem& at(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    std::span<const Elem> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<Elem> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<const Elem> data() const noexcept { return data_; }

    FqVector column(std::size_t c) const;
    void append_row(std::span<const Elem> row);
    FqMatrix transpose() const;
    bool is_zero() const noexcept;

    friend bool operator==(const FqMatrix& a, const FqMatrix& b)
    {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> data_;
};

struct RowEchelon {
    FqMatrix reduced;  // same shape as the input, zero rows at the bottom
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by Gauss-Jordan elimination.
RowEchelon rref(const FqMatrix& m);
std::size_t rank(const FqMatrix& m);
/// Nonzero rows of rref(m): a canonical basis of the row space.
FqMatrix row_basis(const FqMatrix& m);
/// Basis of {v : m v^T = 0}, one vector per row; cols(m) - rank(m) rows.
FqMatrix kernel(const FqMatrix& m);
FqMatrix multiply(const FqMatrix& a, const FqMatrix& b);
/// m v^T written into out (length rows(m)).
void mat_vec(const FqMatrix& m, std::span<const Elem> v, std::span<Elem> out);
/// v m (v of length rows(m)) accumulated into out (length cols(m)).
void vec_mat_acc(const FqMatrix& m, std::span<const Elem> v, std::span<Elem> out);
/// dst += s * src.
void axpy(const FieldSpec& f, std::span<Elem> dst, Elem s, std::span<const Elem> src) noexcept;

} // namespace pbec
