#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "moddef/field.hpp"

namespace moddef {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over a Field.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field field, std::size_t rows, std::size_t cols);

    static Matrix identity(Field field, std::size_t n);
    /// Throws InputError if the rows are ragged.
    static Matrix from_rows(Field field, const std::vector<Vector>& rows, std::size_t cols = 0);
    static Matrix from_ints(Field field, const std::vector<std::vector<long>>& rows);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<Scalar> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
    std::span<const Scalar> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
    std::span<const Scalar> entries() const noexcept { return entries_; }

    bool is_zero() const noexcept;
    Matrix transpose() const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(const Scalar& s);
    Matrix operator-() const;

    friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
    friend Matrix operator*(Matrix lhs, const Scalar& s) { return lhs *= s; }
    friend Matrix operator*(const Scalar& s, Matrix rhs) { return rhs *= s; }
    friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
    friend Vector operator*(const Matrix& lhs, std::span<const Scalar> v);
    friend bool operator==(const Matrix& lhs, const Matrix& rhs);

    /// this += s * rhs
    void add_scaled(const Scalar& s, const Matrix& rhs);

    std::string to_string() const;

private:
    void require_shape(const Matrix& rhs, const char* op) const;

    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> entries_;
};

Matrix kronecker(const Matrix& a, const Matrix& b);

}  // namespace moddef
