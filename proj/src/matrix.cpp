#include "moddef/matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "moddef/errors.hpp"

namespace moddef {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, field.zero()) {}

Matrix Matrix::identity(Field field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<Vector>& rows, std::size_t cols) {
    if (!rows.empty()) cols = rows.front().size();
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw InputError("ragged matrix: row " + std::to_string(r) + " has " +
                             std::to_string(rows[r].size()) + " entries, expected " + std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_ints(Field field, const std::vector<std::vector<long>>& rows) {
    std::vector<Vector> converted;
    for (const auto& row : rows) {
        Vector v;
        for (long x : row) v.push_back(field.from_int(x));
        converted.push_back(std::move(v));
    }
    return from_rows(field, converted);
}

bool Matrix::is_zero() const noexcept {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

void Matrix::require_shape(const Matrix& rhs, const char* op) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || field_ != rhs.field_)
        throw std::invalid_argument(std::string("matrix shape mismatch in ") + op);
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    require_shape(rhs, "+");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    require_shape(rhs, "-");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
    for (auto& e : entries_) e *= s;
    return *this;
}

Matrix Matrix::operator-() const {
    Matrix m = *this;
    for (auto& e : m.entries_) e = -e;
    return m;
}

void Matrix::add_scaled(const Scalar& s, const Matrix& rhs) {
    require_shape(rhs, "add_scaled");
    if (s.is_zero()) return;
    auto neg = -s;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (!rhs.entries_[i].is_zero()) entries_[i].subtract_product(neg, rhs.entries_[i]);
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.cols_ != rhs.rows_ || lhs.field_ != rhs.field_)
        throw std::invalid_argument("matrix shape mismatch in *");
    Matrix out(lhs.field_, lhs.rows_, rhs.cols_);
    for (std::size_t i = 0; i < lhs.rows_; ++i)
        for (std::size_t k = 0; k < lhs.cols_; ++k) {
            const Scalar& a = lhs(i, k);
            if (a.is_zero()) continue;
            auto neg = -a;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                if (!rhs(k, j).is_zero()) out(i, j).subtract_product(neg, rhs(k, j));
        }
    return out;
}

Vector operator*(const Matrix& lhs, std::span<const Scalar> v) {
    if (lhs.cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    Vector out(lhs.rows_, lhs.field_.zero());
    for (std::size_t i = 0; i < lhs.rows_; ++i)
        for (std::size_t k = 0; k < lhs.cols_; ++k)
            if (!lhs(i, k).is_zero() && !v[k].is_zero()) out[i].subtract_product(-lhs(i, k), v[k]);
    return out;
}

bool operator==(const Matrix& lhs, const Matrix& rhs) {
    return lhs.field_ == rhs.field_ && lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ &&
           lhs.entries_ == rhs.entries_;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
        os << ']';
    }
    os << ']';
    return os.str();
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

}  // namespace moddef
