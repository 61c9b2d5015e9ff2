#include "moddef/linalg.hpp"

#include <utility>

#include "moddef/errors.hpp"

namespace moddef {

Echelon rref(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t found = pivot_row;
        while (found < m.rows() && m(found, col).is_zero()) ++found;
        if (found == m.rows()) continue;
        if (found != pivot_row) {
            auto a = m.row(found);
            auto b = m.row(pivot_row);
            std::swap_ranges(a.begin(), a.end(), b.begin());
        }
        auto pivot = m.row(pivot_row);
        if (!pivot[col].is_one()) {
            Scalar inv = pivot[col].inverse();
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!pivot[c].is_zero()) pivot[c] *= inv;
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == pivot_row || m(r, col).is_zero()) continue;
            Scalar factor = m(r, col);
            auto target = m.row(r);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!pivot[c].is_zero()) target[c].subtract_product(factor, pivot[c]);
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

namespace {

std::vector<Vector> kernel_from_echelon(const Echelon& e, std::size_t cols) {
    const Field& field = e.reduced.field();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vector v(cols, field.zero());
        v[free] = field.one();
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix augment(const Matrix& a, std::span<const Scalar> b) {
    if (b.size() != a.rows())
        throw InputError("solve: right-hand side has length " + std::to_string(b.size()) +
                         " but the matrix has " + std::to_string(a.rows()) + " rows");
    Matrix aug(a.field(), a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    return aug;
}

std::optional<Vector> particular_from_echelon(const Echelon& e, std::size_t cols) {
    const Field& field = e.reduced.field();
    if (!e.pivots.empty() && e.pivots.back() == cols) return std::nullopt;
    Vector x(cols, field.zero());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, cols);
    return x;
}

}  // namespace

std::vector<Vector> kernel_basis(const Matrix& m) { return kernel_from_echelon(rref(m), m.cols()); }

SolveResult solve(const Matrix& a, std::span<const Scalar> b) {
    auto e = rref(augment(a, b));
    SolveResult result;
    result.particular = particular_from_echelon(e, a.cols());
    // The pivots of [a|b] restricted to the first a.cols() columns are those of a.
    if (!e.pivots.empty() && e.pivots.back() == a.cols()) e.pivots.pop_back();
    result.kernel_basis = kernel_from_echelon(e, a.cols());
    return result;
}

std::optional<Vector> solve_particular(const Matrix& a, std::span<const Scalar> b) {
    return particular_from_echelon(rref(augment(a, b)), a.cols());
}

bool is_zero(std::span<const Scalar> v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

}  // namespace moddef
