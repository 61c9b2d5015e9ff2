#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "moddef/matrix.hpp"

namespace moddef {

struct Echelon {
    Matrix reduced;                   // unique reduced row-echelon form
    std::vector<std::size_t> pivots;  // strictly increasing pivot columns
};

struct SolveResult {
    std::optional<Vector> particular;  // free variables set to zero
    std::vector<Vector> kernel_basis;
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);

/// One vector per free column f of rref(m): 1 at f, minus the rref column at
/// the pivot positions, zero elsewhere.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Solves a x = b. Throws InputError when b.size() != a.rows().
SolveResult solve(const Matrix& a, std::span<const Scalar> b);

/// Solves a x = b, skipping the kernel basis.
std::optional<Vector> solve_particular(const Matrix& a, std::span<const Scalar> b);

bool is_zero(std::span<const Scalar> v);

}  // namespace moddef
