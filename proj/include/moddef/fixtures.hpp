#pragma once

#include <string_view>

#include "moddef/algebra.hpp"
#include "moddef/io.hpp"

namespace moddef::fixtures {

/// Q[x]/(x^2) with basis {1, x}.
Algebra dual_numbers(const Field& field = {});
/// M_2 with the matrix-unit basis e11, e12, e21, e22 (index 2p + q).
Algebra matrix_algebra_2(const Field& field = {});
/// The one-dimensional algebra k.
Algebra ground_field(const Field& field = {});

/// A: dual numbers acting on k by x -> 0.
Module fixture_a(const Field& field = {});
/// B: M_2 acting on column vectors k^2.
Module fixture_b(const Field& field = {});
/// C: dual numbers acting on k^2 by x -> [[0,1],[0,0]].
Module fixture_c(const Field& field = {});

/// The built-in documents "A", "B", "C". A carries the seed sigma(x) = 1 with
/// order 5; C carries sigma(x) = diag(1,-1) with order 10.
Json fixture_document(std::string_view name);
/// {"A": ..., "B": ..., "C": ...}
Json all_fixture_documents();

}  // namespace moddef::fixtures
