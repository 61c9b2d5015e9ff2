#pragma once

#include <cstddef>

namespace moddef {

/// Guardrails checked before any large allocation or solve.
struct Limits {
    std::size_t max_algebra_dim = 8;
    std::size_t max_module_dim = 6;
    std::size_t max_order = 16;
    std::size_t max_degree = 3;
    std::size_t max_matrix_entries = 2'000'000;
};

}  // namespace moddef
