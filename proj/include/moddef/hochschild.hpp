#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "moddef/algebra.hpp"
#include "moddef/cochain.hpp"
#include "moddef/limits.hpp"
#include "moddef/linalg.hpp"

namespace moddef {

struct CohomologyReport {
    std::size_t degree = 0;
    std::size_t dim_cocycles = 0;
    std::size_t dim_coboundaries = 0;
    std::size_t dim_cohomology = 0;
    /// Cocycles spanning a complement of the coboundaries: the kernel basis
    /// vectors of d_n that are pivots after the image of d_{n-1}.
    std::vector<Cochain> representatives;
};

/// The Hochschild complex Hom_k(R^{(x)*}, End(M)) of a validated module.
///
/// d_n f(a_0,...,a_n) = a_0 f(a_1,...,a_n)
///                    + sum_{i=1..n} (-1)^i f(a_0,...,a_{i-1} a_i,...,a_n)
///                    + (-1)^{n+1} f(a_0,...,a_{n-1}) a_n
///
/// Construction validates the algebra and module axioms and the dimension
/// guardrails. Instances are safe to share between threads.
class HochschildComplex {
public:
    explicit HochschildComplex(Module m, Limits limits = {});

    const Module& module() const noexcept { return module_; }
    const Field& field() const noexcept { return module_.field(); }
    const Limits& limits() const noexcept { return limits_; }

    Cochain zero_cochain(std::size_t degree) const { return Cochain::zero(module_, degree); }

    /// Evaluates the differential tuple by tuple without assembling a matrix.
    Cochain differential(const Cochain& f) const;

    /// d_n as a (d_R^{n+1} d_M^2) x (d_R^n d_M^2) matrix in the flattened
    /// coordinate order. Throws ResourceError past the degree cap or the
    /// matrix-entry guardrail.
    const Matrix& differential_matrix(std::size_t n) const;

    bool is_cocycle(const Cochain& f) const;

    /// The canonical g (free variables zero) with d g = f, if any.
    std::optional<Cochain> coboundary_witness(const Cochain& f) const;

    CohomologyReport cohomology(std::size_t n) const;

    /// Throws InputError unless `f` lives in this complex.
    void require_compatible(const Cochain& f, const char* what = "cochain") const;

private:
    void check_matrix_size(std::size_t n) const;

    Module module_;
    Limits limits_;
    mutable std::mutex cache_mutex_;
    mutable std::map<std::size_t, std::unique_ptr<Matrix>> matrices_;
};

}  // namespace moddef
