#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "moddef/matrix.hpp"

namespace moddef {

/// Finite-dimensional associative unital algebra given by structure
/// constants: e_i e_j = sum_k c[i][j][k] e_k. Basis labels are cosmetic.
class Algebra {
public:
    Algebra() = default;
    /// Checks shapes only (InputError on mismatch); the axioms are checked by
    /// validate_algebra.
    Algebra(Field field, std::vector<std::string> labels, std::vector<std::vector<Vector>> structure,
            Vector unit);

    const Field& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return structure_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const Vector& product(std::size_t i, std::size_t j) const { return structure_[i][j]; }
    const Scalar& coefficient(std::size_t i, std::size_t j, std::size_t k) const { return structure_[i][j][k]; }
    const Vector& unit() const noexcept { return unit_; }
    const std::vector<std::vector<Vector>>& structure() const noexcept { return structure_; }

    friend bool operator==(const Algebra&, const Algebra&) = default;

private:
    Field field_;
    std::vector<std::string> labels_;
    std::vector<std::vector<Vector>> structure_;
    Vector unit_;
};

/// Left module over an Algebra, stored as the action matrices rho(e_i).
/// Equivalently the algebra map xi: R -> End(M), xi(r)(m) = rm.
class Module {
public:
    Module() = default;
    /// Checks shapes only; the axioms are checked by validate_module.
    Module(Algebra algebra, std::size_t dim, std::vector<Matrix> action);

    const Algebra& algebra() const noexcept { return algebra_; }
    const Field& field() const noexcept { return algebra_.field(); }
    std::size_t dim() const noexcept { return dim_; }
    const Matrix& action(std::size_t i) const { return action_[i]; }
    const std::vector<Matrix>& actions() const noexcept { return action_; }

    /// rho(r) for r given in coordinates.
    Matrix act(std::span<const Scalar> coords) const;

    friend bool operator==(const Module&, const Module&) = default;

private:
    Algebra algebra_;
    std::size_t dim_ = 0;
    std::vector<Matrix> action_;
};

struct Violation {
    std::string kind;                  // "associativity", "left-unit", "right-unit", "multiplicativity", "unit-action"
    std::vector<std::size_t> indices;  // basis indices naming the failure
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const noexcept { return violations.empty(); }
};

/// Lists every associativity triple (i,j,k) with (e_i e_j) e_k != e_i (e_j e_k)
/// and every basis index where a unit law fails.
ValidationReport validate_algebra(const Algebra& a);

/// Lists every pair (i,j) with rho(e_i) rho(e_j) != rho(e_i e_j), and the unit
/// failure if the unit does not act as the identity. Algebra axioms are not
/// rechecked here.
ValidationReport validate_module(const Module& m);

/// Throws InputError naming the first algebra or module axiom violation.
void require_valid(const Module& m);

/// sum_{i,j} u_i v_j e_i e_j. Throws InputError on length mismatch.
Vector multiply(const Algebra& a, std::span<const Scalar> u, std::span<const Scalar> v);

/// End(M) as an R-R-bimodule: (r g s)(m) = r g(s m).
class EndBimodule {
public:
    explicit EndBimodule(const Module& m) : module_(&m) {}

    /// g -> rho(e_i) g
    Matrix left(std::size_t i, const Matrix& g) const { return module_->action(i) * g; }
    /// g -> g rho(e_i)
    Matrix right(const Matrix& g, std::size_t i) const { return g * module_->action(i); }

private:
    const Module* module_;
};

/// Two commuting actions of R on one space: left[i] is v -> e_i v and
/// right[i] is v -> v e_i.
struct BimoduleAction {
    std::size_t dim = 0;
    std::vector<Matrix> left;
    std::vector<Matrix> right;
};

/// Converts an R-R-bimodule into a left module over R (x) R^op via
/// (r (x) s) m = r m s. The enveloping algebra has basis e_i (x) e_p at index
/// i * dim(R) + p. Throws InputError if the input is not a valid bimodule.
std::pair<Algebra, Module> enveloping_left_module(const Algebra& a, const BimoduleAction& action);

}  // namespace moddef
