#include "moddef/algebra.hpp"

#include "moddef/errors.hpp"

namespace moddef {

namespace {

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

Vector basis_vector(const Field& field, std::size_t dim, std::size_t i) {
    Vector v(dim, field.zero());
    v[i] = field.one();
    return v;
}

// Expands sum_l u_l (e_l e_k) for a coordinate vector u.
Vector times_basis(const Algebra& a, std::span<const Scalar> u, std::size_t k) {
    Vector out(a.dim(), a.field().zero());
    for (std::size_t l = 0; l < a.dim(); ++l) {
        if (u[l].is_zero()) continue;
        for (std::size_t m = 0; m < a.dim(); ++m) out[m] += u[l] * a.coefficient(l, k, m);
    }
    return out;
}

Vector basis_times(const Algebra& a, std::size_t i, std::span<const Scalar> u) {
    Vector out(a.dim(), a.field().zero());
    for (std::size_t l = 0; l < a.dim(); ++l) {
        if (u[l].is_zero()) continue;
        for (std::size_t m = 0; m < a.dim(); ++m) out[m] += u[l] * a.coefficient(i, l, m);
    }
    return out;
}

}  // namespace

Algebra::Algebra(Field field, std::vector<std::string> labels, std::vector<std::vector<Vector>> structure,
                 Vector unit)
    : field_(field), labels_(std::move(labels)), structure_(std::move(structure)), unit_(std::move(unit)) {
    const std::size_t d = structure_.size();
    if (d == 0) throw InputError("algebra must have positive dimension", "algebra.structure");
    for (std::size_t i = 0; i < d; ++i) {
        if (structure_[i].size() != d)
            throw InputError("expected " + std::to_string(d) + " products, found " +
                                 std::to_string(structure_[i].size()),
                             "algebra.structure[" + std::to_string(i) + "]");
        for (std::size_t j = 0; j < d; ++j)
            if (structure_[i][j].size() != d)
                throw InputError("expected a coordinate vector of length " + std::to_string(d),
                                 "algebra.structure[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }
    if (unit_.size() != d) throw InputError("expected length " + std::to_string(d), "algebra.unit");
    if (labels_.empty())
        for (std::size_t i = 0; i < d; ++i) labels_.push_back("e" + std::to_string(i));
    if (labels_.size() != d) throw InputError("expected " + std::to_string(d) + " labels", "algebra.basis");
}

Module::Module(Algebra algebra, std::size_t dim, std::vector<Matrix> action)
    : algebra_(std::move(algebra)), dim_(dim), action_(std::move(action)) {
    if (action_.size() != algebra_.dim())
        throw InputError("expected " + std::to_string(algebra_.dim()) + " action matrices, found " +
                             std::to_string(action_.size()),
                         "module.action");
    for (std::size_t i = 0; i < action_.size(); ++i)
        if (action_[i].rows() != dim_ || action_[i].cols() != dim_ || action_[i].field() != algebra_.field())
            throw InputError("expected a " + std::to_string(dim_) + "x" + std::to_string(dim_) + " matrix",
                             "module.action[" + std::to_string(i) + "]");
}

Matrix Module::act(std::span<const Scalar> coords) const {
    Matrix out(field(), dim_, dim_);
    for (std::size_t i = 0; i < action_.size(); ++i) out.add_scaled(coords[i], action_[i]);
    return out;
}

ValidationReport validate_algebra(const Algebra& a) {
    ValidationReport report;
    const std::size_t d = a.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Vector lhs = times_basis(a, a.product(i, j), k);
                Vector rhs = basis_times(a, i, a.product(j, k));
                if (lhs != rhs)
                    report.violations.push_back({"associativity", {i, j, k},
                                                 "(e_i e_j) e_k != e_i (e_j e_k) for triple " + triple(i, j, k)});
            }
    for (std::size_t i = 0; i < d; ++i) {
        Vector e = basis_vector(a.field(), d, i);
        if (multiply(a, a.unit(), e) != e)
            report.violations.push_back({"left-unit", {i}, "1 * e_" + std::to_string(i) + " != e_" + std::to_string(i)});
        if (multiply(a, e, a.unit()) != e)
            report.violations.push_back({"right-unit", {i}, "e_" + std::to_string(i) + " * 1 != e_" + std::to_string(i)});
    }
    return report;
}

ValidationReport validate_module(const Module& m) {
    ValidationReport report;
    const Algebra& a = m.algebra();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (m.action(i) * m.action(j) != m.act(a.product(i, j)))
                report.violations.push_back({"multiplicativity", {i, j},
                                             "rho(e_" + std::to_string(i) + ") rho(e_" + std::to_string(j) +
                                                 ") != rho(e_" + std::to_string(i) + " e_" + std::to_string(j) + ")"});
    if (m.act(a.unit()) != Matrix::identity(m.field(), m.dim()))
        report.violations.push_back({"unit-action", {}, "the unit does not act as the identity"});
    return report;
}

void require_valid(const Module& m) {
    auto algebra_report = validate_algebra(m.algebra());
    if (!algebra_report.ok()) {
        const auto& v = algebra_report.violations.front();
        throw InputError("invalid algebra: " + v.message, "algebra");
    }
    auto module_report = validate_module(m);
    if (!module_report.ok()) {
        const auto& v = module_report.violations.front();
        throw InputError("invalid module: " + v.message, "module");
    }
}

Vector multiply(const Algebra& a, std::span<const Scalar> u, std::span<const Scalar> v) {
    if (u.size() != a.dim() || v.size() != a.dim())
        throw InputError("multiply: coordinate vectors must have length " + std::to_string(a.dim()));
    Vector out(a.dim(), a.field().zero());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (v[j].is_zero()) continue;
            Scalar w = u[i] * v[j];
            for (std::size_t k = 0; k < a.dim(); ++k)
                if (!a.coefficient(i, j, k).is_zero()) out[k] += w * a.coefficient(i, j, k);
        }
    }
    return out;
}

std::pair<Algebra, Module> enveloping_left_module(const Algebra& a, const BimoduleAction& action) {
    const std::size_t d = a.dim();
    const Field& field = a.field();
    if (action.left.size() != d || action.right.size() != d)
        throw InputError("bimodule needs " + std::to_string(d) + " left and right action matrices");
    for (std::size_t i = 0; i < d; ++i)
        for (const Matrix* m : {&action.left[i], &action.right[i]})
            if (m->rows() != action.dim || m->cols() != action.dim || m->field() != field)
                throw InputError("bimodule action matrices must be " + std::to_string(action.dim) + "x" +
                                 std::to_string(action.dim));

    Module left_part(a, action.dim, action.left);
    auto report = validate_module(left_part);
    if (!report.ok()) throw InputError("invalid left action: " + report.violations.front().message);

    auto right_of = [&](std::span<const Scalar> coords) {
        Matrix out(field, action.dim, action.dim);
        for (std::size_t i = 0; i < d; ++i) out.add_scaled(coords[i], action.right[i]);
        return out;
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            // v (e_i e_j) = (v e_i) e_j
            if (right_of(a.product(i, j)) != action.right[j] * action.right[i])
                throw InputError("invalid right action at pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
            if (action.left[i] * action.right[j] != action.right[j] * action.left[i])
                throw InputError("left and right actions do not commute at pair (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
        }
    if (right_of(a.unit()) != Matrix::identity(field, action.dim))
        throw InputError("the unit does not act as the identity on the right");

    // (e_i (x) e_p)(e_j (x) e_q) = e_i e_j (x) e_q e_p
    std::vector<std::vector<Vector>> structure(d * d, std::vector<Vector>(d * d, Vector(d * d, field.zero())));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t p = 0; p < d; ++p)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t q = 0; q < d; ++q) {
                    Vector& out = structure[i * d + p][j * d + q];
                    for (std::size_t k = 0; k < d; ++k) {
                        const Scalar& left = a.coefficient(i, j, k);
                        if (left.is_zero()) continue;
                        for (std::size_t r = 0; r < d; ++r) out[k * d + r] = left * a.coefficient(q, p, r);
                    }
                }
    Vector unit(d * d, field.zero());
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t p = 0; p < d; ++p) {
            unit[i * d + p] = a.unit()[i] * a.unit()[p];
            labels.push_back(a.labels()[i] + "(x)" + a.labels()[p]);
        }
    Algebra env(field, std::move(labels), std::move(structure), std::move(unit));

    std::vector<Matrix> env_action;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t p = 0; p < d; ++p) env_action.push_back(action.left[i] * action.right[p]);
    Module env_module(env, action.dim, std::move(env_action));
    return {std::move(env), std::move(env_module)};
}

}  // namespace moddef
