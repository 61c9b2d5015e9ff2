#include "moddef/deformation.hpp"

#include <algorithm>
#include <string>

#include "moddef/errors.hpp"

namespace moddef {

namespace {

void require_terms(const HochschildComplex& c, const ApproximateDeformation& d) {
    for (std::size_t i = 0; i < d.terms.size(); ++i) {
        const std::string what = "deformation term " + std::to_string(i + 1);
        c.require_compatible(d.terms[i], what.c_str());
        if (d.terms[i].degree() != 1) throw InputError(what + " must be a degree-1 cochain");
    }
}

void require_terms(const HochschildComplex& c, const FormalAutomorphism& phi) {
    const std::size_t dm = c.module().dim();
    for (std::size_t i = 0; i < phi.terms.size(); ++i)
        if (phi.terms[i].rows() != dm || phi.terms[i].cols() != dm || phi.terms[i].field() != c.field())
            throw InputError("automorphism term " + std::to_string(i + 1) + " must be a " + std::to_string(dm) + "x" +
                             std::to_string(dm) + " matrix over " + c.field().name());
}

}  // namespace

FormalAutomorphism FormalAutomorphism::identity(const Module& m, std::size_t order) {
    return {std::vector<Matrix>(order, Matrix(m.field(), m.dim(), m.dim()))};
}

const Matrix& term_at(const HochschildComplex& c, const ApproximateDeformation& d, std::size_t n, std::size_t i) {
    return n == 0 ? c.module().action(i) : d.terms[n - 1].at({i});
}

std::optional<std::size_t> check_deformation(const HochschildComplex& c, const ApproximateDeformation& d) {
    require_terms(c, d);
    const Algebra& alg = c.module().algebra();
    const std::size_t dm = c.module().dim();
    for (std::size_t n = 0; n <= d.order(); ++n)
        for (std::size_t i = 0; i < alg.dim(); ++i)
            for (std::size_t j = 0; j < alg.dim(); ++j) {
                Matrix lhs(c.field(), dm, dm);
                const Vector& product = alg.product(i, j);
                for (std::size_t k = 0; k < alg.dim(); ++k) lhs.add_scaled(product[k], term_at(c, d, n, k));
                Matrix rhs(c.field(), dm, dm);
                for (std::size_t p = 0; p <= n; ++p) {
                    const Matrix& a = term_at(c, d, p, i);
                    const Matrix& b = term_at(c, d, n - p, j);
                    if (!a.is_zero() && !b.is_zero()) rhs += a * b;
                }
                if (lhs != rhs) return n;
            }
    return std::nullopt;
}

std::optional<Infinitesimal> infinitesimal(const HochschildComplex& c, const ApproximateDeformation& d) {
    require_terms(c, d);
    for (std::size_t l = 1; l <= d.order(); ++l)
        if (!d.terms[l - 1].is_zero()) return Infinitesimal{l, d.terms[l - 1]};
    return std::nullopt;
}

Cochain obstruction(const HochschildComplex& c, const ApproximateDeformation& d) {
    require_terms(c, d);
    const std::size_t m = d.order();
    const std::size_t dr = c.module().algebra().dim();
    Cochain obs = c.zero_cochain(2);
    const Scalar one = c.field().one();
    for (std::size_t a = 0; a < dr; ++a)
        for (std::size_t b = 0; b < dr; ++b)
            for (std::size_t i = 1; i <= m; ++i) {
                const Matrix& left = d.terms[i - 1].at({a});
                const Matrix& right = d.terms[m - i].at({b});
                if (!left.is_zero() && !right.is_zero()) obs.add({a, b}, one, left * right);
            }
    return obs;
}

ExtensionResult extend_once(const HochschildComplex& c, const ApproximateDeformation& d) {
    ExtensionResult result;
    result.outcome.obstruction = obstruction(c, d);
    // d_1 xi_{m+1} + Obs = 0
    result.outcome.witness = c.coboundary_witness(-result.outcome.obstruction);
    if (result.outcome.witness) {
        ApproximateDeformation next = d;
        next.terms.push_back(*result.outcome.witness);
        result.extended = std::move(next);
    }
    return result;
}

IntegrationResult integrate(const HochschildComplex& c, const Cochain& sigma, std::size_t target_order) {
    c.require_compatible(sigma, "seed cochain");
    if (sigma.degree() != 1) throw InputError("the seed must be a degree-1 cochain");
    if (target_order == 0) throw InputError("target order must be at least 1");
    if (target_order > c.limits().max_order)
        throw ResourceError("target order " + std::to_string(target_order) + " exceeds the guardrail " +
                            std::to_string(c.limits().max_order));
    if (!c.is_cocycle(sigma)) throw InputError("the seed is not a 1-cocycle");

    IntegrationResult result;
    result.deformation.terms.push_back(sigma);
    while (result.deformation.order() < target_order) {
        auto step = extend_once(c, result.deformation);
        if (!step.extended) {
            result.failure = std::move(step.outcome);
            break;
        }
        result.deformation = std::move(*step.extended);
    }
    return result;
}

FormalAutomorphism invert(const FormalAutomorphism& phi) {
    FormalAutomorphism psi;
    const std::size_t m = phi.order();
    if (m == 0) return psi;
    const Field& field = phi.terms.front().field();
    const std::size_t dim = phi.terms.front().rows();
    for (std::size_t n = 1; n <= m; ++n) {
        Matrix acc(field, dim, dim);
        for (std::size_t i = 1; i <= n; ++i) {
            const Matrix& a = phi.terms[i - 1];
            if (a.is_zero()) continue;
            acc -= (n == i) ? a : a * psi.terms[n - i - 1];
        }
        psi.terms.push_back(std::move(acc));
    }
    return psi;
}

FormalAutomorphism multiply(const FormalAutomorphism& a, const FormalAutomorphism& b) {
    const std::size_t m = std::min(a.order(), b.order());
    FormalAutomorphism out;
    for (std::size_t n = 1; n <= m; ++n) {
        Matrix acc = a.terms[n - 1] + b.terms[n - 1];
        for (std::size_t i = 1; i < n; ++i) {
            const Matrix& left = a.terms[i - 1];
            const Matrix& right = b.terms[n - i - 1];
            if (!left.is_zero() && !right.is_zero()) acc += left * right;
        }
        out.terms.push_back(std::move(acc));
    }
    return out;
}

ApproximateDeformation conjugate(const HochschildComplex& c, const FormalAutomorphism& phi,
                                 const ApproximateDeformation& d) {
    require_terms(c, d);
    require_terms(c, phi);
    const std::size_t m = std::min(phi.order(), d.order());
    const Field& field = c.field();
    const std::size_t dm = c.module().dim();
    const std::size_t dr = c.module().algebra().dim();
    FormalAutomorphism truncated{std::vector<Matrix>(phi.terms.begin(), phi.terms.begin() + static_cast<std::ptrdiff_t>(m))};
    FormalAutomorphism psi = invert(truncated);

    ApproximateDeformation out;
    for (std::size_t n = 1; n <= m; ++n) {
        Cochain term = c.zero_cochain(1);
        for (std::size_t a = 0; a < dr; ++a) {
            Matrix acc(field, dm, dm);
            for (std::size_t j = 0; j <= n; ++j) {
                const Matrix& xi = term_at(c, d, j, a);
                if (xi.is_zero()) continue;
                for (std::size_t i = 0; i + j <= n; ++i) {
                    const std::size_t k = n - i - j;
                    if ((i > 0 && psi.terms[i - 1].is_zero()) || (k > 0 && truncated.terms[k - 1].is_zero())) continue;
                    Matrix left = i == 0 ? xi : psi.terms[i - 1] * xi;
                    acc += k == 0 ? left : left * truncated.terms[k - 1];
                }
            }
            term.set({a}, std::move(acc));
        }
        out.terms.push_back(std::move(term));
    }
    return out;
}

NormalizationResult normalize(const HochschildComplex& c, const ApproximateDeformation& d) {
    require_terms(c, d);
    NormalizationResult result{d, FormalAutomorphism::identity(c.module(), d.order()), std::nullopt};
    // Each successful step zeroes the leading term, so l strictly increases.
    while (auto lead = infinitesimal(c, result.normalized)) {
        auto witness = c.coboundary_witness(lead->term);
        if (!witness) {
            result.leading_index = lead->index;
            break;
        }
        FormalAutomorphism step = FormalAutomorphism::identity(c.module(), d.order());
        step.terms[lead->index - 1] = -witness->at({});
        result.normalized = conjugate(c, step, result.normalized);
        result.automorphism = multiply(result.automorphism, step);
    }
    return result;
}

std::optional<FormalAutomorphism> equivalent_one_step(const HochschildComplex& c, const ApproximateDeformation& first,
                                                      const ApproximateDeformation& second) {
    require_terms(c, first);
    require_terms(c, second);
    if (first.order() != second.order() || first.order() == 0)
        throw InputError("equivalence step needs two deformations of the same positive order");
    const std::size_t top = first.order();
    for (std::size_t i = 0; i + 1 < top; ++i)
        if (first.terms[i] != second.terms[i])
            throw InputError("deformations differ at term " + std::to_string(i + 1) +
                             "; they must extend a common lower-order deformation");
    if (auto bad = check_deformation(c, first))
        throw InputError("first deformation violates the multiplicativity relation at order " + std::to_string(*bad));
    if (auto bad = check_deformation(c, second))
        throw InputError("second deformation violates the multiplicativity relation at order " + std::to_string(*bad));

    Cochain difference = second.terms.back() - first.terms.back();
    auto witness = c.coboundary_witness(difference);
    if (!witness) return std::nullopt;
    FormalAutomorphism phi = FormalAutomorphism::identity(c.module(), top);
    phi.terms.back() = witness->at({});
    return phi;
}

RigidityResult rigidity_check(const HochschildComplex& c) {
    auto report = c.cohomology(1);
    return {report.dim_cohomology == 0 ? Rigidity::certified : Rigidity::inconclusive, std::move(report)};
}

}  // namespace moddef
