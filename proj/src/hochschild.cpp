#include "moddef/hochschild.hpp"

#include <string>

#include "moddef/errors.hpp"

namespace moddef {

namespace {

std::size_t power(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace

HochschildComplex::HochschildComplex(Module m, Limits limits) : module_(std::move(m)), limits_(limits) {
    if (module_.algebra().dim() > limits_.max_algebra_dim)
        throw ResourceError("algebra dimension " + std::to_string(module_.algebra().dim()) + " exceeds the guardrail " +
                            std::to_string(limits_.max_algebra_dim));
    if (module_.dim() > limits_.max_module_dim)
        throw ResourceError("module dimension " + std::to_string(module_.dim()) + " exceeds the guardrail " +
                            std::to_string(limits_.max_module_dim));
    require_valid(module_);
}

void HochschildComplex::require_compatible(const Cochain& f, const char* what) const {
    if (f.field() != field() || f.algebra_dim() != module_.algebra().dim() || f.module_dim() != module_.dim())
        throw InputError(std::string(what) + " does not belong to this module's cochain complex");
}

Cochain HochschildComplex::differential(const Cochain& f) const {
    require_compatible(f);
    const std::size_t n = f.degree();
    if (n + 1 > limits_.max_degree + 1)
        throw ResourceError("differential of degree " + std::to_string(n) + " exceeds the degree cap " +
                            std::to_string(limits_.max_degree));
    const Algebra& alg = module_.algebra();
    const Scalar one = field().one();
    const Scalar minus_one = -one;
    Cochain out = zero_cochain(n + 1);
    if (f.is_zero()) return out;

    for_each_tuple(alg.dim(), n + 1, [&](const Cochain::Tuple& t) {
        Matrix acc(field(), module_.dim(), module_.dim());
        Cochain::Tuple inner(t.begin() + 1, t.end());
        if (const Matrix& v = f.at(inner); !v.is_zero()) acc += module_.action(t[0]) * v;

        for (std::size_t i = 1; i <= n; ++i) {
            const Scalar& sign = (i % 2 == 0) ? one : minus_one;
            Cochain::Tuple merged;
            merged.reserve(n);
            merged.insert(merged.end(), t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i) - 1);
            merged.push_back(0);
            merged.insert(merged.end(), t.begin() + static_cast<std::ptrdiff_t>(i) + 1, t.end());
            const Vector& product = alg.product(t[i - 1], t[i]);
            for (std::size_t k = 0; k < alg.dim(); ++k) {
                if (product[k].is_zero()) continue;
                merged[i - 1] = k;
                const Matrix& v = f.at(merged);
                if (!v.is_zero()) acc.add_scaled(sign * product[k], v);
            }
        }

        Cochain::Tuple head(t.begin(), t.end() - 1);
        if (const Matrix& v = f.at(head); !v.is_zero()) {
            Matrix tail = v * module_.action(t[n]);
            acc.add_scaled((n + 1) % 2 == 0 ? one : minus_one, tail);
        }
        if (!acc.is_zero()) out.set(t, std::move(acc));
    });
    return out;
}

void HochschildComplex::check_matrix_size(std::size_t n) const {
    if (n > limits_.max_degree)
        throw ResourceError("degree " + std::to_string(n) + " exceeds the degree cap " +
                            std::to_string(limits_.max_degree));
    const std::size_t dr = module_.algebra().dim();
    const std::size_t block = module_.dim() * module_.dim();
    const std::size_t rows = power(dr, n + 1) * block;
    const std::size_t cols = power(dr, n) * block;
    if (rows * cols > limits_.max_matrix_entries)
        throw ResourceError("differential matrix d_" + std::to_string(n) + " would be " + std::to_string(rows) + "x" +
                            std::to_string(cols) + " (" + std::to_string(rows * cols) +
                            " entries), above the guardrail of " + std::to_string(limits_.max_matrix_entries));
}

const Matrix& HochschildComplex::differential_matrix(std::size_t n) const {
    check_matrix_size(n);
    std::lock_guard lock(cache_mutex_);
    if (auto it = matrices_.find(n); it != matrices_.end()) return *it->second;

    const Algebra& alg = module_.algebra();
    const std::size_t dr = alg.dim();
    const std::size_t dm = module_.dim();
    const std::size_t block = dm * dm;
    const Scalar one = field().one();
    const Scalar minus_one = -one;
    auto index = [dr](const Cochain::Tuple& t, std::size_t from, std::size_t to) {
        std::size_t idx = 0;
        for (std::size_t i = from; i < to; ++i) idx = idx * dr + t[i];
        return idx;
    };

    auto d = std::make_unique<Matrix>(field(), power(dr, n + 1) * block, power(dr, n) * block);
    std::size_t out_tuple = 0;
    for_each_tuple(dr, n + 1, [&](const Cochain::Tuple& t) {
        const std::size_t row0 = out_tuple++ * block;
        // a_0 f(a_1..a_n): row (r,c) picks up rho(a_0)[r][s] f[s][c]
        const std::size_t first = index(t, 1, n + 1) * block;
        const Matrix& left = module_.action(t[0]);
        for (std::size_t r = 0; r < dm; ++r)
            for (std::size_t s = 0; s < dm; ++s)
                if (!left(r, s).is_zero())
                    for (std::size_t c = 0; c < dm; ++c) (*d)(row0 + r * dm + c, first + s * dm + c) += left(r, s);

        for (std::size_t i = 1; i <= n; ++i) {
            const Scalar& sign = (i % 2 == 0) ? one : minus_one;
            const Vector& product = alg.product(t[i - 1], t[i]);
            for (std::size_t k = 0; k < dr; ++k) {
                if (product[k].is_zero()) continue;
                std::size_t idx = index(t, 0, i - 1);
                idx = idx * dr + k;
                for (std::size_t j = i + 1; j <= n; ++j) idx = idx * dr + t[j];
                Scalar coeff = sign * product[k];
                for (std::size_t e = 0; e < block; ++e) (*d)(row0 + e, idx * block + e) += coeff;
            }
        }

        // (-1)^{n+1} f(a_0..a_{n-1}) a_n: row (r,c) picks up f[r][s] rho(a_n)[s][c]
        const std::size_t last = index(t, 0, n) * block;
        const Matrix& right = module_.action(t[n]);
        const Scalar& sign = ((n + 1) % 2 == 0) ? one : minus_one;
        for (std::size_t s = 0; s < dm; ++s)
            for (std::size_t c = 0; c < dm; ++c)
                if (!right(s, c).is_zero()) {
                    Scalar coeff = sign * right(s, c);
                    for (std::size_t r = 0; r < dm; ++r) (*d)(row0 + r * dm + c, last + r * dm + s) += coeff;
                }
    });
    auto [it, inserted] = matrices_.emplace(n, std::move(d));
    return *it->second;
}

bool HochschildComplex::is_cocycle(const Cochain& f) const { return differential(f).is_zero(); }

std::optional<Cochain> HochschildComplex::coboundary_witness(const Cochain& f) const {
    require_compatible(f);
    if (f.degree() == 0) throw InputError("coboundary witness needs a cochain of degree >= 1");
    const std::size_t n = f.degree() - 1;
    if (f.is_zero()) return zero_cochain(n);
    const Matrix& d = differential_matrix(n);
    auto x = solve_particular(d, f.flatten());
    if (!x) return std::nullopt;
    return Cochain::unflatten(module_, n, *x);
}

CohomologyReport HochschildComplex::cohomology(std::size_t n) const {
    CohomologyReport report;
    report.degree = n;
    const Matrix& dn = differential_matrix(n);
    auto cocycles = kernel_basis(dn);
    report.dim_cocycles = cocycles.size();

    const std::size_t space = dn.cols();
    std::size_t image_cols = 0;
    const Matrix* prev = nullptr;
    if (n > 0) {
        prev = &differential_matrix(n - 1);
        image_cols = prev->cols();
    }
    // Columns: generators of B^n, then the basis of Z^n.
    Matrix combined(field(), space, image_cols + cocycles.size());
    for (std::size_t r = 0; r < space; ++r) {
        for (std::size_t c = 0; c < image_cols; ++c) combined(r, c) = (*prev)(r, c);
        for (std::size_t j = 0; j < cocycles.size(); ++j) combined(r, image_cols + j) = cocycles[j][r];
    }
    auto echelon = rref(std::move(combined));
    for (auto p : echelon.pivots) {
        if (p < image_cols)
            ++report.dim_coboundaries;
        else
            report.representatives.push_back(Cochain::unflatten(module_, n, cocycles[p - image_cols]));
    }
    report.dim_cohomology = report.dim_cocycles - report.dim_coboundaries;
    return report;
}

}  // namespace moddef
