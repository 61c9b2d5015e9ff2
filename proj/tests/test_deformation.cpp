#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "moddef/deformation.hpp"
#include "moddef/errors.hpp"
#include "moddef/fixtures.hpp"
#include "support/generators.hpp"

using namespace moddef;

namespace {

Cochain one_term(const HochschildComplex& c, std::size_t i, const Matrix& value) {
    Cochain f = c.zero_cochain(1);
    f.set({i}, value);
    return f;
}

// xi_t(e_i) as a list of coefficient matrices, xi_0 = rho(e_i)
std::vector<Matrix> series(const Module& m, const ApproximateDeformation& d, std::size_t i) {
    std::vector<Matrix> out{m.action(i)};
    for (const auto& term : d.terms) out.push_back(term.at({i}));
    return out;
}

// Independent check that xi_t(e_i) xi_t(e_j) = xi_t(e_i e_j) mod t^{m+1},
// expanding xi_t(e_i e_j) through the structure constants.
bool multiplicative(const Module& m, const ApproximateDeformation& d) {
    const Algebra& a = m.algebra();
    const std::size_t order = d.order();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            auto si = series(m, d, i);
            auto sj = series(m, d, j);
            for (std::size_t n = 0; n <= order; ++n) {
                Matrix lhs(m.field(), m.dim(), m.dim());
                for (std::size_t k = 0; k < a.dim(); ++k) lhs.add_scaled(a.coefficient(i, j, k), series(m, d, k)[n]);
                Matrix rhs(m.field(), m.dim(), m.dim());
                for (std::size_t p = 0; p <= n; ++p) rhs += si[p] * sj[n - p];
                if (!(lhs == rhs)) return false;
            }
        }
    return true;
}

FormalAutomorphism automorphism(std::vector<Matrix> terms) { return FormalAutomorphism{std::move(terms)}; }

}  // namespace

TEST_CASE("check_deformation on fixture A") {
    Field q;
    HochschildComplex a(fixtures::fixture_a(q));
    Cochain sigma = one_term(a, 1, Matrix::from_ints(q, {{1}}));
    ApproximateDeformation first{{sigma}};
    CHECK_FALSE(check_deformation(a, first));
    ApproximateDeformation second{{sigma, a.zero_cochain(1)}};
    auto n = check_deformation(a, second);
    REQUIRE(n);
    CHECK(*n == 2);
    CHECK_FALSE(multiplicative(a.module(), second));

    ApproximateDeformation not_cocycle{{one_term(a, 0, Matrix::from_ints(q, {{1}}))}};
    REQUIRE(check_deformation(a, not_cocycle));
    CHECK(*check_deformation(a, not_cocycle) == 1);

    ApproximateDeformation trivial{};
    CHECK_FALSE(check_deformation(a, trivial));

    ApproximateDeformation wrong_degree{{a.zero_cochain(2)}};
    CHECK_THROWS_AS(check_deformation(a, wrong_degree), InputError);
}

TEST_CASE("check_deformation agrees with the direct expansion") {
    gen::Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Module m = gen::random_module(rng);
        HochschildComplex c(m);
        ApproximateDeformation d;
        const auto order = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
        if (trial % 3 == 0) {
            d = gen::random_deformation(rng, c, order);
        } else {
            for (std::size_t i = 0; i < order; ++i) d.terms.push_back(gen::random_cochain(rng, m, 1, 0.3));
        }
        CHECK(!check_deformation(c, d) == multiplicative(m, d));
    }
}

TEST_CASE("infinitesimal") {
    Field q;
    HochschildComplex c(fixtures::fixture_c(q));
    Matrix sigma = Matrix::from_ints(q, {{1, 0}, {0, -1}});
    ApproximateDeformation d{{c.zero_cochain(1), one_term(c, 1, sigma)}};
    REQUIRE_FALSE(check_deformation(c, d));
    auto inf = infinitesimal(c, d);
    REQUIRE(inf);
    CHECK(inf->index == 2);
    CHECK(inf->term.at({1}) == sigma);
    CHECK(c.is_cocycle(inf->term));

    ApproximateDeformation zero{{c.zero_cochain(1), c.zero_cochain(1)}};
    CHECK_FALSE(infinitesimal(c, zero));

    gen::Rng rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        Module m = gen::random_module(rng);
        HochschildComplex h(m);
        auto r = gen::random_deformation(rng, h, 3);
        if (auto l = infinitesimal(h, r)) CHECK(h.is_cocycle(l->term));
    }
}

TEST_CASE("obstructions in closed form") {
    Field q;
    HochschildComplex a(fixtures::fixture_a(q));
    ApproximateDeformation d{{one_term(a, 1, Matrix::from_ints(q, {{1}}))}};
    Cochain obs = obstruction(a, d);
    REQUIRE(obs.entries().size() == 1);
    CHECK(obs.at({1, 1}) == Matrix::from_ints(q, {{1}}));
    auto ext = extend_once(a, d);
    CHECK_FALSE(ext.outcome.class_is_zero());
    CHECK_FALSE(ext.extended);
    CHECK(ext.outcome.obstruction == obs);

    HochschildComplex c(fixtures::fixture_c(q));
    Matrix sigma = Matrix::from_ints(q, {{1, 0}, {0, -1}});
    ApproximateDeformation dc{{one_term(c, 1, sigma)}};
    Cochain oc = obstruction(c, dc);
    CHECK(oc.at({1, 1}) == Matrix::identity(q, 2));
    CHECK(oc.entries().size() == 1);
    auto step = extend_once(c, dc);
    REQUIRE(step.extended);
    CHECK(step.extended->order() == 2);
    CHECK(step.extended->terms[1].at({1}) == Matrix::from_ints(q, {{0, 0}, {-1, 0}}));
    CHECK(c.differential(*step.outcome.witness) == -oc);

    CHECK(obstruction(c, ApproximateDeformation{}).is_zero());
    CHECK(obstruction(c, ApproximateDeformation{}).degree() == 2);
}

TEST_CASE("obstructions are cocycles") {
    gen::Rng rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        Module m = gen::random_module(rng);
        if (m.algebra().dim() > 3) continue;
        HochschildComplex c(m);
        auto d = gen::random_deformation(rng, c, static_cast<std::size_t>(gen::uniform(rng, 1, 3)));
        Cochain obs = obstruction(c, d);
        CHECK(c.is_cocycle(obs));
        auto ext = extend_once(c, d);
        CHECK(ext.outcome.class_is_zero() == c.coboundary_witness(-obs).has_value());
        if (ext.extended) {
            CHECK_FALSE(check_deformation(c, *ext.extended));
            CHECK(ext.extended->order() == d.order() + 1);
        }
    }
}

TEST_CASE("integrate fixture C matches the closed form") {
    Field q;
    HochschildComplex c(fixtures::fixture_c(q));
    Matrix sigma = Matrix::from_ints(q, {{1, 0}, {0, -1}});
    auto r = integrate(c, one_term(c, 1, sigma), 10);
    REQUIRE(r.integrated());
    REQUIRE(r.deformation.order() == 10);
    CHECK(r.deformation.terms[0].at({1}) == sigma);
    CHECK(r.deformation.terms[1].at({1}) == Matrix::from_ints(q, {{0, 0}, {-1, 0}}));
    for (std::size_t n = 2; n < 10; ++n) CHECK(r.deformation.terms[n].is_zero());
    for (const auto& term : r.deformation.terms) CHECK(term.at({0}).is_zero());
    CHECK(multiplicative(c.module(), r.deformation));
}

TEST_CASE("integrate reports the first obstruction") {
    Field q;
    HochschildComplex a(fixtures::fixture_a(q));
    auto r = integrate(a, one_term(a, 1, Matrix::from_ints(q, {{1}})), 5);
    CHECK_FALSE(r.integrated());
    CHECK(r.deformation.order() == 1);
    REQUIRE(r.failure);
    CHECK(r.failure->obstruction.at({1, 1}) == Matrix::from_ints(q, {{1}}));
    CHECK_FALSE(r.failure->witness);

    CHECK_THROWS_AS(integrate(a, one_term(a, 0, Matrix::from_ints(q, {{1}})), 3), InputError);
    CHECK_THROWS_AS(integrate(a, a.zero_cochain(1), 0), InputError);
    CHECK_THROWS_AS(integrate(a, a.zero_cochain(2), 2), InputError);
    CHECK_THROWS_AS(integrate(a, a.zero_cochain(1), 17), ResourceError);
    auto zero = integrate(a, a.zero_cochain(1), 4);
    CHECK(zero.integrated());
    CHECK(zero.deformation.order() == 4);
}

TEST_CASE("integrated deformations are valid") {
    gen::Rng rng(14);
    for (int trial = 0; trial < 20; ++trial) {
        Module m = gen::random_module(rng);
        HochschildComplex c(m);
        Cochain sigma = gen::random_cocycle(rng, c);
        auto r = integrate(c, sigma, 4);
        CHECK_FALSE(check_deformation(c, r.deformation));
        CHECK(multiplicative(m, r.deformation));
        if (r.deformation.order() > 0) CHECK(r.deformation.terms[0] == sigma);
        CHECK((r.integrated() == (r.deformation.order() == 4)));
    }
}

TEST_CASE("formal automorphism inverse and product") {
    Field q;
    Module m = fixtures::fixture_c(q);
    FormalAutomorphism phi = automorphism({Matrix::from_ints(q, {{0, 1}, {0, 0}}), Matrix(q, 2, 2)});
    FormalAutomorphism psi = invert(phi);
    // (1 + tN)^{-1} = 1 - tN + t^2 N^2 = 1 - tN
    CHECK(psi.terms[0] == Matrix::from_ints(q, {{0, -1}, {0, 0}}));
    CHECK(psi.terms[1].is_zero());

    gen::Rng rng(15);
    for (int trial = 0; trial < 20; ++trial) {
        Module mod = gen::random_module(rng);
        const auto order = static_cast<std::size_t>(gen::uniform(rng, 1, 4));
        auto a = gen::random_automorphism(rng, mod, order);
        auto b = gen::random_automorphism(rng, mod, order);
        auto e = gen::random_automorphism(rng, mod, order);
        CHECK(multiply(a, invert(a)) == FormalAutomorphism::identity(mod, order));
        CHECK(multiply(invert(a), a) == FormalAutomorphism::identity(mod, order));
        CHECK(multiply(multiply(a, b), e) == multiply(a, multiply(b, e)));
        CHECK(multiply(a, FormalAutomorphism::identity(mod, order)) == a);
        CHECK(invert(multiply(a, b)) == multiply(invert(b), invert(a)));
    }
}

TEST_CASE("conjugation") {
    Field q;
    HochschildComplex c(fixtures::fixture_c(q));
    auto d = integrate(c, one_term(c, 1, Matrix::from_ints(q, {{1, 0}, {0, -1}})), 3).deformation;
    CHECK(conjugate(c, FormalAutomorphism::identity(c.module(), 3), d) == d);
    CHECK(conjugate(c, FormalAutomorphism::identity(c.module(), 2), d).order() == 2);

    gen::Rng rng(16);
    for (int trial = 0; trial < 20; ++trial) {
        Module m = gen::random_module(rng);
        HochschildComplex h(m);
        auto x = gen::random_deformation(rng, h, 3);
        if (x.order() == 0) continue;
        const std::size_t order = x.order();
        auto phi = gen::random_automorphism(rng, m, order);
        auto psi = gen::random_automorphism(rng, m, order);
        auto y = conjugate(h, phi, x);
        CHECK_FALSE(check_deformation(h, y));
        CHECK(conjugate(h, invert(phi), y) == x);
        CHECK(conjugate(h, phi, conjugate(h, psi, x)) == conjugate(h, multiply(psi, phi), x));
        // first term moves by d_0(phi_1)
        CHECK(y.terms[0] == x.terms[0] + h.differential(Cochain::constant(m, phi.terms[0])));
    }
}

TEST_CASE("normalize") {
    Field q;
    HochschildComplex a(fixtures::fixture_a(q));
    ApproximateDeformation da{{one_term(a, 1, Matrix::from_ints(q, {{1}}))}};
    auto na = normalize(a, da);
    REQUIRE(na.leading_index);
    CHECK(*na.leading_index == 1);
    CHECK(na.normalized == da);

    HochschildComplex c(fixtures::fixture_c(q));
    auto dc = integrate(c, one_term(c, 1, Matrix::from_ints(q, {{1, 0}, {0, -1}})), 10).deformation;
    auto nc = normalize(c, dc);
    CHECK_FALSE(nc.leading_index);
    for (const auto& term : nc.normalized.terms) CHECK(term.is_zero());
    CHECK(nc.automorphism.order() == 10);
    CHECK(conjugate(c, nc.automorphism, dc) == nc.normalized);

    gen::Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        Module m = gen::random_module(rng);
        HochschildComplex h(m);
        auto x = gen::random_deformation(rng, h, 3);
        auto r = normalize(h, x);
        CHECK(conjugate(h, r.automorphism, x) == r.normalized);
        CHECK_FALSE(check_deformation(h, r.normalized));
        if (r.leading_index) {
            const std::size_t l = *r.leading_index;
            for (std::size_t i = 0; i + 1 < l; ++i) CHECK(r.normalized.terms[i].is_zero());
            CHECK_FALSE(h.coboundary_witness(r.normalized.terms[l - 1]));
        } else {
            for (const auto& term : r.normalized.terms) CHECK(term.is_zero());
        }
    }
}

TEST_CASE("equivalent_one_step") {
    Field q;
    HochschildComplex a(fixtures::fixture_a(q));
    ApproximateDeformation zero{{a.zero_cochain(1)}};
    ApproximateDeformation sigma{{one_term(a, 1, Matrix::from_ints(q, {{1}}))}};
    CHECK_FALSE(equivalent_one_step(a, zero, sigma));

    HochschildComplex c(fixtures::fixture_c(q));
    ApproximateDeformation z{{c.zero_cochain(1)}};
    ApproximateDeformation s{{one_term(c, 1, Matrix::from_ints(q, {{1, 0}, {0, -1}}))}};
    auto phi = equivalent_one_step(c, z, s);
    REQUIRE(phi);
    CHECK(phi->order() == 1);
    CHECK(phi->terms[0] == Matrix::from_ints(q, {{0, 0}, {1, 0}}));
    CHECK(conjugate(c, *phi, z) == s);

    ApproximateDeformation longer{{c.zero_cochain(1), c.zero_cochain(1)}};
    CHECK_THROWS_AS(equivalent_one_step(c, z, longer), InputError);
    ApproximateDeformation other_prefix{{s.terms[0], c.zero_cochain(1)}};
    ApproximateDeformation zero_prefix{{c.zero_cochain(1), c.zero_cochain(1)}};
    CHECK_THROWS_AS(equivalent_one_step(c, other_prefix, zero_prefix), InputError);

    gen::Rng rng(18);
    int checked = 0;
    for (int trial = 0; trial < 30; ++trial) {
        Module m = gen::random_module(rng);
        HochschildComplex h(m);
        auto base = gen::random_deformation(rng, h, 2);
        auto first = extend_once(h, base);
        if (!first.extended) continue;
        ApproximateDeformation second = *first.extended;
        second.terms.back() += gen::random_coboundary(rng, h);
        auto step = equivalent_one_step(h, *first.extended, second);
        REQUIRE(step);
        CHECK(conjugate(h, *step, *first.extended) == second);
        for (std::size_t i = 0; i + 1 < step->order(); ++i) CHECK(step->terms[i].is_zero());
        ++checked;
    }
    CHECK(checked > 0);
}

TEST_CASE("rigidity") {
    CHECK(rigidity_check(HochschildComplex(fixtures::fixture_a())).verdict == Rigidity::inconclusive);
    CHECK(rigidity_check(HochschildComplex(fixtures::fixture_b())).verdict == Rigidity::certified);
    CHECK(rigidity_check(HochschildComplex(fixtures::fixture_c())).verdict == Rigidity::certified);
    auto r = rigidity_check(HochschildComplex(fixtures::fixture_a()));
    CHECK(r.first_cohomology.dim_cohomology == 1);
}

TEST_CASE("prime field deformations") {
    Field f = Field::prime(7);
    HochschildComplex c(fixtures::fixture_c(f));
    auto r = integrate(c, one_term(c, 1, Matrix::from_ints(f, {{1, 0}, {0, -1}})), 6);
    REQUIRE(r.integrated());
    CHECK(r.deformation.terms[1].at({1}) == Matrix::from_ints(f, {{0, 0}, {6, 0}}));
    CHECK(multiplicative(c.module(), r.deformation));
}
