#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "moddef/cochain.hpp"
#include "moddef/hochschild.hpp"

namespace moddef {

/// xi_t = xi + t xi_1 + ... + t^m xi_m, truncated at order m. xi_0 is the
/// module action itself and is not stored; `terms[i]` is xi_{i+1}, a degree-1
/// cochain.
struct ApproximateDeformation {
    std::vector<Cochain> terms;

    std::size_t order() const noexcept { return terms.size(); }
    friend bool operator==(const ApproximateDeformation&, const ApproximateDeformation&) = default;
};

/// phi_t = 1 + t phi_1 + ... + t^m phi_m; `terms[i]` is phi_{i+1}.
struct FormalAutomorphism {
    std::vector<Matrix> terms;

    std::size_t order() const noexcept { return terms.size(); }
    static FormalAutomorphism identity(const Module& m, std::size_t order);
    friend bool operator==(const FormalAutomorphism&, const FormalAutomorphism&) = default;
};

/// Obs(xi_t) together with the solution of d_1 w = -Obs(xi_t), when one exists.
struct ObstructionOutcome {
    Cochain obstruction;
    std::optional<Cochain> witness;

    bool class_is_zero() const noexcept { return witness.has_value(); }
};

struct ExtensionResult {
    ObstructionOutcome outcome;
    /// Present iff the obstruction class vanishes.
    std::optional<ApproximateDeformation> extended;
};

struct IntegrationResult {
    /// The deformation reached: order N on success, otherwise the last order
    /// that could not be extended.
    ApproximateDeformation deformation;
    /// Set when extension failed at deformation.order().
    std::optional<ObstructionOutcome> failure;

    bool integrated() const noexcept { return !failure.has_value(); }
};

struct Infinitesimal {
    std::size_t index;  // l >= 1
    Cochain term;       // xi_l, a 1-cocycle
};

struct NormalizationResult {
    ApproximateDeformation normalized;
    FormalAutomorphism automorphism;  // conjugate(automorphism, input) == normalized
    /// Leading index whose term has a nonzero class; empty when every term vanished.
    std::optional<std::size_t> leading_index;
};

/// xi_t evaluated at a basis element: xi_n(e_i), with xi_0(e_i) = rho(e_i).
const Matrix& term_at(const HochschildComplex& c, const ApproximateDeformation& d, std::size_t n, std::size_t i);

/// Smallest n <= order with xi_n(e_i e_j) != sum_{p+q=n} xi_p(e_i) xi_q(e_j)
/// for some basis pair, or empty if the relations hold through the order.
/// Throws InputError for ill-shaped terms.
std::optional<std::size_t> check_deformation(const HochschildComplex& c, const ApproximateDeformation& d);

/// The first nonzero term, which is always a 1-cocycle. Empty when trivial.
std::optional<Infinitesimal> infinitesimal(const HochschildComplex& c, const ApproximateDeformation& d);

/// Obs(xi_t)(a, b) = sum_{i=1..m} xi_i(a) xi_{m+1-i}(b). Zero for order 0.
Cochain obstruction(const HochschildComplex& c, const ApproximateDeformation& d);

/// Extends by one order using the canonical solution of d_1 xi_{m+1} = -Obs.
ExtensionResult extend_once(const HochschildComplex& c, const ApproximateDeformation& d);

/// Extends xi + t sigma order by order up to `target_order`. Throws
/// InputError if sigma is not a 1-cocycle or target_order is 0.
IntegrationResult integrate(const HochschildComplex& c, const Cochain& sigma, std::size_t target_order);

/// psi with phi psi = 1 mod t^{m+1}: psi_n = -sum_{i=1..n} phi_i psi_{n-i}.
FormalAutomorphism invert(const FormalAutomorphism& phi);

/// Truncated product (a b)_n = sum_{i+j=n} a_i b_j at the smaller order.
FormalAutomorphism multiply(const FormalAutomorphism& a, const FormalAutomorphism& b);

/// phi_t^{-1} xi_t phi_t truncated at min(order(phi), order(d)).
ApproximateDeformation conjugate(const HochschildComplex& c, const FormalAutomorphism& phi,
                                 const ApproximateDeformation& d);

/// Repeatedly removes a leading term that is a coboundary d_0(phi_l) by
/// conjugating with 1 - t^l phi_l.
NormalizationResult normalize(const HochschildComplex& c, const ApproximateDeformation& d);

/// For two order-(m+1) extensions of a common order-m deformation, returns
/// phi_t = 1 + t^{m+1} phi when d_0(phi) = xi''_{m+1} - xi'_{m+1}; empty when
/// the difference is not a coboundary. Only this sufficient condition is
/// tested. Throws InputError if the common prefix differs.
std::optional<FormalAutomorphism> equivalent_one_step(const HochschildComplex& c, const ApproximateDeformation& first,
                                                      const ApproximateDeformation& second);

enum class Rigidity { certified, inconclusive };

struct RigidityResult {
    Rigidity verdict;
    CohomologyReport first_cohomology;
};

/// Certified rigid iff H^1(R, End(M)) = 0. Nonvanishing H^1 is inconclusive.
RigidityResult rigidity_check(const HochschildComplex& c);

}  // namespace moddef
