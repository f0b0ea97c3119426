#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cayleyq/field.hpp"
#include "cayleyq/matrix.hpp"
#include "cayleyq/quadspace.hpp"

namespace cayleyq {

// N = { sigma in SO(V) : |x - sigma(x)| infinitesimal for all unit x } for the
// identity form. Membership is decided by the finite criterion
// frob_sq(I - sigma) infinitesimal: frob_sq(I - sigma) = sum_i |e_i - sigma e_i|^2,
// and |(I - sigma) x|^2 <= frob_sq(I - sigma) |x|^2.

template <OrderedField F>
struct NVerdict {
    bool member = false;
    /// frob_sq(I - sigma)
    F certificate;
    /// Valuation of the certificate at e = 0; nullopt when it is zero.
    std::optional<int> order_at_zero;
};

namespace detail {
template <OrderedField F>
void require_rotation_of_identity_form(const BilinearSpace& sp, const Isometry<F>& sigma) {
    if (!sp.is_identity_form()) throw std::invalid_argument("membership in N is defined for the identity form");
    if (sigma.dim() != sp.dim()) throw DimensionMismatch("isometry does not match the space");
    if (!sigma.is_rotation()) throw NotAnIsometry("membership in N requires a rotation");
}
}  // namespace detail

template <OrderedField F>
NVerdict<F> in_n(const BilinearSpace& sp, const Isometry<F>& sigma) {
    detail::require_rotation_of_identity_form(sp, sigma);
    NVerdict<F> v;
    v.certificate = frob_sq(Mat<F>::identity(sp.dim()) - sigma.matrix());
    v.member = is_infinitesimal(v.certificate);
    v.order_at_zero = order_at_zero(v.certificate);
    return v;
}

/// |x - sigma(x)|^2 / |x|^2 for nonzero x; infinitesimal for every x when
/// sigma is in N.
template <OrderedField F>
F relative_displacement(const Isometry<F>& sigma, const Vec<F>& x) {
    const F denom = norm_sq(x);
    if (denom.is_zero()) throw std::invalid_argument("displacement of the zero vector");
    return norm_sq(x - sigma.matrix() * x) / denom;
}

struct Witnesses {
    /// C(eB) for B = E_12 - E_21: in N and different from +-I.
    Isometry<RatFunc> inside;
    /// -tau_{e_1} (odd n) or diag(-1, -1, 1, ..., 1) (even n): a rotation outside N.
    Isometry<RatFunc> outside;
};

/// Throws std::invalid_argument for n < 3.
Witnesses witnesses(std::size_t n);

template <OrderedField F>
struct ClosureCheck {
    std::string check;
    F certificate;
    bool member = false;
    bool pass = false;
};

template <OrderedField F>
struct ClosureReport {
    std::vector<ClosureCheck<F>> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// For samples sigma_i in N and rotations rho_k, checks that every product
/// sigma_i sigma_j, every inverse sigma_i^{-1} and every conjugate
/// rho_k sigma_i rho_k^{-1} is again in N. Checks are listed in a fixed
/// order: products (i, j), then inverses, then conjugates (k, i).
template <OrderedField F>
ClosureReport<F> closure_suite(const BilinearSpace& sp, const std::vector<Isometry<F>>& samples,
                               const std::vector<Isometry<F>>& conjugators) {
    ClosureReport<F> report;
    auto record = [&](std::string label, const Isometry<F>& s) {
        NVerdict<F> v = in_n(sp, s);
        report.checks.push_back({std::move(label), std::move(v.certificate), v.member, v.member});
    };
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t j = 0; j < samples.size(); ++j)
            record("product[" + std::to_string(i) + "," + std::to_string(j) + "]", samples[i] * samples[j]);
    for (std::size_t i = 0; i < samples.size(); ++i)
        record("inverse[" + std::to_string(i) + "]", samples[i].inverse(sp));
    for (std::size_t k = 0; k < conjugators.size(); ++k) {
        const Isometry<F> rho_inv = conjugators[k].inverse(sp);
        for (std::size_t i = 0; i < samples.size(); ++i)
            record("conjugate[" + std::to_string(k) + "," + std::to_string(i) + "]",
                   conjugators[k] * samples[i] * rho_inv);
    }
    return report;
}

}  // namespace cayleyq
