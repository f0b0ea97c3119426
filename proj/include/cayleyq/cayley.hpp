#pragma once

#include "cayleyq/error.hpp"
#include "cayleyq/field.hpp"
#include "cayleyq/matrix.hpp"
#include "cayleyq/ratfunc.hpp"

namespace cayleyq {

/// C(A) = (I - A)(I + A)^{-1}. Skew A maps to a rotation; an orthogonal A
/// with I + A invertible maps to a skew matrix; C(C(A)) = A.
/// Throws CayleyObstruction when I + A is singular.
template <OrderedField F>
Mat<F> cayley(const Mat<F>& a) {
    const Mat<F> id = Mat<F>::identity(a.dim());
    Mat<F> plus_inv(a.dim());
    try {
        plus_inv = inverse(id + a);
    } catch (const SingularMatrix&) {
        throw CayleyObstruction();
    }
    return (id - a) * plus_inv;
}

/// A = C(e B) for a nonzero rational skew B: a rotation other than +-I whose
/// distance to I is infinitesimal. Every guarantee is verified before
/// returning; a failed check throws std::logic_error.
/// Throws std::invalid_argument for zero or non-skew B.
Mat<RatFunc> infinitesimal_rotation(const Mat<Rat>& b);

struct NeumannReport {
    /// D = I - eB + e^2 B^2 - ... + e^{m-1} B^{m-1}
    Mat<RatFunc> d;
    /// (I + eB) D == I + e^m B^m, exactly.
    bool residual_ok = false;
    /// frob_sq((I + eB)^{-1} - D)
    RatFunc inverse_gap;
    bool inverse_gap_infinitesimal = false;
};

/// Checks the truncated Neumann identity for odd m >= 1.
/// Throws std::invalid_argument for even or non-positive m, or non-skew B.
NeumannReport neumann_check(const Mat<Rat>& b, int m);

}  // namespace cayleyq
