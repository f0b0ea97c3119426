#pragma once

#include <concepts>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "cayleyq/polynomial.hpp"
#include "cayleyq/ratfunc.hpp"
#include "cayleyq/rational.hpp"

namespace cayleyq {

// Order structure. Q(e) is ordered with e a positive infinitesimal: the
// sign of an element is read off the lowest-order coefficients.

inline int sign(const Rat& x) { return x.sign(); }
int sign(const RatFunc& x);

/// |x| < r for every positive rational r. Zero counts as infinitesimal.
inline bool is_infinitesimal(const Rat& x) { return x.is_zero(); }
bool is_infinitesimal(const RatFunc& x);

/// Valuation at e = 0 (ord num - ord den); nullopt for zero.
std::optional<int> order_at_zero(const Rat& x);
std::optional<int> order_at_zero(const RatFunc& x);

/// Representative of a class in F^x / F^x2: factor * poly, where factor is
/// a squarefree nonzero integer and poly is monic and squarefree. Over Q the
/// polynomial part is always 1.
class SquareClass {
public:
    SquareClass() : factor_(1), poly_(1) {}

    const mpz_class& factor() const { return factor_; }
    const Poly& poly() const { return poly_; }
    bool is_trivial() const { return factor_ == 1 && poly_.is_one(); }

    RatFunc as_ratfunc() const { return RatFunc(poly_ * Rat(factor_)); }
    /// Throws std::logic_error if the class has a nonconstant part.
    Rat as_rat() const;

    /// Class of the product.
    friend SquareClass operator*(const SquareClass& a, const SquareClass& b);
    friend bool operator==(const SquareClass&, const SquareClass&) = default;

    std::string str() const { return as_ratfunc().str(); }

    static SquareClass of(const Rat& x);
    static SquareClass of(const RatFunc& x);

private:
    SquareClass(mpz_class factor, Poly poly) : factor_(std::move(factor)), poly_(std::move(poly)) {}
    mpz_class factor_;
    Poly poly_;
};

/// Throws std::invalid_argument for x = 0.
inline SquareClass square_class(const Rat& x) { return SquareClass::of(x); }
inline SquareClass square_class(const RatFunc& x) { return SquareClass::of(x); }

bool is_square(const Rat& x);
bool is_square(const RatFunc& x);

/// Squarefree part of a nonzero integer, sign preserved.
mpz_class squarefree_integer(const mpz_class& n);

template <class F>
concept OrderedField = std::regular<F> && std::constructible_from<F, Rat> &&
    requires(const F& a, const F& b) {
        { a + b } -> std::convertible_to<F>;
        { a - b } -> std::convertible_to<F>;
        { a * b } -> std::convertible_to<F>;
        { a / b } -> std::convertible_to<F>;
        { -a } -> std::convertible_to<F>;
        { a.inv() } -> std::convertible_to<F>;
        { a.is_zero() } -> std::same_as<bool>;
        { a.str() } -> std::same_as<std::string>;
        { sign(a) } -> std::same_as<int>;
        { is_infinitesimal(a) } -> std::same_as<bool>;
        { order_at_zero(a) } -> std::same_as<std::optional<int>>;
        { square_class(a) } -> std::same_as<SquareClass>;
        { is_square(a) } -> std::same_as<bool>;
    };

/// a <= b in the field ordering.
template <OrderedField F>
bool leq(const F& a, const F& b) {
    return sign(b - a) >= 0;
}

template <OrderedField F>
F square_class_element(const SquareClass& c);

template <>
inline Rat square_class_element<Rat>(const SquareClass& c) { return c.as_rat(); }
template <>
inline RatFunc square_class_element<RatFunc>(const SquareClass& c) { return c.as_ratfunc(); }

}  // namespace cayleyq
