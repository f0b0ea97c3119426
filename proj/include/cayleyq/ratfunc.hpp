#pragma once

#include <iosfwd>
#include <string>

#include "cayleyq/polynomial.hpp"
#include "cayleyq/rational.hpp"

namespace cayleyq {

/// Element of Q(e), stored as num/den with den monic and gcd(num, den) = 1.
/// Structural equality of the canonical form is field equality.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(const Rat& c) : num_(c), den_(1) {}  // NOLINT
    RatFunc(long c) : RatFunc(Rat(c)) {}         // NOLINT
    RatFunc(const Poly& p) : num_(p), den_(1) {}  // NOLINT
    /// Reduces num/den; throws DivisionByZero when den = 0.
    RatFunc(const Poly& num, const Poly& den);

    static RatFunc e() { return RatFunc(Poly::e()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    /// Requires is_constant().
    Rat constant_value() const;

    RatFunc inv() const;
    Rat eval(const Rat& x) const;

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    friend bool operator==(const RatFunc&, const RatFunc&) = default;

    std::string str() const;

private:
    struct Reduced {};
    RatFunc(Poly num, Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

    Poly num_;
    Poly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& x);

}  // namespace cayleyq
