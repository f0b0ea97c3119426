#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cayleyq/rational.hpp"

namespace cayleyq {

/// Dense univariate polynomial over Q in the indeterminate e (the
/// infinitesimal). Coefficient k multiplies e^k; trailing zeros are
/// never stored, so the zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    Poly(const Rat& c);  // NOLINT: constants convert implicitly
    Poly(long c) : Poly(Rat(c)) {}  // NOLINT
    explicit Poly(std::vector<Rat> coeffs);
    Poly(std::initializer_list<Rat> coeffs) : Poly(std::vector<Rat>(coeffs)) {}

    /// c * e^k
    static Poly monomial(const Rat& c, std::size_t k);
    static Poly e() { return monomial(1, 1); }

    std::span<const Rat> coeffs() const { return c_; }
    Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& leading() const;
    /// Multiplicity of the root e = 0; requires nonzero.
    std::size_t order_at_zero() const;
    /// Lowest-order nonzero coefficient; requires nonzero.
    const Rat& trailing() const;

    Poly monic() const;
    Poly derivative() const;
    Rat eval(const Rat& x) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rat& s);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
    friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
    friend bool operator==(const Poly&, const Poly&) = default;

    /// Euclidean division; throws DivisionByZero for a zero divisor.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    /// Exact quotient; the remainder is required to vanish.
    static Poly exact_div(const Poly& a, const Poly& b);

    std::string str() const;

private:
    void trim();
    std::vector<Rat> c_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

/// Yun's squarefree decomposition of a nonzero polynomial:
/// p = leading(p) * prod_i factors[i]^(i+1), each factor monic,
/// squarefree and pairwise coprime (possibly 1).
std::vector<Poly> squarefree_decomposition(const Poly& p);

/// Monic product of the distinct irreducible factors that occur in p
/// to odd multiplicity. Throws std::invalid_argument for p = 0.
Poly squarefree_part(const Poly& p);

Poly pow(const Poly& base, unsigned exp);

}  // namespace cayleyq
