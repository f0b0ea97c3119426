#include "cayleyq/field.hpp"

#include <stdexcept>

namespace cayleyq {

int sign(const RatFunc& x) {
    if (x.is_zero()) return 0;
    return x.num().trailing().sign() * x.den().trailing().sign();
}

bool is_infinitesimal(const RatFunc& x) {
    return x.is_zero() || x.num().order_at_zero() > x.den().order_at_zero();
}

std::optional<int> order_at_zero(const Rat& x) {
    if (x.is_zero()) return std::nullopt;
    return 0;
}

std::optional<int> order_at_zero(const RatFunc& x) {
    if (x.is_zero()) return std::nullopt;
    return static_cast<int>(x.num().order_at_zero()) - static_cast<int>(x.den().order_at_zero());
}

mpz_class squarefree_integer(const mpz_class& n) {
    if (sgn(n) == 0) throw std::invalid_argument("squarefree part of zero");
    mpz_class m = abs(n);
    mpz_class out = 1;
    auto strip = [&](const mpz_class& p) {
        unsigned mult = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            m /= p;
            ++mult;
        }
        if (mult & 1U) out *= p;
        return mult > 0;
    };
    // Once p^3 > m, every prime factor of m exceeds the trial bound, so m is
    // 1, a prime, a product of two distinct primes, or a prime square.
    bool changed = true;
    for (mpz_class p = 2; p * p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (changed && mpz_probab_prime_p(m.get_mpz_t(), 30) > 0) break;
        changed = strip(p);
    }
    if (m > 1 && !mpz_perfect_square_p(m.get_mpz_t())) out *= m;
    return sgn(n) < 0 ? mpz_class(-out) : out;
}

Rat SquareClass::as_rat() const {
    if (!poly_.is_one()) throw std::logic_error("square class is not rational: " + str());
    return Rat(factor_);
}

SquareClass operator*(const SquareClass& a, const SquareClass& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.factor_.get_mpz_t(), b.factor_.get_mpz_t());
    mpz_class f = (a.factor_ / g) * (b.factor_ / g);
    if (a.poly_.is_one()) return SquareClass(std::move(f), b.poly_);
    if (b.poly_.is_one()) return SquareClass(std::move(f), a.poly_);
    const Poly pg = gcd(a.poly_, b.poly_);
    return SquareClass(std::move(f), Poly::exact_div(a.poly_, pg) * Poly::exact_div(b.poly_, pg));
}

SquareClass SquareClass::of(const Rat& x) {
    if (x.is_zero()) throw std::invalid_argument("square class of zero");
    // num and den are coprime, so the product of their squarefree parts is squarefree.
    return SquareClass(squarefree_integer(x.num()) * squarefree_integer(x.den()), Poly(1));
}

SquareClass SquareClass::of(const RatFunc& x) {
    if (x.is_zero()) throw std::invalid_argument("square class of zero");
    // class(N/D) = class(N*D) = class(lc(N)) * odd part of N * odd part of D.
    SquareClass out = of(x.num().leading());
    out.poly_ = squarefree_part(x.num()) * squarefree_part(x.den());
    return out;
}

bool is_square(const Rat& x) { return x.is_zero() || SquareClass::of(x).is_trivial(); }

bool is_square(const RatFunc& x) { return x.is_zero() || SquareClass::of(x).is_trivial(); }

}  // namespace cayleyq
