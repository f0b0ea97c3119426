#include "cayleyq/ratfunc.hpp"

#include <ostream>
#include <stdexcept>

#include "cayleyq/error.hpp"

namespace cayleyq {

RatFunc::RatFunc(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw DivisionByZero();
    if (num.is_zero()) {
        den_ = 1;
        return;
    }
    const Poly g = gcd(num, den);
    Poly n = Poly::exact_div(num, g);
    Poly d = Poly::exact_div(den, g);
    const Rat lc = d.leading();
    if (!lc.is_one()) {
        const Rat s = lc.inv();
        n *= s;
        d *= s;
    }
    num_ = std::move(n);
    den_ = std::move(d);
}

Rat RatFunc::constant_value() const {
    if (!is_constant()) throw std::logic_error("not a constant: " + str());
    return num_.coeff(0);
}

RatFunc RatFunc::inv() const {
    if (is_zero()) throw DivisionByZero();
    return RatFunc(den_, num_);
}

Rat RatFunc::eval(const Rat& x) const { return num_.eval(x) / den_.eval(x); }

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Reduced{}); }

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (den_ == o.den_) {
        *this = RatFunc(num_ + o.num_, den_);
    } else if (den_.is_one()) {
        *this = RatFunc(num_ * o.den_ + o.num_, o.den_, Reduced{});
    } else if (o.den_.is_one()) {
        num_ += o.num_ * den_;
    } else {
        *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    if (is_zero() || o.is_zero()) {
        *this = RatFunc();
    } else if (den_.is_one() && o.den_.is_one()) {
        num_ = num_ * o.num_;
    } else {
        // Cross-cancel first so the products stay reduced-ish.
        const Poly g1 = gcd(num_, o.den_);
        const Poly g2 = gcd(o.num_, den_);
        *this = RatFunc(Poly::exact_div(num_, g1) * Poly::exact_div(o.num_, g2),
                        Poly::exact_div(den_, g2) * Poly::exact_div(o.den_, g1));
    }
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inv(); }

std::ostream& operator<<(std::ostream& os, const RatFunc& x) { return os << x.str(); }

}  // namespace cayleyq
