#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace cayleyq {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
class Rat {
public:
    Rat() = default;
    Rat(long v) : v_(v) {}  // NOLINT: integers convert implicitly
    Rat(const mpz_class& num, const mpz_class& den);
    explicit Rat(const mpz_class& v) : v_(v) {}
    explicit Rat(mpq_class v);

    const mpq_class& value() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rat inv() const;
    Rat abs() const { return Rat(mpq_class(::abs(v_))); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// "p" or "p/q".
    std::string str() const;

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

Rat pow(const Rat& base, unsigned exp);

}  // namespace cayleyq
