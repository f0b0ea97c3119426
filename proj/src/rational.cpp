#include "cayleyq/rational.hpp"

#include <ostream>

#include "cayleyq/error.hpp"

namespace cayleyq {

Rat::Rat(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0) throw DivisionByZero();
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat::Rat(mpq_class v) : v_(std::move(v)) {
    if (sgn(v_.get_den()) == 0) throw DivisionByZero();
    v_.canonicalize();
}

Rat Rat::inv() const {
    if (is_zero()) throw DivisionByZero();
    return Rat(mpq_class(1 / v_));
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw DivisionByZero();
    v_ /= o.v_;
    return *this;
}

std::string Rat::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat pow(const Rat& base, unsigned exp) {
    Rat out = 1;
    Rat b = base;
    while (exp) {
        if (exp & 1U) out *= b;
        b *= b;
        exp >>= 1U;
    }
    return out;
}

}  // namespace cayleyq
