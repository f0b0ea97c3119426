#include "cayleyq/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "cayleyq/error.hpp"

namespace cayleyq {

Poly::Poly(const Rat& c) {
    if (!c.is_zero()) c_.push_back(c);
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rat& c, std::size_t k) {
    Poly p;
    if (c.is_zero()) return p;
    p.c_.assign(k + 1, Rat());
    p.c_[k] = c;
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rat& Poly::leading() const {
    if (c_.empty()) throw std::invalid_argument("leading coefficient of the zero polynomial");
    return c_.back();
}

std::size_t Poly::order_at_zero() const {
    if (c_.empty()) throw std::invalid_argument("order at zero of the zero polynomial");
    std::size_t k = 0;
    while (c_[k].is_zero()) ++k;
    return k;
}

const Rat& Poly::trailing() const { return c_[order_at_zero()]; }

Poly Poly::monic() const {
    if (c_.empty()) return *this;
    return *this * leading().inv();
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rat> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rat(static_cast<long>(k));
    return Poly(std::move(d));
}

Rat Poly::eval(const Rat& x) const {
    Rat acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& c : p.c_) c = -c;
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rat& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rat> r = a.c_;
    std::vector<Rat> q(a.c_.size() - b.c_.size() + 1);
    const Rat lead_inv = b.leading().inv();
    const std::size_t db = b.c_.size() - 1;
    for (std::size_t k = r.size(); k-- > db;) {
        if (r[k].is_zero()) continue;
        const Rat f = r[k] * lead_inv;
        q[k - db] = f;
        for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= f * b.c_[j];
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    assert(r.is_zero());
    return q;
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = Poly::divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

std::vector<Poly> squarefree_decomposition(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of the zero polynomial");
    std::vector<Poly> factors;
    const Poly f = p.monic();
    if (f.is_constant()) return factors;
    // Yun: a0 = gcd(f, f'), b1 = f/a0, c1 = f'/a0, d1 = c1 - b1'.
    const Poly df = f.derivative();
    Poly a = gcd(f, df);
    Poly b = Poly::exact_div(f, a);
    Poly c = Poly::exact_div(df, a);
    Poly d = c - b.derivative();
    while (!b.is_constant()) {
        Poly g = gcd(b, d);
        factors.push_back(g);
        b = Poly::exact_div(b, g);
        c = Poly::exact_div(d, g);
        d = c - b.derivative();
    }
    while (!factors.empty() && factors.back().is_one()) factors.pop_back();
    return factors;
}

Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree part of the zero polynomial");
    Poly out = 1;
    const auto factors = squarefree_decomposition(p);
    for (std::size_t i = 0; i < factors.size(); i += 2) out = out * factors[i];
    return out;
}

Poly pow(const Poly& base, unsigned exp) {
    Poly out = 1;
    Poly b = base;
    while (exp) {
        if (exp & 1U) out = out * b;
        exp >>= 1U;
        if (exp) b = b * b;
    }
    return out;
}

}  // namespace cayleyq
