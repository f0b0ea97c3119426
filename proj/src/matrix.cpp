#include "cayleyq/matrix.hpp"

namespace cayleyq {

PolyMatrix PolyMatrix::of(const Mat<RatFunc>& a) {
    PolyMatrix out;
    out.n = a.dim();
    out.den = 1;
    for (std::size_t i = 0; i < out.n; ++i)
        for (std::size_t j = 0; j < out.n; ++j) {
            const Poly& d = a(i, j).den();
            if (d.is_one() || d == out.den) continue;
            out.den = out.den * Poly::exact_div(d, gcd(out.den, d));
        }
    out.entries.reserve(out.n * out.n);
    for (std::size_t i = 0; i < out.n; ++i)
        for (std::size_t j = 0; j < out.n; ++j) {
            const RatFunc& x = a(i, j);
            out.entries.push_back(x.den() == out.den ? x.num() : x.num() * Poly::exact_div(out.den, x.den()));
        }
    return out;
}

namespace {

// sum_k w_k * a(k, i) * b(k, j) for the transposed product a^T W b.
Poly column_dot(const PolyMatrix& a, std::size_t i, const PolyMatrix& b, std::size_t j, const std::vector<Rat>* w) {
    Poly acc;
    for (std::size_t k = 0; k < a.n; ++k) {
        const Poly& x = a(k, i);
        const Poly& y = b(k, j);
        if (x.is_zero() || y.is_zero()) continue;
        acc += w ? (x * y) * (*w)[k] : x * y;
    }
    return acc;
}

}  // namespace

Mat<RatFunc> operator*(const Mat<RatFunc>& a, const Mat<RatFunc>& b) {
    detail::require_same_dim(a, b);
    const PolyMatrix pa = PolyMatrix::of(a);
    const PolyMatrix pb = PolyMatrix::of(b);
    const Poly den = pa.den * pb.den;
    const std::size_t n = a.dim();
    Mat<RatFunc> out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Poly acc;
            for (std::size_t k = 0; k < n; ++k)
                if (!pa(i, k).is_zero() && !pb(k, j).is_zero()) acc += pa(i, k) * pb(k, j);
            if (!acc.is_zero()) out(i, j) = RatFunc(acc, den);
        }
    return out;
}

RatFunc det(const Mat<RatFunc>& a) {
    PolyMatrix p = PolyMatrix::of(a);
    const std::size_t n = p.n;
    auto at = [&](std::size_t i, std::size_t j) -> Poly& { return p.entries[i * n + j]; };
    bool negate = false;
    Poly prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k).is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && at(piv, k).is_zero()) ++piv;
            if (piv == n) return RatFunc();
            for (std::size_t j = k; j < n; ++j) std::swap(at(piv, j), at(k, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                at(i, j) = Poly::exact_div(at(i, j) * at(k, k) - at(i, k) * at(k, j), prev);
            at(i, k) = Poly();
        }
        prev = at(k, k);
    }
    Poly d = at(n - 1, n - 1);
    if (negate) d = -d;
    return RatFunc(d, pow(p.den, static_cast<unsigned>(n)));
}

RatFunc frob_sq(const Mat<RatFunc>& a) {
    const PolyMatrix p = PolyMatrix::of(a);
    Poly acc;
    for (const auto& x : p.entries)
        if (!x.is_zero()) acc += x * x;
    return RatFunc(acc, p.den * p.den);
}

bool preserves_diagonal_form(const Mat<RatFunc>& a, const std::vector<Rat>& d) {
    if (d.size() != a.dim()) throw DimensionMismatch("form does not match the matrix");
    // (P/den)^T W (P/den) = W  <=>  P^T W P = den^2 W
    const PolyMatrix p = PolyMatrix::of(a);
    const Poly den_sq = p.den * p.den;
    for (std::size_t i = 0; i < p.n; ++i)
        for (std::size_t j = i; j < p.n; ++j) {
            const Poly lhs = column_dot(p, i, p, j, &d);
            if (i == j ? lhs != den_sq * d[i] : !lhs.is_zero()) return false;
        }
    return true;
}

bool is_orthogonal(const Mat<RatFunc>& a) {
    return preserves_diagonal_form(a, std::vector<Rat>(a.dim(), Rat(1)));
}

}  // namespace cayleyq
