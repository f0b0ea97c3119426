#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "cayleyq/error.hpp"
#include "cayleyq/field.hpp"

namespace cayleyq {

template <OrderedField F>
class Vec {
public:
    explicit Vec(std::size_t n) : v_(n) {
        if (n == 0) throw DimensionMismatch("vector of length 0");
    }
    explicit Vec(std::vector<F> entries) : v_(std::move(entries)) {
        if (v_.empty()) throw DimensionMismatch("vector of length 0");
    }
    Vec(std::initializer_list<F> entries) : Vec(std::vector<F>(entries)) {}

    static Vec unit(std::size_t n, std::size_t i) {
        Vec out(n);
        out.v_.at(i) = F(Rat(1));
        return out;
    }

    std::size_t size() const { return v_.size(); }
    const F& operator[](std::size_t i) const { return v_[i]; }
    F& operator[](std::size_t i) { return v_[i]; }
    const std::vector<F>& entries() const { return v_; }
    bool is_zero() const {
        for (const auto& x : v_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Vec&, const Vec&) = default;

private:
    std::vector<F> v_;
};

template <OrderedField F>
Vec<F> operator+(const Vec<F>& a, const Vec<F>& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    Vec<F> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

template <OrderedField F>
Vec<F> operator-(const Vec<F>& a, const Vec<F>& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    Vec<F> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

template <OrderedField F>
Vec<F> operator*(const F& s, const Vec<F>& a) {
    Vec<F> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
    return out;
}

/// Sum of squared entries.
template <OrderedField F>
F norm_sq(const Vec<F>& a) {
    F acc;
    for (const auto& x : a.entries()) acc += x * x;
    return acc;
}

/// Dense square matrix, row-major.
template <OrderedField F>
class Mat {
public:
    explicit Mat(std::size_t n) : n_(n), a_(n * n) {
        if (n == 0) throw DimensionMismatch("matrix of dimension 0");
    }
    Mat(std::initializer_list<std::initializer_list<F>> rows) : Mat(rows.size()) {
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != n_) throw DimensionMismatch("matrix rows must have length " + std::to_string(n_));
            std::size_t j = 0;
            for (const auto& x : row) (*this)(i, j++) = x;
            ++i;
        }
    }

    static Mat identity(std::size_t n) {
        Mat m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(Rat(1));
        return m;
    }
    static Mat diagonal(const std::vector<F>& d) {
        Mat m(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t dim() const { return n_; }
    F& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    Vec<F> column(std::size_t j) const {
        Vec<F> v(n_);
        for (std::size_t i = 0; i < n_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_identity() const { return *this == identity(n_); }

    friend bool operator==(const Mat&, const Mat&) = default;

private:
    std::size_t n_;
    std::vector<F> a_;
};

namespace detail {
template <OrderedField F>
void require_same_dim(const Mat<F>& a, const Mat<F>& b) {
    if (a.dim() != b.dim())
        throw DimensionMismatch("matrix dimensions differ: " + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
}
}  // namespace detail

template <OrderedField F>
Mat<F> operator+(const Mat<F>& a, const Mat<F>& b) {
    detail::require_same_dim(a, b);
    Mat<F> out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

template <OrderedField F>
Mat<F> operator-(const Mat<F>& a, const Mat<F>& b) {
    detail::require_same_dim(a, b);
    Mat<F> out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

template <OrderedField F>
Mat<F> operator-(const Mat<F>& a) {
    Mat<F> out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = -a(i, j);
    return out;
}

template <OrderedField F>
Mat<F> operator*(const F& s, const Mat<F>& a) {
    Mat<F> out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = s * a(i, j);
    return out;
}

template <OrderedField F>
Mat<F> operator*(const Mat<F>& a, const Mat<F>& b) {
    detail::require_same_dim(a, b);
    const std::size_t n = a.dim();
    Mat<F> out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

template <OrderedField F>
Vec<F> operator*(const Mat<F>& a, const Vec<F>& v) {
    if (a.dim() != v.size()) throw DimensionMismatch("matrix-vector dimensions differ");
    Vec<F> out(v.size());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (!a(i, j).is_zero() && !v[j].is_zero()) out[i] += a(i, j) * v[j];
    return out;
}

template <OrderedField F>
Mat<F> transpose(const Mat<F>& a) {
    Mat<F> out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out(j, i) = a(i, j);
    return out;
}

template <OrderedField F>
Mat<F> power(const Mat<F>& a, unsigned k) {
    Mat<F> out = Mat<F>::identity(a.dim());
    for (unsigned i = 0; i < k; ++i) out = out * a;
    return out;
}

/// Entrywise image of a matrix under a field embedding (e.g. Q -> Q(e)).
template <OrderedField To, OrderedField From, class Fn>
Mat<To> map_entries(const Mat<From>& a, Fn&& fn) {
    Mat<To> out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = fn(a(i, j));
    return out;
}

template <OrderedField To, OrderedField From>
Mat<To> embed(const Mat<From>& a) {
    return map_entries<To>(a, [](const From& x) { return To(x); });
}

// Exact Gaussian elimination. The pivot is the first row with a nonzero
// entry in the current column.

template <OrderedField F>
F det(Mat<F> a) {
    const std::size_t n = a.dim();
    F d(Rat(1));
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col).is_zero()) ++piv;
        if (piv == n) return F();
        if (piv != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(a(piv, j), a(col, j));
            d = -d;
        }
        d *= a(col, col);
        const F pinv = a(col, col).inv();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col).is_zero()) continue;
            const F f = a(r, col) * pinv;
            for (std::size_t j = col + 1; j < n; ++j)
                if (!a(col, j).is_zero()) a(r, j) -= f * a(col, j);
        }
    }
    return d;
}

/// Gauss-Jordan inverse; throws SingularMatrix naming the failing column.
template <OrderedField F>
Mat<F> inverse(Mat<F> a) {
    const std::size_t n = a.dim();
    Mat<F> inv = Mat<F>::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col).is_zero()) ++piv;
        if (piv == n) throw SingularMatrix(col);
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        const F pinv = a(col, col).inv();
        for (std::size_t j = 0; j < n; ++j) {
            if (!a(col, j).is_zero()) a(col, j) *= pinv;
            if (!inv(col, j).is_zero()) inv(col, j) *= pinv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            const F f = a(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                if (!a(col, j).is_zero()) a(r, j) -= f * a(col, j);
                if (!inv(col, j).is_zero()) inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

/// Squared Frobenius norm: the sum of squares of all entries.
template <OrderedField F>
F frob_sq(const Mat<F>& a) {
    F acc;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (!a(i, j).is_zero()) acc += a(i, j) * a(i, j);
    return acc;
}

template <OrderedField F>
bool is_orthogonal(const Mat<F>& a) {
    return (transpose(a) * a).is_identity();
}

template <OrderedField F>
bool is_skew(const Mat<F>& a) {
    return transpose(a) == -a;
}

// Over Q(e) the generic routines above pay a polynomial gcd on every
// addition. These overloads clear denominators first, work fraction-free
// over Q[e], and reduce once per result entry. They are selected by
// ordinary overload resolution; det<RatFunc>(m) etc. still reach the
// generic versions.

/// A = entries / den with den monic.
struct PolyMatrix {
    std::size_t n = 0;
    std::vector<Poly> entries;
    Poly den;

    static PolyMatrix of(const Mat<RatFunc>& a);
    const Poly& operator()(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
};

Mat<RatFunc> operator*(const Mat<RatFunc>& a, const Mat<RatFunc>& b);
/// Bareiss elimination over Q[e].
RatFunc det(const Mat<RatFunc>& a);
RatFunc frob_sq(const Mat<RatFunc>& a);
bool is_orthogonal(const Mat<RatFunc>& a);
/// a^T diag(d) a == diag(d)
bool preserves_diagonal_form(const Mat<RatFunc>& a, const std::vector<Rat>& d);

template <OrderedField F>
bool preserves_diagonal_form(const Mat<F>& a, const std::vector<Rat>& d) {
    std::vector<F> g;
    for (const auto& x : d) g.emplace_back(x);
    const Mat<F> gm = Mat<F>::diagonal(g);
    return transpose(a) * gm * a == gm;
}

}  // namespace cayleyq
