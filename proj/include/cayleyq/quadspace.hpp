#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cayleyq/error.hpp"
#include "cayleyq/field.hpp"
#include "cayleyq/matrix.hpp"

namespace cayleyq {

/// Diagonal bilinear space (V, b) with b(x, y) = sum_i d_i x_i y_i. All d_i
/// are positive rationals, so q(x) = b(x, x) is anisotropic over every
/// formally real field.
class BilinearSpace {
public:
    explicit BilinearSpace(std::vector<Rat> d);
    static BilinearSpace identity(std::size_t n) { return BilinearSpace(std::vector<Rat>(n, Rat(1))); }

    std::size_t dim() const { return d_.size(); }
    const std::vector<Rat>& coefficients() const { return d_; }
    bool is_identity_form() const;

    /// prod d_i, a Gram determinant (the class of det b is its square class).
    Rat gram_det() const;

    template <OrderedField F>
    Mat<F> gram() const {
        Mat<F> g(dim());
        for (std::size_t i = 0; i < dim(); ++i) g(i, i) = F(d_[i]);
        return g;
    }

    friend bool operator==(const BilinearSpace&, const BilinearSpace&) = default;

private:
    std::vector<Rat> d_;
};

template <OrderedField F>
F b_value(const BilinearSpace& sp, const Vec<F>& v, const Vec<F>& w) {
    if (v.size() != sp.dim() || w.size() != sp.dim()) throw DimensionMismatch("vector does not match the space");
    F acc;
    for (std::size_t i = 0; i < sp.dim(); ++i)
        if (!v[i].is_zero() && !w[i].is_zero()) acc += F(sp.coefficients()[i]) * v[i] * w[i];
    return acc;
}

template <OrderedField F>
F q_value(const BilinearSpace& sp, const Vec<F>& v) {
    return b_value(sp, v, v);
}

/// An element of O(V): a matrix m with m^T G m = G.
template <OrderedField F>
class Isometry {
public:
    /// Validates m against the form; throws NotAnIsometry otherwise.
    Isometry(const BilinearSpace& sp, Mat<F> m) : m_(std::move(m)) {
        if (m_.dim() != sp.dim()) throw DimensionMismatch("matrix does not match the space");
        if (!preserves_diagonal_form(m_, sp.coefficients()))
            throw NotAnIsometry("matrix does not preserve the bilinear form");
    }

    /// Wraps a matrix already known to be an isometry (products of reflections).
    static Isometry trusted(Mat<F> m) { return Isometry(std::move(m)); }

    const Mat<F>& matrix() const { return m_; }
    std::size_t dim() const { return m_.dim(); }
    /// +1 or -1.
    int det_sign() const { return sign(det(m_)); }
    bool is_rotation() const { return det_sign() > 0; }

    /// sigma^{-1} = G^{-1} sigma^T G.
    Isometry inverse(const BilinearSpace& sp) const {
        Mat<F> out = transpose(m_);
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j)
                if (!out(i, j).is_zero())
                    out(i, j) *= F(sp.coefficients()[j] / sp.coefficients()[i]);
        return Isometry(std::move(out));
    }

    friend Isometry operator*(const Isometry& a, const Isometry& b) { return Isometry(a.m_ * b.m_); }
    friend bool operator==(const Isometry&, const Isometry&) = default;

private:
    explicit Isometry(Mat<F> m) : m_(std::move(m)) {}
    Mat<F> m_;
};

/// sigma = tau_{u_1} ... tau_{u_m}, applied right to left.
template <OrderedField F>
struct ReflectionSeq {
    std::vector<Vec<F>> vectors;
};

/// tau_u(x) = x - 2 b(x, u) / q(u) * u.
template <OrderedField F>
Isometry<F> reflect(const BilinearSpace& sp, const Vec<F>& u) {
    const F qu = q_value(sp, u);
    if (qu.is_zero()) throw std::invalid_argument("reflection along an isotropic or zero vector");
    const F scale = F(Rat(-2)) / qu;
    const std::size_t n = sp.dim();
    Mat<F> m = Mat<F>::identity(n);
    // column j = tau_u(e_j) = e_j - 2 d_j u_j / q(u) * u
    for (std::size_t j = 0; j < n; ++j) {
        if (u[j].is_zero()) continue;
        const F cj = scale * F(sp.coefficients()[j]) * u[j];
        for (std::size_t i = 0; i < n; ++i)
            if (!u[i].is_zero()) m(i, j) += cj * u[i];
    }
    return Isometry<F>::trusted(std::move(m));
}

template <OrderedField F>
Isometry<F> compose(const BilinearSpace& sp, const ReflectionSeq<F>& rs) {
    Mat<F> m = Mat<F>::identity(sp.dim());
    for (const auto& u : rs.vectors) m = m * reflect(sp, u).matrix();
    return Isometry<F>::trusted(std::move(m));
}

/// Constructive Cartan-Dieudonne: for i = 1..n, if the current map moves e_i,
/// reflect along sigma(e_i) - e_i, which sends sigma(e_i) back to e_i and
/// fixes the basis vectors already restored. At most n reflections.
template <OrderedField F>
ReflectionSeq<F> decompose(const BilinearSpace& sp, const Isometry<F>& sigma) {
    if (sigma.dim() != sp.dim()) throw DimensionMismatch("isometry does not match the space");
    const std::size_t n = sp.dim();
    ReflectionSeq<F> out;
    Mat<F> cur = sigma.matrix();
    for (std::size_t i = 0; i < n; ++i) {
        Vec<F> u = cur.column(i) - Vec<F>::unit(n, i);
        if (u.is_zero()) continue;
        cur = reflect(sp, u).matrix() * cur;
        out.vectors.push_back(std::move(u));
    }
    if (!cur.is_identity()) throw NotAnIsometry("decomposition did not reach the identity");
    return out;
}

/// Square class of prod q(u_i).
template <OrderedField F>
SquareClass spinor_norm(const BilinearSpace& sp, const ReflectionSeq<F>& rs) {
    SquareClass c;
    for (const auto& u : rs.vectors) c = c * square_class(q_value(sp, u));
    return c;
}

template <OrderedField F>
SquareClass spinor_norm(const BilinearSpace& sp, const Isometry<F>& sigma) {
    return spinor_norm(sp, decompose(sp, sigma));
}

/// (theta(-id), class of det b); the two agree. Requires even dimension.
template <OrderedField F>
std::pair<SquareClass, SquareClass> check_neg_identity(const BilinearSpace& sp) {
    if (sp.dim() % 2 != 0) throw std::invalid_argument("-id is a rotation only in even dimension");
    const auto neg = Isometry<F>::trusted(-Mat<F>::identity(sp.dim()));
    return {spinor_norm(sp, neg), square_class(sp.gram_det())};
}

}  // namespace cayleyq
