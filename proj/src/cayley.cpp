#include "cayleyq/cayley.hpp"

#include <stdexcept>

namespace cayleyq {

namespace {

void require_rational_skew(const Mat<Rat>& b) {
    if (!is_skew(b)) throw std::invalid_argument("B must be skew-symmetric");
}

Mat<RatFunc> scaled_by_e(const Mat<Rat>& b) { return RatFunc::e() * embed<RatFunc>(b); }

}  // namespace

Mat<RatFunc> infinitesimal_rotation(const Mat<Rat>& b) {
    require_rational_skew(b);
    if (b.is_zero()) throw std::invalid_argument("B must be nonzero");

    const std::size_t n = b.dim();
    const Mat<RatFunc> a = cayley(scaled_by_e(b));
    const Mat<RatFunc> id = Mat<RatFunc>::identity(n);

    if (a == id || a == -id) throw std::logic_error("C(eB) collapsed to +-I");
    if (!is_orthogonal(a)) throw std::logic_error("C(eB) is not orthogonal");
    if (det(a) != RatFunc(1)) throw std::logic_error("C(eB) does not have determinant 1");
    if (!is_infinitesimal(frob_sq(id - a))) throw std::logic_error("|I - C(eB)|^2 is not infinitesimal");
    return a;
}

NeumannReport neumann_check(const Mat<Rat>& b, int m) {
    if (m <= 0 || m % 2 == 0) throw std::invalid_argument("m must be an odd positive integer");
    require_rational_skew(b);

    const std::size_t n = b.dim();
    const Mat<RatFunc> id = Mat<RatFunc>::identity(n);
    const Mat<RatFunc> eb = scaled_by_e(b);

    NeumannReport out{id, false, RatFunc(), false};
    Mat<RatFunc> term = id;  // (-eB)^k
    for (int k = 1; k < m; ++k) {
        term = term * -eb;
        out.d = out.d + term;
    }
    const Mat<RatFunc> lhs = (id + eb) * out.d;
    const Mat<RatFunc> rhs = id + power(eb, static_cast<unsigned>(m));
    out.residual_ok = lhs == rhs;

    out.inverse_gap = frob_sq(inverse(id + eb) - out.d);
    out.inverse_gap_infinitesimal = is_infinitesimal(out.inverse_gap);
    return out;
}

}  // namespace cayleyq
