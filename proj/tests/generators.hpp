#pragma once

// Hand-rolled random generators for the property tests.

#include <vector>

#include "cayleyq/matrix.hpp"
#include "cayleyq/ratfunc.hpp"
#include "cayleyq/sampling.hpp"

namespace cayleyq::testing {

inline Rat random_rat(Rng& rng, long bound = 9) {
    return Rat(mpz_class(uniform_int(rng, -bound, bound)), mpz_class(uniform_int(rng, 1, bound)));
}

inline Rat random_nonzero_rat(Rng& rng, long bound = 9) {
    for (;;) {
        Rat r = random_rat(rng, bound);
        if (!r.is_zero()) return r;
    }
}

inline Poly random_poly(Rng& rng, int max_degree = 3, long bound = 5) {
    std::vector<Rat> c(static_cast<std::size_t>(uniform_int(rng, 1, max_degree + 1)));
    for (auto& x : c) x = Rat(uniform_int(rng, -bound, bound));
    return Poly(std::move(c));
}

inline Poly random_nonzero_poly(Rng& rng, int max_degree = 3, long bound = 5) {
    for (;;) {
        Poly p = random_poly(rng, max_degree, bound);
        if (!p.is_zero()) return p;
    }
}

inline RatFunc random_ratfunc(Rng& rng, int max_degree = 3, long bound = 5) {
    return RatFunc(random_poly(rng, max_degree, bound), random_nonzero_poly(rng, max_degree, bound));
}

inline RatFunc random_nonzero_ratfunc(Rng& rng, int max_degree = 3, long bound = 5) {
    for (;;) {
        RatFunc x = random_ratfunc(rng, max_degree, bound);
        if (!x.is_zero()) return x;
    }
}

/// Rational constant c with |c| <= bound, as an element of Q(e).
inline RatFunc random_constant(Rng& rng, long bound = 9) { return RatFunc(random_rat(rng, bound)); }

inline Mat<Rat> random_rat_matrix(Rng& rng, std::size_t n, long bound = 4) {
    Mat<Rat> m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Rat(uniform_int(rng, -bound, bound));
    return m;
}

inline Mat<RatFunc> random_ratfunc_matrix(Rng& rng, std::size_t n, int max_degree = 2, long bound = 3) {
    Mat<RatFunc> m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = random_ratfunc(rng, max_degree, bound);
    return m;
}

}  // namespace cayleyq::testing
