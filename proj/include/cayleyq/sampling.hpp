#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "cayleyq/matrix.hpp"
#include "cayleyq/quadspace.hpp"

namespace cayleyq {

using Rng = std::mt19937_64;

inline long uniform_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// Skew-symmetric integer matrix with entries in [-bound, bound]; never zero
/// when nonzero is set.
inline Mat<Rat> random_skew(Rng& rng, std::size_t n, long bound = 3, bool nonzero = true) {
    for (;;) {
        Mat<Rat> b(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                b(i, j) = uniform_int(rng, -bound, bound);
                b(j, i) = -b(i, j);
            }
        if (!nonzero || !b.is_zero()) return b;
    }
}

template <OrderedField F>
Vec<F> random_nonzero_vector(Rng& rng, std::size_t n, long bound = 2) {
    for (;;) {
        Vec<F> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = F(Rat(uniform_int(rng, -bound, bound)));
        if (!v.is_zero()) return v;
    }
}

/// A product of `count` reflections along random integer vectors, together
/// with the generating list.
template <OrderedField F>
struct SampledIsometry {
    ReflectionSeq<F> generators;
    Isometry<F> sigma;
};

template <OrderedField F>
SampledIsometry<F> random_reflection_product(Rng& rng, const BilinearSpace& sp, std::size_t count,
                                             long bound = 2) {
    ReflectionSeq<F> gens;
    for (std::size_t k = 0; k < count; ++k) gens.vectors.push_back(random_nonzero_vector<F>(rng, sp.dim(), bound));
    Isometry<F> sigma = compose(sp, gens);
    return {std::move(gens), std::move(sigma)};
}

/// A rotation built from an even number (at most n) of random reflections.
template <OrderedField F>
SampledIsometry<F> random_rotation(Rng& rng, const BilinearSpace& sp, long bound = 2) {
    const auto pairs = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(sp.dim() / 2)));
    return random_reflection_product<F>(rng, sp, 2 * pairs, bound);
}

}  // namespace cayleyq
