#include "cayleyq/subgroup.hpp"

#include <stdexcept>

#include "cayleyq/cayley.hpp"

namespace cayleyq {

Witnesses witnesses(std::size_t n) {
    if (n < 3) throw std::invalid_argument("witnesses need dimension n >= 3");
    const BilinearSpace sp = BilinearSpace::identity(n);

    Mat<Rat> b(n);
    b(0, 1) = 1;
    b(1, 0) = -1;
    auto inside = Isometry<RatFunc>(sp, infinitesimal_rotation(b));

    Mat<RatFunc> out = Mat<RatFunc>::identity(n);
    if (n % 2 == 1) {
        // -tau_{e_1} = diag(1, -1, ..., -1)
        for (std::size_t i = 1; i < n; ++i) out(i, i) = -1;
    } else {
        // tau_{e_1} tau_{e_2}; -tau_u has determinant -1 here
        out(0, 0) = -1;
        out(1, 1) = -1;
    }
    return {std::move(inside), Isometry<RatFunc>(sp, std::move(out))};
}

}  // namespace cayleyq
