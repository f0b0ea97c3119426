#include "cayleyq/quadspace.hpp"

namespace cayleyq {

BilinearSpace::BilinearSpace(std::vector<Rat> d) : d_(std::move(d)) {
    if (d_.size() < 2) throw std::invalid_argument("bilinear space needs dimension >= 2");
    for (const auto& x : d_)
        if (x.sign() <= 0) throw std::invalid_argument("form coefficients must be positive, got " + x.str());
}

bool BilinearSpace::is_identity_form() const {
    for (const auto& x : d_)
        if (!x.is_one()) return false;
    return true;
}

Rat BilinearSpace::gram_det() const {
    Rat p = 1;
    for (const auto& x : d_) p *= x;
    return p;
}

}  // namespace cayleyq
