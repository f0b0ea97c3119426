#pragma once

#include <optional>
#include <span>

#include <gmpxx.h>

namespace cayleyq::oracle {

// Brute-force reference for the order on Q(e). It never touches Poly or
// RatFunc: the quotient num(t)/den(t) of raw coefficient lists (index k is
// the coefficient of t^k) is evaluated in exact rationals at t = 10^-k,
// k = 1..12, and the limiting behaviour is read off the samples.

struct LimitVerdict {
    int sign = 0;
    bool infinitesimal = false;
};

/// nullopt when the samples are inconclusive (sign not yet stable, or den
/// vanishes at a sample point).
std::optional<LimitVerdict> limit_verdict(std::span<const mpq_class> num, std::span<const mpq_class> den);

}  // namespace cayleyq::oracle
