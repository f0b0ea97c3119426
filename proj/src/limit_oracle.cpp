#include "cayleyq/limit_oracle.hpp"

#include <array>

namespace cayleyq::oracle {

namespace {

constexpr int kSamples = 12;

mpq_class horner(std::span<const mpq_class> c, const mpq_class& t) {
    mpq_class acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
    return acc;
}

}  // namespace

std::optional<LimitVerdict> limit_verdict(std::span<const mpq_class> num, std::span<const mpq_class> den) {
    std::array<mpq_class, kSamples + 1> v;
    mpq_class t = 1;
    for (int k = 1; k <= kSamples; ++k) {
        t /= 10;
        const mpq_class d = horner(den, t);
        if (d == 0) return std::nullopt;
        v[k] = horner(num, t) / d;
    }
    // Limiting sign: constant over the second half of the samples.
    const int s = sgn(v[kSamples]);
    for (int k = kSamples / 2; k < kSamples; ++k)
        if (sgn(v[k]) != s) return std::nullopt;

    LimitVerdict out;
    out.sign = s;
    // Decay: t^d with d >= 1 shrinks the value by >= 10^6 between k = 6 and
    // k = 12; a nonzero limit or a pole does not shrink it at all.
    out.infinitesimal = s == 0 || abs(v[kSamples]) * 1000 < abs(v[kSamples / 2]);
    return out;
}

}  // namespace cayleyq::oracle
