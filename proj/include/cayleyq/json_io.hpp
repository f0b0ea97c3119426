#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "cayleyq/field.hpp"
#include "cayleyq/matrix.hpp"
#include "cayleyq/parse.hpp"
#include "cayleyq/quadspace.hpp"
#include "cayleyq/subgroup.hpp"

namespace cayleyq {

using json = nlohmann::json;

/// Largest dimension accepted from external input.
inline constexpr std::size_t kMaxInputDim = 8;

// Matrix:          { "n": 3, "entries": [["1", "0", ...], ...] }
// Space:           { "d": ["1", "2", ...] }
// ReflectionSeq:   [["1", "-1", "0"], ...]
// All strings use the field-element grammar. Readers throw
// std::invalid_argument (ParseError, SizeLimitExceeded, ...) on bad input.

Mat<RatFunc> matrix_from_json(const json& j);
BilinearSpace space_from_json(const json& j);
ReflectionSeq<RatFunc> reflections_from_json(const json& j);

/// Narrows a matrix over Q(e) to Q; throws std::invalid_argument if an
/// entry depends on e.
Mat<Rat> to_rational(const Mat<RatFunc>& m);

json space_to_json(const BilinearSpace& sp);

template <OrderedField F>
json to_json(const Mat<F>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return {{"n", m.dim()}, {"entries", std::move(rows)}};
}

template <OrderedField F>
json to_json(const Vec<F>& v) {
    json out = json::array();
    for (const auto& x : v.entries()) out.push_back(x.str());
    return out;
}

template <OrderedField F>
json to_json(const ReflectionSeq<F>& rs) {
    json out = json::array();
    for (const auto& u : rs.vectors) out.push_back(to_json(u));
    return out;
}

template <OrderedField F>
json to_json(const NVerdict<F>& v) {
    return {{"member", v.member},
            {"certificate", v.certificate.str()},
            {"order_at_zero", v.order_at_zero ? json(*v.order_at_zero) : json(nullptr)}};
}

template <OrderedField F>
json to_json(const ClosureReport<F>& r) {
    json out = json::array();
    for (const auto& c : r.checks)
        out.push_back({{"check", c.check}, {"certificate", c.certificate.str()}, {"member", c.member}, {"pass", c.pass}});
    return out;
}

}  // namespace cayleyq
