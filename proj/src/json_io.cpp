#include "cayleyq/json_io.hpp"

#include <vector>

#include "cayleyq/error.hpp"

namespace cayleyq {

namespace {

RatFunc elem_from_json(const json& j, const std::string& where) {
    if (!j.is_string()) throw std::invalid_argument(where + ": expected a field-element string");
    try {
        return parse_elem(j.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what(), e.offset);
    }
}

void check_dim(std::size_t n, const char* what) {
    if (n == 0) throw DimensionMismatch(std::string(what) + ": dimension must be positive");
    if (n > kMaxInputDim)
        throw SizeLimitExceeded(std::string(what) + ": dimension " + std::to_string(n) + " exceeds the limit of " +
                                std::to_string(kMaxInputDim));
}

}  // namespace

Mat<RatFunc> matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("entries")) throw std::invalid_argument("matrix: expected {\"n\", \"entries\"}");
    const json& rows = j.at("entries");
    if (!rows.is_array()) throw std::invalid_argument("matrix: \"entries\" must be an array of rows");
    const std::size_t n = rows.size();
    check_dim(n, "matrix");
    if (j.contains("n") && (!j.at("n").is_number_unsigned() || j.at("n").get<std::size_t>() != n))
        throw DimensionMismatch("matrix: \"n\" does not match the number of rows");
    Mat<RatFunc> m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n)
            throw DimensionMismatch("matrix: row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
        for (std::size_t k = 0; k < n; ++k)
            m(i, k) = elem_from_json(rows[i][k], "matrix entry (" + std::to_string(i) + "," + std::to_string(k) + ")");
    }
    return m;
}

BilinearSpace space_from_json(const json& j) {
    if (!j.is_object() || !j.contains("d") || !j.at("d").is_array())
        throw std::invalid_argument("space: expected {\"d\": [...]}");
    const json& d = j.at("d");
    check_dim(d.size(), "space");
    std::vector<Rat> coeffs;
    for (std::size_t i = 0; i < d.size(); ++i) {
        const RatFunc x = elem_from_json(d[i], "space coefficient " + std::to_string(i));
        if (!x.is_constant()) throw std::invalid_argument("space: coefficients must be rational");
        coeffs.push_back(x.constant_value());
    }
    return BilinearSpace(std::move(coeffs));
}

ReflectionSeq<RatFunc> reflections_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("reflections: expected an array of vectors");
    ReflectionSeq<RatFunc> rs;
    for (std::size_t k = 0; k < j.size(); ++k) {
        if (!j[k].is_array()) throw std::invalid_argument("reflections: vector " + std::to_string(k) + " is not an array");
        check_dim(j[k].size(), "reflection vector");
        std::vector<RatFunc> v;
        for (std::size_t i = 0; i < j[k].size(); ++i)
            v.push_back(elem_from_json(j[k][i], "reflection vector " + std::to_string(k)));
        rs.vectors.emplace_back(std::move(v));
    }
    return rs;
}

Mat<Rat> to_rational(const Mat<RatFunc>& m) {
    Mat<Rat> out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (!m(i, j).is_constant())
                throw std::invalid_argument("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                            ") must be rational, got " + m(i, j).str());
            out(i, j) = m(i, j).constant_value();
        }
    return out;
}

json space_to_json(const BilinearSpace& sp) {
    json d = json::array();
    for (const auto& x : sp.coefficients()) d.push_back(x.str());
    return {{"d", std::move(d)}};
}

}  // namespace cayleyq
