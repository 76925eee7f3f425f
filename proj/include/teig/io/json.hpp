#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "teig/core/tensor.hpp"
#include "teig/error.hpp"
#include "teig/poly/unipoly.hpp"
#include "teig/spectra/spectra.hpp"

namespace teig::io {

using json = nlohmann::json;

inline json to_json(cplx c) { return json::array({c.real(), c.imag()}); }

inline json to_json(const std::vector<cplx>& v) {
    json a = json::array();
    for (const cplx& c : v) a.push_back(to_json(c));
    return a;
}

inline json to_json(const Eigen::MatrixXcd& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Infinite or NaN values serialize as null.
inline json real_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

inline json to_json(const TensorTS& t) {
    json slices = json::array();
    for (const auto& s : t.slices()) slices.push_back(to_json(s));
    return {{"n", t.n()}, {"m", t.m()}, {"slices", std::move(slices)}};
}

/// Accepts [re, im] or a bare number; `where` names the position for error messages.
inline cplx complex_from_json(const json& j, const std::string& where) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    throw DimensionMismatch(where + ": expected a number or [re, im], got " + j.dump());
}

inline std::vector<cplx> complex_vector_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw DimensionMismatch(where + ": expected an array");
    std::vector<cplx> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(complex_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

inline const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw DimensionMismatch(where + ": expected an object");
    const auto it = j.find(key);
    if (it == j.end()) throw DimensionMismatch(where + ": missing field \"" + key + "\"");
    return *it;
}

inline int int_field(const json& j, const char* key, const std::string& where) {
    const json& v = field(j, key, where);
    if (!v.is_number_integer()) throw DimensionMismatch(where + "." + key + ": expected an integer");
    return v.get<int>();
}

inline TensorTS tensor_from_json(const json& j, const std::string& where = "tensor") {
    const int n = int_field(j, "n", where);
    const int m = int_field(j, "m", where);
    const json& s = field(j, "slices", where);
    if (!s.is_array()) throw DimensionMismatch(where + ".slices: expected an array");
    std::vector<std::vector<cplx>> slices;
    for (std::size_t i = 0; i < s.size(); ++i)
        slices.push_back(complex_vector_from_json(s[i], where + ".slices[" + std::to_string(i) + "]"));
    return make_tensor_ts(n, m, std::move(slices));
}

inline EigenMultiset multiset_from_json(const json& j) {
    return EigenMultiset{complex_vector_from_json(field(j, "values", "multiset"), "multiset.values")};
}

inline json to_json(const EigenMultiset& s) { return {{"values", to_json(s.values)}}; }

inline BinaryForm form_from_json(const json& j) {
    return BinaryForm(complex_vector_from_json(field(j, "coeffs", "form"), "form.coeffs"));
}

inline UniPoly poly_from_json(const json& j) {
    return UniPoly(complex_vector_from_json(field(j, "coeffs", "polynomial"), "polynomial.coeffs"));
}

inline BlockSpec block_spec_from_json(const json& j) {
    BlockSpec spec;
    const json& blocks = field(j, "blocks", "block spec");
    if (!blocks.is_array()) throw DimensionMismatch("block spec.blocks: expected an array");
    for (std::size_t i = 0; i < blocks.size(); ++i)
        spec.blocks.push_back(tensor_from_json(blocks[i], "blocks[" + std::to_string(i) + "]"));
    if (const auto it = j.find("scalar"); it != j.end() && !it->is_null())
        spec.scalar = complex_from_json(*it, "scalar");
    return spec;
}

inline Eigen::MatrixXcd matrix_from_json(const json& j) {
    const json& rows = field(j, "matrix", "matrix input");
    if (!rows.is_array() || rows.empty()) throw DimensionMismatch("matrix: expected a nonempty array of rows");
    std::vector<std::vector<cplx>> data;
    for (std::size_t i = 0; i < rows.size(); ++i)
        data.push_back(complex_vector_from_json(rows[i], "matrix[" + std::to_string(i) + "]"));
    const std::size_t cols = data.front().size();
    if (cols == 0) throw DimensionMismatch("matrix[0]: empty row");
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(data.size()), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (data[i].size() != cols)
            throw DimensionMismatch("matrix[" + std::to_string(i) + "] has " + std::to_string(data[i].size()) +
                                    " entries, expected " + std::to_string(cols));
        for (std::size_t k = 0; k < cols; ++k) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = data[i][k];
    }
    return m;
}

}  // namespace teig::io
