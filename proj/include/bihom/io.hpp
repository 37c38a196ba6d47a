#pragma once

#include "bihom/algebra.hpp"
#include "bihom/cohomology.hpp"
#include "bihom/matrix.hpp"
#include "bihom/product.hpp"
#include "bihom/rational.hpp"
#include "bihom/report.hpp"
#include "bihom/representation.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace bihom {

using Json = nlohmann::json;

/// Malformed input document; the message names the file and the offending field.
class ParseError : public Error {
public:
    using Error::Error;
};

namespace io {

/// A JSON value together with its location, for error messages like `$.alpha[1][0]`.
class Field {
public:
    Field(const Json& j, std::string path) : j_(&j), path_(std::move(path)) {}

    const Json& json() const { return *j_; }
    const std::string& path() const { return path_; }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(path_ + ": " + what); }

    bool has(const char* key) const { return j_->is_object() && j_->contains(key); }

    Field operator[](const char* key) const {
        if (!j_->is_object())
            fail("expected an object");
        if (!j_->contains(key))
            fail(std::string("missing field \"") + key + "\"");
        return {(*j_)[key], path_ + "." + key};
    }

    Field operator[](std::size_t i) const { return {(*j_)[i], path_ + "[" + std::to_string(i) + "]"}; }

    /// The array elements, requiring exactly `expected` of them when given.
    std::size_t array_size(std::optional<std::size_t> expected = std::nullopt) const {
        if (!j_->is_array())
            fail("expected an array");
        if (expected && j_->size() != *expected)
            fail("expected " + std::to_string(*expected) + " entries, found " + std::to_string(j_->size()));
        return j_->size();
    }

    std::size_t size_value() const {
        if (!j_->is_number_unsigned() && !(j_->is_number_integer() && j_->get<long long>() >= 0))
            fail("expected a non-negative integer");
        return j_->get<std::size_t>();
    }

private:
    const Json* j_;
    std::string path_;
};

inline Rational rational_from_json(const Field& f) {
    const Json& j = f.json();
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const std::exception&) {
            f.fail("malformed rational \"" + j.get<std::string>() + "\"");
        }
    }
    f.fail("expected a rational (integer or \"p/q\" string)");
}

/// Integers that fit in 64 bits are written as JSON numbers, everything else as "p/q".
inline Json rational_to_json(const Rational& r) {
    if (r.is_integer() && r.numerator().fits_slong_p())
        return Json(static_cast<long long>(r.numerator().get_si()));
    return Json(r.to_string());
}

inline Vector vector_from_json(const Field& f, std::optional<std::size_t> n = std::nullopt) {
    const auto size = f.array_size(n);
    Vector v;
    v.reserve(size);
    for (std::size_t i = 0; i < size; ++i)
        v.push_back(rational_from_json(f[i]));
    return v;
}

inline Json vector_to_json(std::span<const Rational> v) {
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(rational_to_json(x));
    return out;
}

/// Array of rows.
inline Matrix matrix_from_json(const Field& f, std::size_t rows, std::size_t cols) {
    f.array_size(rows);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        auto row = vector_from_json(f[i], cols);
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = row[j];
    }
    return m;
}

inline Json matrix_to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        out.push_back(vector_to_json(m.row(i)));
    return out;
}

inline std::vector<Matrix> matrices_from_json(const Field& f, std::size_t count, std::size_t rows,
                                              std::size_t cols) {
    f.array_size(count);
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(matrix_from_json(f[i], rows, cols));
    return out;
}

inline Json matrices_to_json(const std::vector<Matrix>& ms) {
    Json out = Json::array();
    for (const auto& m : ms)
        out.push_back(matrix_to_json(m));
    return out;
}

/// c[i][j] is the coordinate vector of e_i ∘ e_j.
inline BilinearProduct product_from_json(const Field& f, std::size_t n) {
    f.array_size(n);
    BilinearProduct p(n);
    for (std::size_t i = 0; i < n; ++i) {
        f[i].array_size(n);
        for (std::size_t j = 0; j < n; ++j) {
            auto v = vector_from_json(f[i][j], n);
            for (std::size_t k = 0; k < n; ++k)
                p.at(i, j, k) = v[k];
        }
    }
    return p;
}

inline Json product_to_json(const BilinearProduct& p) {
    Json out = Json::array();
    for (std::size_t i = 0; i < p.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < p.dim(); ++j)
            row.push_back(vector_to_json(p(i, j)));
        out.push_back(row);
    }
    return out;
}

inline Json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError(path.string() + ": cannot open file");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

/// A nested document, or a path to one relative to `base`.
inline std::pair<Json, std::filesystem::path> resolve(const Field& f, const std::filesystem::path& base) {
    if (f.json().is_string()) {
        auto path = base / f.json().get<std::string>();
        return {load_json(path), path.parent_path()};
    }
    if (!f.json().is_object())
        f.fail("expected a document or a path to one");
    return {f.json(), base};
}

template <class Result, class Body>
Result with_context(const std::string& source, Body body) {
    try {
        return body();
    } catch (const ParseError& e) {
        throw ParseError(source.empty() ? e.what() : source + ": " + e.what());
    }
}

} // namespace io

enum class DocumentKind { prelie_algebra, lie_algebra, prelie_rep, lie_rep, deformation, unknown };

inline DocumentKind document_kind(const Json& j) {
    if (!j.is_object())
        return DocumentKind::unknown;
    if (j.contains("pi"))
        return DocumentKind::deformation;
    if (j.contains("L") || j.contains("R"))
        return DocumentKind::prelie_rep;
    if (j.contains("rho"))
        return DocumentKind::lie_rep;
    if (j.contains("product"))
        return DocumentKind::prelie_algebra;
    if (j.contains("bracket"))
        return DocumentKind::lie_algebra;
    return DocumentKind::unknown;
}

namespace io {

template <class Tag>
BiHomAlgebra<Tag> algebra_from_json(const Field& f, const char* key) {
    const std::size_t n = f["dim"].size_value();
    auto op = product_from_json(f[key], n);
    auto alpha = matrix_from_json(f["alpha"], n, n);
    auto beta = matrix_from_json(f["beta"], n, n);
    return BiHomAlgebra<Tag>(std::move(op), std::move(alpha), std::move(beta));
}

} // namespace io

/// {"dim": n, "product": c[i][j][k], "alpha": matrix, "beta": matrix}
inline BiHomPreLieAlgebra prelie_from_json(const Json& j, const std::string& source = "") {
    return io::with_context<BiHomPreLieAlgebra>(
        source, [&] { return io::algebra_from_json<PreLieTag>(io::Field(j, "$"), "product"); });
}

/// As prelie_from_json with the key "bracket".
inline BiHomLieAlgebra lie_from_json(const Json& j, const std::string& source = "") {
    return io::with_context<BiHomLieAlgebra>(
        source, [&] { return io::algebra_from_json<LieTag>(io::Field(j, "$"), "bracket"); });
}

inline Json to_json(const BiHomPreLieAlgebra& a) {
    return {{"dim", a.dim()},
            {"product", io::product_to_json(a.product())},
            {"alpha", io::matrix_to_json(a.alpha())},
            {"beta", io::matrix_to_json(a.beta())}};
}

inline Json to_json(const BiHomLieAlgebra& g) {
    return {{"dim", g.dim()},
            {"bracket", io::product_to_json(g.bracket())},
            {"alpha", io::matrix_to_json(g.alpha())},
            {"beta", io::matrix_to_json(g.beta())}};
}

/// {"algebra": <algebra document or path>, "vdim": m, "L": [n][m][m], "R": [n][m][m], "phi", "psi"}.
/// Paths are resolved against `base`.
inline PreLieRep prelie_rep_from_json(const Json& j, const std::filesystem::path& base = ".",
                                      const std::string& source = "") {
    return io::with_context<PreLieRep>(source, [&] {
        io::Field f(j, "$");
        auto [doc, doc_base] = io::resolve(f["algebra"], base);
        auto algebra = io::with_context<BiHomPreLieAlgebra>(
            "$.algebra", [&] { return io::algebra_from_json<PreLieTag>(io::Field(doc, "$"), "product"); });
        const auto n = algebra.dim();
        const auto m = f["vdim"].size_value();
        auto L = io::matrices_from_json(f["L"], n, m, m);
        auto R = io::matrices_from_json(f["R"], n, m, m);
        auto phi = io::matrix_from_json(f["phi"], m, m);
        auto psi = io::matrix_from_json(f["psi"], m, m);
        return PreLieRep(std::move(algebra), std::move(L), std::move(R), std::move(phi), std::move(psi));
    });
}

/// {"algebra": <BiHom-Lie document or path>, "vdim": m, "rho": [n][m][m], "phi", "psi"}.
inline LieRep lie_rep_from_json(const Json& j, const std::filesystem::path& base = ".",
                                const std::string& source = "") {
    return io::with_context<LieRep>(source, [&] {
        io::Field f(j, "$");
        auto [doc, doc_base] = io::resolve(f["algebra"], base);
        auto algebra = io::with_context<BiHomLieAlgebra>(
            "$.algebra", [&] { return io::algebra_from_json<LieTag>(io::Field(doc, "$"), "bracket"); });
        const auto n = algebra.dim();
        const auto m = f["vdim"].size_value();
        auto rho = io::matrices_from_json(f["rho"], n, m, m);
        auto phi = io::matrix_from_json(f["phi"], m, m);
        auto psi = io::matrix_from_json(f["psi"], m, m);
        return LieRep(std::move(algebra), std::move(rho), std::move(phi), std::move(psi));
    });
}

inline Json to_json(const PreLieRep& r) {
    return {{"algebra", to_json(r.algebra())},
            {"vdim", r.vdim()},
            {"L", io::matrices_to_json(r.L())},
            {"R", io::matrices_to_json(r.R())},
            {"phi", io::matrix_to_json(r.phi())},
            {"psi", io::matrix_to_json(r.psi())}};
}

inline Json to_json(const LieRep& r) {
    return {{"algebra", to_json(r.algebra())},
            {"vdim", r.vdim()},
            {"rho", io::matrices_to_json(r.rho())},
            {"phi", io::matrix_to_json(r.phi())},
            {"psi", io::matrix_to_json(r.psi())}};
}

/// {"degree": n, "tensor": nested arrays, n levels of basis indices then the value vector}.
inline Json to_json(const Cochain& f) {
    auto build = [&](auto&& self, std::size_t level, std::size_t flat) -> Json {
        if (level == f.degree())
            return io::vector_to_json(f.value(flat));
        Json out = Json::array();
        for (std::size_t i = 0; i < f.adim(); ++i)
            out.push_back(self(self, level + 1, flat * f.adim() + i));
        return out;
    };
    return {{"degree", f.degree()}, {"tensor", build(build, 0, 0)}};
}

inline Cochain cochain_from_json(const Json& j, std::size_t adim, std::size_t vdim, const std::string& source = "") {
    return io::with_context<Cochain>(source, [&] {
        io::Field f(j, "$");
        const auto degree = f["degree"].size_value();
        if (degree == 0)
            f["degree"].fail("cochains start at degree 1");
        Cochain c(degree, adim, vdim);
        auto read = [&](auto&& self, const io::Field& node, std::size_t level, std::size_t flat) -> void {
            if (level == degree) {
                c.set(flat, io::vector_from_json(node, vdim));
                return;
            }
            node.array_size(adim);
            for (std::size_t i = 0; i < adim; ++i)
                self(self, node[i], level + 1, flat * adim + i);
        };
        read(read, f["tensor"], 0, 0);
        return c;
    });
}

/// {"pi": c[i][j][k]}
inline BilinearProduct deformation_from_json(const Json& j, std::size_t n, const std::string& source = "") {
    return io::with_context<BilinearProduct>(source,
                                             [&] { return io::product_from_json(io::Field(j, "$")["pi"], n); });
}

inline Json deformation_to_json(const BilinearProduct& pi) { return {{"pi", io::product_to_json(pi)}}; }

/// A square or rectangular matrix stored under `key` ("N" for Nijenhuis documents, "matrix" for operators).
inline Matrix matrix_document_from_json(const Json& j, const char* key, std::size_t rows, std::size_t cols,
                                        const std::string& source = "") {
    return io::with_context<Matrix>(source,
                                    [&] { return io::matrix_from_json(io::Field(j, "$")[key], rows, cols); });
}

inline Json to_json(const AxiomReport& report) {
    Json violations = Json::array();
    for (const auto& v : report.violations())
        violations.push_back({{"axiom", v.axiom}, {"indices", v.indices}, {"residual", io::vector_to_json(v.residual)}});
    return {{"passed", report.passed()}, {"violations", violations}};
}

} // namespace bihom
