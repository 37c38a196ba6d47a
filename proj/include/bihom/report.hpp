#pragma once

#include "bihom/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bihom {

using Vector = std::vector<Rational>;

/// One failed instance of an identity: which identity, on which basis
/// indices, and the (nonzero) residual. Matrix-valued residuals are stored
/// row-major.
struct Violation {
    std::string axiom;
    std::vector<std::size_t> indices;
    Vector residual;
};

/// Outcome of an exact axiom check. Passing means no violations were recorded.
class AxiomReport {
public:
    bool passed() const { return violations_.empty(); }
    const std::vector<Violation>& violations() const { return violations_; }

    void add(std::string axiom, std::vector<std::size_t> indices, Vector residual) {
        violations_.push_back({std::move(axiom), std::move(indices), std::move(residual)});
    }

    /// Records a violation iff some residual entry is nonzero.
    void expect_zero(std::string_view axiom, std::vector<std::size_t> indices, Vector residual) {
        if (std::any_of(residual.begin(), residual.end(), [](const Rational& r) { return !r.is_zero(); }))
            add(std::string(axiom), std::move(indices), std::move(residual));
    }

    void merge(const AxiomReport& other) {
        violations_.insert(violations_.end(), other.violations_.begin(), other.violations_.end());
    }

    std::size_t count(std::string_view axiom) const {
        return static_cast<std::size_t>(std::count_if(violations_.begin(), violations_.end(),
                                                      [&](const Violation& v) { return v.axiom == axiom; }));
    }
    bool has(std::string_view axiom) const { return count(axiom) > 0; }

    /// Distinct axiom names in order of first appearance.
    std::vector<std::string> failed_axioms() const {
        std::vector<std::string> names;
        for (const auto& v : violations_)
            if (std::find(names.begin(), names.end(), v.axiom) == names.end())
                names.push_back(v.axiom);
        return names;
    }

private:
    std::vector<Violation> violations_;
};

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dimension or tensor-shape mismatch between operands.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Inverse requested of a singular matrix.
class SingularMatrixError : public Error {
public:
    using Error::Error;
};

/// A twist map (alpha, beta, phi or psi) is not invertible where regularity is required.
class RegularityError : public Error {
public:
    using Error::Error;
};

/// An operation's mathematical precondition failed; the report says which.
class PreconditionError : public Error {
public:
    PreconditionError(const std::string& what, AxiomReport report)
        : Error(what), report_(std::move(report)) {}
    const AxiomReport& report() const { return report_; }

private:
    AxiomReport report_;
};

namespace detail {

/// Internal consistency assertion. A failure is an implementation defect, not a data condition.
inline void ensure(bool condition, const char* what) {
    if (!condition)
        throw std::logic_error(std::string("internal invariant violated: ") + what);
}

inline void require_shape(bool condition, const std::string& what) {
    if (!condition)
        throw ShapeError(what);
}

} // namespace detail

} // namespace bihom
