#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qmt/quantale.hpp"

namespace qmt {

/// Shape of a 2-D grid index set, row-major.
struct GridShape {
    std::size_t rows = 0;
    std::size_t cols = 0;

    friend bool operator==(const GridShape&, const GridShape&) = default;
};

/// The finite index set {0, ..., size-1}, optionally carrying a grid shape.
class IndexSet {
public:
    /// Throws ParameterError when size == 0.
    explicit IndexSet(std::size_t size);
    /// Throws ParameterError when rows or cols is 0.
    explicit IndexSet(GridShape shape);

    std::size_t size() const noexcept { return size_; }
    const std::optional<GridShape>& shape() const noexcept { return shape_; }

    /// Flat index of grid position (r, c). Requires a shape.
    std::size_t at(std::size_t r, std::size_t c) const;

    friend bool operator==(const IndexSet&, const IndexSet&) = default;

private:
    std::size_t size_;
    std::optional<GridShape> shape_;
};

/// An element of the free module [0,1]^X: one value per index.
class ModuleElement {
public:
    /// All-zero element.
    explicit ModuleElement(IndexSet index);
    /// Throws ShapeError on a length mismatch, DomainError on entries outside [0,1].
    ModuleElement(IndexSet index, std::span<const double> values);
    ModuleElement(IndexSet index, std::vector<Value> values);

    const IndexSet& index() const noexcept { return index_; }
    std::size_t size() const noexcept { return values_.size(); }

    Value operator[](std::size_t i) const noexcept { return values_[i]; }
    /// Bounds-checked access. Throws IndexError.
    Value at(std::size_t i) const;
    void set(std::size_t i, Value v);

    std::span<const Value> values() const noexcept { return values_; }
    std::vector<double> to_doubles() const;

    /// Same element over a different index set of equal size (e.g. to attach a grid shape).
    ModuleElement reindexed(IndexSet index) const;

    friend bool operator==(const ModuleElement&, const ModuleElement&) = default;

private:
    IndexSet index_;
    std::vector<Value> values_;
};

ModuleElement bottom(const IndexSet& index);
/// All-ones element.
ModuleElement top(const IndexSet& index);
/// Indicator of x0. Throws IndexError when x0 >= index.size().
ModuleElement delta(const IndexSet& index, std::size_t x0);

/// Pointwise max. Throws ShapeError on an empty list or mismatched index sets.
ModuleElement join_elems(std::span<const ModuleElement> fs);
ModuleElement join_elems(const ModuleElement& f, const ModuleElement& g);
/// Pointwise min. Same errors as join_elems.
ModuleElement meet_elems(std::span<const ModuleElement> fs);
ModuleElement meet_elems(const ModuleElement& f, const ModuleElement& g);

/// (a * f)(x) = mul(a, f(x)).
ModuleElement scalar_mul(const Quantale& q, Value a, const ModuleElement& f);
/// (a \ f)(x) = residuum(a, f(x)); right adjoint of scalar_mul(q, a, .).
ModuleElement scalar_residuum(const Quantale& q, Value a, const ModuleElement& f);

/// Pointwise f <= g + tol. Throws ShapeError on mismatched index sets.
bool leq(const ModuleElement& f, const ModuleElement& g, double tol = 0.0);
/// Pointwise |f - g| <= tol.
bool approx_equal(const ModuleElement& f, const ModuleElement& g, double tol = kDefaultTolerance);
/// Largest pointwise absolute difference.
double max_abs_diff(const ModuleElement& f, const ModuleElement& g);

/// Throws ShapeError unless both elements share an index set.
void require_same_index(const IndexSet& a, const IndexSet& b, const char* what);
/// Throws DomainError when an entry of f is outside the carrier of q.
void require_carrier(const Quantale& q, const ModuleElement& f);

}  // namespace qmt
