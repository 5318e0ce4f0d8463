#include "qmt/free_module.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qmt/error.hpp"

namespace qmt {

namespace {

std::string describe(const IndexSet& s) {
    if (s.shape()) {
        return std::to_string(s.shape()->rows) + "x" + std::to_string(s.shape()->cols);
    }
    return std::to_string(s.size());
}

}  // namespace

IndexSet::IndexSet(std::size_t size) : size_(size) {
    if (size == 0) throw ParameterError("index set must be non-empty");
}

IndexSet::IndexSet(GridShape shape) : size_(shape.rows * shape.cols), shape_(shape) {
    if (shape.rows == 0 || shape.cols == 0) throw ParameterError("grid dimensions must be positive");
}

std::size_t IndexSet::at(std::size_t r, std::size_t c) const {
    if (!shape_) throw ShapeError("index set has no grid shape");
    if (r >= shape_->rows || c >= shape_->cols) {
        throw IndexError("grid position (" + std::to_string(r) + "," + std::to_string(c) +
                         ") outside " + describe(*this));
    }
    return r * shape_->cols + c;
}

void require_same_index(const IndexSet& a, const IndexSet& b, const char* what) {
    if (!(a == b)) {
        throw ShapeError(std::string(what) + ": index set " + describe(a) + " does not match " +
                         describe(b));
    }
}

void require_carrier(const Quantale& q, const ModuleElement& f) {
    if (!q.is_boolean()) return;
    for (Value v : f.values()) q.require(v.get());
}

ModuleElement::ModuleElement(IndexSet index) : index_(index), values_(index.size()) {}

ModuleElement::ModuleElement(IndexSet index, std::span<const double> values) : index_(index) {
    if (values.size() != index.size()) {
        throw ShapeError("expected " + std::to_string(index.size()) + " values, got " +
                         std::to_string(values.size()));
    }
    values_.reserve(values.size());
    for (double v : values) values_.emplace_back(v);
}

ModuleElement::ModuleElement(IndexSet index, std::vector<Value> values)
    : index_(index), values_(std::move(values)) {
    if (values_.size() != index.size()) {
        throw ShapeError("expected " + std::to_string(index.size()) + " values, got " +
                         std::to_string(values_.size()));
    }
}

Value ModuleElement::at(std::size_t i) const {
    if (i >= values_.size()) throw IndexError("index " + std::to_string(i) + " out of range");
    return values_[i];
}

void ModuleElement::set(std::size_t i, Value v) {
    if (i >= values_.size()) throw IndexError("index " + std::to_string(i) + " out of range");
    values_[i] = v;
}

std::vector<double> ModuleElement::to_doubles() const {
    std::vector<double> out(values_.size());
    std::transform(values_.begin(), values_.end(), out.begin(), [](Value v) { return v.get(); });
    return out;
}

ModuleElement ModuleElement::reindexed(IndexSet index) const {
    return ModuleElement(index, values_);
}

ModuleElement bottom(const IndexSet& index) { return ModuleElement(index); }

ModuleElement top(const IndexSet& index) {
    return ModuleElement(index, std::vector<Value>(index.size(), Quantale::top()));
}

ModuleElement delta(const IndexSet& index, std::size_t x0) {
    if (x0 >= index.size()) {
        throw IndexError("delta position " + std::to_string(x0) + " outside index set of size " +
                         std::to_string(index.size()));
    }
    ModuleElement out(index);
    out.set(x0, Quantale::unit());
    return out;
}

namespace {

template <class Pick>
ModuleElement pointwise_fold(std::span<const ModuleElement> fs, const char* what, Pick pick) {
    if (fs.empty()) throw ShapeError(std::string(what) + " of an empty list");
    std::vector<Value> acc(fs.front().values().begin(), fs.front().values().end());
    for (const ModuleElement& f : fs.subspan(1)) {
        require_same_index(fs.front().index(), f.index(), what);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = pick(acc[i], f[i]);
    }
    return ModuleElement(fs.front().index(), std::move(acc));
}

}  // namespace

ModuleElement join_elems(std::span<const ModuleElement> fs) {
    return pointwise_fold(fs, "join", [](Value a, Value b) { return std::max(a, b); });
}

ModuleElement join_elems(const ModuleElement& f, const ModuleElement& g) {
    const ModuleElement both[] = {f, g};
    return join_elems(both);
}

ModuleElement meet_elems(std::span<const ModuleElement> fs) {
    return pointwise_fold(fs, "meet", [](Value a, Value b) { return std::min(a, b); });
}

ModuleElement meet_elems(const ModuleElement& f, const ModuleElement& g) {
    const ModuleElement both[] = {f, g};
    return meet_elems(both);
}

ModuleElement scalar_mul(const Quantale& q, Value a, const ModuleElement& f) {
    q.require(a.get());
    require_carrier(q, f);
    std::vector<Value> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        out[i] = Value::unchecked(q.mul_raw(a.get(), f[i].get()));
    }
    return ModuleElement(f.index(), std::move(out));
}

ModuleElement scalar_residuum(const Quantale& q, Value a, const ModuleElement& f) {
    q.require(a.get());
    require_carrier(q, f);
    std::vector<Value> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        out[i] = Value::unchecked(q.residuum_raw(a.get(), f[i].get()));
    }
    return ModuleElement(f.index(), std::move(out));
}

bool leq(const ModuleElement& f, const ModuleElement& g, double tol) {
    require_same_index(f.index(), g.index(), "comparison");
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i].get() > g[i].get() + tol) return false;
    }
    return true;
}

double max_abs_diff(const ModuleElement& f, const ModuleElement& g) {
    require_same_index(f.index(), g.index(), "comparison");
    double worst = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        worst = std::max(worst, std::abs(f[i].get() - g[i].get()));
    }
    return worst;
}

bool approx_equal(const ModuleElement& f, const ModuleElement& g, double tol) {
    return max_abs_diff(f, g) <= tol;
}

}  // namespace qmt
