#include "qmt/quantale.hpp"

#include <cmath>
#include <string>

#include "qmt/error.hpp"

namespace qmt {

Value::Value(double v) : v_(v) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw DomainError("value " + std::to_string(v) + " outside [0,1]");
    }
}

std::string_view to_string(Family f) noexcept {
    switch (f) {
        case Family::goedel:
            return "goedel";
        case Family::product:
            return "product";
        case Family::lukasiewicz:
            return "lukasiewicz";
        case Family::boolean:
            return "boolean";
    }
    return "unknown";
}

Family parse_family(std::string_view name) {
    for (Family f : {Family::goedel, Family::product, Family::lukasiewicz, Family::boolean}) {
        if (name == to_string(f)) return f;
    }
    throw ParameterError("unknown quantale family '" + std::string(name) +
                         "' (expected goedel, product, lukasiewicz or boolean)");
}

bool Quantale::admits(double v) const noexcept {
    if (is_boolean()) return v == 0.0 || v == 1.0;
    return v >= 0.0 && v <= 1.0;
}

void Quantale::require(double v) const {
    if (!admits(v)) {
        throw DomainError("value " + std::to_string(v) + " is outside the carrier of the " +
                          std::string(to_string(family_)) + " quantale");
    }
}

double Quantale::tighten(double x, double y, double z) const noexcept {
    while (z > 0.0 && mul_raw(z, x) > y) z = std::nextafter(z, 0.0);
    while (z < 1.0) {
        const double up = std::nextafter(z, 1.0);
        if (mul_raw(up, x) > y) break;
        z = up;
    }
    return z;
}

Value Quantale::mul(Value x, Value y) const {
    require(x.get());
    require(y.get());
    return Value::unchecked(mul_raw(x.get(), y.get()));
}

Value Quantale::residuum(Value x, Value y) const {
    require(x.get());
    require(y.get());
    return Value::unchecked(residuum_raw(x.get(), y.get()));
}

Value Quantale::join(std::span<const Value> xs) const {
    double acc = 0.0;
    for (Value x : xs) {
        require(x.get());
        if (x.get() > acc) acc = x.get();
    }
    return Value::unchecked(acc);
}

Value Quantale::meet(std::span<const Value> xs) const {
    double acc = 1.0;
    for (Value x : xs) {
        require(x.get());
        if (x.get() < acc) acc = x.get();
    }
    return Value::unchecked(acc);
}

Value residuum_oracle(const Quantale& q, Value x, Value y, int n) {
    if (n < 1) throw ParameterError("residuum_oracle needs n >= 1");
    if (q.is_boolean()) {
        return q.mul(Quantale::top(), x) <= y ? Quantale::top() : Quantale::bottom();
    }
    for (int k = n; k >= 0; --k) {
        const Value z = Value::unchecked(static_cast<double>(k) / n);
        if (q.mul(z, x) <= y) return z;
    }
    // k = 0 always qualifies since 0 annihilates.
    return Quantale::bottom();
}

}  // namespace qmt
