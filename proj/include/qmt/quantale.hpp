#pragma once

#include <span>
#include <string>
#include <string_view>

namespace qmt {

/// Default absolute tolerance for approximate comparisons of values.
inline constexpr double kDefaultTolerance = 1e-12;

/// A truth degree in the unit interval [0,1].
class Value {
public:
    constexpr Value() noexcept = default;

    /// Throws DomainError unless 0 <= v <= 1 (NaN rejected).
    explicit Value(double v);

    /// For results of closed-form operations that are in range by construction.
    static constexpr Value unchecked(double v) noexcept { return Value(v, Unchecked{}); }

    constexpr double get() const noexcept { return v_; }

    friend constexpr bool operator==(Value, Value) noexcept = default;
    friend constexpr auto operator<=>(Value a, Value b) noexcept { return a.v_ <=> b.v_; }

private:
    struct Unchecked {};
    constexpr Value(double v, Unchecked) noexcept : v_(v) {}

    double v_ = 0.0;
};

enum class Family { goedel, product, lukasiewicz, boolean };

/// Lowercase name used in CLI flags and file headers.
std::string_view to_string(Family f) noexcept;

/// Inverse of to_string. Throws ParameterError on an unknown name.
Family parse_family(std::string_view name);

/// A commutative quantale on [0,1] (or on {0,1} for the Boolean family):
/// join is max, the product is a left-continuous t-norm with unit 1, and
/// residuum(x, y) is the largest z with mul(z, x) <= y.
///
/// Every operation of the Boolean family rejects non-binary inputs with
/// DomainError.
class Quantale {
public:
    constexpr explicit Quantale(Family family) noexcept : family_(family) {}

    constexpr Family family() const noexcept { return family_; }
    constexpr bool is_boolean() const noexcept { return family_ == Family::boolean; }

    static constexpr Value bottom() noexcept { return Value::unchecked(0.0); }
    static constexpr Value unit() noexcept { return Value::unchecked(1.0); }
    static constexpr Value top() noexcept { return Value::unchecked(1.0); }

    Value mul(Value x, Value y) const;
    Value residuum(Value x, Value y) const;

    /// Join of the empty list is 0.
    Value join(std::span<const Value> xs) const;
    /// Meet of the empty list is 1.
    Value meet(std::span<const Value> xs) const;

    /// True when v belongs to this quantale's carrier.
    bool admits(double v) const noexcept;
    /// Throws DomainError when v is outside the carrier.
    void require(double v) const;

    // Unvalidated kernels for dense loops. Callers guarantee the inputs are
    // already in the carrier.
    double mul_raw(double x, double y) const noexcept {
        switch (family_) {
            case Family::product:
                return x * y;
            case Family::lukasiewicz: {
                // hi - 1 is exact once hi >= 1/2, which keeps 1 an exact unit.
                const double hi = x < y ? y : x;
                const double lo = x < y ? x : y;
                if (hi < 0.5) return 0.0;
                const double s = (hi - 1.0) + lo;
                return s > 0.0 ? s : 0.0;
            }
            case Family::goedel:
            case Family::boolean:
                break;
        }
        return x < y ? x : y;
    }

    /// The largest double z with mul_raw(z, x) <= y, so the adjunction holds
    /// exactly for the rounded product and not just up to an ulp.
    double residuum_raw(double x, double y) const noexcept {
        if (x <= y) return 1.0;
        switch (family_) {
            case Family::goedel:
                return y;
            case Family::product:
                return tighten(x, y, y / x);
            case Family::lukasiewicz:
                return tighten(x, y, (1.0 - x) + y);
            case Family::boolean:
                break;
        }
        return 0.0;
    }

    friend constexpr bool operator==(Quantale, Quantale) noexcept = default;

private:
    /// Moves z by ulps onto the largest value whose product with x stays <= y.
    double tighten(double x, double y, double z) const noexcept;

    Family family_;
};

/// Literal evaluation of max{ k/n : 0 <= k <= n, mul(k/n, x) <= y }.
/// A test oracle for residuum; production code never calls it. For the
/// Boolean family the search runs over the carrier {0,1} only.
Value residuum_oracle(const Quantale& q, Value x, Value y, int n);

}  // namespace qmt
