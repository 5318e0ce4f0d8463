#include "qmt/transform.hpp"

#include <algorithm>
#include <string>

#include "qmt/error.hpp"
#include "qmt/matching.hpp"

namespace qmt {

Kernel::Kernel(Quantale q, IndexSet domain, IndexSet codomain)
    : q_(q), domain_(domain), codomain_(codomain), values_(domain.size() * codomain.size()) {}

Kernel::Kernel(Quantale q, IndexSet domain, IndexSet codomain, std::span<const double> values)
    : q_(q), domain_(domain), codomain_(codomain) {
    if (values.size() != domain.size() * codomain.size()) {
        throw ShapeError("kernel needs " + std::to_string(domain.size() * codomain.size()) +
                         " entries, got " + std::to_string(values.size()));
    }
    values_.reserve(values.size());
    for (double v : values) {
        values_.emplace_back(v);
        q_.require(v);
    }
}

Kernel Kernel::identity(Quantale q, IndexSet index) {
    Kernel k(q, index, index);
    for (std::size_t i = 0; i < index.size(); ++i) k.values_[i * index.size() + i] = Quantale::unit();
    return k;
}

void Kernel::set(std::size_t x, std::size_t y, Value v) {
    if (x >= domain_.size() || y >= codomain_.size()) {
        throw IndexError("kernel position (" + std::to_string(x) + "," + std::to_string(y) +
                         ") out of range");
    }
    q_.require(v.get());
    values_[x * codomain_.size() + y] = v;
}

Kernel Kernel::retagged(Quantale q) const {
    Kernel k = *this;
    k.q_ = q;
    for (Value v : values_) q.require(v.get());
    return k;
}

Kernel Kernel::reshaped(IndexSet domain, IndexSet codomain) const {
    if (domain.size() != domain_.size() || codomain.size() != codomain_.size()) {
        throw ShapeError("reshape must preserve index set sizes");
    }
    Kernel k = *this;
    k.domain_ = domain;
    k.codomain_ = codomain;
    return k;
}

ModuleElement forward(const Kernel& p, const ModuleElement& f) {
    require_same_index(p.domain(), f.index(), "forward transform input");
    const Quantale& q = p.quantale();
    require_carrier(q, f);

    const std::size_t ny = p.codomain().size();
    std::vector<double> acc(ny, 0.0);
    for (std::size_t x = 0; x < p.domain().size(); ++x) {
        const double fx = f[x].get();
        if (fx == 0.0) continue;
        const auto row = p.row(x);
        for (std::size_t y = 0; y < ny; ++y) {
            const double t = q.mul_raw(fx, row[y].get());
            if (t > acc[y]) acc[y] = t;
        }
    }
    std::vector<Value> out(ny);
    std::transform(acc.begin(), acc.end(), out.begin(), Value::unchecked);
    return ModuleElement(p.codomain(), std::move(out));
}

ModuleElement inverse(const Kernel& p, const ModuleElement& g) {
    require_same_index(p.codomain(), g.index(), "inverse transform input");
    const Quantale& q = p.quantale();
    require_carrier(q, g);

    const std::size_t nx = p.domain().size();
    std::vector<Value> out(nx);
    for (std::size_t x = 0; x < nx; ++x) {
        const auto row = p.row(x);
        double acc = 1.0;
        for (std::size_t y = 0; y < row.size(); ++y) {
            const double r = q.residuum_raw(row[y].get(), g[y].get());
            if (r < acc) acc = r;
        }
        out[x] = Value::unchecked(acc);
    }
    return ModuleElement(p.domain(), std::move(out));
}

Kernel compose(const Kernel& p1, const Kernel& p2) {
    if (!(p1.quantale() == p2.quantale())) throw ShapeError("compose: kernels use different quantales");
    require_same_index(p1.codomain(), p2.domain(), "compose");
    const Quantale& q = p1.quantale();
    const std::size_t nx = p1.domain().size();
    const std::size_t nz = p2.codomain().size();

    Kernel out(q, p1.domain(), p2.codomain());
    std::vector<double> acc(nz);
    for (std::size_t x = 0; x < nx; ++x) {
        std::fill(acc.begin(), acc.end(), 0.0);
        const auto row = p1.row(x);
        for (std::size_t y = 0; y < row.size(); ++y) {
            const double a = row[y].get();
            if (a == 0.0) continue;
            const auto next = p2.row(y);
            for (std::size_t z = 0; z < nz; ++z) {
                acc[z] = std::max(acc[z], q.mul_raw(a, next[z].get()));
            }
        }
        for (std::size_t z = 0; z < nz; ++z) out.set(x, z, Value::unchecked(acc[z]));
    }
    return out;
}

Kernel kernel_of(const Homomorphism& h, Quantale q, const IndexSet& domain,
                 const IndexSet& codomain) {
    Kernel p(q, domain, codomain);
    for (std::size_t x = 0; x < domain.size(); ++x) {
        const ModuleElement image = h(delta(domain, x));
        require_same_index(codomain, image.index(), "kernel_of: homomorphism output");
        for (std::size_t y = 0; y < codomain.size(); ++y) p.set(x, y, image[y]);
    }
    return p;
}

std::string_view to_string(KernelLevel level) noexcept {
    switch (level) {
        case KernelLevel::general:
            return "general";
        case KernelLevel::coder:
            return "coder";
        case KernelLevel::normal:
            return "normal";
        case KernelLevel::strong:
            return "strong";
        case KernelLevel::orthonormal:
            return "orthonormal";
    }
    return "unknown";
}

bool is_orthogonal(const Kernel& p) {
    const Quantale& q = p.quantale();
    if (p.codomain().size() < 2) return true;
    // By monotonicity it suffices to test the two largest entries of each row.
    for (std::size_t x = 0; x < p.domain().size(); ++x) {
        double first = 0.0;
        double second = 0.0;
        for (Value v : p.row(x)) {
            const double d = v.get();
            if (d > first) {
                second = first;
                first = d;
            } else if (d > second) {
                second = d;
            }
        }
        if (q.mul_raw(first, second) != 0.0) return false;
    }
    return true;
}

namespace {

/// Rows x admissible for each y under `admits(x, y)`, then a matching that
/// saturates Y. The matching assigns y -> x, i.e. it is the injection itself.
template <class Admits>
std::optional<std::vector<std::size_t>> find_injection(const Kernel& p, Admits admits) {
    const std::size_t nx = p.domain().size();
    const std::size_t ny = p.codomain().size();
    if (ny > nx) return std::nullopt;
    std::vector<std::vector<std::size_t>> candidates(ny);
    for (std::size_t x = 0; x < nx; ++x) {
        for (std::size_t y = 0; y < ny; ++y) {
            if (admits(x, y)) candidates[y].push_back(x);
        }
    }
    return saturating_matching(candidates, nx);
}

}  // namespace

KernelClass classify(const Kernel& p) {
    KernelClass out;
    out.orthogonal = is_orthogonal(p);

    const auto coder = find_injection(p, [&](std::size_t x, std::size_t y) {
        return p(x, y).get() >= Quantale::unit().get();
    });
    if (!coder) return out;
    out.level = KernelLevel::coder;
    out.epsilon = coder;

    const auto normal = find_injection(p, [&](std::size_t x, std::size_t y) {
        return p(x, y) == Quantale::unit();
    });
    if (!normal) return out;
    out.level = KernelLevel::normal;
    out.epsilon = normal;

    // A strong witness row is e at its own codeword and bottom at every other one.
    std::vector<std::size_t> unit_count(p.domain().size(), 0);
    std::vector<std::size_t> nonzero_count(p.domain().size(), 0);
    for (std::size_t x = 0; x < p.domain().size(); ++x) {
        for (Value v : p.row(x)) {
            if (v == Quantale::unit()) ++unit_count[x];
            if (v != Quantale::bottom()) ++nonzero_count[x];
        }
    }
    const auto strong = find_injection(p, [&](std::size_t x, std::size_t y) {
        return p(x, y) == Quantale::unit() && nonzero_count[x] == 1 && unit_count[x] == 1;
    });
    if (!strong) return out;
    out.level = out.orthogonal ? KernelLevel::orthonormal : KernelLevel::strong;
    out.epsilon = strong;
    return out;
}

}  // namespace qmt
