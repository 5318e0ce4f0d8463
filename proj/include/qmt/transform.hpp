#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qmt/free_module.hpp"
#include "qmt/quantale.hpp"

namespace qmt {

/// A kernel p : X x Y -> [0,1] tagged with the quantale it is used over.
/// Stored densely, row-major in x.
class Kernel {
public:
    /// All-zero kernel.
    Kernel(Quantale q, IndexSet domain, IndexSet codomain);
    /// Throws ShapeError when values.size() != |X|*|Y| and DomainError when an
    /// entry is outside the carrier of q.
    Kernel(Quantale q, IndexSet domain, IndexSet codomain, std::span<const double> values);

    /// 1 on the diagonal, 0 elsewhere.
    static Kernel identity(Quantale q, IndexSet index);

    const Quantale& quantale() const noexcept { return q_; }
    const IndexSet& domain() const noexcept { return domain_; }
    const IndexSet& codomain() const noexcept { return codomain_; }

    Value operator()(std::size_t x, std::size_t y) const noexcept {
        return values_[x * codomain_.size() + y];
    }
    void set(std::size_t x, std::size_t y, Value v);

    std::span<const Value> row(std::size_t x) const noexcept {
        return std::span<const Value>(values_).subspan(x * codomain_.size(), codomain_.size());
    }
    std::span<const Value> values() const noexcept { return values_; }

    /// Same entries under another quantale. Throws DomainError when an entry
    /// leaves the new carrier.
    Kernel retagged(Quantale q) const;
    /// Same entries over index sets of equal sizes (e.g. to attach grid shapes).
    Kernel reshaped(IndexSet domain, IndexSet codomain) const;

    friend bool operator==(const Kernel&, const Kernel&) = default;

private:
    Quantale q_;
    IndexSet domain_;
    IndexSet codomain_;
    std::vector<Value> values_;
};

/// H_p f(y) = join over x of mul(f(x), p(x,y)).
ModuleElement forward(const Kernel& p, const ModuleElement& f);
/// Lambda_p g(x) = meet over y of residuum(p(x,y), g(y)); right adjoint of forward.
ModuleElement inverse(const Kernel& p, const ModuleElement& g);

/// Kernel of the composite X -> Z: join over y of mul(p1(x,y), p2(y,z)).
/// forward(compose(p1, p2), f) == forward(p2, forward(p1, f)).
Kernel compose(const Kernel& p1, const Kernel& p2);

/// A join- and scalar-preserving map between free modules, given as a black box.
using Homomorphism = std::function<ModuleElement(const ModuleElement&)>;

/// Recovers the kernel of a homomorphism by probing it on the basis:
/// p(x,y) = h(delta(x))(y). The homomorphism property is not checked.
Kernel kernel_of(const Homomorphism& h, Quantale q, const IndexSet& domain,
                 const IndexSet& codomain);

/// Position in the hierarchy coder < normal < strong < orthonormal.
enum class KernelLevel { general, coder, normal, strong, orthonormal };

std::string_view to_string(KernelLevel level) noexcept;

struct KernelClass {
    KernelLevel level = KernelLevel::general;
    /// Injection Y -> X witnessing `level`; present iff level >= coder.
    std::optional<std::vector<std::size_t>> epsilon;
    /// Tracked independently of `level`: an orthogonal kernel need not be a coder.
    bool orthogonal = false;
};

/// True iff mul(p(x,y1), p(x,y2)) == 0 for every x and every y1 != y2.
bool is_orthogonal(const Kernel& p);

/// Highest level reached together with a witnessing injection. Existence of
/// the injection is decided by bipartite matching over the admissible rows of
/// each y. Comparisons against 0 and 1 are exact.
KernelClass classify(const Kernel& p);

}  // namespace qmt
