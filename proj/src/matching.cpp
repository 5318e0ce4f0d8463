#include "qmt/matching.hpp"

#include <limits>

namespace qmt {

namespace {

constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();

class Matcher {
public:
    Matcher(const std::vector<std::vector<std::size_t>>& adj, std::size_t right_count)
        : adj_(adj), owner_(right_count, kFree), seen_(right_count, 0) {}

    bool augment(std::size_t left) {
        ++stamp_;
        return search(left);
    }

    std::vector<std::size_t> assignment() const {
        std::vector<std::size_t> out(adj_.size(), kFree);
        for (std::size_t r = 0; r < owner_.size(); ++r) {
            if (owner_[r] != kFree) out[owner_[r]] = r;
        }
        return out;
    }

private:
    // Recursion depth is bounded by the number of left vertices.
    bool search(std::size_t left) {
        for (std::size_t r : adj_[left]) {
            if (seen_[r] == stamp_) continue;
            seen_[r] = stamp_;
            if (owner_[r] == kFree || search(owner_[r])) {
                owner_[r] = left;
                return true;
            }
        }
        return false;
    }

    const std::vector<std::vector<std::size_t>>& adj_;
    std::vector<std::size_t> owner_;
    std::vector<std::size_t> seen_;
    std::size_t stamp_ = 0;
};

}  // namespace

std::optional<std::vector<std::size_t>> saturating_matching(
    const std::vector<std::vector<std::size_t>>& candidates, std::size_t right_count) {
    if (candidates.size() > right_count) return std::nullopt;
    Matcher m(candidates, right_count);
    for (std::size_t l = 0; l < candidates.size(); ++l) {
        if (!m.augment(l)) return std::nullopt;
    }
    return m.assignment();
}

}  // namespace qmt
