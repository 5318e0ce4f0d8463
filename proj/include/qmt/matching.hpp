#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace qmt {

/// Maximum bipartite matching of left vertices 0..L-1 into right vertices
/// 0..R-1 by repeated augmenting-path search (Kuhn).
///
/// `candidates[l]` lists the right vertices adjacent to l. Returns, for each
/// left vertex, its matched right vertex, or nullopt when no matching
/// saturates the left side.
std::optional<std::vector<std::size_t>> saturating_matching(
    const std::vector<std::vector<std::size_t>>& candidates, std::size_t right_count);

}  // namespace qmt
