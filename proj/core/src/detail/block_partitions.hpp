#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "balanced/rational.hpp"

namespace balanced::detail {

struct BlockFamily {
  std::vector<int> singletons;                    // elements with weight 1
  std::vector<std::pair<int, int>> edges;         // canonical order
  std::vector<Rational> edge_weights;             // aligned with edges
};

/// Enumerates, in canonical order, every partition of [d] into blocks of
/// size 2, odd size >= 3 (expanded into all undirected cycles), and -- when
/// allow_singletons -- size 1. Blocks are chosen for the smallest uncovered
/// element first; cycles are expanded in lexicographic order. Edge weights
/// are 1 on isolated edges and 1/2 on cycle edges.
void for_each_block_family(
    int d, bool allow_singletons,
    const std::function<void(const BlockFamily&)>& fn);

}  // namespace balanced::detail
