#pragma once

// Test-only oracles, kept independent of the enumeration path they check:
// plain passes over every subset, no Caratheodory bound, no pruning.

#include <vector>

#include "balanced/enumeration.hpp"
#include "balanced/geometry.hpp"

namespace balanced::testing {

/// Every balanced subset of V, found by testing all 2^|V|-1 nonempty
/// subsets. |V| <= 20 enforced.
std::vector<IndexSubset> brute_force_balanced(const PointSet& set);

/// The inclusion-minimal elements of brute_force_balanced(set).
std::vector<IndexSubset> brute_force_minimal_balanced(const PointSet& set);

}  // namespace balanced::testing
