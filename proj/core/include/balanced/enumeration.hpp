#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "balanced/feasibility.hpp"
#include "balanced/geometry.hpp"

namespace balanced {

/// Sorted 0-based indices into a PointSet.
using IndexSubset = std::vector<int>;

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

struct CatalogMember {
  IndexSubset indices;
  std::vector<Rational> weights;  // convex-combination witness, aligned
};

/// BS(V): all minimal balanced subsets of V, with exact witnesses.
/// Members are in canonical order: increasing size, lexicographic within
/// one size. Every member is balanced, no member contains another, and
/// removing any single index breaks balancedness.
struct MinimalBalancedCatalog {
  PointSet point_set;
  int affine_dim;
  std::vector<CatalogMember> members;
};

/// Witness for centroid(V) in conv{v_i : i in S}, or nullopt.
std::optional<BalancedWitness> is_balanced_subset(const PointSet& set,
                                                  const IndexSubset& subset);

/// True iff S is balanced and no single-index removal stays balanced
/// (which characterizes minimality, balancedness being monotone).
bool is_minimal_balanced(const PointSet& set, const IndexSubset& subset);

/// Exhaustive level-order search. Subset size is capped at
/// affine_dimension(V) + 1 (Caratheodory), and supersets of found members
/// are pruned. Throws BudgetError when more than `budget` subsets would be
/// examined.
MinimalBalancedCatalog enumerate_minimal_balanced(
    const PointSet& set, std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace balanced
