#include "balanced/enumeration.hpp"

#include <algorithm>
#include <string>

#include "balanced/errors.hpp"

namespace balanced {

namespace {

void validate_subset(const PointSet& set, const IndexSubset& subset) {
  if (subset.empty()) throw InputError("index subset: must be nonempty");
  for (size_t k = 0; k < subset.size(); ++k) {
    if (subset[k] < 0 || subset[k] >= set.size()) {
      throw InputError("index subset: index out of range");
    }
    if (k > 0 && subset[k] <= subset[k - 1]) {
      throw InputError("index subset: indices must be strictly increasing");
    }
  }
}

std::vector<Point> gather(const PointSet& set, const IndexSubset& subset) {
  std::vector<Point> pts;
  pts.reserve(subset.size());
  for (int i : subset) pts.push_back(set[i]);
  return pts;
}

}  // namespace

std::optional<BalancedWitness> is_balanced_subset(const PointSet& set,
                                                  const IndexSubset& subset) {
  validate_subset(set, subset);
  return convex_membership(centroid(set), gather(set, subset));
}

bool is_minimal_balanced(const PointSet& set, const IndexSubset& subset) {
  if (!is_balanced_subset(set, subset)) return false;
  if (subset.size() == 1) return true;  // removing the only index leaves nothing
  const Point c = centroid(set);
  for (size_t drop = 0; drop < subset.size(); ++drop) {
    IndexSubset reduced;
    reduced.reserve(subset.size() - 1);
    for (size_t k = 0; k < subset.size(); ++k) {
      if (k != drop) reduced.push_back(subset[k]);
    }
    if (convex_membership(c, gather(set, reduced))) return false;
  }
  return true;
}

MinimalBalancedCatalog enumerate_minimal_balanced(const PointSet& set,
                                                  std::uint64_t budget) {
  const int m = set.size();
  if (m > 63) {
    throw InputError("enumerate minimal balanced: point sets beyond 63 "
                     "points are outside the exhaustive range");
  }
  const Point c = centroid(set);
  const int affdim = affine_dimension(set);
  const int max_size = std::min(m, affdim + 1);

  std::vector<std::uint64_t> found_masks;
  std::vector<CatalogMember> members;
  std::uint64_t examined = 0;

  IndexSubset combo;
  for (int k = 1; k <= max_size; ++k) {
    combo.assign(static_cast<size_t>(k), 0);
    for (int i = 0; i < k; ++i) combo[static_cast<size_t>(i)] = i;
    while (true) {
      if (++examined > budget) {
        throw BudgetError("enumerate minimal balanced: budget of " +
                          std::to_string(budget) +
                          " subsets exceeded; partial results discarded");
      }
      std::uint64_t mask = 0;
      for (int i : combo) mask |= std::uint64_t{1} << i;
      bool pruned = false;
      for (std::uint64_t f : found_masks) {
        if ((mask & f) == f) {
          pruned = true;
          break;
        }
      }
      if (!pruned) {
        // Any balanced subset surviving the prune is minimal: all smaller
        // minimal sets are already in found_masks.
        if (auto witness = convex_membership(c, gather(set, combo))) {
          members.push_back(CatalogMember{combo, std::move(witness->weights)});
          found_masks.push_back(mask);
        }
      }
      // next k-combination of {0, ..., m-1}
      int pos = k - 1;
      while (pos >= 0 && combo[static_cast<size_t>(pos)] == m - k + pos) --pos;
      if (pos < 0) break;
      ++combo[static_cast<size_t>(pos)];
      for (int i = pos + 1; i < k; ++i) {
        combo[static_cast<size_t>(i)] = combo[static_cast<size_t>(i - 1)] + 1;
      }
    }
  }

  return MinimalBalancedCatalog{set, affdim, std::move(members)};
}

}  // namespace balanced
