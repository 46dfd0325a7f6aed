#pragma once

#include <utility>
#include <vector>

#include "balanced/geometry.hpp"

namespace balanced {

/// A subset of [d] as a sorted list of 1-based elements.
using Subset = std::vector<int>;

/// A family of distinct nonempty subsets of [d] = {1, ..., d}.
class SubsetFamily {
 public:
  SubsetFamily(int d, std::vector<Subset> members);

  int d() const { return d_; }
  int size() const { return static_cast<int>(members_.size()); }
  const std::vector<Subset>& members() const { return members_; }

  bool operator==(const SubsetFamily& other) const = default;

 private:
  int d_;
  std::vector<Subset> members_;
};

/// A family of 2-subsets of [d], stored as pairs (i, j) with i < j in
/// lexicographic order. Duplicates are rejected.
class TwoSubsetFamily {
 public:
  TwoSubsetFamily(int d, std::vector<std::pair<int, int>> pairs);

  int d() const { return d_; }
  int size() const { return static_cast<int>(pairs_.size()); }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

  SubsetFamily as_subset_family() const;

  bool operator==(const TwoSubsetFamily& other) const = default;
  bool operator<(const TwoSubsetFamily& other) const;

 private:
  int d_;
  std::vector<std::pair<int, int>> pairs_;
};

/// Maps each pair (i, j) to the point with 1/2 in coordinates i and j and
/// 0 elsewhere; point order follows the family's canonical pair order.
PointSet midpoint_embedding(const TwoSubsetFamily& family);

}  // namespace balanced
