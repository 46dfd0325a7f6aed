#include "balanced/families.hpp"

#include <algorithm>

#include "balanced/errors.hpp"

namespace balanced {

SubsetFamily::SubsetFamily(int d, std::vector<Subset> members)
    : d_(d), members_(std::move(members)) {
  if (d_ < 1) throw InputError("subset family: d must be >= 1");
  for (Subset& s : members_) {
    if (s.empty()) throw InputError("subset family: empty member");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw InputError("subset family: repeated element inside a member");
    }
    if (s.front() < 1 || s.back() > d_) {
      throw InputError("subset family: element out of range for [d]");
    }
  }
  for (size_t i = 0; i < members_.size(); ++i) {
    for (size_t j = i + 1; j < members_.size(); ++j) {
      if (members_[i] == members_[j]) {
        throw InputError("subset family: duplicate member");
      }
    }
  }
}

TwoSubsetFamily::TwoSubsetFamily(int d, std::vector<std::pair<int, int>> pairs)
    : d_(d), pairs_(std::move(pairs)) {
  if (d_ < 2) throw InputError("two-subset family: d must be >= 2");
  for (auto& [i, j] : pairs_) {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > d_ || i == j) {
      throw InputError("two-subset family: invalid pair");
    }
  }
  std::sort(pairs_.begin(), pairs_.end());
  if (std::adjacent_find(pairs_.begin(), pairs_.end()) != pairs_.end()) {
    throw InputError("two-subset family: duplicate pair");
  }
}

SubsetFamily TwoSubsetFamily::as_subset_family() const {
  std::vector<Subset> members;
  members.reserve(pairs_.size());
  for (const auto& [i, j] : pairs_) members.push_back({i, j});
  return SubsetFamily(d_, std::move(members));
}

bool TwoSubsetFamily::operator<(const TwoSubsetFamily& other) const {
  if (d_ != other.d_) return d_ < other.d_;
  return pairs_ < other.pairs_;
}

PointSet midpoint_embedding(const TwoSubsetFamily& family) {
  if (family.size() == 0) {
    throw InputError("midpoint embedding: family has no pairs");
  }
  const int d = family.d();
  const Rational half(1, 2);
  std::vector<Point> pts;
  std::vector<std::string> labels;
  for (const auto& [i, j] : family.pairs()) {
    Point p;
    p.coords.assign(static_cast<size_t>(d), Rational(0));
    p.coords[static_cast<size_t>(i - 1)] = half;
    p.coords[static_cast<size_t>(j - 1)] = half;
    pts.push_back(std::move(p));
    labels.push_back("e" + std::to_string(i) + "_" + std::to_string(j));
  }
  return PointSet(std::move(pts), std::move(labels));
}

}  // namespace balanced
