#pragma once

#include <string>
#include <vector>

#include "balanced/rational.hpp"

namespace balanced {

/// A point with exact rational coordinates.
struct Point {
  std::vector<Rational> coords;

  int dimension() const { return static_cast<int>(coords.size()); }
  bool operator==(const Point& other) const = default;
};

/// Lexicographic coordinate order; used only for canonical output.
bool lex_less(const Point& a, const Point& b);

/// An ordered set of distinct points sharing one ambient dimension.
/// Immutable after construction; duplicates are rejected, not merged.
class PointSet {
 public:
  explicit PointSet(std::vector<Point> points,
                    std::vector<std::string> labels = {});

  int dimension() const { return dimension_; }
  int size() const { return static_cast<int>(points_.size()); }
  const Point& operator[](int i) const { return points_[static_cast<size_t>(i)]; }
  const std::vector<Point>& points() const { return points_; }

  /// Per-point names; empty when the set is unnamed.
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  std::vector<Point> points_;
  std::vector<std::string> labels_;
  int dimension_ = 0;
};

/// Exact coordinatewise average of the points.
Point centroid(const PointSet& set);

/// Dimension of the affine hull (exact rank of the difference matrix).
int affine_dimension(const PointSet& set);

// Point sets used throughout the library and the test suites.

/// {+e_1, -e_1, ..., +e_d, -e_d} in R^d, antipodes interleaved.
PointSet cross_polytope(int d);

/// {+v_1, -v_1, ..., +v_d, -v_d} where v_1..v_d span a simplex centered at
/// the origin of R^{d-1} (v_i = e_i for i < d, v_d = -(e_1+...+e_{d-1})).
/// Balancedness only depends on the affine class, so this rational
/// realization stands in for the regular simplex. For d = 2 the four
/// vertices collapse to the two points {+v_1, -v_1}.
PointSet plus_minus_simplex(int d);

/// V_d: the midpoints (e_i+e_j)/2 of the standard simplex's edges,
/// in lexicographic pair order (1,2), (1,3), ..., (d-1,d).
PointSet simplex_edge_midpoints(int d);

}  // namespace balanced
