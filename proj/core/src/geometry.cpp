#include "balanced/geometry.hpp"

#include <algorithm>
#include <set>

#include "balanced/errors.hpp"

namespace balanced {

bool lex_less(const Point& a, const Point& b) {
  return std::lexicographical_compare(a.coords.begin(), a.coords.end(),
                                      b.coords.begin(), b.coords.end());
}

PointSet::PointSet(std::vector<Point> points, std::vector<std::string> labels)
    : points_(std::move(points)), labels_(std::move(labels)) {
  if (points_.empty()) throw InputError("point set: must be nonempty");
  dimension_ = points_.front().dimension();
  if (dimension_ < 1) throw InputError("point set: dimension must be >= 1");
  for (const Point& p : points_) {
    if (p.dimension() != dimension_) {
      throw InputError("point set: mixed dimensions");
    }
  }
  if (!labels_.empty() && labels_.size() != points_.size()) {
    throw InputError("point set: label count must match point count");
  }
  for (size_t i = 0; i < points_.size(); ++i) {
    for (size_t j = i + 1; j < points_.size(); ++j) {
      if (points_[i] == points_[j]) {
        throw InputError("point set: duplicate point at positions " +
                         std::to_string(i + 1) + " and " +
                         std::to_string(j + 1));
      }
    }
  }
}

Point centroid(const PointSet& set) {
  const int dim = set.dimension();
  Point c;
  c.coords.assign(static_cast<size_t>(dim), Rational(0));
  for (const Point& p : set.points()) {
    for (int k = 0; k < dim; ++k) {
      c.coords[static_cast<size_t>(k)] += p.coords[static_cast<size_t>(k)];
    }
  }
  const Rational m(set.size());
  for (auto& x : c.coords) x /= m;
  return c;
}

namespace {

// Exact rank via Gaussian elimination; rows are consumed.
int rational_rank(std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return 0;
  const size_t cols = rows.front().size();
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows.size(); ++col) {
    size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      const Rational f = rows[i][col] / rows[rank][col];
      for (size_t j = col; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace

int affine_dimension(const PointSet& set) {
  const int m = set.size();
  if (m == 1) return 0;
  std::vector<std::vector<Rational>> diffs;
  diffs.reserve(static_cast<size_t>(m) - 1);
  const Point& base = set[0];
  for (int i = 1; i < m; ++i) {
    std::vector<Rational> row(base.coords.size());
    for (size_t k = 0; k < row.size(); ++k) {
      row[k] = set[i].coords[k] - base.coords[k];
    }
    diffs.push_back(std::move(row));
  }
  return rational_rank(diffs);
}

PointSet cross_polytope(int d) {
  if (d < 1) throw InputError("cross polytope: d must be >= 1");
  std::vector<Point> pts;
  std::vector<std::string> labels;
  for (int i = 1; i <= d; ++i) {
    for (int sign : {+1, -1}) {
      Point p;
      p.coords.assign(static_cast<size_t>(d), Rational(0));
      p.coords[static_cast<size_t>(i - 1)] = Rational(sign);
      pts.push_back(std::move(p));
      labels.push_back((sign > 0 ? "+e" : "-e") + std::to_string(i));
    }
  }
  return PointSet(std::move(pts), std::move(labels));
}

PointSet plus_minus_simplex(int d) {
  if (d < 2) throw InputError("plus-minus simplex: d must be >= 2");
  const int dim = d - 1;
  std::vector<Point> verts;
  for (int i = 1; i < d; ++i) {
    Point p;
    p.coords.assign(static_cast<size_t>(dim), Rational(0));
    p.coords[static_cast<size_t>(i - 1)] = Rational(1);
    verts.push_back(std::move(p));
  }
  Point last;
  last.coords.assign(static_cast<size_t>(dim), Rational(-1));
  verts.push_back(std::move(last));

  std::vector<Point> pts;
  std::vector<std::string> labels;
  for (int i = 0; i < d; ++i) {
    Point neg;
    neg.coords.reserve(verts[static_cast<size_t>(i)].coords.size());
    for (const Rational& x : verts[static_cast<size_t>(i)].coords) {
      neg.coords.push_back(-x);
    }
    // d = 2: -v_1 equals v_2, so emit each point once.
    bool dup = false;
    for (const Point& q : pts) {
      if (q == verts[static_cast<size_t>(i)] || q == neg) dup = true;
    }
    if (dup) continue;
    pts.push_back(verts[static_cast<size_t>(i)]);
    labels.push_back("+v" + std::to_string(i + 1));
    pts.push_back(std::move(neg));
    labels.push_back("-v" + std::to_string(i + 1));
  }
  return PointSet(std::move(pts), std::move(labels));
}

PointSet simplex_edge_midpoints(int d) {
  if (d < 2) throw InputError("simplex edge midpoints: d must be >= 2");
  std::vector<Point> pts;
  std::vector<std::string> labels;
  const Rational half(1, 2);
  for (int i = 1; i <= d; ++i) {
    for (int j = i + 1; j <= d; ++j) {
      Point p;
      p.coords.assign(static_cast<size_t>(d), Rational(0));
      p.coords[static_cast<size_t>(i - 1)] = half;
      p.coords[static_cast<size_t>(j - 1)] = half;
      pts.push_back(std::move(p));
      labels.push_back("e" + std::to_string(i) + "_" + std::to_string(j));
    }
  }
  return PointSet(std::move(pts), std::move(labels));
}

}  // namespace balanced
