#include "balanced/complexes.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "balanced/errors.hpp"

namespace balanced {

namespace {

std::string face_string(const std::vector<int>& face) {
  std::string s = "{";
  for (size_t k = 0; k < face.size(); ++k) {
    if (k > 0) s += ',';
    s += std::to_string(face[k] + 1);
  }
  return s + "}";
}

}  // namespace

LabeledComplex::LabeledComplex(int dim, int vertex_count,
                               std::vector<std::vector<int>> cells,
                               std::vector<int> boundary_vertices,
                               std::vector<std::pair<int, int>> antipode_pairs,
                               std::vector<int> labels,
                               std::vector<std::vector<int>> carriers)
    : dim_(dim),
      vertex_count_(vertex_count),
      cells_(std::move(cells)),
      boundary_(std::move(boundary_vertices)),
      antipode_pairs_(std::move(antipode_pairs)),
      labels_(std::move(labels)),
      carriers_(std::move(carriers)) {
  if (dim_ < 1) throw InputError("complex: dim must be >= 1");
  if (vertex_count_ < dim_ + 1) {
    throw InputError("complex: too few vertices for the dimension");
  }
  if (cells_.empty()) throw InputError("complex: no maximal cells");

  std::vector<bool> in_cell(static_cast<size_t>(vertex_count_), false);
  for (auto& cell : cells_) {
    if (static_cast<int>(cell.size()) != dim_ + 1) {
      throw InputError("complex: cell " + face_string(cell) + " must have " +
                       std::to_string(dim_ + 1) + " vertices");
    }
    std::sort(cell.begin(), cell.end());
    if (std::adjacent_find(cell.begin(), cell.end()) != cell.end()) {
      throw InputError("complex: repeated vertex in cell " +
                       face_string(cell));
    }
    if (cell.front() < 0 || cell.back() >= vertex_count_) {
      throw InputError("complex: vertex id out of range in cell " +
                       face_string(cell));
    }
    for (int v : cell) in_cell[static_cast<size_t>(v)] = true;
  }
  std::sort(cells_.begin(), cells_.end());
  if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end()) {
    throw InputError("complex: duplicate maximal cell");
  }
  for (int v = 0; v < vertex_count_; ++v) {
    if (!in_cell[static_cast<size_t>(v)]) {
      throw InputError("complex: vertex " + std::to_string(v + 1) +
                       " lies in no cell");
    }
  }

  // Ridges: (dim-1)-faces. A disc triangulation has each ridge in one
  // cell (boundary) or two cells (interior).
  std::map<std::vector<int>, std::vector<size_t>> ridge_cells;
  for (size_t c = 0; c < cells_.size(); ++c) {
    for (size_t drop = 0; drop < cells_[c].size(); ++drop) {
      std::vector<int> ridge;
      ridge.reserve(cells_[c].size() - 1);
      for (size_t k = 0; k < cells_[c].size(); ++k) {
        if (k != drop) ridge.push_back(cells_[c][k]);
      }
      ridge_cells[ridge].push_back(c);
    }
  }
  std::set<std::vector<int>> boundary_ridges;
  std::set<int> derived_boundary;
  for (const auto& [ridge, incident] : ridge_cells) {
    if (incident.size() > 2) {
      throw InputError("complex: ridge " + face_string(ridge) +
                       " lies in more than two cells");
    }
    if (incident.size() == 1) {
      boundary_ridges.insert(ridge);
      for (int v : ridge) derived_boundary.insert(v);
    }
  }

  // Connectivity through shared ridges.
  {
    std::vector<bool> seen(cells_.size(), false);
    std::vector<size_t> stack{0};
    seen[0] = true;
    size_t reached = 1;
    while (!stack.empty()) {
      const size_t c = stack.back();
      stack.pop_back();
      for (size_t drop = 0; drop < cells_[c].size(); ++drop) {
        std::vector<int> ridge;
        for (size_t k = 0; k < cells_[c].size(); ++k) {
          if (k != drop) ridge.push_back(cells_[c][k]);
        }
        for (size_t other : ridge_cells[ridge]) {
          if (!seen[other]) {
            seen[other] = true;
            ++reached;
            stack.push_back(other);
          }
        }
      }
    }
    if (reached != cells_.size()) {
      throw InputError("complex: cells are not connected");
    }
  }

  if (boundary_.empty()) {
    boundary_.assign(derived_boundary.begin(), derived_boundary.end());
  } else {
    std::sort(boundary_.begin(), boundary_.end());
    if (!std::equal(boundary_.begin(), boundary_.end(),
                    derived_boundary.begin(), derived_boundary.end(),
                    [](int a, int b) { return a == b; }) ||
        boundary_.size() != derived_boundary.size()) {
      throw InputError(
          "complex: supplied boundary does not match the derived boundary");
    }
  }

  // Edge list (all 1-faces).
  {
    std::set<std::pair<int, int>> edge_set;
    for (const auto& cell : cells_) {
      for (size_t a = 0; a < cell.size(); ++a) {
        for (size_t b = a + 1; b < cell.size(); ++b) {
          edge_set.insert({cell[a], cell[b]});
        }
      }
    }
    edges_.assign(edge_set.begin(), edge_set.end());
  }

  // Antipode checks.
  antipode_map_.assign(static_cast<size_t>(vertex_count_), -1);
  if (!antipode_pairs_.empty()) {
    for (auto& [a, b] : antipode_pairs_) {
      if (a == b) throw InputError("complex: antipode fixes a vertex");
      if (a > b) std::swap(a, b);
      for (int v : {a, b}) {
        if (v < 0 || v >= vertex_count_) {
          throw InputError("complex: antipode vertex out of range");
        }
        if (!std::binary_search(boundary_.begin(), boundary_.end(), v)) {
          throw InputError("complex: antipode vertex " + std::to_string(v + 1) +
                           " is not on the boundary");
        }
        if (antipode_map_[static_cast<size_t>(v)] != -1) {
          throw InputError("complex: vertex " + std::to_string(v + 1) +
                           " appears in two antipode pairs");
        }
      }
      antipode_map_[static_cast<size_t>(a)] = b;
      antipode_map_[static_cast<size_t>(b)] = a;
    }
    std::sort(antipode_pairs_.begin(), antipode_pairs_.end());
    for (int v : boundary_) {
      if (antipode_map_[static_cast<size_t>(v)] == -1) {
        throw InputError("complex: boundary vertex " + std::to_string(v + 1) +
                         " has no antipode");
      }
    }
    for (const auto& ridge : boundary_ridges) {
      std::vector<int> image;
      image.reserve(ridge.size());
      for (int v : ridge) {
        image.push_back(antipode_map_[static_cast<size_t>(v)]);
      }
      std::sort(image.begin(), image.end());
      if (!boundary_ridges.count(image)) {
        throw InputError("complex: antipode does not map boundary face " +
                         face_string(ridge) + " to a boundary face");
      }
    }
  }

  if (!labels_.empty() &&
      labels_.size() != static_cast<size_t>(vertex_count_)) {
    throw InputError("complex: need one label per vertex");
  }
  if (!carriers_.empty() &&
      carriers_.size() != static_cast<size_t>(vertex_count_)) {
    throw InputError("complex: need one carrier per vertex");
  }
  for (auto& carrier : carriers_) {
    if (carrier.empty()) throw InputError("complex: empty carrier");
    std::sort(carrier.begin(), carrier.end());
    if (std::adjacent_find(carrier.begin(), carrier.end()) != carrier.end()) {
      throw InputError("complex: repeated entry in carrier");
    }
  }
}

int LabeledComplex::antipode(int v) const {
  if (v < 0 || v >= vertex_count_ ||
      antipode_map_[static_cast<size_t>(v)] == -1) {
    throw InputError("complex: no antipode for vertex " +
                     std::to_string(v + 1));
  }
  return antipode_map_[static_cast<size_t>(v)];
}

const std::vector<int>& LabeledComplex::labels() const {
  if (labels_.empty()) throw InputError("complex: unlabeled");
  return labels_;
}

int LabeledComplex::label(int v) const {
  if (v < 0 || v >= vertex_count_) {
    throw InputError("complex: vertex id out of range");
  }
  return labels()[static_cast<size_t>(v)];
}

LabeledComplex LabeledComplex::with_labels(std::vector<int> labels) const {
  return LabeledComplex(dim_, vertex_count_, cells_, boundary_,
                        antipode_pairs_, std::move(labels), carriers_);
}

LabeledComplex generate_disc_triangulation(DiscKind kind, int size) {
  switch (kind) {
    case DiscKind::SubdividedSimplex: {
      const int k = size;
      if (k < 1) throw InputError("subdivided simplex: size must be >= 1");
      // Vertices are lattice points (i, j) with i + j <= k, barycentric
      // coordinates (i, j, k-i-j).
      std::map<std::pair<int, int>, int> id;
      std::vector<std::vector<int>> carriers;
      for (int i = 0; i <= k; ++i) {
        for (int j = 0; j + i <= k; ++j) {
          id[{i, j}] = static_cast<int>(id.size());
          std::vector<int> carrier;
          if (i > 0) carrier.push_back(1);
          if (j > 0) carrier.push_back(2);
          if (k - i - j > 0) carrier.push_back(3);
          carriers.push_back(std::move(carrier));
        }
      }
      std::vector<std::vector<int>> cells;
      for (int i = 0; i + 1 <= k; ++i) {
        for (int j = 0; i + j + 1 <= k; ++j) {
          cells.push_back({id[{i, j}], id[{i + 1, j}], id[{i, j + 1}]});
          if (i + j + 2 <= k) {
            cells.push_back(
                {id[{i + 1, j}], id[{i, j + 1}], id[{i + 1, j + 1}]});
          }
        }
      }
      return LabeledComplex(2, static_cast<int>(id.size()), std::move(cells),
                            {}, {}, {}, std::move(carriers));
    }
    case DiscKind::SymmetricDisc: {
      const int n = size;
      if (n < 4 || n % 2 != 0) {
        throw InputError("symmetric disc: boundary size must be even, >= 4");
      }
      std::vector<std::vector<int>> cells;
      for (int i = 0; i < n; ++i) cells.push_back({i, (i + 1) % n, n});
      std::vector<std::pair<int, int>> antipode;
      for (int i = 0; i < n / 2; ++i) antipode.emplace_back(i, i + n / 2);
      return LabeledComplex(2, n + 1, std::move(cells), {},
                            std::move(antipode));
    }
    case DiscKind::SymmetricDiscSplit: {
      const int n = size;
      if (n < 4 || n % 2 != 0) {
        throw InputError("symmetric disc: boundary size must be even, >= 4");
      }
      const int c0 = n;
      const int c1 = n + 1;
      std::vector<std::vector<int>> cells;
      for (int i = 0; i < n / 2; ++i) cells.push_back({i, i + 1, c0});
      for (int i = n / 2; i < n; ++i) cells.push_back({i, (i + 1) % n, c1});
      cells.push_back({c0, c1, 0});
      cells.push_back({c0, c1, n / 2});
      std::vector<std::pair<int, int>> antipode;
      for (int i = 0; i < n / 2; ++i) antipode.emplace_back(i, i + n / 2);
      return LabeledComplex(2, n + 2, std::move(cells), {},
                            std::move(antipode));
    }
    case DiscKind::PathDisc: {
      const int m = size;
      if (m < 1) throw InputError("path disc: size must be >= 1");
      std::vector<std::vector<int>> cells;
      for (int i = 0; i < m; ++i) cells.push_back({i, i + 1});
      return LabeledComplex(1, m + 1, std::move(cells), {}, {{0, m}});
    }
  }
  throw InputError("disc triangulation: unknown kind");
}

}  // namespace balanced
