#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "balanced/rational.hpp"

namespace balanced {

/// A pure simplicial complex triangulating a disc, with optional boundary
/// antipode and optional vertex labels. Vertices are 0-based ids.
///
/// Validated eagerly on construction:
///   - every maximal cell has dim+1 distinct in-range vertices, no
///     duplicate cells, every vertex lies in some cell;
///   - every ridge ((dim-1)-face) lies in at most two cells, and the
///     cells are connected through shared ridges;
///   - a supplied boundary list must equal the derived one (vertices of
///     ridges lying in exactly one cell);
///   - the antipode, when present, is a fixed-point-free involution of
///     the boundary vertices mapping boundary ridges to boundary ridges.
class LabeledComplex {
 public:
  LabeledComplex(int dim, int vertex_count,
                 std::vector<std::vector<int>> cells,
                 std::vector<int> boundary_vertices = {},
                 std::vector<std::pair<int, int>> antipode_pairs = {},
                 std::vector<int> labels = {},
                 std::vector<std::vector<int>> carriers = {});

  int dim() const { return dim_; }
  int vertex_count() const { return vertex_count_; }
  const std::vector<std::vector<int>>& cells() const { return cells_; }
  /// All 1-faces, each sorted, the list sorted lexicographically.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& boundary_vertices() const { return boundary_; }

  bool has_antipode() const { return !antipode_pairs_.empty(); }
  const std::vector<std::pair<int, int>>& antipode_pairs() const {
    return antipode_pairs_;
  }
  /// Partner of a boundary vertex; throws InputError when absent.
  int antipode(int v) const;

  bool labeled() const { return !labels_.empty(); }
  const std::vector<int>& labels() const;
  int label(int v) const;

  bool has_carriers() const { return !carriers_.empty(); }
  const std::vector<std::vector<int>>& carriers() const { return carriers_; }

  /// Copy of this complex with different labels (revalidated).
  LabeledComplex with_labels(std::vector<int> labels) const;

 private:
  int dim_;
  int vertex_count_;
  std::vector<std::vector<int>> cells_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> boundary_;
  std::vector<std::pair<int, int>> antipode_pairs_;
  std::vector<int> antipode_map_;  // -1 where undefined
  std::vector<int> labels_;
  std::vector<std::vector<int>> carriers_;
};

enum class DiscKind {
  SubdividedSimplex,  // dim 2: edgewise subdivision of a triangle, k^2 cells
  SymmetricDisc,      // dim 2: even n-gon boundary around one hub vertex
  SymmetricDiscSplit, // dim 2: even n-gon boundary around two hub vertices
  PathDisc,           // dim 1: path of m edges, antipodal endpoints
};

/// Deterministic unlabeled skeletons for the lemma suites. The subdivided
/// simplex carries Sperner carriers; the others carry boundary antipodes.
LabeledComplex generate_disc_triangulation(DiscKind kind, int size);

}  // namespace balanced
