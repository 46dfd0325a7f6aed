#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "balanced/complexes.hpp"
#include "balanced/enumeration.hpp"

namespace balanced {

// Each search takes the labels stored in the complex, or -- for the
// exhaustive drivers -- an external label vector over the same vertices.

/// True iff every vertex's label belongs to its carrier (the vertex set of
/// the minimal face of the ambient simplex containing it). Labels must lie
/// in {1, ..., dim+1}.
bool check_sperner_admissible(const LabeledComplex& complex);
bool check_sperner_admissible(const LabeledComplex& complex,
                              std::span<const int> labels);

/// Maximal cells whose dim+1 labels are pairwise distinct (palette
/// {1, ..., dim+1}).
std::vector<std::vector<int>> find_rainbow_cells(const LabeledComplex& complex);
std::vector<std::vector<int>> find_rainbow_cells(const LabeledComplex& complex,
                                                 std::span<const int> labels);

/// True iff labels negate under the boundary involution. Requires an
/// antipode and nonzero labels.
bool check_antipodal_labeling(const LabeledComplex& complex);
bool check_antipodal_labeling(const LabeledComplex& complex,
                              std::span<const int> labels);

/// All 1-faces whose endpoint labels are exact negatives. Labels must be
/// nonzero (signed palette).
std::vector<std::pair<int, int>> find_complementary_edges(
    const LabeledComplex& complex);
std::vector<std::pair<int, int>> find_complementary_edges(
    const LabeledComplex& complex, std::span<const int> labels);

struct ParityResult {
  std::vector<std::vector<int>> cells;
  bool odd = false;
};

/// Maximal cells whose labels, ordered by magnitude, strictly alternate in
/// sign (both global sign patterns count). Magnitudes are bounded by
/// max_magnitude. Throws InputError if a complementary edge is present,
/// naming one.
ParityResult find_alternating_simplices(const LabeledComplex& complex,
                                        int max_magnitude);
ParityResult find_alternating_simplices(const LabeledComplex& complex,
                                        int max_magnitude,
                                        std::span<const int> labels);

/// Maximal cells whose label set equals lambda or -lambda, where lambda
/// holds exactly one label of each magnitude 1..dim+1. Throws InputError
/// if a complementary edge is present.
ParityResult find_shashkin_cells(const LabeledComplex& complex,
                                 const std::vector<int>& lambda);
ParityResult find_shashkin_cells(const LabeledComplex& complex,
                                 const std::vector<int>& lambda,
                                 std::span<const int> labels);

struct TheoremBWitness {
  bool found = false;
  std::vector<int> face;  // simplex of T whose labels cover the member
  IndexSubset member;     // element of BS(V), 0-based point indices
};

/// Searches for a simplex of T and a member I of BS(V) such that the
/// simplex's vertices are colored with all of I (labels map to point
/// indices through label_to_point). Absence is reported, not thrown: the
/// boundary hypothesis is not machine-checked in general.
TheoremBWitness theorem_b_witness(const MinimalBalancedCatalog& catalog,
                                  const LabeledComplex& complex,
                                  const std::map<int, int>& label_to_point);
TheoremBWitness theorem_b_witness(
    const PointSet& points, const LabeledComplex& complex,
    const std::map<int, int>& label_to_point,
    std::uint64_t budget = kDefaultEnumerationBudget);

inline constexpr std::uint64_t kDefaultLabelingCap = 10'000'000;

/// {-n, ..., -1, +1, ..., +n} in ascending order.
std::vector<int> signed_palette(int n);

/// Every labeling of the complex's vertices from the palette; when
/// antipodal, boundary partners are forced to negated labels and only
/// interior vertices and one representative per antipodal pair vary.
/// Returns the number of labelings visited. Throws BudgetError when the
/// labeling space exceeds `cap`.
std::uint64_t for_each_labeling(
    const LabeledComplex& complex, const std::vector<int>& palette,
    bool antipodal, const std::function<void(std::span<const int>)>& fn,
    std::uint64_t cap = kDefaultLabelingCap);

/// Every Sperner-admissible labeling (each vertex ranges over its own
/// carrier). Returns the number of labelings visited.
std::uint64_t for_each_sperner_labeling(
    const LabeledComplex& complex,
    const std::function<void(std::span<const int>)>& fn,
    std::uint64_t cap = kDefaultLabelingCap);

}  // namespace balanced
