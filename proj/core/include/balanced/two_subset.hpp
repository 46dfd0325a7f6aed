#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "balanced/enumeration.hpp"
#include "balanced/families.hpp"

namespace balanced {

struct GraphComponent {
  std::vector<int> vertices;               // sorted, 1-based
  std::vector<std::pair<int, int>> edges;  // canonical pair order
};

/// G(S): the subgraph of K_d whose edges are the family's pairs.
struct FamilyGraph {
  int d = 0;
  std::vector<int> vertices;  // vertices incident to at least one pair
  std::vector<GraphComponent> components;  // sorted by smallest vertex

  int vertex_count() const { return static_cast<int>(vertices.size()); }
};

FamilyGraph graph_of(const TwoSubsetFamily& family);

enum class BlockKind { OddCycle, IsolatedEdge };

struct DecompositionBlock {
  BlockKind kind;
  std::vector<int> vertices;    // sorted
  std::vector<int> cycle_order; // for OddCycle: starts at the smallest
                                // vertex, toward its smaller neighbor
};

/// A family certified minimal balanced: vertex-disjoint blocks covering
/// [d], each an isolated edge or an odd cycle, with the canonical weights
/// (1 on isolated edges, 1/2 on every cycle edge).
struct Theorem1Decomposition {
  int d = 0;
  std::vector<DecompositionBlock> blocks;  // sorted by smallest vertex
  std::vector<Rational> edge_weights;      // aligned with the family's pairs
};

enum class NotMinimalReason {
  UncoveredElement,
  DegreeOneVertex,
  EvenCycle,
  RedundantEdges,
  NotEdgeOrCycle,
};

std::string to_string(NotMinimalReason reason);

struct ClassifyResult {
  std::optional<Theorem1Decomposition> decomposition;
  NotMinimalReason reason = NotMinimalReason::NotEdgeOrCycle;
  std::string detail;

  bool minimal() const { return decomposition.has_value(); }
};

/// Decides whether the family is a minimal balanced family of 2-subsets:
/// every component of G(S) must be an isolated edge or an odd cycle and
/// the components must cover [d]. On failure the specific violated
/// condition is reported.
ClassifyResult classify(const TwoSubsetFamily& family);

/// Streams every minimal balanced 2-subset family of [d] exactly once:
/// set partitions of [d] into blocks of size 2 or odd size >= 3 (blocks
/// ordered by smallest element), each odd block expanded into its
/// (m-1)!/2 undirected cycles. Throws InputError for d < 2.
void for_each_minimal_family(
    int d, const std::function<void(const TwoSubsetFamily&)>& fn);

std::vector<TwoSubsetFamily> generate_minimal_families(int d);

struct Theorem1Report {
  int d = 0;
  std::uint64_t generated_count = 0;
  std::uint64_t geometric_count = 0;
  bool equal = false;
  std::vector<TwoSubsetFamily> only_generated;  // expected empty
  std::vector<TwoSubsetFamily> only_geometric;  // expected empty
};

/// Cross-checks the generator against the geometric enumeration of
/// BS(V_d) pulled back through the midpoint embedding.
Theorem1Report verify_theorem1(
    int d, std::uint64_t budget = kDefaultEnumerationBudget);

struct ComponentBalance {
  std::vector<int> vertices;
  bool balanced = false;
};

struct ComponentBalanceReport {
  bool family_balanced = false;
  std::vector<ComponentBalance> components;  // empty unless family balanced
};

/// For a balanced family, reports per-component balancedness (each
/// component relabeled onto [n_i] and tested on its own vertex set).
ComponentBalanceReport component_balance_check(const TwoSubsetFamily& family);

}  // namespace balanced
