#include "balanced/two_subset.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "balanced/errors.hpp"
#include "detail/block_partitions.hpp"

namespace balanced {

namespace detail {

namespace {

struct PartitionState {
  int d;
  bool allow_singletons;
  const std::function<void(const BlockFamily&)>* fn;
  std::vector<bool> used;                 // 1-based
  std::vector<std::vector<int>> blocks;   // chosen blocks, in order
};

// Expands the odd blocks (size >= 3) of a complete partition into cycles,
// one block at a time, and emits each resulting family.
void expand_cycles(PartitionState& st, size_t block_index, BlockFamily& fam) {
  if (block_index == st.blocks.size()) {
    (*st.fn)(fam);  // emission wrapper copies and canonicalizes
    return;
  }
  const std::vector<int>& block = st.blocks[block_index];
  if (block.size() == 1) {
    fam.singletons.push_back(block[0]);
    expand_cycles(st, block_index + 1, fam);
    fam.singletons.pop_back();
    return;
  }
  if (block.size() == 2) {
    fam.edges.emplace_back(block[0], block[1]);
    expand_cycles(st, block_index + 1, fam);
    fam.edges.pop_back();
    return;
  }
  // Odd block of size m >= 3: the (m-1)!/2 undirected cycles, enumerated as
  // permutations of the non-minimal vertices with first < last (each
  // undirected cycle is counted once, starting at the smallest vertex and
  // stepping toward its smaller neighbor).
  std::vector<int> rest(block.begin() + 1, block.end());
  std::sort(rest.begin(), rest.end());
  do {
    if (rest.front() > rest.back()) continue;
    const size_t base = fam.edges.size();
    int prev = block[0];
    for (int v : rest) {
      fam.edges.emplace_back(std::min(prev, v), std::max(prev, v));
      prev = v;
    }
    fam.edges.emplace_back(std::min(prev, block[0]), std::max(prev, block[0]));
    expand_cycles(st, block_index + 1, fam);
    fam.edges.resize(base);
  } while (std::next_permutation(rest.begin(), rest.end()));
}

void expand_all(PartitionState& st) {
  BlockFamily fam;
  const size_t cycle_edges = [&] {
    size_t n = 0;
    for (const auto& b : st.blocks) n += b.size() >= 3 ? b.size() : b.size() / 2;
    return n;
  }();
  fam.edges.reserve(cycle_edges);
  // Edge weights are attached after emission ordering is fixed; see caller.
  expand_cycles(st, 0, fam);
}

void recurse(PartitionState& st) {
  int first = 0;
  for (int e = 1; e <= st.d; ++e) {
    if (!st.used[static_cast<size_t>(e)]) {
      first = e;
      break;
    }
  }
  if (first == 0) {
    expand_all(st);
    return;
  }

  std::vector<int> remaining;
  for (int e = first + 1; e <= st.d; ++e) {
    if (!st.used[static_cast<size_t>(e)]) remaining.push_back(e);
  }

  auto try_block = [&](const std::vector<int>& others) {
    std::vector<int> block{first};
    block.insert(block.end(), others.begin(), others.end());
    for (int v : block) st.used[static_cast<size_t>(v)] = true;
    st.blocks.push_back(block);
    recurse(st);
    st.blocks.pop_back();
    for (int v : block) st.used[static_cast<size_t>(v)] = false;
  };

  if (st.allow_singletons) try_block({});

  // Blocks of size 2, then odd sizes 3, 5, ... -- subsets of `remaining` in
  // lexicographic order for each size.
  std::vector<size_t> sizes{1};
  for (size_t s = 2; s <= remaining.size(); s += 2) sizes.push_back(s);
  for (size_t pick : sizes) {
    if (pick > remaining.size()) continue;
    std::vector<size_t> idx(pick);
    for (size_t i = 0; i < pick; ++i) idx[i] = i;
    while (true) {
      std::vector<int> others;
      others.reserve(pick);
      for (size_t i : idx) others.push_back(remaining[i]);
      try_block(others);
      size_t pos = pick;
      while (pos > 0 && idx[pos - 1] == remaining.size() - pick + (pos - 1)) {
        --pos;
      }
      if (pos == 0) break;
      ++idx[pos - 1];
      for (size_t i = pos; i < pick; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
}

}  // namespace

void for_each_block_family(int d, bool allow_singletons,
                           const std::function<void(const BlockFamily&)>& fn) {
  if (d < 1) throw InputError("block families: d must be >= 1");
  // Weight assignment happens once per emitted family: cycle edges carry
  // 1/2, isolated edges carry 1. Edges are produced per block and sorted;
  // to keep weights aligned we recompute membership from the block sizes.
  PartitionState st;
  st.d = d;
  st.allow_singletons = allow_singletons;
  std::function<void(const BlockFamily&)> wrapped =
      [&fn, d](const BlockFamily& fam) {
        BlockFamily out = fam;
        std::sort(out.edges.begin(), out.edges.end());
        // An isolated edge is one whose endpoints meet no other family
        // edge; everything else lies on an odd cycle.
        std::vector<int> degree(static_cast<size_t>(d) + 1, 0);
        for (const auto& [a, b] : out.edges) {
          ++degree[static_cast<size_t>(a)];
          ++degree[static_cast<size_t>(b)];
        }
        out.edge_weights.clear();
        out.edge_weights.reserve(out.edges.size());
        for (const auto& [a, b] : out.edges) {
          const bool isolated = degree[static_cast<size_t>(a)] == 1 &&
                                degree[static_cast<size_t>(b)] == 1;
          out.edge_weights.push_back(isolated ? Rational(1) : Rational(1, 2));
        }
        fn(out);
      };
  st.fn = &wrapped;
  st.used.assign(static_cast<size_t>(d) + 1, false);
  recurse(st);
}

}  // namespace detail

FamilyGraph graph_of(const TwoSubsetFamily& family) {
  FamilyGraph graph;
  graph.d = family.d();

  std::set<int> vertex_set;
  std::map<int, std::vector<int>> adjacency;
  for (const auto& [i, j] : family.pairs()) {
    vertex_set.insert(i);
    vertex_set.insert(j);
    adjacency[i].push_back(j);
    adjacency[j].push_back(i);
  }
  graph.vertices.assign(vertex_set.begin(), vertex_set.end());

  std::set<int> seen;
  for (int start : graph.vertices) {
    if (seen.count(start)) continue;
    GraphComponent comp;
    std::vector<int> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      comp.vertices.push_back(v);
      for (int w : adjacency[v]) {
        if (!seen.count(w)) {
          seen.insert(w);
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.vertices.begin(), comp.vertices.end());
    for (const auto& pr : family.pairs()) {
      if (std::binary_search(comp.vertices.begin(), comp.vertices.end(),
                             pr.first)) {
        comp.edges.push_back(pr);
      }
    }
    graph.components.push_back(std::move(comp));
  }
  // BFS from sorted vertices already yields components ordered by their
  // smallest vertex.
  return graph;
}

std::string to_string(NotMinimalReason reason) {
  switch (reason) {
    case NotMinimalReason::UncoveredElement: return "uncovered-element";
    case NotMinimalReason::DegreeOneVertex: return "degree-one-vertex";
    case NotMinimalReason::EvenCycle: return "even-cycle";
    case NotMinimalReason::RedundantEdges: return "redundant-edges";
    case NotMinimalReason::NotEdgeOrCycle: return "not-edge-or-cycle";
  }
  return "unknown";
}

ClassifyResult classify(const TwoSubsetFamily& family) {
  const FamilyGraph graph = graph_of(family);

  auto fail = [](NotMinimalReason reason, std::string detail) {
    ClassifyResult r;
    r.reason = reason;
    r.detail = std::move(detail);
    return r;
  };

  std::vector<DecompositionBlock> blocks;
  for (const GraphComponent& comp : graph.components) {
    const size_t nv = comp.vertices.size();
    const size_t ne = comp.edges.size();
    if (nv == 2 && ne == 1) {
      blocks.push_back(DecompositionBlock{BlockKind::IsolatedEdge,
                                          comp.vertices,
                                          {}});
      continue;
    }
    std::map<int, std::vector<int>> adjacency;
    for (const auto& [a, b] : comp.edges) {
      adjacency[a].push_back(b);
      adjacency[b].push_back(a);
    }
    for (int v : comp.vertices) {
      if (adjacency[v].size() == 1) {
        return fail(NotMinimalReason::DegreeOneVertex,
                    "vertex " + std::to_string(v) + " has degree 1");
      }
    }
    if (ne > nv) {
      return fail(NotMinimalReason::RedundantEdges,
                  "component at vertex " + std::to_string(comp.vertices[0]) +
                      " has " + std::to_string(ne) + " edges on " +
                      std::to_string(nv) + " vertices");
    }
    const bool two_regular =
        std::all_of(comp.vertices.begin(), comp.vertices.end(),
                    [&](int v) { return adjacency[v].size() == 2; });
    if (ne != nv || !two_regular) {
      return fail(NotMinimalReason::NotEdgeOrCycle,
                  "component at vertex " + std::to_string(comp.vertices[0]) +
                      " is neither an edge nor a cycle");
    }
    if (nv % 2 == 0) {
      return fail(NotMinimalReason::EvenCycle,
                  "cycle of even length " + std::to_string(nv) +
                      " at vertex " + std::to_string(comp.vertices[0]));
    }
    // Canonical cyclic order: start at the smallest vertex, step toward the
    // smaller of its two neighbors.
    DecompositionBlock block;
    block.kind = BlockKind::OddCycle;
    block.vertices = comp.vertices;
    int prev = comp.vertices[0];
    int cur = std::min(adjacency[prev][0], adjacency[prev][1]);
    block.cycle_order.push_back(prev);
    while (cur != comp.vertices[0]) {
      block.cycle_order.push_back(cur);
      const auto& nbrs = adjacency[cur];
      const int next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
      prev = cur;
      cur = next;
    }
    blocks.push_back(std::move(block));
  }

  if (graph.vertex_count() != family.d()) {
    int missing = 0;
    std::set<int> present(graph.vertices.begin(), graph.vertices.end());
    for (int e = 1; e <= family.d(); ++e) {
      if (!present.count(e)) {
        missing = e;
        break;
      }
    }
    return fail(NotMinimalReason::UncoveredElement,
                "element " + std::to_string(missing) +
                    " is covered by no pair");
  }

  Theorem1Decomposition decomposition;
  decomposition.d = family.d();
  decomposition.blocks = std::move(blocks);
  decomposition.edge_weights.reserve(family.pairs().size());
  std::set<std::pair<int, int>> isolated_edges;
  for (const DecompositionBlock& block : decomposition.blocks) {
    if (block.kind == BlockKind::IsolatedEdge) {
      isolated_edges.insert({block.vertices[0], block.vertices[1]});
    }
  }
  for (const auto& pr : family.pairs()) {
    decomposition.edge_weights.push_back(
        isolated_edges.count(pr) ? Rational(1) : Rational(1, 2));
  }

  ClassifyResult result;
  result.decomposition = std::move(decomposition);
  return result;
}

void for_each_minimal_family(
    int d, const std::function<void(const TwoSubsetFamily&)>& fn) {
  if (d < 2) {
    throw InputError("minimal 2-subset families: d must be >= 2 "
                     "(no family of pairs covers [1])");
  }
  detail::for_each_block_family(d, /*allow_singletons=*/false,
                                [&](const detail::BlockFamily& fam) {
                                  fn(TwoSubsetFamily(d, fam.edges));
                                });
}

std::vector<TwoSubsetFamily> generate_minimal_families(int d) {
  std::vector<TwoSubsetFamily> out;
  for_each_minimal_family(d, [&](const TwoSubsetFamily& f) { out.push_back(f); });
  return out;
}

Theorem1Report verify_theorem1(int d, std::uint64_t budget) {
  Theorem1Report report;
  report.d = d;

  std::set<TwoSubsetFamily> generated;
  for_each_minimal_family(d, [&](const TwoSubsetFamily& f) {
    generated.insert(f);
  });
  report.generated_count = generated.size();

  // Pull BS(V_d) back through the midpoint embedding: point k of V_d is the
  // k-th pair of [d] in lexicographic order.
  std::vector<std::pair<int, int>> pair_of_index;
  for (int i = 1; i <= d; ++i) {
    for (int j = i + 1; j <= d; ++j) pair_of_index.emplace_back(i, j);
  }
  const MinimalBalancedCatalog catalog =
      enumerate_minimal_balanced(simplex_edge_midpoints(d), budget);
  std::set<TwoSubsetFamily> geometric;
  for (const CatalogMember& member : catalog.members) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(member.indices.size());
    for (int idx : member.indices) {
      pairs.push_back(pair_of_index[static_cast<size_t>(idx)]);
    }
    geometric.insert(TwoSubsetFamily(d, std::move(pairs)));
  }
  report.geometric_count = geometric.size();

  std::set_difference(generated.begin(), generated.end(), geometric.begin(),
                      geometric.end(),
                      std::back_inserter(report.only_generated));
  std::set_difference(geometric.begin(), geometric.end(), generated.begin(),
                      generated.end(),
                      std::back_inserter(report.only_geometric));
  report.equal =
      report.only_generated.empty() && report.only_geometric.empty();
  return report;
}

ComponentBalanceReport component_balance_check(const TwoSubsetFamily& family) {
  ComponentBalanceReport report;
  if (family.size() == 0) {
    report.family_balanced = false;
    return report;
  }
  report.family_balanced =
      shapley_weights(family.as_subset_family()).has_value();
  if (!report.family_balanced) return report;

  for (const GraphComponent& comp : graph_of(family).components) {
    // Relabel the component's vertices onto [n] preserving order.
    std::map<int, int> relabel;
    for (size_t k = 0; k < comp.vertices.size(); ++k) {
      relabel[comp.vertices[k]] = static_cast<int>(k) + 1;
    }
    std::vector<Subset> members;
    members.reserve(comp.edges.size());
    for (const auto& [a, b] : comp.edges) {
      members.push_back({relabel[a], relabel[b]});
    }
    const SubsetFamily local(static_cast<int>(comp.vertices.size()),
                             std::move(members));
    report.components.push_back(ComponentBalance{
        comp.vertices, shapley_weights(local).has_value()});
  }
  return report;
}

}  // namespace balanced
