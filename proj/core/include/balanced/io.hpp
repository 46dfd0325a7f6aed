#pragma once

#include <optional>
#include <string>
#include <vector>

#include "balanced/complexes.hpp"
#include "balanced/enumeration.hpp"
#include "balanced/game.hpp"
#include "balanced/partitions.hpp"
#include "balanced/two_subset.hpp"

namespace balanced::io {

// Structured documents are JSON, one document per object, with a "type"
// field. Rationals are strings "p/q" (or "p"); every element, vertex id,
// and point index is 1-based in documents. Writers are deterministic:
// identical values produce byte-identical text. Readers throw InputError
// with a description of the malformed field.

PointSet read_point_set(const std::string& text);
std::string write_point_set(const PointSet& points);

SubsetFamily read_family(const std::string& text);
TwoSubsetFamily read_two_subset_family(const std::string& text);
std::string write_family(const SubsetFamily& family);
std::string write_family(const TwoSubsetFamily& family);

Game read_game(const std::string& text);
std::string write_game(const Game& game);

LabeledComplex read_complex(const std::string& text);
std::string write_complex(const LabeledComplex& complex);

std::string write_catalog(const MinimalBalancedCatalog& catalog);

std::string write_classification(int d, const ClassifyResult& result);

std::string write_theorem1_report(const Theorem1Report& report);

/// Table rows for d = 0..table.max_d; labeled counts are supplied for
/// d >= 2 (absent entries print as null).
std::string write_partition_table(
    const PartitionTable& table,
    const std::vector<std::optional<Integer>>& labeled_counts,
    const IdentityReport& identity);

std::string write_core_verdict(const Game& game, const CoreVerdict& verdict,
                               const std::string& method,
                               std::optional<bool> agree = std::nullopt);

struct LemmaDocument {
  std::string lemma;  // "sperner" | "tucker" | "kyfan" | "shashkin"
  bool verdict = false;
  std::vector<std::vector<int>> cells;       // witness cells or edges
  std::optional<bool> odd;                   // parity lemmas
  std::vector<int> lambda;                   // shashkin only
};
std::string write_lemma_result(const LemmaDocument& doc);

struct CrossValidationSummary {
  std::uint64_t games = 0;
  std::uint64_t seed = 0;
  int min_d = 2;
  int max_d = 6;
  std::uint64_t nonempty_count = 0;
  std::uint64_t empty_count = 0;
  std::uint64_t disagreements = 0;
};
std::string write_cross_validation_summary(const CrossValidationSummary& s);

}  // namespace balanced::io
