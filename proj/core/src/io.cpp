#include "balanced/io.hpp"

#include <algorithm>

#include <json.hpp>

#include "balanced/errors.hpp"

namespace balanced::io {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

json parse(const std::string& text, const char* what) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    throw InputError(std::string(what) + ": not valid JSON");
  }
  return doc;
}

void expect_type(const json& doc, const char* type) {
  if (!doc.is_object() || !doc.contains("type") || !doc["type"].is_string() ||
      doc["type"].get<std::string>() != type) {
    throw InputError(std::string("document: expected type \"") + type + "\"");
  }
}

int get_int(const json& doc, const char* field) {
  if (!doc.contains(field) || !doc[field].is_number_integer()) {
    throw InputError(std::string("document: missing integer field \"") +
                     field + "\"");
  }
  return doc[field].get<int>();
}

Rational get_rational(const json& value, const char* field) {
  if (!value.is_string()) {
    throw InputError(std::string("document: field \"") + field +
                     "\" must hold rationals as strings");
  }
  return parse_rational(value.get<std::string>());
}

std::vector<int> get_int_array(const json& value, const char* field) {
  if (!value.is_array()) {
    throw InputError(std::string("document: field \"") + field +
                     "\" must be an array of integers");
  }
  std::vector<int> out;
  out.reserve(value.size());
  for (const auto& item : value) {
    if (!item.is_number_integer()) {
      throw InputError(std::string("document: field \"") + field +
                       "\" must be an array of integers");
    }
    out.push_back(item.get<int>());
  }
  return out;
}

ordered_json rational_array(const std::vector<Rational>& values) {
  ordered_json arr = ordered_json::array();
  for (const Rational& v : values) arr.push_back(to_string(v));
  return arr;
}

ordered_json index_array_1based(const std::vector<int>& indices) {
  ordered_json arr = ordered_json::array();
  for (int i : indices) arr.push_back(i + 1);
  return arr;
}

ordered_json point_set_body(const PointSet& points) {
  ordered_json doc;
  doc["type"] = "point_set";
  doc["dimension"] = points.dimension();
  ordered_json pts = ordered_json::array();
  for (const Point& p : points.points()) pts.push_back(rational_array(p.coords));
  doc["points"] = std::move(pts);
  if (!points.labels().empty()) doc["labels"] = points.labels();
  return doc;
}

}  // namespace

PointSet read_point_set(const std::string& text) {
  const json doc = parse(text, "point set");
  expect_type(doc, "point_set");
  const int dim = get_int(doc, "dimension");
  if (!doc.contains("points") || !doc["points"].is_array()) {
    throw InputError("point set: missing \"points\" array");
  }
  std::vector<Point> points;
  for (const auto& row : doc["points"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw InputError("point set: each point needs \"dimension\" many "
                       "coordinates");
    }
    Point p;
    for (const auto& coord : row) {
      p.coords.push_back(get_rational(coord, "points"));
    }
    points.push_back(std::move(p));
  }
  std::vector<std::string> labels;
  if (doc.contains("labels") && !doc["labels"].is_null()) {
    if (!doc["labels"].is_array()) {
      throw InputError("point set: \"labels\" must be an array of strings");
    }
    for (const auto& l : doc["labels"]) {
      if (!l.is_string()) {
        throw InputError("point set: \"labels\" must be an array of strings");
      }
      labels.push_back(l.get<std::string>());
    }
  }
  return PointSet(std::move(points), std::move(labels));
}

std::string write_point_set(const PointSet& points) {
  return dump(point_set_body(points));
}

namespace {

std::vector<Subset> read_members(const json& doc) {
  if (!doc.contains("members") || !doc["members"].is_array()) {
    throw InputError("family: missing \"members\" array");
  }
  std::vector<Subset> members;
  for (const auto& member : doc["members"]) {
    members.push_back(get_int_array(member, "members"));
  }
  return members;
}

}  // namespace

SubsetFamily read_family(const std::string& text) {
  const json doc = parse(text, "family");
  expect_type(doc, "family");
  return SubsetFamily(get_int(doc, "d"), read_members(doc));
}

TwoSubsetFamily read_two_subset_family(const std::string& text) {
  const json doc = parse(text, "family");
  expect_type(doc, "family");
  const int d = get_int(doc, "d");
  std::vector<std::pair<int, int>> pairs;
  for (const Subset& member : read_members(doc)) {
    if (member.size() != 2) {
      throw InputError("family: expected 2-subsets only");
    }
    pairs.emplace_back(member[0], member[1]);
  }
  return TwoSubsetFamily(d, std::move(pairs));
}

std::string write_family(const SubsetFamily& family) {
  ordered_json doc;
  doc["type"] = "family";
  doc["d"] = family.d();
  ordered_json members = ordered_json::array();
  for (const Subset& member : family.members()) members.push_back(member);
  doc["members"] = std::move(members);
  return dump(doc);
}

std::string write_family(const TwoSubsetFamily& family) {
  return write_family(family.as_subset_family());
}

Game read_game(const std::string& text) {
  const json doc = parse(text, "game");
  expect_type(doc, "game");
  const int d = get_int(doc, "d");
  if (!doc.contains("singletons") || !doc["singletons"].is_array()) {
    throw InputError("game: missing \"singletons\" array");
  }
  std::vector<Rational> singletons;
  for (const auto& v : doc["singletons"]) {
    singletons.push_back(get_rational(v, "singletons"));
  }
  std::vector<std::pair<std::pair<int, int>, Rational>> pairs;
  if (doc.contains("pairs") && !doc["pairs"].is_null()) {
    if (!doc["pairs"].is_array()) {
      throw InputError("game: \"pairs\" must be an array");
    }
    for (const auto& entry : doc["pairs"]) {
      if (!entry.is_object() || !entry.contains("members") ||
          !entry.contains("value")) {
        throw InputError("game: each pair needs \"members\" and \"value\"");
      }
      const std::vector<int> members =
          get_int_array(entry["members"], "pairs");
      if (members.size() != 2) {
        throw InputError("game: pair \"members\" must have two elements");
      }
      pairs.push_back({{members[0], members[1]},
                       get_rational(entry["value"], "pairs")});
    }
  }
  if (!doc.contains("grand_value")) {
    throw InputError("game: missing \"grand_value\"");
  }
  return Game::with_defaults(d, std::move(singletons), pairs,
                             get_rational(doc["grand_value"], "grand_value"));
}

std::string write_game(const Game& game) {
  ordered_json doc;
  doc["type"] = "game";
  doc["d"] = game.d();
  doc["singletons"] = rational_array(game.singleton_values());
  ordered_json pairs = ordered_json::array();
  size_t k = 0;
  for (int i = 1; i <= game.d(); ++i) {
    for (int j = i + 1; j <= game.d(); ++j, ++k) {
      ordered_json entry;
      entry["members"] = std::vector<int>{i, j};
      entry["value"] = to_string(game.pair_values_lex()[k]);
      pairs.push_back(std::move(entry));
    }
  }
  doc["pairs"] = std::move(pairs);
  doc["grand_value"] = to_string(game.grand_value());
  return dump(doc);
}

LabeledComplex read_complex(const std::string& text) {
  const json doc = parse(text, "complex");
  expect_type(doc, "labeled_complex");
  const int dim = get_int(doc, "dim");
  const int vertex_count = get_int(doc, "vertex_count");
  if (!doc.contains("cells") || !doc["cells"].is_array()) {
    throw InputError("complex: missing \"cells\" array");
  }
  auto to_zero_based = [](std::vector<int> ids) {
    for (int& v : ids) --v;
    return ids;
  };
  std::vector<std::vector<int>> cells;
  for (const auto& cell : doc["cells"]) {
    cells.push_back(to_zero_based(get_int_array(cell, "cells")));
  }
  std::vector<int> boundary;
  if (doc.contains("boundary") && !doc["boundary"].is_null()) {
    boundary = to_zero_based(get_int_array(doc["boundary"], "boundary"));
  }
  std::vector<std::pair<int, int>> antipode;
  if (doc.contains("antipode") && !doc["antipode"].is_null()) {
    if (!doc["antipode"].is_array()) {
      throw InputError("complex: \"antipode\" must be an array of pairs");
    }
    for (const auto& pair : doc["antipode"]) {
      const std::vector<int> ids =
          to_zero_based(get_int_array(pair, "antipode"));
      if (ids.size() != 2) {
        throw InputError("complex: antipode entries must be pairs");
      }
      antipode.emplace_back(ids[0], ids[1]);
    }
  }
  std::vector<int> labels;
  if (doc.contains("labels") && !doc["labels"].is_null()) {
    labels = get_int_array(doc["labels"], "labels");
  }
  std::vector<std::vector<int>> carriers;
  if (doc.contains("carriers") && !doc["carriers"].is_null()) {
    if (!doc["carriers"].is_array()) {
      throw InputError("complex: \"carriers\" must be an array of arrays");
    }
    for (const auto& carrier : doc["carriers"]) {
      carriers.push_back(get_int_array(carrier, "carriers"));
    }
  }
  return LabeledComplex(dim, vertex_count, std::move(cells),
                        std::move(boundary), std::move(antipode),
                        std::move(labels), std::move(carriers));
}

std::string write_complex(const LabeledComplex& complex) {
  ordered_json doc;
  doc["type"] = "labeled_complex";
  doc["dim"] = complex.dim();
  doc["vertex_count"] = complex.vertex_count();
  ordered_json cells = ordered_json::array();
  for (const auto& cell : complex.cells()) {
    cells.push_back(index_array_1based(cell));
  }
  doc["cells"] = std::move(cells);
  doc["boundary"] = index_array_1based(complex.boundary_vertices());
  if (complex.has_antipode()) {
    ordered_json pairs = ordered_json::array();
    for (const auto& [a, b] : complex.antipode_pairs()) {
      pairs.push_back(index_array_1based({a, b}));
    }
    doc["antipode"] = std::move(pairs);
  } else {
    doc["antipode"] = nullptr;
  }
  doc["labels"] = complex.labeled() ? ordered_json(complex.labels())
                                    : ordered_json(nullptr);
  if (complex.has_carriers()) {
    ordered_json carriers = ordered_json::array();
    for (const auto& carrier : complex.carriers()) carriers.push_back(carrier);
    doc["carriers"] = std::move(carriers);
  } else {
    doc["carriers"] = nullptr;
  }
  return dump(doc);
}

std::string write_catalog(const MinimalBalancedCatalog& catalog) {
  ordered_json doc;
  doc["type"] = "minimal_balanced_catalog";
  doc["point_count"] = catalog.point_set.size();
  doc["affine_dimension"] = catalog.affine_dim;
  doc["member_count"] = catalog.members.size();
  ordered_json members = ordered_json::array();
  for (const CatalogMember& member : catalog.members) {
    ordered_json entry;
    entry["indices"] = index_array_1based(member.indices);
    entry["weights"] = rational_array(member.weights);
    members.push_back(std::move(entry));
  }
  doc["members"] = std::move(members);
  doc["point_set"] = point_set_body(catalog.point_set);
  return dump(doc);
}

std::string write_classification(int d, const ClassifyResult& result) {
  ordered_json doc;
  doc["type"] = "classification";
  doc["d"] = d;
  doc["minimal"] = result.minimal();
  if (result.minimal()) {
    const Theorem1Decomposition& decomposition = *result.decomposition;
    ordered_json blocks = ordered_json::array();
    for (const DecompositionBlock& block : decomposition.blocks) {
      ordered_json entry;
      entry["kind"] = block.kind == BlockKind::OddCycle ? "odd-cycle"
                                                        : "isolated-edge";
      entry["vertices"] = block.vertices;
      if (block.kind == BlockKind::OddCycle) {
        entry["cycle"] = block.cycle_order;
      }
      blocks.push_back(std::move(entry));
    }
    doc["blocks"] = std::move(blocks);
    doc["weights"] = rational_array(decomposition.edge_weights);
  } else {
    doc["reason"] = to_string(result.reason);
    doc["detail"] = result.detail;
  }
  return dump(doc);
}

std::string write_theorem1_report(const Theorem1Report& report) {
  ordered_json doc;
  doc["type"] = "theorem1_report";
  doc["d"] = report.d;
  doc["generated_count"] = report.generated_count;
  doc["geometric_count"] = report.geometric_count;
  doc["equal"] = report.equal;
  auto family_list = [](const std::vector<TwoSubsetFamily>& families) {
    ordered_json arr = ordered_json::array();
    for (const TwoSubsetFamily& family : families) {
      ordered_json pairs = ordered_json::array();
      for (const auto& [i, j] : family.pairs()) {
        pairs.push_back(std::vector<int>{i, j});
      }
      arr.push_back(std::move(pairs));
    }
    return arr;
  };
  doc["only_generated"] = family_list(report.only_generated);
  doc["only_geometric"] = family_list(report.only_geometric);
  return dump(doc);
}

std::string write_partition_table(
    const PartitionTable& table,
    const std::vector<std::optional<Integer>>& labeled_counts,
    const IdentityReport& identity) {
  ordered_json doc;
  doc["type"] = "partition_table";
  doc["max_d"] = table.max_d;
  doc["identity_holds"] = identity.holds;
  ordered_json rows = ordered_json::array();
  for (int d = 0; d <= table.max_d; ++d) {
    ordered_json row;
    row["d"] = d;
    row["q"] = to_string(table.q[static_cast<size_t>(d)]);
    row["b"] = to_string(table.b[static_cast<size_t>(d)]);
    const auto& labeled = labeled_counts[static_cast<size_t>(d)];
    row["labeled_minimal"] =
        labeled ? ordered_json(to_string(*labeled)) : ordered_json(nullptr);
    const bool row_ok =
        std::find(identity.failures.begin(), identity.failures.end(), d) ==
        identity.failures.end();
    row["identity_holds"] = row_ok;
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return dump(doc);
}

std::string write_core_verdict(const Game& game, const CoreVerdict& verdict,
                               const std::string& method,
                               std::optional<bool> agree) {
  ordered_json doc;
  doc["type"] = "core_verdict";
  doc["method"] = method;
  doc["d"] = game.d();
  doc["nonempty"] = verdict.nonempty;
  doc["allocation"] = verdict.allocation
                          ? rational_array(*verdict.allocation)
                          : ordered_json(nullptr);
  if (verdict.violating_family) {
    const ViolatingFamily& vf = *verdict.violating_family;
    ordered_json family;
    ordered_json members = ordered_json::array();
    for (const Subset& member : vf.family.members()) members.push_back(member);
    family["members"] = std::move(members);
    family["weights"] = rational_array(vf.weights);
    family["total"] = to_string(vf.total);
    doc["violating_family"] = std::move(family);
  } else {
    doc["violating_family"] = nullptr;
  }
  if (!game.defaulted_pairs().empty()) {
    ordered_json defaulted = ordered_json::array();
    for (const auto& [i, j] : game.defaulted_pairs()) {
      defaulted.push_back(std::vector<int>{i, j});
    }
    doc["defaulted_pairs"] = std::move(defaulted);
  }
  if (agree.has_value()) doc["agree"] = *agree;
  return dump(doc);
}

std::string write_lemma_result(const LemmaDocument& result) {
  ordered_json doc;
  doc["type"] = "lemma_result";
  doc["lemma"] = result.lemma;
  doc["verdict"] = result.verdict;
  if (!result.lambda.empty()) doc["lambda"] = result.lambda;
  ordered_json cells = ordered_json::array();
  for (const auto& cell : result.cells) {
    cells.push_back(index_array_1based(cell));
  }
  doc["witnesses"] = std::move(cells);
  doc["count"] = result.cells.size();
  if (result.odd.has_value()) doc["odd"] = *result.odd;
  return dump(doc);
}

std::string write_cross_validation_summary(const CrossValidationSummary& s) {
  ordered_json doc;
  doc["type"] = "cross_validation_report";
  doc["games"] = s.games;
  doc["seed"] = s.seed;
  doc["min_d"] = s.min_d;
  doc["max_d"] = s.max_d;
  doc["nonempty_count"] = s.nonempty_count;
  doc["empty_count"] = s.empty_count;
  doc["disagreements"] = s.disagreements;
  doc["all_agree"] = s.disagreements == 0;
  return dump(doc);
}

}  // namespace balanced::io
