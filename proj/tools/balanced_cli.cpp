// Command-line front end: every subcommand reads/writes the structured
// documents defined by the library and follows one exit-code contract:
//   0 success / true verdict
//   1 false verdict (empty core, not minimal, parity failed, ...)
//   2 input error (malformed document, violated hypothesis)
//   3 resource budget exceeded, or checker disagreement
//
// The environment variable BALANCED_BUDGET overrides the default subset
// budget wherever --budget is not given.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "balanced/complexes.hpp"
#include "balanced/enumeration.hpp"
#include "balanced/errors.hpp"
#include "balanced/game.hpp"
#include "balanced/io.hpp"
#include "balanced/lemmas.hpp"
#include "balanced/partitions.hpp"
#include "balanced/two_subset.hpp"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw balanced::InputError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const std::string& document, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << document;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw balanced::InputError("cannot write file: " + out_path);
  out << document;
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("BALANCED_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw balanced::InputError("BALANCED_BUDGET must be an integer");
    }
  }
  return balanced::kDefaultEnumerationBudget;
}

std::vector<int> parse_label_list(const std::string& csv) {
  std::vector<int> labels;
  std::stringstream stream(csv);
  std::string token;
  while (std::getline(stream, token, ',')) {
    try {
      labels.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw balanced::InputError("label list: bad integer \"" + token + "\"");
    }
  }
  return labels;
}

int run_bs(const std::string& file, std::optional<std::uint64_t> budget) {
  const balanced::PointSet points =
      balanced::io::read_point_set(read_file(file));
  const auto catalog = balanced::enumerate_minimal_balanced(
      points, budget.value_or(default_budget()));
  std::cout << balanced::io::write_catalog(catalog);
  return kExitTrue;
}

int run_classify(const std::string& file) {
  const balanced::TwoSubsetFamily family =
      balanced::io::read_two_subset_family(read_file(file));
  const balanced::ClassifyResult result = balanced::classify(family);
  std::cout << balanced::io::write_classification(family.d(), result);
  return result.minimal() ? kExitTrue : kExitFalse;
}

int run_verify_theorem1(int d, std::optional<std::uint64_t> budget) {
  const balanced::Theorem1Report report =
      balanced::verify_theorem1(d, budget.value_or(default_budget()));
  std::cout << balanced::io::write_theorem1_report(report);
  return report.equal ? kExitTrue : kExitFalse;
}

int run_partitions(int max_d, int labeled_max, const std::string& format) {
  const balanced::PartitionTable table = balanced::partition_table(max_d);
  const balanced::IdentityReport identity =
      balanced::check_alternating_identity(max_d);
  const auto gf = balanced::balanced_partitions_generating_function(max_d);
  const bool gf_agrees = gf == table.b;

  std::vector<std::optional<balanced::Integer>> labeled(
      static_cast<size_t>(max_d) + 1);
  for (int d = 2; d <= std::min(max_d, labeled_max); ++d) {
    labeled[static_cast<size_t>(d)] = balanced::count_labeled_minimal(d);
  }

  if (format == "text") {
    std::cout << "d\tq(d)\tb(d)\tlabeled\tidentity\n";
    for (int d = 0; d <= max_d; ++d) {
      std::cout << d << '\t' << table.q[static_cast<size_t>(d)].str() << '\t'
                << table.b[static_cast<size_t>(d)].str() << '\t';
      if (labeled[static_cast<size_t>(d)]) {
        std::cout << labeled[static_cast<size_t>(d)]->str();
      } else {
        std::cout << '-';
      }
      std::cout << '\t' << (identity.holds ? "ok" : "FAIL") << '\n';
    }
  } else {
    std::cout << balanced::io::write_partition_table(table, labeled, identity);
  }
  if (!gf_agrees) {
    std::cerr << "generating-function route disagrees with the direct "
                 "count\n";
    return kExitFalse;
  }
  return identity.holds ? kExitTrue : kExitFalse;
}

int run_core(const std::string& file, const std::string& method) {
  const balanced::Game game = balanced::io::read_game(read_file(file));
  if (method == "direct") {
    const balanced::CoreVerdict verdict = balanced::core_direct(game);
    std::cout << balanced::io::write_core_verdict(game, verdict, method);
    return verdict.nonempty ? kExitTrue : kExitFalse;
  }
  if (method == "theorem1") {
    const balanced::CoreVerdict verdict = balanced::core_via_theorem1(game);
    std::cout << balanced::io::write_core_verdict(game, verdict, method);
    return verdict.nonempty ? kExitTrue : kExitFalse;
  }
  const balanced::CrossValidationReport report =
      balanced::cross_validate(game);
  balanced::CoreVerdict merged = report.direct;
  if (report.via_theorem1.violating_family) {
    merged.violating_family = report.via_theorem1.violating_family;
  }
  std::cout << balanced::io::write_core_verdict(game, merged, "both",
                                                report.agree);
  if (!report.agree) {
    std::cerr << "checkers disagree; this signals an implementation bug\n";
    return kExitResource;
  }
  return merged.nonempty ? kExitTrue : kExitFalse;
}

int run_cross_validate(std::uint64_t games, std::uint64_t seed, int min_d,
                       int max_d) {
  if (min_d < 2 || max_d < min_d) {
    throw balanced::InputError("cross-validate: need 2 <= min-d <= max-d");
  }
  std::mt19937_64 rng(seed);
  balanced::io::CrossValidationSummary summary;
  summary.games = games;
  summary.seed = seed;
  summary.min_d = min_d;
  summary.max_d = max_d;
  for (std::uint64_t g = 0; g < games; ++g) {
    const int d = min_d + static_cast<int>(g % static_cast<std::uint64_t>(
                                                   max_d - min_d + 1));
    const balanced::Game game = balanced::random_game(rng, d);
    const balanced::CrossValidationReport report =
        balanced::cross_validate(game);
    if (!report.agree) {
      ++summary.disagreements;
    } else if (report.direct.nonempty) {
      ++summary.nonempty_count;
    } else {
      ++summary.empty_count;
    }
  }
  std::cout << balanced::io::write_cross_validation_summary(summary);
  return summary.disagreements == 0 ? kExitTrue : kExitResource;
}

int run_lemma(const std::string& lemma, const std::string& file,
              std::optional<int> max_label,
              const std::string& lambda_csv) {
  const balanced::LabeledComplex complex =
      balanced::io::read_complex(read_file(file));
  if (!complex.labeled()) {
    throw balanced::InputError(lemma + ": complex file carries no labels");
  }
  balanced::io::LemmaDocument doc;
  doc.lemma = lemma;

  if (lemma == "sperner") {
    if (!balanced::check_sperner_admissible(complex)) {
      throw balanced::InputError(
          "sperner: labeling is not Sperner-admissible");
    }
    for (const auto& cell : balanced::find_rainbow_cells(complex)) {
      doc.cells.push_back(cell);
    }
    doc.odd = doc.cells.size() % 2 == 1;
    doc.verdict = *doc.odd && !doc.cells.empty();
    std::cout << balanced::io::write_lemma_result(doc);
    return doc.verdict ? kExitTrue : kExitFalse;
  }

  auto require_antipodal = [&] {
    if (!complex.has_antipode()) {
      throw balanced::InputError(lemma + ": complex has no antipode");
    }
    if (!balanced::check_antipodal_labeling(complex)) {
      throw balanced::InputError(lemma +
                                 ": labeling is not antipodal on the boundary");
    }
  };

  if (lemma == "tucker") {
    require_antipodal();
    for (int l : complex.labels()) {
      if (std::abs(l) > complex.dim()) {
        throw balanced::InputError(
            "tucker: label magnitude exceeds the disc dimension");
      }
    }
    for (const auto& [u, v] : balanced::find_complementary_edges(complex)) {
      doc.cells.push_back({u, v});
    }
    doc.verdict = !doc.cells.empty();
    std::cout << balanced::io::write_lemma_result(doc);
    return doc.verdict ? kExitTrue : kExitFalse;
  }

  if (lemma == "kyfan") {
    require_antipodal();
    int bound = 0;
    for (int l : complex.labels()) bound = std::max(bound, std::abs(l));
    bound = max_label.value_or(bound);
    const balanced::ParityResult result =
        balanced::find_alternating_simplices(complex, bound);
    doc.cells = result.cells;
    doc.odd = result.odd;
    doc.verdict = result.odd;
    std::cout << balanced::io::write_lemma_result(doc);
    return doc.verdict ? kExitTrue : kExitFalse;
  }

  if (lemma == "shashkin") {
    require_antipodal();
    if (lambda_csv.empty()) {
      throw balanced::InputError("shashkin: --lambda is required");
    }
    doc.lambda = parse_label_list(lambda_csv);
    const balanced::ParityResult result =
        balanced::find_shashkin_cells(complex, doc.lambda);
    doc.cells = result.cells;
    doc.odd = result.odd;
    doc.verdict = result.odd;
    std::cout << balanced::io::write_lemma_result(doc);
    return doc.verdict ? kExitTrue : kExitFalse;
  }

  throw balanced::InputError("lemma: unknown lemma \"" + lemma + "\"");
}

int run_gen_points(const std::string& kind, int d, const std::string& out) {
  balanced::PointSet points = [&] {
    if (kind == "cross-polytope") return balanced::cross_polytope(d);
    if (kind == "pm-simplex") return balanced::plus_minus_simplex(d);
    if (kind == "midpoints") return balanced::simplex_edge_midpoints(d);
    throw balanced::InputError("gen points: unknown kind \"" + kind + "\"");
  }();
  emit(balanced::io::write_point_set(points), out);
  return kExitTrue;
}

int run_gen_complex(const std::string& kind, int size,
                    const std::string& labels_csv, const std::string& out) {
  const balanced::DiscKind disc_kind = [&] {
    if (kind == "subdivided-simplex") return balanced::DiscKind::SubdividedSimplex;
    if (kind == "wheel") return balanced::DiscKind::SymmetricDisc;
    if (kind == "split-disc") return balanced::DiscKind::SymmetricDiscSplit;
    if (kind == "path") return balanced::DiscKind::PathDisc;
    throw balanced::InputError("gen complex: unknown kind \"" + kind + "\"");
  }();
  balanced::LabeledComplex complex =
      balanced::generate_disc_triangulation(disc_kind, size);
  if (!labels_csv.empty()) {
    complex = complex.with_labels(parse_label_list(labels_csv));
  }
  emit(balanced::io::write_complex(complex), out);
  return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal balanced set toolkit"};
  app.require_subcommand(1);

  std::string file;
  std::optional<std::uint64_t> budget;
  int d = 0;
  int max_d = 0;
  int labeled_max = 60;
  std::string format = "json";
  std::string method = "both";
  std::uint64_t games = 1000;
  std::uint64_t seed = 0;
  int min_d = 2;
  int cross_max_d = 6;
  std::string lemma_name;
  std::optional<int> max_label;
  std::string lambda_csv;
  std::string kind;
  int size = 0;
  std::string labels_csv;
  std::string out_path;

  CLI::App* bs = app.add_subcommand("bs", "Enumerate BS(V) with witnesses");
  bs->add_option("points-file", file)->required();
  bs->add_option("--budget", budget, "Subset budget for the search");

  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "Decide whether a 2-subset family is minimal balanced");
  classify_cmd->add_option("family-file", file)->required();

  CLI::App* verify = app.add_subcommand(
      "verify-theorem1",
      "Check the generator against the geometric enumeration on V_d");
  verify->add_option("--d", d)->required();
  verify->add_option("--budget", budget);

  CLI::App* partitions = app.add_subcommand(
      "partitions", "q/b tables, labeled counts, alternating identity");
  partitions->add_option("--max-d", max_d)->required();
  partitions->add_option("--labeled-max", labeled_max,
                         "Largest d for the labeled-count column");
  partitions->add_option("--format", format)
      ->check(CLI::IsMember({"json", "text"}));

  CLI::App* core = app.add_subcommand("core", "Core nonemptiness check");
  core->add_option("game-file", file)->required();
  core->add_option("--method", method)
      ->check(CLI::IsMember({"direct", "theorem1", "both"}));

  CLI::App* cross = app.add_subcommand(
      "cross-validate", "Random games, both checkers must agree");
  cross->add_option("--games", games);
  cross->add_option("--seed", seed);
  cross->add_option("--min-d", min_d);
  cross->add_option("--max-d", cross_max_d);

  CLI::App* lemma = app.add_subcommand(
      "lemma", "Search a labeled complex for a lemma's witnesses");
  lemma->add_option("name", lemma_name)
      ->required()
      ->check(CLI::IsMember({"sperner", "tucker", "kyfan", "shashkin"}));
  lemma->add_option("complex-file", file)->required();
  lemma->add_option("--max-label", max_label,
                    "Palette magnitude bound (kyfan)");
  lemma->add_option("--lambda", lambda_csv,
                    "Comma-separated signed labels (shashkin)");

  CLI::App* gen = app.add_subcommand("gen", "Generate input documents");
  gen->require_subcommand(1);
  CLI::App* gen_points = gen->add_subcommand("points", "Standard point sets");
  gen_points->add_option("--kind", kind)
      ->required()
      ->check(CLI::IsMember({"cross-polytope", "pm-simplex", "midpoints"}));
  gen_points->add_option("--d", d)->required();
  gen_points->add_option("--out", out_path);
  CLI::App* gen_complex = gen->add_subcommand("complex", "Disc skeletons");
  gen_complex->add_option("--kind", kind)
      ->required()
      ->check(CLI::IsMember(
          {"subdivided-simplex", "wheel", "split-disc", "path"}));
  gen_complex->add_option("--size", size)->required();
  gen_complex->add_option("--labels", labels_csv,
                          "Comma-separated labels to attach");
  gen_complex->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (bs->parsed()) return run_bs(file, budget);
    if (classify_cmd->parsed()) return run_classify(file);
    if (verify->parsed()) return run_verify_theorem1(d, budget);
    if (partitions->parsed()) return run_partitions(max_d, labeled_max, format);
    if (core->parsed()) return run_core(file, method);
    if (cross->parsed()) {
      return run_cross_validate(games, seed, min_d, cross_max_d);
    }
    if (lemma->parsed()) {
      return run_lemma(lemma_name, file, max_label, lambda_csv);
    }
    if (gen->parsed()) {
      if (gen_points->parsed()) return run_gen_points(kind, d, out_path);
      if (gen_complex->parsed()) {
        return run_gen_complex(kind, size, labels_csv, out_path);
      }
    }
  } catch (const balanced::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const balanced::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
