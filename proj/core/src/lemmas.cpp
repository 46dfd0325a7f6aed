#include "balanced/lemmas.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "balanced/errors.hpp"

namespace balanced {

namespace {

void require_size(const LabeledComplex& complex, std::span<const int> labels) {
  if (labels.size() != static_cast<size_t>(complex.vertex_count())) {
    throw InputError("labels: need one label per vertex");
  }
}

void require_signed(std::span<const int> labels) {
  for (int l : labels) {
    if (l == 0) throw InputError("labels: 0 is not a signed label");
  }
}

}  // namespace

bool check_sperner_admissible(const LabeledComplex& complex) {
  return check_sperner_admissible(complex, complex.labels());
}

bool check_sperner_admissible(const LabeledComplex& complex,
                              std::span<const int> labels) {
  require_size(complex, labels);
  if (!complex.has_carriers()) {
    throw InputError("sperner: complex has no carriers");
  }
  const int palette = complex.dim() + 1;
  for (int l : labels) {
    if (l < 1 || l > palette) {
      throw InputError("sperner: label out of range 1..dim+1");
    }
  }
  for (int v = 0; v < complex.vertex_count(); ++v) {
    const auto& carrier = complex.carriers()[static_cast<size_t>(v)];
    if (!std::binary_search(carrier.begin(), carrier.end(),
                            labels[static_cast<size_t>(v)])) {
      return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> find_rainbow_cells(
    const LabeledComplex& complex) {
  return find_rainbow_cells(complex, complex.labels());
}

std::vector<std::vector<int>> find_rainbow_cells(const LabeledComplex& complex,
                                                 std::span<const int> labels) {
  require_size(complex, labels);
  const int palette = complex.dim() + 1;
  for (int l : labels) {
    if (l < 1 || l > palette) {
      throw InputError("rainbow: label out of range 1..dim+1");
    }
  }
  std::vector<std::vector<int>> result;
  std::vector<bool> seen(static_cast<size_t>(palette) + 1);
  for (const auto& cell : complex.cells()) {
    std::fill(seen.begin(), seen.end(), false);
    bool rainbow = true;
    for (int v : cell) {
      const int l = labels[static_cast<size_t>(v)];
      if (seen[static_cast<size_t>(l)]) {
        rainbow = false;
        break;
      }
      seen[static_cast<size_t>(l)] = true;
    }
    if (rainbow) result.push_back(cell);
  }
  return result;
}

bool check_antipodal_labeling(const LabeledComplex& complex) {
  return check_antipodal_labeling(complex, complex.labels());
}

bool check_antipodal_labeling(const LabeledComplex& complex,
                              std::span<const int> labels) {
  require_size(complex, labels);
  require_signed(labels);
  if (!complex.has_antipode()) {
    throw InputError("antipodal check: complex has no antipode");
  }
  for (const auto& [a, b] : complex.antipode_pairs()) {
    if (labels[static_cast<size_t>(a)] != -labels[static_cast<size_t>(b)]) {
      return false;
    }
  }
  return true;
}

std::vector<std::pair<int, int>> find_complementary_edges(
    const LabeledComplex& complex) {
  return find_complementary_edges(complex, complex.labels());
}

std::vector<std::pair<int, int>> find_complementary_edges(
    const LabeledComplex& complex, std::span<const int> labels) {
  require_size(complex, labels);
  require_signed(labels);
  std::vector<std::pair<int, int>> result;
  for (const auto& [u, v] : complex.edges()) {
    if (labels[static_cast<size_t>(u)] == -labels[static_cast<size_t>(v)]) {
      result.emplace_back(u, v);
    }
  }
  return result;
}

namespace {

void require_no_complementary(const LabeledComplex& complex,
                              std::span<const int> labels,
                              const char* where) {
  for (const auto& [u, v] : complex.edges()) {
    if (labels[static_cast<size_t>(u)] == -labels[static_cast<size_t>(v)]) {
      throw InputError(std::string(where) + ": complementary edge {" +
                       std::to_string(u + 1) + "," + std::to_string(v + 1) +
                       "} present");
    }
  }
}

// Labels ordered by magnitude must strictly increase in magnitude and
// strictly alternate in sign; both global signs are admissible.
bool is_alternating(std::vector<int>& scratch) {
  std::sort(scratch.begin(), scratch.end(),
            [](int a, int b) { return std::abs(a) < std::abs(b); });
  for (size_t k = 1; k < scratch.size(); ++k) {
    if (std::abs(scratch[k]) == std::abs(scratch[k - 1])) return false;
    if ((scratch[k] > 0) == (scratch[k - 1] > 0)) return false;
  }
  return true;
}

}  // namespace

ParityResult find_alternating_simplices(const LabeledComplex& complex,
                                        int max_magnitude) {
  return find_alternating_simplices(complex, max_magnitude, complex.labels());
}

ParityResult find_alternating_simplices(const LabeledComplex& complex,
                                        int max_magnitude,
                                        std::span<const int> labels) {
  require_size(complex, labels);
  require_signed(labels);
  if (max_magnitude < 1) {
    throw InputError("alternating: palette bound must be >= 1");
  }
  for (int l : labels) {
    if (std::abs(l) > max_magnitude) {
      throw InputError("alternating: label magnitude exceeds palette bound");
    }
  }
  require_no_complementary(complex, labels, "alternating");

  ParityResult result;
  std::vector<int> scratch;
  for (const auto& cell : complex.cells()) {
    scratch.clear();
    for (int v : cell) scratch.push_back(labels[static_cast<size_t>(v)]);
    if (is_alternating(scratch)) result.cells.push_back(cell);
  }
  result.odd = result.cells.size() % 2 == 1;
  return result;
}

ParityResult find_shashkin_cells(const LabeledComplex& complex,
                                 const std::vector<int>& lambda) {
  return find_shashkin_cells(complex, lambda, complex.labels());
}

ParityResult find_shashkin_cells(const LabeledComplex& complex,
                                 const std::vector<int>& lambda,
                                 std::span<const int> labels) {
  require_size(complex, labels);
  require_signed(labels);
  const int d = complex.dim() + 1;
  if (static_cast<int>(lambda.size()) != d) {
    throw InputError("shashkin: lambda needs exactly one label per "
                     "magnitude 1..d");
  }
  std::vector<int> by_magnitude(static_cast<size_t>(d), 0);
  for (int l : lambda) {
    const int m = std::abs(l);
    if (m < 1 || m > d || by_magnitude[static_cast<size_t>(m - 1)] != 0) {
      throw InputError("shashkin: lambda needs exactly one label per "
                       "magnitude 1..d");
    }
    by_magnitude[static_cast<size_t>(m - 1)] = l;
  }
  for (int l : labels) {
    if (std::abs(l) > d) {
      throw InputError("shashkin: label magnitude exceeds d");
    }
  }
  require_no_complementary(complex, labels, "shashkin");

  std::set<int> plus(lambda.begin(), lambda.end());
  std::set<int> minus;
  for (int l : lambda) minus.insert(-l);

  ParityResult result;
  for (const auto& cell : complex.cells()) {
    std::set<int> cell_labels;
    for (int v : cell) cell_labels.insert(labels[static_cast<size_t>(v)]);
    if (cell_labels == plus || cell_labels == minus) {
      result.cells.push_back(cell);
    }
  }
  result.odd = result.cells.size() % 2 == 1;
  return result;
}

TheoremBWitness theorem_b_witness(const MinimalBalancedCatalog& catalog,
                                  const LabeledComplex& complex,
                                  const std::map<int, int>& label_to_point) {
  const auto& labels = complex.labels();
  for (int l : labels) {
    auto it = label_to_point.find(l);
    if (it == label_to_point.end()) {
      throw InputError("theorem-b: label " + std::to_string(l) +
                       " maps to no point");
    }
    if (it->second < 0 || it->second >= catalog.point_set.size()) {
      throw InputError("theorem-b: label maps outside the point set");
    }
  }

  for (const auto& cell : complex.cells()) {
    std::set<int> covered;
    for (int v : cell) {
      covered.insert(label_to_point.at(labels[static_cast<size_t>(v)]));
    }
    for (const CatalogMember& member : catalog.members) {
      const bool contained =
          std::all_of(member.indices.begin(), member.indices.end(),
                      [&](int idx) { return covered.count(idx) > 0; });
      if (!contained) continue;
      // Minimal witness face: the first vertex carrying each needed index.
      std::set<int> face;
      for (int idx : member.indices) {
        for (int v : cell) {
          if (label_to_point.at(labels[static_cast<size_t>(v)]) == idx) {
            face.insert(v);
            break;
          }
        }
      }
      TheoremBWitness witness;
      witness.found = true;
      witness.face.assign(face.begin(), face.end());
      witness.member = member.indices;
      return witness;
    }
  }
  return TheoremBWitness{};
}

TheoremBWitness theorem_b_witness(const PointSet& points,
                                  const LabeledComplex& complex,
                                  const std::map<int, int>& label_to_point,
                                  std::uint64_t budget) {
  return theorem_b_witness(enumerate_minimal_balanced(points, budget),
                           complex, label_to_point);
}

std::vector<int> signed_palette(int n) {
  if (n < 1) throw InputError("signed palette: n must be >= 1");
  std::vector<int> palette;
  palette.reserve(2 * static_cast<size_t>(n));
  for (int l = -n; l <= n; ++l) {
    if (l != 0) palette.push_back(l);
  }
  return palette;
}

namespace {

std::uint64_t checked_power(std::uint64_t base, size_t exponent,
                            std::uint64_t cap, const char* what) {
  std::uint64_t result = 1;
  for (size_t k = 0; k < exponent; ++k) {
    if (result > cap / base) {
      throw BudgetError(std::string(what) + ": labeling space exceeds cap");
    }
    result *= base;
  }
  if (result > cap) {
    throw BudgetError(std::string(what) + ": labeling space exceeds cap");
  }
  return result;
}

}  // namespace

std::uint64_t for_each_labeling(
    const LabeledComplex& complex, const std::vector<int>& palette,
    bool antipodal, const std::function<void(std::span<const int>)>& fn,
    std::uint64_t cap) {
  if (palette.empty()) throw InputError("labelings: empty palette");
  if (antipodal && !complex.has_antipode()) {
    throw InputError("labelings: antipodal mode needs an antipode");
  }

  // Free vertices: everything except the larger member of each antipodal
  // pair, whose label is forced to the negation of its partner's.
  std::vector<int> free_vertices;
  std::vector<int> forced_from(static_cast<size_t>(complex.vertex_count()),
                               -1);
  for (int v = 0; v < complex.vertex_count(); ++v) {
    free_vertices.push_back(v);
  }
  if (antipodal) {
    for (const auto& [a, b] : complex.antipode_pairs()) {
      forced_from[static_cast<size_t>(b)] = a;  // pairs are stored (a < b)
      std::erase(free_vertices, b);
    }
  }

  checked_power(palette.size(), free_vertices.size(), cap, "labelings");

  std::vector<int> labels(static_cast<size_t>(complex.vertex_count()), 0);
  std::vector<size_t> odometer(free_vertices.size(), 0);
  std::uint64_t visited = 0;
  while (true) {
    for (size_t k = 0; k < free_vertices.size(); ++k) {
      labels[static_cast<size_t>(free_vertices[k])] = palette[odometer[k]];
    }
    if (antipodal) {
      for (int v = 0; v < complex.vertex_count(); ++v) {
        if (forced_from[static_cast<size_t>(v)] != -1) {
          labels[static_cast<size_t>(v)] =
              -labels[static_cast<size_t>(forced_from[static_cast<size_t>(v)])];
        }
      }
    }
    ++visited;
    fn(labels);

    size_t pos = 0;
    while (pos < odometer.size() && ++odometer[pos] == palette.size()) {
      odometer[pos] = 0;
      ++pos;
    }
    if (pos == odometer.size()) break;
  }
  return visited;
}

std::uint64_t for_each_sperner_labeling(
    const LabeledComplex& complex,
    const std::function<void(std::span<const int>)>& fn, std::uint64_t cap) {
  if (!complex.has_carriers()) {
    throw InputError("sperner labelings: complex has no carriers");
  }
  const auto& carriers = complex.carriers();
  std::uint64_t space = 1;
  for (const auto& carrier : carriers) {
    if (space > cap / carrier.size()) {
      throw BudgetError("sperner labelings: labeling space exceeds cap");
    }
    space *= carrier.size();
  }
  if (space > cap) {
    throw BudgetError("sperner labelings: labeling space exceeds cap");
  }

  std::vector<int> labels(carriers.size());
  std::vector<size_t> odometer(carriers.size(), 0);
  std::uint64_t visited = 0;
  while (true) {
    for (size_t v = 0; v < carriers.size(); ++v) {
      labels[v] = carriers[v][odometer[v]];
    }
    ++visited;
    fn(labels);

    size_t pos = 0;
    while (pos < odometer.size() && ++odometer[pos] == carriers[pos].size()) {
      odometer[pos] = 0;
      ++pos;
    }
    if (pos == odometer.size()) break;
  }
  return visited;
}

}  // namespace balanced
