#include "balanced/feasibility.hpp"

#include <stdexcept>

#include "balanced/errors.hpp"

namespace balanced {

// Phase-one simplex on the tableau
//
//   [ A | I | b ]   with b >= 0 after row sign fixes,
//
// minimizing the sum of the artificial variables. The objective row is kept
// explicitly and updated by the same pivot operations as the constraint
// rows. Entering column: smallest index with positive reduced cost
// (artificials may re-enter, which keeps Bland's termination argument
// intact). Leaving row: smallest ratio, ties broken by smallest basis
// index. Feasible iff the minimum is exactly zero.
std::optional<std::vector<Rational>> solve_nonnegative(
    std::vector<std::vector<Rational>> matrix, std::vector<Rational> rhs) {
  const size_t rows = matrix.size();
  if (rhs.size() != rows) {
    throw InputError("solve_nonnegative: matrix/rhs size mismatch");
  }
  const size_t cols = rows == 0 ? 0 : matrix.front().size();
  for (const auto& row : matrix) {
    if (row.size() != cols) {
      throw InputError("solve_nonnegative: ragged matrix");
    }
  }
  if (rows == 0) return std::vector<Rational>(cols, Rational(0));

  for (size_t i = 0; i < rows; ++i) {
    if (rhs[i] < 0) {
      for (auto& a : matrix[i]) a = -a;
      rhs[i] = -rhs[i];
    }
  }

  const size_t total = cols + rows;  // structural + artificial
  std::vector<std::vector<Rational>> tab(rows);
  for (size_t i = 0; i < rows; ++i) {
    tab[i].assign(total, Rational(0));
    for (size_t j = 0; j < cols; ++j) tab[i][j] = matrix[i][j];
    tab[i][cols + i] = 1;
  }
  std::vector<size_t> basis(rows);
  for (size_t i = 0; i < rows; ++i) basis[i] = cols + i;

  std::vector<Rational> obj(total, Rational(0));
  Rational obj_value(0);
  for (size_t j = 0; j < cols; ++j) {
    for (size_t i = 0; i < rows; ++i) obj[j] += tab[i][j];
  }
  for (size_t i = 0; i < rows; ++i) obj_value += rhs[i];

  while (true) {
    size_t enter = total;
    for (size_t j = 0; j < total; ++j) {
      if (obj[j] > 0) {
        enter = j;
        break;
      }
    }
    if (enter == total) break;

    size_t leave = rows;
    Rational best_ratio;
    for (size_t i = 0; i < rows; ++i) {
      if (tab[i][enter] <= 0) continue;
      const Rational ratio = rhs[i] / tab[i][enter];
      if (leave == rows || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == rows) {
      // The phase-one objective is bounded below by zero, so an unbounded
      // ray cannot occur in exact arithmetic.
      throw std::logic_error("solve_nonnegative: unbounded phase-one ray");
    }

    const Rational pivot = tab[leave][enter];
    for (auto& a : tab[leave]) a /= pivot;
    rhs[leave] /= pivot;
    for (size_t i = 0; i < rows; ++i) {
      if (i == leave || tab[i][enter] == 0) continue;
      const Rational f = tab[i][enter];
      for (size_t j = 0; j < total; ++j) tab[i][j] -= f * tab[leave][j];
      rhs[i] -= f * rhs[leave];
    }
    if (obj[enter] != 0) {
      const Rational f = obj[enter];
      for (size_t j = 0; j < total; ++j) obj[j] -= f * tab[leave][j];
      obj_value -= f * rhs[leave];
    }
    basis[leave] = enter;
  }

  if (obj_value != 0) return std::nullopt;

  std::vector<Rational> solution(cols, Rational(0));
  for (size_t i = 0; i < rows; ++i) {
    if (basis[i] < cols) solution[basis[i]] = rhs[i];
  }
  return solution;
}

std::optional<BalancedWitness> convex_membership(
    const Point& target, const std::vector<Point>& generators) {
  if (generators.empty()) {
    throw InputError("convex membership: no generators");
  }
  const int dim = target.dimension();
  for (const Point& g : generators) {
    if (g.dimension() != dim) {
      throw InputError("convex membership: dimension mismatch");
    }
  }

  // Coordinate rows plus the weight-sum row.
  const size_t rows = static_cast<size_t>(dim) + 1;
  const size_t cols = generators.size();
  std::vector<std::vector<Rational>> matrix(rows,
                                            std::vector<Rational>(cols));
  std::vector<Rational> rhs(rows);
  for (int k = 0; k < dim; ++k) {
    for (size_t j = 0; j < cols; ++j) {
      matrix[static_cast<size_t>(k)][j] =
          generators[j].coords[static_cast<size_t>(k)];
    }
    rhs[static_cast<size_t>(k)] = target.coords[static_cast<size_t>(k)];
  }
  for (size_t j = 0; j < cols; ++j) matrix[rows - 1][j] = 1;
  rhs[rows - 1] = 1;

  auto solution = solve_nonnegative(std::move(matrix), std::move(rhs));
  if (!solution) return std::nullopt;
  return BalancedWitness{WitnessForm::ConvexCombination, std::move(*solution)};
}

std::optional<BalancedWitness> shapley_weights(const SubsetFamily& family) {
  if (family.size() == 0) {
    throw InputError("shapley weights: empty family");
  }
  const size_t d = static_cast<size_t>(family.d());
  const size_t m = static_cast<size_t>(family.size());
  std::vector<std::vector<Rational>> matrix(d, std::vector<Rational>(m));
  for (size_t k = 0; k < m; ++k) {
    for (int e : family.members()[k]) {
      matrix[static_cast<size_t>(e - 1)][k] = 1;
    }
  }
  std::vector<Rational> rhs(d, Rational(1));

  auto solution = solve_nonnegative(std::move(matrix), std::move(rhs));
  if (!solution) return std::nullopt;
  return BalancedWitness{WitnessForm::ShapleyCover, std::move(*solution)};
}

bool verify_convex_combination(const Point& target,
                               const std::vector<Point>& generators,
                               const std::vector<Rational>& weights) {
  if (weights.size() != generators.size()) return false;
  Rational total(0);
  for (const Rational& w : weights) {
    if (w < 0) return false;
    total += w;
  }
  if (total != 1) return false;
  const int dim = target.dimension();
  for (int k = 0; k < dim; ++k) {
    Rational acc(0);
    for (size_t j = 0; j < generators.size(); ++j) {
      acc += weights[j] * generators[j].coords[static_cast<size_t>(k)];
    }
    if (acc != target.coords[static_cast<size_t>(k)]) return false;
  }
  return true;
}

bool verify_shapley_cover(const SubsetFamily& family,
                          const std::vector<Rational>& weights) {
  if (weights.size() != static_cast<size_t>(family.size())) return false;
  for (const Rational& w : weights) {
    if (w < 0) return false;
  }
  std::vector<Rational> cover(static_cast<size_t>(family.d()), Rational(0));
  for (size_t k = 0; k < weights.size(); ++k) {
    for (int e : family.members()[k]) {
      cover[static_cast<size_t>(e - 1)] += weights[k];
    }
  }
  for (const Rational& c : cover) {
    if (c != 1) return false;
  }
  return true;
}

}  // namespace balanced
