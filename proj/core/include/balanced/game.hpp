#pragma once

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "balanced/families.hpp"
#include "balanced/rational.hpp"

namespace balanced {

/// A cooperative game on [d] with values on singletons, pairs, and the
/// grand coalition. Pair values are stored in lexicographic pair order.
class Game {
 public:
  Game(int d, std::vector<Rational> singleton_values,
       std::vector<Rational> pair_values_lex, Rational grand_value);

  /// Builds a game from a partial pair list; missing pairs default to the
  /// sum of their singleton values (recorded in defaulted_pairs()).
  static Game with_defaults(
      int d, std::vector<Rational> singleton_values,
      const std::vector<std::pair<std::pair<int, int>, Rational>>& pairs,
      Rational grand_value);

  int d() const { return d_; }
  const Rational& singleton(int i) const;        // 1-based
  const Rational& pair_value(int i, int j) const;
  const Rational& grand_value() const { return grand_value_; }
  const std::vector<Rational>& singleton_values() const { return singletons_; }
  const std::vector<Rational>& pair_values_lex() const { return pairs_; }
  const std::vector<std::pair<int, int>>& defaulted_pairs() const {
    return defaulted_;
  }

  /// v(S) for a singleton or pair member.
  const Rational& value(const Subset& member) const;

 private:
  int d_;
  std::vector<Rational> singletons_;
  std::vector<Rational> pairs_;
  Rational grand_value_;
  std::vector<std::pair<int, int>> defaulted_;
};

/// A minimal balanced family (members of size <= 2, singletons included)
/// whose weighted values exceed the grand value, certifying an empty core.
struct ViolatingFamily {
  SubsetFamily family;
  std::vector<Rational> weights;
  Rational total;  // sum of weight * value, exceeds the grand value
};

struct CoreVerdict {
  bool nonempty = false;
  std::optional<std::vector<Rational>> allocation;   // exact, when found
  std::optional<ViolatingFamily> violating_family;   // exact, when empty
};

/// Exact feasibility solve for an allocation x with sum x_i = v([d]),
/// x_i >= v({i}) and x_i + x_j >= v({i,j}).
CoreVerdict core_direct(const Game& game);

/// Bondareva-Shapley over the classified minimal balanced families with
/// coalition sizes <= 2: partitions of [d] into singletons (weight 1),
/// isolated edges (weight 1), and odd cycles (weight 1/2 per edge).
/// Returns the first violating family in canonical order, or a bare
/// nonempty verdict.
CoreVerdict core_via_theorem1(const Game& game);

bool verify_allocation(const Game& game, const std::vector<Rational>& x);
bool verify_violating_family(const Game& game, const ViolatingFamily& vf);

struct CrossValidationReport {
  bool agree = false;
  CoreVerdict direct;
  CoreVerdict via_theorem1;
};

/// Runs both checkers; they must agree on nonemptiness.
CrossValidationReport cross_validate(const Game& game);

/// Seeded random game with small rational values; pair values are spread
/// around the singleton sums and the grand value around the total, so both
/// verdicts occur with substantial frequency.
Game random_game(std::mt19937_64& rng, int d);

}  // namespace balanced
