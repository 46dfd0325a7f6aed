#pragma once

#include <optional>
#include <vector>

#include "balanced/families.hpp"
#include "balanced/geometry.hpp"

namespace balanced {

enum class WitnessForm {
  ConvexCombination,  // weights sum to 1 and reproduce the target point
  ShapleyCover,       // weighted characteristic vectors sum to (1, ..., 1)
};

/// Nonnegative weight vector certifying balancedness. Weights align with
/// the generator/member list the witness was produced for; zeros are kept.
struct BalancedWitness {
  WitnessForm form;
  std::vector<Rational> weights;
};

/// Exact phase-one feasibility for A z = b, z >= 0 (dense rational tableau,
/// Bland's anti-cycling rule). Returns a basic feasible z, or nullopt when
/// the system is infeasible. Deterministic: identical inputs give identical
/// solutions.
std::optional<std::vector<Rational>> solve_nonnegative(
    std::vector<std::vector<Rational>> matrix, std::vector<Rational> rhs);

/// Weights lambda >= 0 with sum 1 and sum lambda_i v_i = target, or nullopt
/// when target is outside the convex hull. The decision is exact.
std::optional<BalancedWitness> convex_membership(
    const Point& target, const std::vector<Point>& generators);

/// Weights w >= 0 with sum w_k eta_k = (1, ..., 1) over the family's
/// characteristic vectors eta_k, or nullopt. Throws InputError on an empty
/// family.
std::optional<BalancedWitness> shapley_weights(const SubsetFamily& family);

/// Exact re-substitution checks; every witness the library returns passes.
bool verify_convex_combination(const Point& target,
                               const std::vector<Point>& generators,
                               const std::vector<Rational>& weights);
bool verify_shapley_cover(const SubsetFamily& family,
                          const std::vector<Rational>& weights);

}  // namespace balanced
