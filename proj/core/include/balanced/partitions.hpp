#pragma once

#include <vector>

#include "balanced/rational.hpp"

namespace balanced {

/// q and b tables side by side: q(d) counts partitions of d into odd
/// parts, b(d) counts partitions into parts from {2} and the odd numbers
/// >= 3. Conventions: q(0) = b(0) = 1 (empty partition), b(1) = 0.
struct PartitionTable {
  int max_d = 0;
  std::vector<Integer> q;
  std::vector<Integer> b;
};

/// q(0..max_d) by dynamic programming over parts 1, 3, 5, ...
std::vector<Integer> odd_partitions(int max_d);

/// b(0..max_d) by dynamic programming over parts 2, 3, 5, 7, ...
std::vector<Integer> balanced_partitions(int max_d);

/// b(0..max_d) as coefficients of 1/(1+x) * prod_{i>=0} 1/(1-x^{2i+1}),
/// extracted from truncated series multiplication. Agrees with
/// balanced_partitions everywhere; both routes are kept and compared.
std::vector<Integer> balanced_partitions_generating_function(int max_d);

PartitionTable partition_table(int max_d);

struct IdentityReport {
  int max_d = 0;
  bool holds = false;
  std::vector<int> failures;  // values of d violating the identity
};

/// Checks b(d) = q(d) - q(d-1) + ... + (-1)^d q(0) for every d <= max_d.
IdentityReport check_alternating_identity(int max_d);

/// Number of minimal balanced 2-subset families of [d]: a sum over
/// partitions of d into parts {2} and odd >= 3 of multiset coefficients
/// times (m-1)!/2 cycle counts. Closed form, no enumeration.
Integer count_labeled_minimal(int d);

}  // namespace balanced
