#include "balanced/partitions.hpp"

#include <map>

#include "balanced/errors.hpp"

namespace balanced {

namespace {

void check_max_d(int max_d) {
  if (max_d < 0) throw InputError("partition table: max_d must be >= 0");
}

std::vector<Integer> coin_dp(int max_d, const std::vector<int>& parts) {
  std::vector<Integer> table(static_cast<size_t>(max_d) + 1, Integer(0));
  table[0] = 1;
  for (int part : parts) {
    for (int s = part; s <= max_d; ++s) {
      table[static_cast<size_t>(s)] += table[static_cast<size_t>(s - part)];
    }
  }
  return table;
}

}  // namespace

std::vector<Integer> odd_partitions(int max_d) {
  check_max_d(max_d);
  std::vector<int> parts;
  for (int p = 1; p <= max_d; p += 2) parts.push_back(p);
  return coin_dp(max_d, parts);
}

std::vector<Integer> balanced_partitions(int max_d) {
  check_max_d(max_d);
  std::vector<int> parts{2};
  for (int p = 3; p <= max_d; p += 2) parts.push_back(p);
  if (max_d < 2) parts.clear();
  return coin_dp(max_d, parts);
}

std::vector<Integer> balanced_partitions_generating_function(int max_d) {
  check_max_d(max_d);
  // Series for 1/(1+x): alternating signs.
  std::vector<Integer> series(static_cast<size_t>(max_d) + 1);
  for (int s = 0; s <= max_d; ++s) {
    series[static_cast<size_t>(s)] = (s % 2 == 0) ? 1 : -1;
  }
  // Multiply by 1/(1-x^p) for each odd p, truncating at degree max_d.
  for (int p = 1; p <= max_d; p += 2) {
    for (int s = p; s <= max_d; ++s) {
      series[static_cast<size_t>(s)] += series[static_cast<size_t>(s - p)];
    }
  }
  return series;
}

PartitionTable partition_table(int max_d) {
  check_max_d(max_d);
  return PartitionTable{max_d, odd_partitions(max_d),
                        balanced_partitions(max_d)};
}

IdentityReport check_alternating_identity(int max_d) {
  const PartitionTable table = partition_table(max_d);
  IdentityReport report;
  report.max_d = max_d;
  report.holds = true;
  for (int d = 0; d <= max_d; ++d) {
    Integer sum(0);
    for (int i = 0; i <= d; ++i) {
      const Integer& term = table.q[static_cast<size_t>(d - i)];
      if (i % 2 == 0) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    if (sum != table.b[static_cast<size_t>(d)]) {
      report.holds = false;
      report.failures.push_back(d);
    }
  }
  return report;
}

Integer count_labeled_minimal(int d) {
  if (d < 2) {
    throw InputError("labeled minimal count: d must be >= 2");
  }
  std::vector<Integer> factorial(static_cast<size_t>(d) + 1, Integer(1));
  for (int n = 1; n <= d; ++n) {
    factorial[static_cast<size_t>(n)] =
        factorial[static_cast<size_t>(n - 1)] * n;
  }
  auto cycles = [&](int m) {
    return m == 2 ? Integer(1) : factorial[static_cast<size_t>(m - 1)] / 2;
  };

  Integer total(0);
  // Walk partitions of d into parts {2, 3, 5, 7, ...}, non-increasing.
  // Each size multiset {m_i} contributes
  //   d! / (prod m_i! * prod a_s!) * prod cycles(m_i)
  // set partitions with those block sizes times cycle choices, where a_s
  // is the multiplicity of size s.
  std::vector<int> parts;
  auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      Integer numerator = factorial[static_cast<size_t>(d)];
      Integer denominator(1);
      std::map<int, int> multiplicity;
      for (int m : parts) {
        numerator *= cycles(m);
        denominator *= factorial[static_cast<size_t>(m)];
        ++multiplicity[m];
      }
      for (const auto& [part, count] : multiplicity) {
        (void)part;
        denominator *= factorial[static_cast<size_t>(count)];
      }
      total += numerator / denominator;  // always divides exactly
      return;
    }
    for (int m = std::min(remaining, max_part); m >= 2; --m) {
      if (m != 2 && m % 2 == 0) continue;
      parts.push_back(m);
      self(self, remaining - m, m);
      parts.pop_back();
    }
  };
  recurse(recurse, d, d);
  return total;
}

}  // namespace balanced
