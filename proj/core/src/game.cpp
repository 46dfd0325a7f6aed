#include "balanced/game.hpp"

#include <algorithm>
#include <map>

#include "balanced/errors.hpp"
#include "balanced/feasibility.hpp"
#include "detail/block_partitions.hpp"

namespace balanced {

namespace {

size_t pair_index(int d, int i, int j) {
  // Lexicographic rank of (i, j), 1 <= i < j <= d.
  const size_t a = static_cast<size_t>(i - 1);
  const size_t n = static_cast<size_t>(d);
  return a * n - a * (a + 1) / 2 + static_cast<size_t>(j - i - 1);
}

}  // namespace

Game::Game(int d, std::vector<Rational> singleton_values,
           std::vector<Rational> pair_values_lex, Rational grand_value)
    : d_(d),
      singletons_(std::move(singleton_values)),
      pairs_(std::move(pair_values_lex)),
      grand_value_(std::move(grand_value)) {
  if (d_ < 2) throw InputError("game: d must be >= 2");
  if (singletons_.size() != static_cast<size_t>(d_)) {
    throw InputError("game: need one singleton value per element");
  }
  const size_t expected_pairs = static_cast<size_t>(d_) *
                                static_cast<size_t>(d_ - 1) / 2;
  if (pairs_.size() != expected_pairs) {
    throw InputError("game: need one value per pair of [d]");
  }
}

Game Game::with_defaults(
    int d, std::vector<Rational> singleton_values,
    const std::vector<std::pair<std::pair<int, int>, Rational>>& pairs,
    Rational grand_value) {
  if (d < 2) throw InputError("game: d must be >= 2");
  if (singleton_values.size() != static_cast<size_t>(d)) {
    throw InputError("game: need one singleton value per element");
  }
  const size_t expected_pairs =
      static_cast<size_t>(d) * static_cast<size_t>(d - 1) / 2;
  std::vector<std::optional<Rational>> provided(expected_pairs);
  for (const auto& [pr, value] : pairs) {
    auto [i, j] = pr;
    if (i > j) std::swap(i, j);
    if (i < 1 || j > d || i == j) throw InputError("game: invalid pair");
    auto& slot = provided[pair_index(d, i, j)];
    if (slot) throw InputError("game: duplicate pair value");
    slot = value;
  }
  std::vector<Rational> full(expected_pairs);
  std::vector<std::pair<int, int>> defaulted;
  size_t k = 0;
  for (int i = 1; i <= d; ++i) {
    for (int j = i + 1; j <= d; ++j, ++k) {
      if (provided[k]) {
        full[k] = *provided[k];
      } else {
        full[k] = singleton_values[static_cast<size_t>(i - 1)] +
                  singleton_values[static_cast<size_t>(j - 1)];
        defaulted.emplace_back(i, j);
      }
    }
  }
  Game game(d, std::move(singleton_values), std::move(full),
            std::move(grand_value));
  game.defaulted_ = std::move(defaulted);
  return game;
}

const Rational& Game::singleton(int i) const {
  if (i < 1 || i > d_) throw InputError("game: element out of range");
  return singletons_[static_cast<size_t>(i - 1)];
}

const Rational& Game::pair_value(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > d_ || i == j) throw InputError("game: invalid pair");
  return pairs_[pair_index(d_, i, j)];
}

const Rational& Game::value(const Subset& member) const {
  if (member.size() == 1) return singleton(member[0]);
  if (member.size() == 2) return pair_value(member[0], member[1]);
  throw InputError("game: coalition values exist for sizes 1 and 2 only");
}

CoreVerdict core_direct(const Game& game) {
  // Substitute x_i = y_i + v({i}) with y_i >= 0, then the constraints are
  //   sum y_i = v([d]) - sum v({i})
  //   y_i + y_j - t_ij = v({i,j}) - v({i}) - v({j}),  t_ij >= 0.
  const int d = game.d();
  const size_t pair_count =
      static_cast<size_t>(d) * static_cast<size_t>(d - 1) / 2;
  const size_t rows = 1 + pair_count;
  const size_t cols = static_cast<size_t>(d) + pair_count;

  std::vector<std::vector<Rational>> matrix(rows,
                                            std::vector<Rational>(cols));
  std::vector<Rational> rhs(rows);

  Rational singleton_total(0);
  for (int i = 1; i <= d; ++i) singleton_total += game.singleton(i);
  for (int i = 0; i < d; ++i) matrix[0][static_cast<size_t>(i)] = 1;
  rhs[0] = game.grand_value() - singleton_total;

  size_t row = 1;
  size_t slack = static_cast<size_t>(d);
  for (int i = 1; i <= d; ++i) {
    for (int j = i + 1; j <= d; ++j, ++row, ++slack) {
      matrix[row][static_cast<size_t>(i - 1)] = 1;
      matrix[row][static_cast<size_t>(j - 1)] = 1;
      matrix[row][slack] = -1;
      rhs[row] =
          game.pair_value(i, j) - game.singleton(i) - game.singleton(j);
    }
  }

  CoreVerdict verdict;
  auto solution = solve_nonnegative(std::move(matrix), std::move(rhs));
  if (!solution) {
    verdict.nonempty = false;
    return verdict;
  }
  std::vector<Rational> allocation(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    allocation[static_cast<size_t>(i)] =
        (*solution)[static_cast<size_t>(i)] + game.singleton(i + 1);
  }
  verdict.nonempty = true;
  verdict.allocation = std::move(allocation);
  return verdict;
}

CoreVerdict core_via_theorem1(const Game& game) {
  const int d = game.d();
  CoreVerdict verdict;
  verdict.nonempty = true;

  detail::for_each_block_family(
      d, /*allow_singletons=*/true, [&](const detail::BlockFamily& fam) {
        if (!verdict.nonempty) return;  // already certified empty
        Rational total(0);
        for (int e : fam.singletons) total += game.singleton(e);
        for (size_t k = 0; k < fam.edges.size(); ++k) {
          total += fam.edge_weights[k] *
                   game.pair_value(fam.edges[k].first, fam.edges[k].second);
        }
        if (total > game.grand_value()) {
          std::vector<std::pair<Subset, Rational>> entries;
          for (int e : fam.singletons) {
            entries.push_back({{e}, Rational(1)});
          }
          for (size_t k = 0; k < fam.edges.size(); ++k) {
            entries.push_back({{fam.edges[k].first, fam.edges[k].second},
                               fam.edge_weights[k]});
          }
          std::sort(entries.begin(), entries.end(),
                    [](const auto& a, const auto& b) {
                      return a.first < b.first;
                    });
          std::vector<Subset> members;
          std::vector<Rational> weights;
          for (auto& [member, weight] : entries) {
            members.push_back(std::move(member));
            weights.push_back(std::move(weight));
          }
          verdict.nonempty = false;
          verdict.violating_family = ViolatingFamily{
              SubsetFamily(d, std::move(members)), std::move(weights), total};
        }
      });
  return verdict;
}

bool verify_allocation(const Game& game, const std::vector<Rational>& x) {
  const int d = game.d();
  if (x.size() != static_cast<size_t>(d)) return false;
  Rational total(0);
  for (const Rational& xi : x) total += xi;
  if (total != game.grand_value()) return false;
  for (int i = 1; i <= d; ++i) {
    if (x[static_cast<size_t>(i - 1)] < game.singleton(i)) return false;
    for (int j = i + 1; j <= d; ++j) {
      if (x[static_cast<size_t>(i - 1)] + x[static_cast<size_t>(j - 1)] <
          game.pair_value(i, j)) {
        return false;
      }
    }
  }
  return true;
}

bool verify_violating_family(const Game& game, const ViolatingFamily& vf) {
  if (!verify_shapley_cover(vf.family, vf.weights)) return false;
  Rational total(0);
  for (size_t k = 0; k < vf.weights.size(); ++k) {
    total += vf.weights[k] * game.value(vf.family.members()[k]);
  }
  return total == vf.total && total > game.grand_value();
}

CrossValidationReport cross_validate(const Game& game) {
  CrossValidationReport report;
  report.direct = core_direct(game);
  report.via_theorem1 = core_via_theorem1(game);
  report.agree = report.direct.nonempty == report.via_theorem1.nonempty;
  return report;
}

Game random_game(std::mt19937_64& rng, int d) {
  auto rational = [&rng](int lo, int hi, int max_den) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, max_den);
    return make_rational(num(rng), den(rng));
  };

  std::vector<Rational> singletons;
  singletons.reserve(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) singletons.push_back(rational(-8, 8, 3));

  std::vector<Rational> pairs;
  Rational singleton_total(0);
  for (const Rational& v : singletons) singleton_total += v;
  for (int i = 1; i <= d; ++i) {
    for (int j = i + 1; j <= d; ++j) {
      const Rational base = singletons[static_cast<size_t>(i - 1)] +
                            singletons[static_cast<size_t>(j - 1)];
      pairs.push_back(base + rational(-4, 8, 3));
    }
  }
  const Rational grand = singleton_total + rational(-4, 5 * d, 2);
  return Game(d, std::move(singletons), std::move(pairs), grand);
}

}  // namespace balanced
