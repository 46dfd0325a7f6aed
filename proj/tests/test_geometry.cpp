#include <doctest.h>

#include "balanced/errors.hpp"
#include "balanced/families.hpp"
#include "balanced/geometry.hpp"

using namespace balanced;

namespace {

Point point(std::vector<int> coords) {
  Point p;
  for (int c : coords) p.coords.push_back(Rational(c));
  return p;
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("point set validation") {
  CHECK_THROWS_AS(PointSet({}), InputError);
  CHECK_THROWS_AS(PointSet({point({1, 0}), point({1})}), InputError);
  CHECK_THROWS_AS(PointSet({point({1, 0}), point({1, 0})}), InputError);
  CHECK_THROWS_AS(PointSet({point({1})}, {"a", "b"}), InputError);
}

TEST_CASE("centroid of V_3 is c_3") {
  const PointSet v3 = simplex_edge_midpoints(3);
  const Point c = centroid(v3);
  REQUIRE(c.dimension() == 3);
  for (const Rational& x : c.coords) CHECK(x == make_rational(1, 3));
}

TEST_CASE("centroid of a singleton is the point itself") {
  const PointSet single({point({3, -2})});
  CHECK(centroid(single) == point({3, -2}));
}

TEST_CASE("centroid of the cross polytope is the origin") {
  const Point c = centroid(cross_polytope(2));
  CHECK(c == point({0, 0}));
}

TEST_CASE("affine dimension") {
  CHECK(affine_dimension(PointSet({point({5, 5, 5})})) == 0);
  CHECK(affine_dimension(cross_polytope(3)) == 3);
  // V_d spans the hyperplane x_1 + ... + x_d = 1.
  for (int d = 2; d <= 6; ++d) {
    CHECK(affine_dimension(simplex_edge_midpoints(d)) == d - 1);
  }
  CHECK(affine_dimension(plus_minus_simplex(4)) == 3);
}

TEST_CASE("V_d points lie on the hyperplane sum = 1") {
  const PointSet v4 = simplex_edge_midpoints(4);
  CHECK(v4.size() == 6);
  for (const Point& p : v4.points()) {
    Rational sum(0);
    for (const Rational& x : p.coords) sum += x;
    CHECK(sum == 1);
  }
}

TEST_CASE("plus-minus simplex degenerates at d = 2") {
  const PointSet v = plus_minus_simplex(2);
  CHECK(v.size() == 2);
  CHECK(v.dimension() == 1);
  CHECK(centroid(v) == point({0}));
  CHECK(plus_minus_simplex(3).size() == 6);
  CHECK(plus_minus_simplex(4).size() == 8);
}

TEST_CASE("midpoint embedding") {
  SUBCASE("single pair in d = 2") {
    const PointSet set = midpoint_embedding(TwoSubsetFamily(2, {{1, 2}}));
    REQUIRE(set.size() == 1);
    CHECK(set[0].coords == std::vector<Rational>{make_rational(1, 2),
                                                 make_rational(1, 2)});
  }
  SUBCASE("triangle in d = 3") {
    const PointSet set =
        midpoint_embedding(TwoSubsetFamily(3, {{1, 2}, {2, 3}, {3, 1}}));
    REQUIRE(set.size() == 3);
    const Rational h = make_rational(1, 2);
    CHECK(set[0].coords == std::vector<Rational>{h, h, Rational(0)});
    CHECK(set[1].coords == std::vector<Rational>{h, Rational(0), h});
    CHECK(set[2].coords == std::vector<Rational>{Rational(0), h, h});
  }
  SUBCASE("family order is canonical") {
    // Pairs are sorted regardless of input order.
    const TwoSubsetFamily family(4, {{3, 4}, {2, 1}});
    CHECK(family.pairs() ==
          std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
  }
  SUBCASE("duplicate pairs are rejected") {
    CHECK_THROWS_AS(TwoSubsetFamily(3, {{1, 2}, {2, 1}}), InputError);
  }
}

TEST_CASE("subset family validation") {
  CHECK_THROWS_AS(SubsetFamily(3, {{}}), InputError);
  CHECK_THROWS_AS(SubsetFamily(3, {{1, 4}}), InputError);
  CHECK_THROWS_AS(SubsetFamily(3, {{0, 1}}), InputError);
  CHECK_THROWS_AS(SubsetFamily(3, {{1, 1}}), InputError);
  CHECK_THROWS_AS(SubsetFamily(3, {{1, 2}, {2, 1}}), InputError);
  const SubsetFamily family(3, {{2, 1}, {3}});
  CHECK(family.members()[0] == Subset{1, 2});
}

}  // TEST_SUITE
