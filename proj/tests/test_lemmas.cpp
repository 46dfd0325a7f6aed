#include <doctest.h>

#include <map>

#include "balanced/complexes.hpp"
#include "balanced/errors.hpp"
#include "balanced/lemmas.hpp"

using namespace balanced;

namespace {

// Label map convention for interleaved antipodal point sets
// (+e1, -e1, +e2, ...): label +i is point 2(i-1), label -i is 2(i-1)+1.
std::map<int, int> interleaved_label_map(int n) {
  std::map<int, int> map;
  for (int i = 1; i <= n; ++i) {
    map[+i] = 2 * (i - 1);
    map[-i] = 2 * (i - 1) + 1;
  }
  return map;
}

}  // namespace

TEST_SUITE("lemmas") {

TEST_CASE("generated skeletons have the advertised shape") {
  SUBCASE("subdivided simplex") {
    const LabeledComplex one = generate_disc_triangulation(
        DiscKind::SubdividedSimplex, 1);
    CHECK(one.vertex_count() == 3);
    CHECK(one.cells().size() == 1);
    const LabeledComplex three = generate_disc_triangulation(
        DiscKind::SubdividedSimplex, 3);
    CHECK(three.vertex_count() == 10);
    CHECK(three.cells().size() == 9);
    CHECK(three.has_carriers());
  }
  SUBCASE("path") {
    const LabeledComplex path = generate_disc_triangulation(
        DiscKind::PathDisc, 4);
    CHECK(path.vertex_count() == 5);
    CHECK(path.cells().size() == 4);
    CHECK(path.boundary_vertices() == std::vector<int>{0, 4});
    CHECK(path.antipode(0) == 4);
    CHECK(path.antipode(4) == 0);
    CHECK_THROWS_AS(path.antipode(1), InputError);
  }
  SUBCASE("symmetric discs") {
    const LabeledComplex wheel = generate_disc_triangulation(
        DiscKind::SymmetricDisc, 8);
    CHECK(wheel.vertex_count() == 9);
    CHECK(wheel.cells().size() == 8);
    CHECK(wheel.boundary_vertices().size() == 8);
    CHECK(wheel.antipode(2) == 6);
    const LabeledComplex split = generate_disc_triangulation(
        DiscKind::SymmetricDiscSplit, 8);
    CHECK(split.vertex_count() == 10);
    CHECK(split.cells().size() == 10);
    CHECK_THROWS_AS(generate_disc_triangulation(DiscKind::SymmetricDisc, 5),
                    InputError);
  }
}

TEST_CASE("malformed complexes are rejected eagerly") {
  // Wrong cell size.
  CHECK_THROWS_AS(LabeledComplex(2, 4, {{0, 1}}), InputError);
  // Repeated vertex inside a cell.
  CHECK_THROWS_AS(LabeledComplex(2, 4, {{0, 1, 1}}), InputError);
  // Duplicate cell.
  CHECK_THROWS_AS(LabeledComplex(2, 3, {{0, 1, 2}, {2, 1, 0}}), InputError);
  // A vertex in no cell.
  CHECK_THROWS_AS(LabeledComplex(2, 4, {{0, 1, 2}}), InputError);
  // Three triangles sharing one edge.
  CHECK_THROWS_AS(
      LabeledComplex(2, 5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}}), InputError);
  // Disconnected.
  CHECK_THROWS_AS(LabeledComplex(1, 4, {{0, 1}, {2, 3}}), InputError);
  // Wrong supplied boundary.
  CHECK_THROWS_AS(LabeledComplex(1, 3, {{0, 1}, {1, 2}}, {0, 1}), InputError);
  // Antipode with a fixed point.
  CHECK_THROWS_AS(LabeledComplex(1, 3, {{0, 1}, {1, 2}}, {}, {{0, 0}}),
                  InputError);
  // Antipode off the boundary.
  CHECK_THROWS_AS(LabeledComplex(1, 3, {{0, 1}, {1, 2}}, {}, {{0, 1}}),
                  InputError);
  // Label count mismatch.
  CHECK_THROWS_AS(LabeledComplex(1, 3, {{0, 1}, {1, 2}}, {}, {}, {1, 2}),
                  InputError);
}

TEST_CASE("sperner admissibility") {
  const LabeledComplex simplex =
      generate_disc_triangulation(DiscKind::SubdividedSimplex, 1);
  // Vertices in lattice order (0,0), (0,1), (1,0): carriers {3}, {2}, {1}.
  CHECK(check_sperner_admissible(simplex, std::vector<int>{3, 2, 1}));
  CHECK_FALSE(check_sperner_admissible(simplex, std::vector<int>{3, 3, 1}));
  CHECK_THROWS_AS(check_sperner_admissible(simplex, std::vector<int>{3, 2, 4}),
                  InputError);

  const LabeledComplex k2 =
      generate_disc_triangulation(DiscKind::SubdividedSimplex, 2);
  // A boundary vertex on the facet carrying colors {1,3} labeled 2 fails.
  std::vector<int> labels(static_cast<size_t>(k2.vertex_count()));
  for (int v = 0; v < k2.vertex_count(); ++v) {
    labels[static_cast<size_t>(v)] = k2.carriers()[static_cast<size_t>(v)][0];
  }
  CHECK(check_sperner_admissible(k2, labels));
}

TEST_CASE("rainbow cells") {
  const LabeledComplex simplex =
      generate_disc_triangulation(DiscKind::SubdividedSimplex, 1);
  CHECK(find_rainbow_cells(simplex, std::vector<int>{3, 2, 1}).size() == 1);
  CHECK(find_rainbow_cells(simplex, std::vector<int>{1, 1, 1}).empty());
}

TEST_CASE("antipodal labeling check") {
  const LabeledComplex path = generate_disc_triangulation(DiscKind::PathDisc, 2);
  CHECK(check_antipodal_labeling(path, std::vector<int>{1, 2, -1}));
  CHECK_FALSE(check_antipodal_labeling(path, std::vector<int>{1, 2, 1}));
  CHECK_THROWS_AS(check_antipodal_labeling(path, std::vector<int>{1, 0, -1}),
                  InputError);
  const LabeledComplex simplex =
      generate_disc_triangulation(DiscKind::SubdividedSimplex, 1);
  CHECK_THROWS_AS(check_antipodal_labeling(simplex, std::vector<int>{1, 2, 3}),
                  InputError);
}

TEST_CASE("complementary edges") {
  const LabeledComplex path = generate_disc_triangulation(DiscKind::PathDisc, 2);
  const auto edges = find_complementary_edges(path, std::vector<int>{1, -1, 2});
  REQUIRE(edges.size() == 1);
  CHECK(edges[0] == std::pair<int, int>{0, 1});
  // A larger palette can avoid complements entirely.
  CHECK(find_complementary_edges(path, std::vector<int>{1, 2, 3}).empty());
}

TEST_CASE("alternating simplices") {
  const LabeledComplex edge = generate_disc_triangulation(DiscKind::PathDisc, 1);
  const ParityResult result =
      find_alternating_simplices(edge, 2, std::vector<int>{1, -2});
  CHECK(result.cells.size() == 1);
  CHECK(result.odd);

  // Same-sign labels are not alternating.
  const LabeledComplex simplex =
      generate_disc_triangulation(DiscKind::SubdividedSimplex, 1);
  const ParityResult none =
      find_alternating_simplices(simplex, 3, std::vector<int>{1, 2, 3});
  CHECK(none.cells.empty());
  CHECK_FALSE(none.odd);

  // Complementary edge violates the precondition, naming the edge.
  CHECK_THROWS_WITH_AS(
      find_alternating_simplices(edge, 1, std::vector<int>{1, -1}),
      doctest::Contains("complementary edge"), InputError);
  // Magnitude above the palette bound.
  CHECK_THROWS_AS(find_alternating_simplices(edge, 1, std::vector<int>{1, -2}),
                  InputError);
}

TEST_CASE("shashkin cells") {
  const LabeledComplex path = generate_disc_triangulation(DiscKind::PathDisc, 4);
  const std::vector<int> labels{1, 2, 2, -1, -1};
  SUBCASE("lambda = {+1, +2}") {
    const ParityResult r = find_shashkin_cells(path, {1, 2}, labels);
    REQUIRE(r.cells.size() == 1);
    CHECK(r.cells[0] == std::vector<int>{0, 1});
    CHECK(r.odd);
  }
  SUBCASE("lambda = {-1, +2} also counts negated sets") {
    const ParityResult r = find_shashkin_cells(path, {-1, 2}, labels);
    REQUIRE(r.cells.size() == 1);
    CHECK(r.cells[0] == std::vector<int>{2, 3});
    CHECK(r.odd);
  }
  SUBCASE("cell labeled {+1, -2} is neither lambda nor -lambda") {
    const ParityResult r =
        find_shashkin_cells(path, {1, 2}, std::vector<int>{1, -2, -2, 1, -1});
    CHECK(r.cells.empty());
  }
  SUBCASE("malformed lambda") {
    CHECK_THROWS_AS(find_shashkin_cells(path, {1, 1}, labels), InputError);
    CHECK_THROWS_AS(find_shashkin_cells(path, {1}, labels), InputError);
    CHECK_THROWS_AS(find_shashkin_cells(path, {1, 3}, labels), InputError);
  }
  SUBCASE("complementary edge is a precondition violation") {
    CHECK_THROWS_AS(
        find_shashkin_cells(path, {1, 2}, std::vector<int>{1, -1, 2, 1, -1}),
        InputError);
  }
}

TEST_CASE("theorem B witness on a single simplex") {
  // Colors 1..3 map onto the triangle V_3; the full catalog member is the
  // whole midpoint set, realized by the one cell.
  const LabeledComplex simplex =
      generate_disc_triangulation(DiscKind::SubdividedSimplex, 1)
          .with_labels({1, 2, 3});
  std::map<int, int> label_to_point{{1, 0}, {2, 1}, {3, 2}};
  const auto witness =
      theorem_b_witness(simplex_edge_midpoints(3), simplex, label_to_point);
  REQUIRE(witness.found);
  CHECK(witness.member == IndexSubset{0, 1, 2});
  CHECK(witness.face == std::vector<int>{0, 1, 2});
}

TEST_CASE("theorem B witness on a Tucker instance") {
  // Wheel with an antipodal labeling; the witness must be a complementary
  // edge paired with an antipodal member of BS(cross polytope).
  const LabeledComplex wheel =
      generate_disc_triangulation(DiscKind::SymmetricDisc, 8)
          .with_labels({1, 2, -1, 2, -1, -2, 1, -2, 1});
  REQUIRE(check_antipodal_labeling(wheel));
  const auto catalog = enumerate_minimal_balanced(cross_polytope(2));
  const auto witness =
      theorem_b_witness(catalog, wheel, interleaved_label_map(2));
  REQUIRE(witness.found);
  CHECK(witness.member.size() == 2);
  CHECK(witness.member[0] + 1 == witness.member[1]);  // an antipodal pair
  REQUIRE(witness.face.size() == 2);
  CHECK(wheel.label(witness.face[0]) == -wheel.label(witness.face[1]));
}

TEST_CASE("labeling enumerators") {
  const LabeledComplex path = generate_disc_triangulation(DiscKind::PathDisc, 2);
  SUBCASE("full space") {
    std::uint64_t count = 0;
    const std::uint64_t visited = for_each_labeling(
        path, signed_palette(1), /*antipodal=*/false,
        [&](std::span<const int>) { ++count; });
    CHECK(visited == 8);  // 2^3
    CHECK(count == 8);
  }
  SUBCASE("antipodal space fixes partner labels") {
    std::uint64_t antipodal_count = 0;
    const std::uint64_t visited = for_each_labeling(
        path, signed_palette(2), /*antipodal=*/true,
        [&](std::span<const int> labels) {
          ++antipodal_count;
          CHECK(labels[2] == -labels[0]);
        });
    CHECK(visited == 16);  // 4 choices for vertex 0, 4 for the interior
    CHECK(antipodal_count == 16);
  }
  SUBCASE("cap is enforced") {
    CHECK_THROWS_AS(for_each_labeling(path, signed_palette(2), false,
                                      [](std::span<const int>) {}, 10),
                    BudgetError);
  }
  SUBCASE("sperner labelings range over carriers") {
    const LabeledComplex k2 =
        generate_disc_triangulation(DiscKind::SubdividedSimplex, 2);
    std::uint64_t count = 0;
    for_each_sperner_labeling(k2, [&](std::span<const int> labels) {
      ++count;
      CHECK(check_sperner_admissible(k2, labels));
    });
    CHECK(count == 8);  // three free midpoints with two choices each
  }
}

}  // TEST_SUITE
