#include "frieze/dynkin.hpp"

#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <set>

using namespace frieze;

namespace {

std::vector<DynkinType> all_small_types() {
  std::vector<DynkinType> types;
  for (int n = 1; n <= 8; ++n) types.emplace_back(Family::A, n);
  for (int n = 2; n <= 8; ++n) types.emplace_back(Family::B, n), types.emplace_back(Family::C, n);
  for (int n = 3; n <= 8; ++n) types.emplace_back(Family::D, n);
  for (int n = 6; n <= 8; ++n) types.emplace_back(Family::E, n);
  types.emplace_back(Family::F, 4);
  types.emplace_back(Family::G, 2);
  return types;
}

// Classical determinants of Cartan matrices.
long expected_determinant(const DynkinType& t) {
  switch (t.family()) {
    case Family::A: return t.rank() + 1;
    case Family::B:
    case Family::C: return 2;
    case Family::D: return 4;
    case Family::E: return 9 - t.rank();
    default: return 1;
  }
}

}  // namespace

TEST_SUITE("dynkin") {
  TEST_CASE("type parsing and rank domains") {
    CHECK(DynkinType::parse("d5") == DynkinType(Family::D, 5));
    CHECK(DynkinType::parse("E8").name() == "E8");
    CHECK_THROWS_AS(DynkinType::parse("E9"), std::invalid_argument);
    CHECK_THROWS_AS(DynkinType::parse("D2"), std::invalid_argument);
    CHECK_THROWS_AS(DynkinType::parse("X3"), std::invalid_argument);
    CHECK_THROWS_AS(DynkinType::parse("A"), std::invalid_argument);
    CHECK_THROWS_AS(DynkinType(Family::G, 3), std::invalid_argument);
  }

  TEST_CASE("cartan matrices") {
    CartanMatrix a2(2, 2);
    a2 << 2, -1, -1, 2;
    CHECK(cartan_matrix(DynkinType(Family::A, 2)) == a2);
    CartanMatrix g2(2, 2);
    g2 << 2, -1, -3, 2;
    CHECK(cartan_matrix(DynkinType(Family::G, 2)) == g2);
    const auto d4 = cartan_matrix(DynkinType(Family::D, 4));
    for (int outer : {0, 1, 3}) CHECK(d4(outer, 2) == -1);
    CHECK(d4(0, 1) == 0);

    for (const auto& t : all_small_types()) {
      CAPTURE(t.name());
      const auto c = cartan_matrix(t);
      const int n = t.rank();
      for (int i = 0; i < n; ++i) {
        CHECK(c(i, i) == 2);
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          const int p = c(i, j) * c(j, i);
          CHECK((p >= 0 && p <= 3));
          CHECK((c(i, j) == 0) == (c(j, i) == 0));
        }
      }
      const Eigen::MatrixXd real = c.cast<double>();
      CHECK(std::lround(real.determinant()) == expected_determinant(t));
      const auto d = symmetrizer(c);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) CHECK(d[i] * c(i, j) == d[j] * c(j, i));
    }
  }

  TEST_CASE("short roots sit where the conventions say") {
    CHECK(cartan_matrix(DynkinType(Family::B, 3))(2, 1) == -2);
    CHECK(cartan_matrix(DynkinType(Family::C, 3))(1, 2) == -2);
    CHECK(cartan_matrix(DynkinType(Family::F, 4))(2, 1) == -2);
  }

  TEST_CASE("coxeter numbers") {
    CHECK(coxeter_number(DynkinType(Family::A, 2)) == 3);
    CHECK(coxeter_number(DynkinType(Family::D, 5)) == 8);
    CHECK(coxeter_number(DynkinType(Family::E, 8)) == 30);
    CHECK(coxeter_number(DynkinType(Family::G, 2)) == 6);
    CHECK(coxeter_number(DynkinType(Family::F, 4)) == 12);
    CHECK(coxeter_number(DynkinType(Family::B, 4)) == 8);
  }

  TEST_CASE("default orientations") {
    const auto a3 = default_orientation(DynkinType(Family::A, 3));
    CHECK(a3.has_arrow(0, 1));
    CHECK(a3.has_arrow(1, 2));
    const auto d4 = default_orientation(DynkinType(Family::D, 4));
    for (int outer : {0, 1, 3}) CHECK(d4.has_arrow(outer, 2));
    CHECK(default_orientation(DynkinType(Family::G, 2)).has_arrow(0, 1));

    for (const auto& t : all_small_types()) {
      const auto d = default_orientation(t);
      std::vector<int> position(t.rank());
      const auto& order = d.topological_order();
      REQUIRE(static_cast<int>(order.size()) == t.rank());
      for (int k = 0; k < t.rank(); ++k) position[order[k]] = k;
      for (auto [from, to] : d.arrows()) CHECK(position[from] < position[to]);
    }
  }

  TEST_CASE("orientation validation") {
    const DynkinType a3(Family::A, 3);
    CHECK_THROWS_AS(OrientedDiagram(a3, {{0, 1}}), std::invalid_argument);                  // edge missing
    CHECK_THROWS_AS(OrientedDiagram(a3, {{0, 1}, {1, 0}, {1, 2}}), std::invalid_argument);  // both directions
    CHECK_THROWS_AS(OrientedDiagram(a3, {{0, 2}, {0, 1}, {1, 2}}), std::invalid_argument);  // not an edge
    const DynkinType a1(Family::A, 1);
    CHECK_NOTHROW(OrientedDiagram(a1, {}));
  }

  TEST_CASE("automorphisms") {
    const auto d4 = automorphisms(DynkinType(Family::D, 4));
    bool rotation = false;
    for (const auto& g : d4)
      if (g.name == "rotation") {
        rotation = true;
        CHECK(g.order() == 3);
        CHECK(g(2) == 2);
      }
    CHECK(rotation);
    const auto a3 = automorphism(DynkinType(Family::A, 3), "mirror");
    CHECK(a3(0) == 2);
    CHECK(a3(1) == 1);
    CHECK(automorphisms(DynkinType(Family::E, 8)).empty());
    CHECK(automorphisms(DynkinType(Family::A, 4)).empty());
    CHECK_THROWS_AS(automorphism(DynkinType(Family::E, 7), "mirror"), std::invalid_argument);

    for (const auto& t : all_small_types())
      for (const auto& g : automorphisms(t)) {
        CAPTURE(t.name());
        CHECK(stabilizes(g, symmetric_orientation(t)));
        std::set<int> image(g.images.begin(), g.images.end());
        CHECK(static_cast<int>(image.size()) == t.rank());
      }
    // The linear A_3 orientation is not mirror-stable.
    CHECK_FALSE(stabilizes(a3, default_orientation(DynkinType(Family::A, 3))));
  }
}
