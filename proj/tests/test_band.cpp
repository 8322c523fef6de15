#include "frieze/band.hpp"

#include <doctest.h>

using namespace frieze;

namespace {

OrientedDiagram diagram(const char* type) { return default_orientation(DynkinType::parse(type)); }

// Recurrence written straight from the Cartan matrix and the arrow list.
bool relation_holds(const FriezeBand& b, int j, long m) {
  const auto& d = b.diagram();
  Integer rhs = 1;
  for (auto [from, to] : d.arrows()) {
    const int e = -d.cartan()(from == j ? to : from, j);
    if (from == j) rhs *= pow(b.at(to, m), e);
    if (to == j) rhs *= pow(b.at(from, m + 1), e);
  }
  return b.at(j, m) * b.at(j, m + 1) == rhs + 1;
}

}  // namespace

TEST_SUITE("band") {
  TEST_CASE("next slice by hand") {
    CHECK(*next_slice(diagram("A1"), make_slice({1})) == make_slice({2}));
    CHECK(*next_slice(diagram("A2"), make_slice({1, 1})) == make_slice({2, 3}));
    CHECK_FALSE(next_slice(diagram("A1"), make_slice({3})).has_value());
  }

  TEST_CASE("previous slice inverts next slice") {
    const auto d = diagram("D5");
    const auto b = band_from_seed(d, make_slice({2, 2, 3, 2, 1}));
    for (long m = 0; m < b.period(); ++m) {
      Slice col(5), nxt(5);
      for (int j = 0; j < 5; ++j) col[j] = b.at(j, m), nxt[j] = b.at(j, m + 1);
      CHECK(*next_slice(d, col) == nxt);
      CHECK(*previous_slice(d, nxt) == col);
    }
  }

  TEST_CASE("A2 band from the unit seed") {
    const auto b = band_from_seed(diagram("A2"), make_slice({1, 1}));
    CHECK(b.period() == 5);
    const std::vector<Slice> expected{make_slice({1, 1}), make_slice({2, 3}), make_slice({2, 1}), make_slice({1, 2}),
                                      make_slice({3, 2})};
    CHECK(b.columns() == expected);
    CHECK(render_band(b, 5) == "1 2 2 1 3\n1 3 1 2 2\n");
  }

  TEST_CASE("A1 bands") {
    const auto b = band_from_seed(diagram("A1"), make_slice({2}));
    CHECK(b.period() == 2);
    CHECK(b.columns() == std::vector<Slice>{make_slice({2}), make_slice({1})});
    CHECK(period(band_from_seed(diagram("A1"), make_slice({1}))) == 2);
    CHECK(render_band(band_from_seed(diagram("A1"), make_slice({1})), 4) == "1 2 1 2\n");
  }

  TEST_CASE("invalid seeds") {
    auto v = validate_seed(diagram("A1"), make_slice({3}));
    REQUIRE(std::holds_alternative<Invalid>(v));
    CHECK(std::get<Invalid>(v).reason == Failure::NonIntegral);
    v = validate_seed(diagram("A2"), make_slice({0, 1}));
    REQUIRE(std::holds_alternative<Invalid>(v));
    CHECK(std::get<Invalid>(v).reason == Failure::NonPositive);
    CHECK_THROWS_AS(band_from_seed(diagram("A2"), make_slice({2, 2})), std::runtime_error);
    CHECK_THROWS_AS(validate_seed(diagram("A2"), make_slice({1})), std::invalid_argument);
  }

  TEST_CASE("the non-unitary D4 frieze") {
    const auto b = band_from_seed(diagram("D4"), make_slice({2, 2, 3, 2}));
    CHECK(satisfies_recurrence(b));
    CHECK_FALSE(b.has_unit_slice());
  }

  TEST_CASE("rotation keeps the period and the relations") {
    for (const char* t : {"A4", "D5", "B3", "C3", "G2", "F4", "E6"}) {
      CAPTURE(t);
      const auto d = diagram(t);
      const auto b = band_from_seed(d, Slice(d.rank(), Integer(1)));
      CHECK(b.period() <= coxeter_number(d.type()) + 2);
      for (long k = 0; k < b.period(); ++k) {
        const auto r = b.rotated(k);
        CHECK(r.period() == b.period());
        CHECK(band_from_seed(d, r.seed()) == r);
        for (int j = 0; j < d.rank(); ++j)
          for (long m = 0; m < r.period(); ++m) CHECK(relation_holds(r, j, m));
      }
    }
  }

  TEST_CASE("satisfies_recurrence rejects a corrupted band") {
    const auto b = band_from_seed(diagram("A3"), make_slice({1, 1, 1}));
    auto cols = b.columns();
    cols[1][1] += 1;
    CHECK_FALSE(satisfies_recurrence(FriezeBand(b.diagram(), cols)));
    CHECK(satisfies_recurrence(b));
  }

  TEST_CASE("D5 band in the staggered display") {
    // Rows as displayed (top row is node 5); the branch row of the display is
    // read one column to the left of the others.
    const auto b = band_from_seed(diagram("D5"), make_slice({2, 2, 3, 2, 1}));
    const std::vector<std::vector<long>> rows{{2, 2, 4, 2, 2, 2, 2}, {2, 2, 4, 2, 2, 2, 2}, {3, 3, 7, 7, 3, 3, 3},
                                              {2, 5, 3, 5, 2, 2, 5}, {1, 3, 2, 2, 3, 1, 3}};
    for (int j = 0; j < 5; ++j)
      for (long m = 0; m < 7; ++m) CHECK(b.at(j, m - (j == 2 ? 1 : 0)) == rows[j][m]);
    CHECK(b.at(4, 0) * b.at(4, 1) == 1 + 2);
    CHECK(b.at(4, 1) * b.at(4, 2) == 1 + 5);
    CHECK(b.at(3, 0) * b.at(3, 1) == 1 + 9);
  }
}
