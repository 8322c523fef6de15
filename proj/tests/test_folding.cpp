#include "frieze/cluster.hpp"
#include "frieze/counting.hpp"
#include "frieze/folding.hpp"

#include <doctest.h>

using namespace frieze;

namespace {

Folding folding(const char* source, const char* name) {
  const DynkinType t = DynkinType::parse(source);
  return fold(symmetric_orientation(t), automorphism(t, name));
}

std::vector<FriezeBand> all_friezes(const OrientedDiagram& d) {
  return enumerate_friezes(d, unitary_bounds(d)).friezes;
}

}  // namespace

TEST_SUITE("folding") {
  TEST_CASE("targets") {
    CHECK(folding("D4", "rotation").target.type().name() == "G2");
    CHECK(folding("A3", "mirror").target.type().name() == "C2");
    CHECK(folding("D5", "arm-swap").target.type().name() == "B4");
    CHECK(folding("A7", "mirror").target.type().name() == "C4");
    CHECK(folding("E6", "mirror").target.type().name() == "F4");
    const auto f = folding("D4", "rotation");
    CHECK(f.fiber(1) == std::vector<int>{0, 1, 3});
    CHECK(f.fiber(0) == std::vector<int>{2});
    CHECK(f.target.cartan() == cartan_matrix(DynkinType(Family::G, 2)));
  }

  TEST_CASE("fold rejects orientations the automorphism moves") {
    const DynkinType a3(Family::A, 3);
    CHECK_THROWS_AS(fold(default_orientation(a3), automorphism(a3, "mirror")), std::invalid_argument);
  }

  TEST_CASE("invariance") {
    const auto f = folding("D4", "rotation");
    const auto unit = band_from_seed(f.source, make_slice({1, 1, 1, 1}));
    CHECK(is_invariant(unit, f.generator));
    const auto odd = band_from_seed(f.source, make_slice({2, 2, 3, 2}));
    CHECK(is_invariant(odd, f.generator));
    const auto skew = band_from_seed(f.source, make_slice({1, 2, 3, 1}));
    CHECK_FALSE(is_invariant(skew, f.generator));
    CHECK_THROWS_AS(descend(skew, f), std::invalid_argument);
  }

  TEST_CASE("descend the non-unitary D4 frieze") {
    const auto f = folding("D4", "rotation");
    const auto g2 = descend(band_from_seed(f.source, make_slice({2, 2, 3, 2})), f);
    CHECK(g2.seed() == make_slice({3, 2}));
    const auto unitary = unitary_friezes(f.target);
    CHECK(unitary.size() == 8);
    CHECK(std::none_of(unitary.begin(), unitary.end(), [&](const FriezeBand& b) { return b == g2; }));
    CHECK(descend(band_from_seed(f.source, make_slice({1, 1, 1, 1})), f).seed() == make_slice({1, 1}));
  }

  TEST_CASE("invariant counts match the folded closed forms") {
    const std::vector<std::pair<const char*, const char*>> cases{
        {"D4", "rotation"}, {"A3", "mirror"}, {"D4", "arm-swap"}, {"D5", "arm-swap"}, {"A5", "mirror"}};
    for (const auto& [source, name] : cases) {
      CAPTURE(source);
      CAPTURE(name);
      const auto f = folding(source, name);
      const auto invariant = enumerate_invariant(f, unitary_bounds(f.source)).friezes;
      CHECK(Integer(invariant.size()) == frieze_count(f.target.type()).count);
      // Same set as filtering the unconstrained enumeration.
      std::vector<FriezeBand> filtered;
      for (auto& b : all_friezes(f.source))
        if (is_invariant(b, f.generator)) filtered.push_back(std::move(b));
      CHECK(filtered.size() == invariant.size());
      // Round trips in both directions.
      const auto folded = all_friezes(f.target);
      CHECK(folded.size() == invariant.size());
      for (const auto& b : folded) CHECK(descend(lift(b, f), f) == b);
      for (const auto& b : invariant) CHECK(lift(descend(b, f), f) == b);
    }
  }

  TEST_CASE("every C_n frieze lifts to a unitary frieze") {
    for (const char* source : {"A3", "A5"}) {
      const auto f = folding(source, "mirror");
      const auto unitary = unitary_friezes(f.source);
      for (const auto& b : all_friezes(f.target)) {
        const auto up = lift(b, f);
        CHECK(std::any_of(unitary.begin(), unitary.end(), [&](const FriezeBand& u) { return u == up; }));
      }
    }
  }
}
