#include "frieze/counting.hpp"

#include <doctest.h>

using namespace frieze;

namespace {

// Catalan numbers from the recurrence, independent of the closed form.
std::vector<Integer> catalan_by_recurrence(unsigned n) {
  std::vector<Integer> c(n + 1);
  c[0] = 1;
  for (unsigned k = 0; k < n; ++k)
    for (unsigned i = 0; i <= k; ++i) c[k + 1] += c[i] * c[k - i];
  return c;
}

}  // namespace

TEST_SUITE("counting") {
  TEST_CASE("catalan") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(4) == 14);
    CHECK(catalan(7) == 429);
    const auto c = catalan_by_recurrence(40);
    for (unsigned k = 0; k <= 40; ++k) CHECK(catalan(k) == c[k]);
  }

  TEST_CASE("ballot numbers are coefficients of powers of c") {
    for (unsigned k = 1; k <= 10; ++k) CHECK(ballot(0, k) == 1);
    CHECK(ballot(2, 1) == 2);
    const Series c = catalan_series(10);
    Series power = c;
    for (unsigned k = 1; k <= 10; ++k) {
      for (unsigned n = 0; n <= 10; ++n) CHECK(ballot(n, k) == power[n]);
      power = power * c;
    }
    CHECK_THROWS_AS(ballot(3, 0), std::invalid_argument);
  }

  TEST_CASE("divisor counts") {
    CHECK(divisor_count(1) == 1);
    CHECK(divisor_count(6) == 4);
    CHECK(divisor_count(12) == 6);
    CHECK(divisor_count(36) == 9);
    CHECK(divisor_count(97) == 2);
  }

  TEST_CASE("triangulation counts: closed form against convolution") {
    CHECK(t_count(4, 2) == 10);
    CHECK(t_count(3, 1) == 6);
    for (unsigned n = 1; n <= 12; ++n) {
      CHECK(t_count(n, n) == 1);
      for (unsigned m = 1; m <= n; ++m) CHECK(t_count(n, m) == t_count_convolution(n, m));
    }
    CHECK_THROWS_AS(t_count(3, 4), std::out_of_range);
    CHECK_THROWS_AS(t_count(3, 0), std::out_of_range);
  }

  TEST_CASE("closed-form frieze counts") {
    const auto count = [](const char* t) { return frieze_count(DynkinType::parse(t)); };
    CHECK(count("A2").count == 5);
    CHECK(count("D3").count == 14);
    CHECK(count("D3").count == catalan(4));
    CHECK(count("D4").count == 51);
    CHECK(count("D5").count == 187);
    CHECK(count("D6").count == 695);
    CHECK(count("B3").count == 21);
    CHECK(count("B4").count == 75);
    CHECK(count("C2").count == 6);
    CHECK(count("B2").count == 6);
    CHECK(count("G2").count == 9);
    CHECK(count("G2").status == CountStatus::Proven);
    CHECK(count("F4").count == 112);
    CHECK(count("F4").status == CountStatus::Conjectural);
    CHECK(count("E6").count == 868);
    CHECK(count("E7").count == 4400);
    CHECK(count("E8").count == 26592);
    CHECK(count("E8").status == CountStatus::Conjectural);
  }

  TEST_CASE("D_n count is the divisor-weighted triangulation sum") {
    for (unsigned n = 3; n <= 12; ++n) {
      Integer sum = 0;
      for (unsigned m = 1; m <= n; ++m) sum += t_count_convolution(n, m) * divisor_count(m);
      CHECK(frieze_count(DynkinType(Family::D, static_cast<int>(n))).count == sum);
    }
  }

  TEST_CASE("B_n count sums over perfect squares") {
    for (unsigned n = 2; n <= 10; ++n) {
      Integer sum = 0;
      for (unsigned m = 1; m * m <= n + 1; ++m) sum += t_count_convolution(n + 1, m * m);
      CHECK(frieze_count(DynkinType(Family::B, static_cast<int>(n))).count == sum);
    }
  }

  TEST_CASE("series arithmetic") {
    const Series c = catalan_series(12);
    const Series one_minus_x = Series(12, {Integer(1), Integer(-1)});
    const Series geometric = one_minus_x.inverse();
    for (unsigned i = 0; i <= 12; ++i) CHECK(geometric[i] == 1);
    CHECK((c * c.inverse())[0] == 1);
    for (unsigned i = 1; i <= 12; ++i) CHECK((c * c.inverse())[i] == 0);
    // c = 1 + x c^2
    CHECK(c == Series(12, {Integer(1)}) + (c * c).shifted(1));
    CHECK_THROWS_AS(Series(3, {Integer(2)}).inverse(), std::domain_error);
  }

  TEST_CASE("generating functions") {
    CHECK(gf_identity_check(1));
    CHECK(gf_identity_check(10));
    CHECK(gf_identity_check(30));
    const auto table = series_t_table(10);
    CHECK(table[0][0] == 1);
    CHECK(table[4][2] == 10);
    for (unsigned n = 1; n <= 10; ++n)
      for (unsigned m = 1; m <= n; ++m) CHECK(table[n][m] == t_count(n, m));
    // Nothing with more spokes than vertices.
    for (unsigned n = 0; n <= 10; ++n)
      for (unsigned m = n + 1; m <= 10; ++m) CHECK(table[n][m] == 0);
  }
}
