#include "pidx/zsigmondy.hpp"

#include "doctest.h"
#include "test_util.hpp"

#include <stdexcept>

using namespace pidx;

namespace {

const BasePair kSweepPairs[] = {{2, 1}, {3, 1}, {3, 2}, {5, 2}, {10, 3}};

}  // namespace

TEST_SUITE_BEGIN("zsigmondy");

TEST_CASE("homog_cyclotomic examples") {
  CHECK(homog_cyclotomic(1, BasePair(2, 1)) == 1);
  CHECK(homog_cyclotomic(6, BasePair(2, 1)) == 3);    // 63 / (1*3*7)
  CHECK(homog_cyclotomic(4, BasePair(3, 2)) == 13);   // 65 / 5
  CHECK(homog_cyclotomic(20, BasePair(2, 1)) == 205); // 2^8-2^6+2^4-2^2+1
  CHECK_THROWS_AS(homog_cyclotomic(4, BasePair(2, 3)), std::domain_error);
}

TEST_CASE("recursive and Moebius routes agree") {
  for (const auto& pair : kSweepPairs) {
    for (uint64_t n = 1; n <= 40; ++n) {
      CHECK(homog_cyclotomic(n, pair) == homog_cyclotomic_mobius(n, pair));
    }
  }
}

TEST_CASE("zsigmondy_minus_direct examples") {
  CHECK(zsigmondy_minus_direct(6, BasePair(2, 1)).value == 1);  // the classical exception
  CHECK(zsigmondy_minus_direct(4, BasePair(2, 1)).value == 5);
  CHECK(zsigmondy_minus_direct(1, BasePair(2, 1)).value == 1);
  CHECK_THROWS_AS(zsigmondy_minus_direct(4, BasePair(4, 2)), std::domain_error);
}

TEST_CASE("zsigmondy_minus examples") {
  const auto z6 = zsigmondy_minus(6, BasePair(2, 1));
  CHECK(z6.value == 1);
  CHECK(z6.phi_value == 3);
  REQUIRE(z6.exceptional_prime.has_value());
  CHECK(*z6.exceptional_prime == 3);  // 6 = 3 * P_3(2,1)

  const auto z20 = zsigmondy_minus(20, BasePair(2, 1));
  CHECK(z20.value == 41);  // Phi_20 = 205 = 5 * 41
  CHECK(*z20.exceptional_prime == 5);

  const auto z2 = zsigmondy_minus(2, BasePair(3, 1));
  CHECK(z2.value == 1);  // odd part of k + h = 4
  CHECK(*z2.exceptional_prime == 2);

  CHECK(zsigmondy_minus(2, BasePair(2, 1)).value == 3);  // k - h odd: all of k + h
  CHECK(zsigmondy_minus(1, BasePair(5, 1)).value == 4);  // Phi_1 = k - h
}

TEST_CASE("frozen direct-oracle spot values") {
  CHECK(zsigmondy_minus(6, BasePair(3, 2)).value == 7);
  CHECK(zsigmondy_minus(12, BasePair(10, 3)).value == 9181);
  CHECK(zsigmondy_minus(9, BasePair(5, 2)).value == 5563);
}

TEST_CASE("theorem 10 closed form equals the direct product, n <= 40") {
  for (const auto& pair : kSweepPairs) {
    for (uint64_t n = 1; n <= 40; ++n) {
      const auto direct = zsigmondy_minus_direct(n, pair);
      const auto formula = zsigmondy_minus(n, pair);
      CHECK(formula.value == direct.value);
      CHECK(formula.exceptional_prime == direct.exceptional_prime);
    }
  }
}

TEST_CASE("lemmas: the nonprimitive part of Phi_n is the exceptional prime") {
  for (const auto& pair : kSweepPairs) {
    for (uint64_t n = 3; n <= 40; ++n) {
      const auto z = zsigmondy_minus_direct(n, pair);
      const Int nonprimitive = z.phi_value / z.value;
      if (z.exceptional_prime) {
        CHECK(nonprimitive == *z.exceptional_prime);  // multiplicity exactly 1
      } else {
        CHECK(nonprimitive == 1);
      }
    }
  }
}

TEST_CASE("zsigmondy_plus examples") {
  CHECK(zsigmondy_plus(3, BasePair(2, 1)).value == 1);   // 9 = 3^2 but P^3(2,1) = 1
  CHECK(zsigmondy_plus(2, BasePair(2, 1)).value == 5);
  CHECK(zsigmondy_plus(5, BasePair(2, 1)).value == 11);  // 33 = 3 * 11
  CHECK(zsigmondy_plus(1, BasePair(5, 1)).value == 6);   // k + h even: all of it
  CHECK(zsigmondy_plus(1, BasePair(2, 1)).value == 3);   // odd sum: Z(2)
}

TEST_CASE("frozen plus-oracle spot values") {
  CHECK(zsigmondy_plus_direct(7, BasePair(3, 2)).value == 463);
  CHECK(zsigmondy_plus_direct(4, BasePair(10, 3)).value == 10081);
  CHECK(zsigmondy_plus_direct(1, BasePair(5, 1)).value == 6);
}

TEST_CASE("zeta equals Z(2n) and the plus oracle, n in [1, 25]") {
  for (const auto& pair : kSweepPairs) {
    for (uint64_t n = 1; n <= 25; ++n) {
      const auto plus = zsigmondy_plus(n, pair);
      const auto direct = zsigmondy_plus_direct(n, pair);
      CHECK(plus.value == direct.value);
      if (n > 1 || !pair.sum_even()) {
        CHECK(plus.value == zsigmondy_minus(2 * n, pair).value);
      }
    }
  }
}

TEST_SUITE_END();
