#include "pidx/primover.hpp"

#include "pidx/zsigmondy.hpp"

#include "doctest.h"
#include "test_util.hpp"

#include <set>
#include <numeric>
#include <stdexcept>
#include <utility>

using namespace pidx;
using pidx::test::powmod_u64;

TEST_SUITE_BEGIN("primover");

TEST_CASE("is_primover ground cases") {
  const auto over = is_primover(2047, 2);
  CHECK(over.klass == PrimoverClass::overpseudoprime);
  for (const auto& w : over.witness) CHECK(w.order == 11);
  REQUIRE(over.coset_identity_holds.has_value());
  CHECK(*over.coset_identity_holds);

  const auto ord = is_primover(341, 2);
  CHECK(ord.klass == PrimoverClass::ordinary_composite);
  REQUIRE(ord.witness.size() == 2);
  CHECK(ord.witness[0].divisor == 11);
  CHECK(ord.witness[0].order == 10);
  CHECK(ord.witness[1].divisor == 31);
  CHECK(ord.witness[1].order == 5);

  const auto pr = is_primover(13, 2);
  CHECK(pr.klass == PrimoverClass::prime);
  REQUIRE(pr.witness.size() == 1);
  CHECK(pr.witness[0].divisor == 13);
  CHECK(pr.witness[0].order == 12);

  CHECK_THROWS_AS(is_primover(10, 2), std::domain_error);
  CHECK_THROWS_AS(is_primover(1, 2), std::invalid_argument);
}

TEST_CASE("the remaining overpseudoprimes below 10^4") {
  for (uint64_t n : {3277, 4033, 8321}) {
    CHECK(is_primover(n, 2).klass == PrimoverClass::overpseudoprime);
  }
}

TEST_CASE("shortcut route agrees with the all-divisor route") {
  for (uint64_t n = 3; n <= 2500; n += 2) {
    if (is_prime(n)) continue;
    const auto a = is_primover(n, 2);
    const auto b = is_primover_all_divisors(n, 2);
    CHECK(a.klass == b.klass);
  }
  // prime-power lifts where the two-special branch of the base matters
  for (uint64_t n : {9, 27, 49, 121, 343, 2401}) {
    for (uint64_t base : {2, 3, 5, 7, 10}) {
      if (std::gcd(n, base) != 1) continue;
      CHECK(is_primover(n, base).klass == is_primover_all_divisors(n, base).klass);
    }
  }
}

TEST_CASE("primes are primover with the coset identity, bases 2/3/10") {
  for (uint64_t p : {3, 5, 7, 11, 13, 101, 499, 997, 1009, 4999, 9973}) {
    for (uint64_t base : {2, 3, 10}) {
      if (p == base || std::gcd(p, base) != 1) continue;
      const auto v = is_primover(p, base);
      CHECK(v.klass == PrimoverClass::prime);
      REQUIRE(v.coset_identity_holds.has_value());
      CHECK(*v.coset_identity_holds);
    }
  }
}

TEST_CASE("overpseudoprimes pass the Fermat test") {
  for (uint64_t n : {2047, 3277, 4033, 8321}) {
    CHECK(powmod_u64(2, n - 1, n) == 1);
  }
}

TEST_CASE("repunit examples") {
  CHECK(repunit(1, 10) == 1);
  CHECK(repunit(5, 2) == 31);
  CHECK(repunit(11, 2) == 2047);
  CHECK_THROWS_AS(repunit(0, 10), std::invalid_argument);
}

TEST_CASE("prop 7: repunit primover iff n prime, with the known exceptions") {
  // the iff fails exactly at (k,n) = (3,2) and (5,2): values 4 and 6
  const std::set<std::pair<uint64_t, uint64_t>> expected_mismatches = {{3, 2}, {5, 2}};
  std::set<std::pair<uint64_t, uint64_t>> seen;
  for (uint64_t k : {2, 3, 5}) {
    for (uint64_t n = 2; n <= 13; ++n) {
      const Int v = repunit(n, k);
      const bool primover = is_primover(v, k).primover();
      if (primover != is_prime(n)) seen.insert({k, n});
    }
  }
  CHECK(seen == expected_mismatches);
}

TEST_CASE("z_pq examples") {
  CHECK(z_pq(3, 5, 2) == 151);
  CHECK(is_primover(151, 2).klass == PrimoverClass::prime);
  CHECK(z_pq(5, 7, 2) == 8727391);  // = Z(35,2,1) = 71 * 122921
  CHECK(z_pq(5, 7, 2) == zsigmondy_minus(35, BasePair(2, 1)).value);
  CHECK(is_primover(8727391, 2).klass == PrimoverClass::overpseudoprime);

  CHECK_THROWS_AS(z_pq(3, 3, 2), std::domain_error);
  CHECK_THROWS_AS(z_pq(4, 5, 2), std::domain_error);
  // O_7(2) = 3 violates q != O_p(k)
  CHECK_THROWS_AS(z_pq(7, 3, 2), std::domain_error);
}

TEST_CASE("z_pq equals the Zsigmondy number across small prime pairs") {
  const uint64_t primes[] = {3, 5, 7, 11, 13};
  for (uint64_t p : primes) {
    for (uint64_t q : primes) {
      if (p == q) continue;
      Int v;
      try {
        v = z_pq(p, q, 2);
      } catch (const std::domain_error&) {
        continue;  // precondition violations are their own test above
      }
      CHECK(v == zsigmondy_minus(p * q, BasePair(2, 1)).value);
      CHECK(is_primover(v, 2).primover());
    }
  }
}

TEST_CASE("z_p_op examples") {
  CHECK(z_p_op(7, 2) == 337);  // O_7(2) = 3: 2097151 / (7 * 127 * 7)
  CHECK(z_p_op(7, 2) == zsigmondy_minus(21, BasePair(2, 1)).value);
  CHECK(is_primover(337, 2).klass == PrimoverClass::prime);
  CHECK_THROWS_AS(z_p_op(5, 2), std::domain_error);   // O_5(2) = 4 not prime
  CHECK_THROWS_AS(z_p_op(11, 2), std::domain_error);  // O_11(2) = 10 not prime
}

TEST_CASE("z_prime_power examples") {
  CHECK(z_prime_power(2, 1, 2) == 3);
  CHECK(z_prime_power(3, 2, 2) == 73);  // 511 / 7
  CHECK(z_prime_power(4, 1, 2) == 15);
  CHECK_FALSE(is_primover(15, 2).primover());  // O_3(2) = 2 != 4 = O_5(2)
}

TEST_CASE("prop 10: prime-power quotient primover iff n prime (desk scale)") {
  for (uint64_t n = 2; n <= 10; ++n) {
    for (unsigned a = 1; a <= 3; ++a) {
      uint64_t na = 1;
      for (unsigned i = 0; i < a; ++i) na *= n;
      if (na > 128) continue;  // keeps the values factorable at desk scale
      const Int v = z_prime_power(n, a, 2);
      CHECK(is_primover(v, 2).primover() == is_prime(n));
    }
  }
}

TEST_CASE("wagstaff examples") {
  CHECK(wagstaff(3) == 3);
  CHECK(wagstaff(5) == 11);
  CHECK(wagstaff(29) == 178956971);
  CHECK_THROWS_AS(wagstaff(2), std::domain_error);
  CHECK_THROWS_AS(wagstaff(9), std::domain_error);

  const auto v = is_primover(wagstaff(29), 2);
  CHECK(v.klass == PrimoverClass::overpseudoprime);
  for (const auto& w : v.witness) CHECK(w.order == 58);
}

TEST_CASE("wagstaff numbers up to p = 31 are primover base 2") {
  for (uint64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    CHECK(is_primover(wagstaff(p), 2).primover());
  }
}

TEST_CASE("Zsigmondy numbers of 2^u - 1 are primover base 2") {
  for (uint64_t n = 1; n <= 30; ++n) {
    const Int z = zsigmondy_minus(n, BasePair(2, 1)).value;
    if (z == 1) continue;
    CHECK(is_primover(z, 2).primover());
  }
}

TEST_SUITE_END();
