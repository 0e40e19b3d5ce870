#pragma once

#include "pidx/arith.hpp"

#include <optional>
#include <vector>

namespace pidx {

enum class PrimoverClass { prime, overpseudoprime, ordinary_composite };

struct DivisorOrder {
  Int divisor;
  Int order;
};

/// Classification of n under the divisor-order criterion: n is
/// overpseudoprime base k when every divisor d > 1 of n has the same
/// O_d(k); primover means prime or overpseudoprime. The witness list
/// carries the orders that certify the verdict (for ordinary composites,
/// one conflicting pair suffices). coset_identity_holds reports whether
/// n == r_k(n) * O_n(k) + 1; it is skipped (empty) when n is too large to
/// enumerate cosets.
struct PrimoverVerdict {
  Int n;
  Int base;
  PrimoverClass klass = PrimoverClass::prime;
  std::vector<DivisorOrder> witness;
  std::optional<bool> coset_identity_holds;

  bool primover() const { return klass != PrimoverClass::ordinary_composite; }
};

/// Classifies via prime divisors plus the gamma-based prime-power check
/// (equivalent to testing every divisor, exponentially cheaper). Requires
/// gcd(n, base) = 1 and n >= 2.
PrimoverVerdict is_primover(const Int& n, const Int& base);

/// The exhaustive route: enumerates every divisor d > 1 and its order by
/// naive scan. The two routes must agree; this one exists to check that.
PrimoverVerdict is_primover_all_divisors(const Int& n, const Int& base);

/// Generalized repunit (k^n - 1)/(k - 1). n >= 1, k >= 2.
Int repunit(const Int& n, const Int& k);

/// (k-1)(k^pq - 1) / ((k^p - 1)(k^q - 1)) for distinct primes p, q with
/// p != O_q(k) and q != O_p(k); equals the Zsigmondy number Z(pq, k, 1).
Int z_pq(const Int& p, const Int& q, const Int& k);

/// (k-1)(k^(p*O) - 1) / (p (k^p - 1)(k^O - 1)) with O = O_p(k) prime;
/// equals Z(p*O_p(k), k, 1).
Int z_p_op(const Int& p, const Int& k);

/// (k^(n^a) - 1) / (k^(n^(a-1)) - 1). n >= 2, a >= 1.
Int z_prime_power(const Int& n, unsigned a, const Int& k);

/// Wagstaff number (2^p + 1)/3 for an odd prime p.
Int wagstaff(const Int& p);

}  // namespace pidx
