#pragma once

#include "pidx/arith.hpp"
#include "pidx/base_pair.hpp"
#include "pidx/primitive_index.hpp"

#include <vector>

namespace pidx {

/// The base-shift period over a prime set: Lambda = prod p^(gamma_p(k)+1).
/// Adding any multiple of it to the base preserves multiplicative orders
/// (and primitive indexes) modulo every integer composed of those primes.
struct LambdaPeriod {
  Factorization radical;  // product of the prime set
  Int base;
  Int value;  // 0 exactly when base == 1
};

/// Multiplicative order of k modulo N >= 2 via the prime-power composition
/// formula. Requires gcd(N, k) = 1.
IndexResult mult_order(const Int& N, const Int& k);

/// Same quantity by direct scan (the naive oracle twin).
IndexResult mult_order_oracle(const Int& N, const Int& k, const ScanOptions& opts = {});

/// Requires every entry prime and k >= 1; a prime dividing k (k > 1) has
/// no order to shift and is rejected.
LambdaPeriod lambda_period(const std::vector<Int>& primes, const Int& k);

/// Checks O_{p^a}(k + p^(gamma_p(k)+1) * m) == O_{p^a}(k), computing both
/// sides independently. Requires gcd(p, k) = 1, m >= 1.
bool order_shift_check(const Int& p, unsigned a, const Int& k, const Int& m);

/// Checks P_N(k + Lambda(k) m, h + Lambda(h) m) == P_N(k, h) with Lambda
/// taken over `primes`; N's prime factors must lie in the set.
bool pidx_shift_check(const std::vector<Int>& primes, const Int& N,
                      const BasePair& pair, const Int& m);

/// Number of u in [0, phi(n)) with k^u == h^u (mod n): phi(n) / P_n(k,h).
/// Requires gcd(n, kh) = 1.
Int coincidence_count(const Int& n, const BasePair& pair);

/// The same count by direct enumeration.
Int coincidence_count_direct(const Int& n, const BasePair& pair);

/// For a primitive-root modulus n with both k and h generators, the order
/// of k * h^(phi(n)-1), which recovers P_n(k,h); the mirrored base
/// h * k^(phi(n)-1) is checked to agree.
Int cross_generator_order(const Int& n, const BasePair& pair);

/// Number of orbits of s -> k*s (mod n) on {1, ..., n-1}. Requires
/// gcd(n, k) = 1 and n small enough to enumerate (10^7).
Int cyclotomic_coset_count(const Int& n, const Int& k);

}  // namespace pidx
