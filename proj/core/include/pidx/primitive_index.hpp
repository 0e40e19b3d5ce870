#pragma once

#include "pidx/arith.hpp"
#include "pidx/base_pair.hpp"

#include <optional>

namespace pidx {

enum class Sequence { minus, plus };
enum class Method { oracle, formula };

/// A primitive index: the smallest u >= 1 such that the modulus divides
/// k^u - h^u (minus) or k^u + h^u (plus). An empty index means no such u
/// exists; `exhaustive` is false when that is only "not found within the
/// scan bound" rather than proven absence.
struct IndexResult {
  Sequence sequence;
  Int modulus;
  std::optional<Int> index;
  Method method = Method::formula;
  bool exhaustive = true;

  bool found() const { return index.has_value(); }
};

/// Scan controls for the oracles. scan_limit = 0 means the default bound
/// of 10*N for moduli sharing a factor with k or h (the coprime case needs
/// no limit: lambda(N) resp. 2*lambda(N) always suffices).
/// full_linear_scan disables the divisor-of-lambda shortcut for auditing.
struct ScanOptions {
  Int scan_limit = 0;
  bool full_linear_scan = false;
};

enum class GammaBranch { generic, two_special };

/// The lifting exponent gamma_p(k,h): the p-adic valuation of the first
/// term of k^u - h^u divisible by p, 0 if p divides no term; for p = 2
/// with k - h = 2*(odd) it is nu2(k^2 - h^2) instead.
struct GammaValue {
  Int p;
  unsigned value = 0;
  GammaBranch branch = GammaBranch::generic;
};

/// Smallest u with N | k^u - h^u by direct scan. N >= 2.
IndexResult pidx_minus_oracle(const Int& N, const BasePair& pair,
                              const ScanOptions& opts = {});

/// Requires p prime and gcd(p, h) = 1.
GammaValue gamma(const Int& p, const BasePair& pair);

/// Closed form for prime powers: p^max(0, a - gamma) * P_p(k,h), with the
/// p = 2, k - h = 2*(odd) branch deferring to the oracle for a <= gamma.
IndexResult pidx_minus_prime_power(const Int& p, unsigned a, const BasePair& pair);

/// Closed form for any N >= 2 with gcd(N, h) = 1: lcm of the prime-power
/// indexes of N's factorization.
IndexResult pidx_minus(const Int& N, const BasePair& pair);

/// N | k^u - h^u iff P_N(k,h) | u.
bool divides_minus(const Int& N, const BasePair& pair, const Int& u);

/// Smallest u with N | k^u + h^u by direct scan. N >= 2.
IndexResult pidx_plus_oracle(const Int& N, const BasePair& pair,
                             const ScanOptions& opts = {});

/// Odd prime powers only: half the minus index when that is even, absent
/// otherwise. Powers of two are governed by nu2_plus and handled in
/// pidx_plus.
IndexResult pidx_plus_prime_power(const Int& p, unsigned a, const BasePair& pair);

/// Closed form for any N >= 2 with gcd(N, h) = 1. The odd part combines
/// prime-power indexes iff they share one 2-adic valuation; a factor 2^a
/// requires 2 | k+h and a <= nu2(k+h) (odd combined index) or a <= 1
/// (even combined index).
IndexResult pidx_plus(const Int& N, const BasePair& pair);

/// N | k^u + h^u iff P^N(k,h) | u with odd quotient (N = 2: iff k+h even).
bool divides_plus(const Int& N, const BasePair& pair, const Int& u);

/// nu2(k^n + h^n): 0 if k+h is odd, else nu2(k+h) for odd n and 1 for even n.
unsigned nu2_plus(const BasePair& pair, const Int& n);

}  // namespace pidx
