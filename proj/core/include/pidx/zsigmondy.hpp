#pragma once

#include "pidx/arith.hpp"
#include "pidx/base_pair.hpp"
#include "pidx/primitive_index.hpp"

#include <optional>

namespace pidx {

/// A Zsigmondy number: the product, with multiplicity, of the primitive
/// prime divisors of k^n - h^n (minus) or k^n + h^n (plus). phi_value is
/// the homogenized cyclotomic value backing the closed form (Phi_n for
/// minus, Phi_2n for plus); exceptional_prime is the single prime divided
/// out when n = p^z * P_p(k,h).
struct ZsigmondyValue {
  Sequence sequence;
  Int n;
  BasePair pair;
  Int phi_value;
  std::optional<Int> exceptional_prime;
  Int value;
};

/// Phi_n(k,h) by the defining recursion: (k^n - h^n) divided by Phi_d(k,h)
/// over proper divisors d of n, with Phi_1 = k - h. Requires k > h >= 1.
Int homog_cyclotomic(const Int& n, const BasePair& pair);

/// The same value via Moebius inversion over k^d - h^d; an independent
/// route kept for cross-checking.
Int homog_cyclotomic_mobius(const Int& n, const BasePair& pair);

/// Definitional oracle: factors the primitive part of k^n - h^n and keeps
/// primes whose first divisibility index is exactly n. Requires
/// gcd(k,h) = 1 and k > h.
ZsigmondyValue zsigmondy_minus_direct(const Int& n, const BasePair& pair);

/// Closed form: Phi_n(k,h), divided by p when n = p^z * P_p(k,h); n = 2 is
/// the odd part of k + h when 2 | k - h.
ZsigmondyValue zsigmondy_minus(const Int& n, const BasePair& pair);

/// Closed form for the plus sequence: zeta(n,k,h) = Z(2n,k,h), except that
/// zeta(1) with k + h even is the full k + h.
ZsigmondyValue zsigmondy_plus(const Int& n, const BasePair& pair);

/// Definitional plus-sequence oracle: factors k^n + h^n directly.
ZsigmondyValue zsigmondy_plus_direct(const Int& n, const BasePair& pair);

}  // namespace pidx
