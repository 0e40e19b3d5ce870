#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace pidx {

/// All arithmetic is arbitrary precision; no silent overflow anywhere.
using Int = mpz_class;

struct PrimePower {
  Int prime;
  unsigned exponent = 0;
};

/// A positive integer together with its ordered prime factorization.
///
/// Invariants: primes strictly increasing, every exponent >= 1, the
/// product of prime^exponent reconstructs value, and value == 1 iff
/// factors is empty.
struct Factorization {
  Int value = 1;
  std::vector<PrimePower> factors;
};

/// Deterministic primality test. Exact for n < 3.3e24 (fixed Miller-Rabin
/// witness set); beyond that uses the first 64 prime bases, which is
/// deterministic across runs and has no known counterexample.
bool is_prime(const Int& n);

/// Factors n >= 1 by trial division below 10^6, then perfect-power
/// extraction and Brent's variant of Pollard rho with a fixed parameter
/// sequence, so results are reproducible run to run. Desk-scale inputs
/// only (roughly 2^128); throws std::runtime_error if the rho budget is
/// exhausted.
Factorization factorize(const Int& n);

/// base^exp mod modulus. Requires modulus >= 2, base >= 0, exp >= 0.
Int mod_pow(const Int& base, const Int& exp, const Int& modulus);

/// Euler's totient, computed from the factorization. phi(1) = 1.
Int euler_phi(const Int& n);

/// Carmichael's function: lcm of lambda over prime powers, with
/// lambda(2^a) = 2^(a-2) for a >= 3. lambda(1) = 1.
Int carmichael_lambda(const Int& n);

/// Largest e with p^e | x. Requires p prime and x >= 1.
unsigned padic_valuation(const Int& p, const Int& x);

/// Primes below 10^6, ascending (the trial-division table).
const std::vector<uint32_t>& small_primes();

/// All positive divisors, ascending.
std::vector<Int> divisors_of(const Factorization& f);

/// Moebius function of n >= 1.
int mobius(const Int& n);

/// x with all factors of two removed. Requires x >= 1.
Int odd_part(const Int& x);

/// 2-adic valuation of x != 0.
unsigned nu2(const Int& x);

}  // namespace pidx
