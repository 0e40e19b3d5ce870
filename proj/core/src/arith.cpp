#include "pidx/arith.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pidx {

namespace {

constexpr uint32_t kTrialBound = 1'000'000;

std::vector<uint32_t> sieve_primes(uint32_t limit) {
  std::vector<bool> composite(limit, false);
  std::vector<uint32_t> primes;
  for (uint32_t i = 2; i < limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (uint64_t j = uint64_t(i) * i; j < limit; j += i) composite[j] = true;
  }
  return primes;
}

bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, unsigned r) {
  Int x = mod_pow(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned i = 1; i < r; ++i) {
    x = x * x % n;
    if (x == n - 1) return false;
  }
  return true;  // a witnesses compositeness
}

// Brent's cycle-finding rho with batched gcds. Returns a nontrivial factor
// of n, or 0 if the iteration budget ran out for this parameter c.
Int rho_brent(const Int& n, unsigned long c, uint64_t max_iters) {
  const uint64_t batch = 128;
  Int x, y = 2, ys, q = 1, d = 1, diff;
  uint64_t r = 1, iters = 0;
  while (d == 1) {
    x = y;
    for (uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
    for (uint64_t k = 0; k < r && d == 1; k += batch) {
      ys = y;
      const uint64_t lim = std::min(batch, r - k);
      for (uint64_t i = 0; i < lim; ++i) {
        y = (y * y + c) % n;
        diff = x - y;
        q = q * abs(diff) % n;
      }
      d = gcd(q, n);
      iters += lim;
    }
    r *= 2;
    if (iters > max_iters) return 0;
  }
  if (d == n) {
    // backtrack one step at a time
    do {
      ys = (ys * ys + c) % n;
      diff = x - ys;
      d = gcd(abs(diff), n);
    } while (d == 1);
  }
  return d == n ? 0 : d;
}

// Splits a composite with no prime factor below 10^6 into primes.
void split_hard(const Int& n, std::map<Int, unsigned>& out, unsigned mult) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n] += mult;
    return;
  }
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned e = 2; ; ++e) {
      Int root, rem;
      mpz_rootrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t(), e);
      if (root == 1) break;
      if (rem == 0) {
        split_hard(root, out, mult * e);
        return;
      }
    }
  }
  for (unsigned long c = 1; c <= 64; ++c) {
    Int d = rho_brent(n, c, uint64_t(1) << 26);
    if (d > 1 && d < n) {
      split_hard(d, out, mult);
      split_hard(n / d, out, mult);
      return;
    }
  }
  throw std::runtime_error("factorize: rho budget exhausted (input beyond desk scale)");
}

}  // namespace

const std::vector<uint32_t>& small_primes() {
  static const std::vector<uint32_t> primes = sieve_primes(kTrialBound);
  return primes;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  static const unsigned kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (unsigned p : kSmall) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  Int d = n - 1;
  unsigned r = nu2(d);
  d >>= r;
  // {2,...,37} is an exact witness set below 3317044064679887385961981
  static const Int kExactBound("3317044064679887385961981");
  if (n < kExactBound) {
    for (unsigned p : kSmall) {
      if (miller_rabin_witness(n, p, d, r)) return false;
    }
    return true;
  }
  for (size_t i = 0; i < 64; ++i) {
    if (miller_rabin_witness(n, small_primes()[i], d, r)) return false;
  }
  return true;
}

Factorization factorize(const Int& n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
  Factorization out;
  out.value = n;
  if (n == 1) return out;
  Int m = n;
  for (uint32_t p : small_primes()) {
    if (mpz_cmp_ui(m.get_mpz_t(), 1) == 0) break;
    if (mpz_cmp_ui(m.get_mpz_t(), uint64_t(p) * p) < 0) break;
    if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) continue;
    unsigned e = 0;
    do {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    } while (mpz_divisible_ui_p(m.get_mpz_t(), p));
    out.factors.push_back({Int(p), e});
  }
  if (m > 1) {
    if (m < uint64_t(kTrialBound) * kTrialBound || is_prime(m)) {
      out.factors.push_back({m, 1});  // no factor below its square root
    } else {
      std::map<Int, unsigned> hard;
      split_hard(m, hard, 1);
      for (const auto& [p, e] : hard) out.factors.push_back({p, e});
    }
  }
  return out;
}

Int mod_pow(const Int& base, const Int& exp, const Int& modulus) {
  if (modulus < 2) throw std::invalid_argument("mod_pow: modulus must be >= 2");
  if (base < 0 || exp < 0) throw std::invalid_argument("mod_pow: base and exp must be >= 0");
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

Int euler_phi(const Int& n) {
  Int phi = 1;
  for (const auto& [p, e] : factorize(n).factors) {
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e - 1);
    phi *= pe * (p - 1);
  }
  return phi;
}

Int carmichael_lambda(const Int& n) {
  Int lam = 1;
  for (const auto& [p, e] : factorize(n).factors) {
    Int part;
    if (p == 2) {
      if (e == 1) part = 1;
      else if (e == 2) part = 2;
      else part = Int(1) << (e - 2);
    } else {
      mpz_pow_ui(part.get_mpz_t(), p.get_mpz_t(), e - 1);
      part *= p - 1;
    }
    lam = lcm(lam, part);
  }
  return lam;
}

unsigned padic_valuation(const Int& p, const Int& x) {
  if (x < 1) throw std::invalid_argument("padic_valuation: x must be >= 1");
  if (!is_prime(p)) throw std::invalid_argument("padic_valuation: p must be prime");
  Int reduced;
  return unsigned(mpz_remove(reduced.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

std::vector<Int> divisors_of(const Factorization& f) {
  std::vector<Int> divs{1};
  for (const auto& [p, e] : f.factors) {
    const size_t base_count = divs.size();
    Int pe = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pe *= p;
      for (size_t j = 0; j < base_count; ++j) divs.push_back(divs[j] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

int mobius(const Int& n) {
  if (n < 1) throw std::invalid_argument("mobius: n must be >= 1");
  auto f = factorize(n);
  for (const auto& pe : f.factors) {
    if (pe.exponent > 1) return 0;
  }
  return f.factors.size() % 2 == 0 ? 1 : -1;
}

Int odd_part(const Int& x) {
  if (x < 1) throw std::invalid_argument("odd_part: x must be >= 1");
  return x >> nu2(x);
}

unsigned nu2(const Int& x) {
  if (x == 0) throw std::invalid_argument("nu2: x must be nonzero");
  return unsigned(mpz_scan1(x.get_mpz_t(), 0));
}

}  // namespace pidx
