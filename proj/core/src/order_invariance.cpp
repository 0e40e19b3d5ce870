#include "pidx/order_invariance.hpp"

#include <algorithm>
#include <stdexcept>

namespace pidx {

namespace {

constexpr unsigned long kCosetEnumerationLimit = 10'000'000;

Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

IndexResult order_result(const Int& N, Int value, Method method) {
  return IndexResult{Sequence::minus, N, std::move(value), method, true};
}

bool has_primitive_roots(const Int& n) {
  if (n <= 4) return n >= 2;
  Int m = mpz_even_p(n.get_mpz_t()) ? Int(n / 2) : n;
  if (mpz_even_p(m.get_mpz_t())) return false;
  const auto f = factorize(m);
  return f.factors.size() == 1;
}

}  // namespace

IndexResult mult_order(const Int& N, const Int& k) {
  if (N < 2) throw std::invalid_argument("mult_order: N must be >= 2");
  if (gcd(N, k) != 1) throw std::domain_error("mult_order: requires gcd(N,k) = 1");
  if (k == 1 || k % N == 1) return order_result(N, 1, Method::formula);
  return pidx_minus(N, BasePair(k, 1));
}

IndexResult mult_order_oracle(const Int& N, const Int& k, const ScanOptions& opts) {
  if (N < 2) throw std::invalid_argument("mult_order_oracle: N must be >= 2");
  if (gcd(N, k) != 1) throw std::domain_error("mult_order_oracle: requires gcd(N,k) = 1");
  if (k == 1 || k % N == 1) return order_result(N, 1, Method::oracle);
  return pidx_minus_oracle(N, BasePair(k, 1), opts);
}

LambdaPeriod lambda_period(const std::vector<Int>& primes, const Int& k) {
  if (primes.empty()) throw std::invalid_argument("lambda_period: empty prime set");
  if (k < 1) throw std::invalid_argument("lambda_period: k must be >= 1");
  std::vector<Int> ps = primes;
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  Int radical = 1;
  for (const Int& p : ps) {
    if (!is_prime(p)) throw std::invalid_argument("lambda_period: non-prime entry");
    radical *= p;
  }
  LambdaPeriod out{factorize(radical), k, 0};
  if (k == 1) return out;
  Int value = 1;
  for (const Int& p : ps) {
    if (mpz_divisible_p(k.get_mpz_t(), p.get_mpz_t())) {
      throw std::domain_error("lambda_period: base shares a factor with the prime set");
    }
    value *= pow_int(p, gamma(p, BasePair(k, 1)).value + 1);
  }
  out.value = value;
  return out;
}

bool order_shift_check(const Int& p, unsigned a, const Int& k, const Int& m) {
  if (a < 1 || m < 1) throw std::invalid_argument("order_shift_check: a, m must be >= 1");
  if (!is_prime(p)) throw std::invalid_argument("order_shift_check: p must be prime");
  if (gcd(p, k) != 1) throw std::domain_error("order_shift_check: requires gcd(p,k) = 1");
  if (k == 1) return true;  // Lambda(1) = 0, the shift is trivial
  const Int pa = pow_int(p, a);
  const Int shifted = k + pow_int(p, gamma(p, BasePair(k, 1)).value + 1) * m;
  return *mult_order(pa, shifted).index == *mult_order(pa, k).index;
}

bool pidx_shift_check(const std::vector<Int>& primes, const Int& N,
                      const BasePair& pair, const Int& m) {
  if (m < 1) throw std::invalid_argument("pidx_shift_check: m must be >= 1");
  for (const auto& pe : factorize(N).factors) {
    if (std::find(primes.begin(), primes.end(), pe.prime) == primes.end()) {
      throw std::invalid_argument("pidx_shift_check: N has a prime outside the set");
    }
  }
  const Int lk = lambda_period(primes, pair.k()).value;
  const Int lh = lambda_period(primes, pair.h()).value;
  const BasePair shifted(pair.k() + lk * m, pair.h() + lh * m);
  return pidx_minus(N, shifted).index == pidx_minus(N, pair).index;
}

Int coincidence_count(const Int& n, const BasePair& pair) {
  if (n < 2) throw std::invalid_argument("coincidence_count: n must be >= 2");
  if (gcd(n, pair.k()) != 1 || gcd(n, pair.h()) != 1) {
    throw std::domain_error("coincidence_count: requires gcd(n,k) = gcd(n,h) = 1");
  }
  const auto idx = pidx_minus(n, pair);
  if (!idx.found()) throw std::domain_error("coincidence_count: P_n does not exist");
  const Int phi = euler_phi(n);
  if (!mpz_divisible_p(phi.get_mpz_t(), idx.index->get_mpz_t())) {
    throw std::logic_error("coincidence_count: P_n does not divide phi(n)");
  }
  return phi / *idx.index;
}

Int coincidence_count_direct(const Int& n, const BasePair& pair) {
  if (n < 2) throw std::invalid_argument("coincidence_count_direct: n must be >= 2");
  if (gcd(n, pair.k()) != 1 || gcd(n, pair.h()) != 1) {
    throw std::domain_error("coincidence_count_direct: requires gcd(n,kh) = 1");
  }
  const Int phi = euler_phi(n);
  Int count = 0, ku = 1, hu = 1;
  const Int k = pair.k() % n, h = pair.h() % n;
  for (Int u = 0; u < phi; ++u) {
    if (u > 0) {
      ku = ku * k % n;
      hu = hu * h % n;
    }
    if (ku == hu) ++count;
  }
  return count;
}

Int cross_generator_order(const Int& n, const BasePair& pair) {
  if (n < 2) throw std::invalid_argument("cross_generator_order: n must be >= 2");
  if (!has_primitive_roots(n)) {
    throw std::domain_error("cross_generator_order: modulus has no primitive roots");
  }
  if (gcd(n, pair.k() * pair.h()) != 1) {
    throw std::domain_error("cross_generator_order: requires gcd(n,kh) = 1");
  }
  const Int phi = euler_phi(n);
  if (*mult_order(n, pair.k()).index != phi || *mult_order(n, pair.h()).index != phi) {
    throw std::domain_error("cross_generator_order: k and h must both generate (Z/nZ)*");
  }
  const Int expected = *pidx_minus(n, pair).index;
  const Int g1 = pair.k() * mod_pow(pair.h() % n, phi - 1, n) % n;
  const Int g2 = pair.h() * mod_pow(pair.k() % n, phi - 1, n) % n;
  const Int o1 = *mult_order(n, g1).index;
  const Int o2 = *mult_order(n, g2).index;
  if (o1 != expected || o2 != expected) {
    throw std::logic_error("cross_generator_order: cross-base orders disagree with P_n");
  }
  return o1;
}

Int cyclotomic_coset_count(const Int& n, const Int& k) {
  if (n < 2) throw std::invalid_argument("cyclotomic_coset_count: n must be >= 2");
  if (gcd(n, k) != 1) throw std::domain_error("cyclotomic_coset_count: requires gcd(n,k) = 1");
  if (!n.fits_ulong_p() || n.get_ui() > kCosetEnumerationLimit) {
    throw std::invalid_argument("cyclotomic_coset_count: n too large to enumerate orbits");
  }
  const uint64_t nn = n.get_ui();
  const uint64_t kk = Int(k % n).get_ui();
  std::vector<bool> seen(nn, false);
  uint64_t orbits = 0;
  for (uint64_t s = 1; s < nn; ++s) {
    if (seen[s]) continue;
    ++orbits;
    uint64_t t = s;
    while (!seen[t]) {
      seen[t] = true;
      t = t * kk % nn;
    }
  }
  return Int(static_cast<unsigned long>(orbits));
}

}  // namespace pidx
