#include "pidx/primitive_index.hpp"

#include <stdexcept>

namespace pidx {

namespace {

Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

bool fits_u32(const Int& v) {
  return v.fits_ulong_p() && v.get_ui() <= 0xFFFFFFFFull;
}

// A prime dividing exactly one of k, h divides no term of either sequence,
// which upgrades a bounded-scan miss to proven absence.
bool blocked_by_lopsided_prime(const Int& N, const BasePair& pair) {
  for (const auto& pe : factorize(N).factors) {
    const bool dk = mpz_divisible_p(pair.k().get_mpz_t(), pe.prime.get_mpz_t());
    const bool dh = mpz_divisible_p(pair.h().get_mpz_t(), pe.prime.get_mpz_t());
    if (dk != dh) return true;
  }
  return false;
}

std::optional<Int> scan_u64(uint64_t N, uint64_t k, uint64_t h, uint64_t bound,
                            bool plus) {
  uint64_t ku = 1, hu = 1;
  for (uint64_t u = 1; u <= bound; ++u) {
    ku = ku * k % N;
    hu = hu * h % N;
    if (plus ? (ku + hu) % N == 0 : ku == hu) return Int(static_cast<unsigned long>(u));
  }
  return std::nullopt;
}

std::optional<Int> scan_mpz(const Int& N, const Int& k, const Int& h, const Int& bound,
                            bool plus) {
  Int ku = 1, hu = 1;
  for (Int u = 1; u <= bound; ++u) {
    ku = ku * k % N;
    hu = hu * h % N;
    if (plus ? (ku + hu) % N == 0 : ku == hu) return u;
  }
  return std::nullopt;
}

std::optional<Int> linear_scan(const Int& N, const BasePair& pair, const Int& bound,
                               bool plus) {
  const Int k = pair.k() % N;
  const Int h = pair.h() % N;
  if (fits_u32(N) && bound.fits_ulong_p()) {
    return scan_u64(N.get_ui(), k.get_ui(), h.get_ui(), bound.get_ui(), plus);
  }
  return scan_mpz(N, k, h, bound, plus);
}

IndexResult oracle_scan(const Int& N, const BasePair& pair, const ScanOptions& opts,
                        Sequence seq) {
  if (N < 2) throw std::invalid_argument("primitive index: modulus must be >= 2");
  const bool plus = seq == Sequence::plus;
  IndexResult res{seq, N, std::nullopt, Method::oracle, true};
  const bool coprime = gcd(N, pair.k()) == 1 && gcd(N, pair.h()) == 1;
  if (coprime && !plus && !opts.full_linear_scan) {
    // P_N | lambda(N), so the smallest qualifying divisor of lambda(N) is
    // the index (and one always exists in the coprime case).
    for (const Int& d : divisors_of(factorize(carmichael_lambda(N)))) {
      if (mod_pow(pair.k() % N, d, N) == mod_pow(pair.h() % N, d, N)) {
        res.index = d;
        return res;
      }
    }
    throw std::logic_error("pidx_minus_oracle: no divisor of lambda(N) matched");
  }
  Int bound;
  if (coprime) {
    bound = carmichael_lambda(N);
    if (plus) bound *= 2;  // P^N = P_N / 2 <= lambda(N); 2x for headroom
  } else {
    bound = opts.scan_limit > 0 ? opts.scan_limit : 10 * N;
  }
  res.index = linear_scan(N, pair, bound, plus);
  if (!res.found()) {
    res.exhaustive = coprime || blocked_by_lopsided_prime(N, pair);
  }
  return res;
}

}  // namespace

IndexResult pidx_minus_oracle(const Int& N, const BasePair& pair, const ScanOptions& opts) {
  return oracle_scan(N, pair, opts, Sequence::minus);
}

IndexResult pidx_plus_oracle(const Int& N, const BasePair& pair, const ScanOptions& opts) {
  return oracle_scan(N, pair, opts, Sequence::plus);
}

GammaValue gamma(const Int& p, const BasePair& pair) {
  if (!is_prime(p)) throw std::invalid_argument("gamma: p must be prime");
  if (gcd(p, pair.h()) != 1) throw std::domain_error("gamma: requires gcd(p,h) = 1");
  if (p == 2 && pair.two_special()) {
    return {p, pair.nu2_diff() + pair.nu2_sum(), GammaBranch::two_special};
  }
  const auto first = pidx_minus_oracle(p, pair);
  if (!first.found()) return {p, 0, GammaBranch::generic};
  // valuation of k^u - h^u at u = P_p: raise the modulus until they part
  const Int& u = *first.index;
  unsigned v = 0;
  Int pe = p;
  while (mod_pow(pair.k() % pe, u, pe) == mod_pow(pair.h() % pe, u, pe)) {
    ++v;
    pe *= p;
  }
  return {p, v, GammaBranch::generic};
}

IndexResult pidx_minus_prime_power(const Int& p, unsigned a, const BasePair& pair) {
  if (a < 1) throw std::invalid_argument("pidx_minus_prime_power: a must be >= 1");
  if (!is_prime(p)) throw std::invalid_argument("pidx_minus_prime_power: p must be prime");
  if (gcd(p, pair.h()) != 1) {
    throw std::domain_error("pidx_minus_prime_power: requires gcd(p,h) = 1");
  }
  const GammaValue g = gamma(p, pair);
  IndexResult res{Sequence::minus, pow_int(p, a), std::nullopt, Method::formula, true};
  if (g.branch == GammaBranch::two_special) {
    // Lifting below 2^gamma is irregular here; the closed form only pins
    // indexes beyond it, so defer small exponents to the oracle.
    if (a <= g.value) return pidx_minus_oracle(res.modulus, pair);
    const auto base = pidx_minus_oracle(pow_int(p, g.value), pair);
    res.index = (Int(1) << (a - g.value)) * *base.index;
    return res;
  }
  const auto first = pidx_minus_oracle(p, pair);
  if (!first.found()) {
    res.exhaustive = first.exhaustive;
    return res;
  }
  res.index = pow_int(p, a > g.value ? a - g.value : 0) * *first.index;
  return res;
}

IndexResult pidx_minus(const Int& N, const BasePair& pair) {
  if (N < 2) throw std::invalid_argument("pidx_minus: N must be >= 2");
  if (gcd(N, pair.h()) != 1) throw std::domain_error("pidx_minus: requires gcd(N,h) = 1");
  IndexResult res{Sequence::minus, N, std::nullopt, Method::formula, true};
  Int acc = 1;
  for (const auto& [p, e] : factorize(N).factors) {
    const auto part = pidx_minus_prime_power(p, e, pair);
    if (!part.found()) {
      res.exhaustive = part.exhaustive;
      return res;
    }
    acc = lcm(acc, *part.index);
  }
  res.index = acc;
  return res;
}

bool divides_minus(const Int& N, const BasePair& pair, const Int& u) {
  if (u < 1) throw std::invalid_argument("divides_minus: u must be >= 1");
  const auto r = pidx_minus(N, pair);
  return r.found() && mpz_divisible_p(u.get_mpz_t(), r.index->get_mpz_t());
}

IndexResult pidx_plus_prime_power(const Int& p, unsigned a, const BasePair& pair) {
  if (p == 2) {
    throw std::invalid_argument(
        "pidx_plus_prime_power: powers of two follow nu2_plus; use pidx_plus");
  }
  const auto m = pidx_minus_prime_power(p, a, pair);
  IndexResult res{Sequence::plus, m.modulus, std::nullopt, Method::formula, m.exhaustive};
  if (m.found() && mpz_even_p(m.index->get_mpz_t())) res.index = *m.index / 2;
  return res;
}

IndexResult pidx_plus(const Int& N, const BasePair& pair) {
  if (N < 2) throw std::invalid_argument("pidx_plus: N must be >= 2");
  if (gcd(N, pair.h()) != 1) throw std::domain_error("pidx_plus: requires gcd(N,h) = 1");
  IndexResult res{Sequence::plus, N, std::nullopt, Method::formula, true};
  const unsigned a = unsigned(mpz_scan1(N.get_mpz_t(), 0));
  const Int odd = N >> a;

  Int acc = 1;  // index of the odd part; 1 (odd) when there is none
  if (odd > 1) {
    std::optional<unsigned> shared_nu2;
    for (const auto& [p, e] : factorize(odd).factors) {
      const auto part = pidx_plus_prime_power(p, e, pair);
      if (!part.found()) {
        res.exhaustive = part.exhaustive;
        return res;
      }
      const unsigned v = mpz_odd_p(part.index->get_mpz_t()) ? 0 : nu2(*part.index);
      if (!shared_nu2) shared_nu2 = v;
      else if (*shared_nu2 != v) return res;  // no u makes every quotient odd
      acc = lcm(acc, *part.index);
    }
  }
  if (a >= 1) {
    if (!pair.sum_even()) return res;  // 2 divides no term
    if (mpz_odd_p(acc.get_mpz_t())) {
      if (a > pair.nu2_sum()) return res;
    } else if (a > 1) {
      return res;  // even index caps the power of two at nu2 = 1
    }
  }
  res.index = acc;
  return res;
}

bool divides_plus(const Int& N, const BasePair& pair, const Int& u) {
  if (u < 1) throw std::invalid_argument("divides_plus: u must be >= 1");
  if (N < 2) throw std::invalid_argument("divides_plus: N must be >= 2");
  if (N == 2) return pair.sum_even();
  const auto r = pidx_plus(N, pair);
  if (!r.found()) return false;
  if (!mpz_divisible_p(u.get_mpz_t(), r.index->get_mpz_t())) return false;
  return mpz_odd_p(Int(u / *r.index).get_mpz_t());
}

unsigned nu2_plus(const BasePair& pair, const Int& n) {
  if (n < 1) throw std::invalid_argument("nu2_plus: n must be >= 1");
  if (!pair.sum_even()) return 0;
  return mpz_odd_p(n.get_mpz_t()) ? pair.nu2_sum() : 1;
}

}  // namespace pidx
