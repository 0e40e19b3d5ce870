#include "pidx/zsigmondy.hpp"

#include <map>
#include <stdexcept>

namespace pidx {

namespace {

Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Int term_minus(const BasePair& pair, const Int& d) {
  Int kd, hd;
  mpz_pow_ui(kd.get_mpz_t(), pair.k().get_mpz_t(), d.get_ui());
  mpz_pow_ui(hd.get_mpz_t(), pair.h().get_mpz_t(), d.get_ui());
  return kd - hd;
}

void require_zsigmondy_domain(const Int& n, const BasePair& pair, const char* who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be >= 1");
  if (!n.fits_ulong_p()) throw std::invalid_argument(std::string(who) + ": n too large");
  if (pair.k() <= pair.h()) throw std::domain_error(std::string(who) + ": requires k > h");
  if (pair.kh_gcd() != 1) throw std::domain_error(std::string(who) + ": requires gcd(k,h) = 1");
}

Int exact_div(const Int& num, const Int& den, const char* who) {
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw std::logic_error(std::string(who) + ": inexact division");
  }
  Int q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

// Smallest divisor d of n with q | k^d - h^d, or 0 if none. When
// q | k^n - h^n this is exactly P_q(k,h), since P_q | n.
Int first_index_among_divisors(const Int& q, const BasePair& pair, const Int& n) {
  const Int k = pair.k() % q, h = pair.h() % q;
  for (const Int& d : divisors_of(factorize(n))) {
    if (mod_pow(k, d, q) == mod_pow(h, d, q)) return d;
  }
  return 0;
}

// The unique prime p with n = p^nu_p(n) * P_p(k,h), if any.
std::optional<Int> exceptional_prime_of(const Int& n, const BasePair& pair) {
  if (n < 2) return std::nullopt;
  std::optional<Int> found;
  for (const auto& [p, e] : factorize(n).factors) {
    const Int rest = n / pow_int(p, e);
    if (rest == 0) continue;
    const Int first = rest == 1 ? (mpz_divisible_p(term_minus(pair, 1).get_mpz_t(),
                                                   p.get_mpz_t())
                                       ? Int(1)
                                       : Int(0))
                                : first_index_among_divisors(p, pair, rest);
    if (first == rest) {
      if (found) throw std::logic_error("zsigmondy: two exceptional primes");
      found = p;
    }
  }
  return found;
}

}  // namespace

Int homog_cyclotomic(const Int& n, const BasePair& pair) {
  if (n < 1) throw std::invalid_argument("homog_cyclotomic: n must be >= 1");
  if (!n.fits_ulong_p()) throw std::invalid_argument("homog_cyclotomic: n too large");
  if (pair.k() <= pair.h()) throw std::domain_error("homog_cyclotomic: requires k > h");
  const auto divs = divisors_of(factorize(n));
  std::map<Int, Int> phi;
  for (const Int& d : divs) {
    Int t = term_minus(pair, d);
    for (const Int& e : divs) {
      if (e >= d) break;
      if (mpz_divisible_p(d.get_mpz_t(), e.get_mpz_t())) {
        t = exact_div(t, phi.at(e), "homog_cyclotomic");
      }
    }
    phi.emplace(d, std::move(t));
  }
  return phi.at(n);
}

Int homog_cyclotomic_mobius(const Int& n, const BasePair& pair) {
  if (n < 1) throw std::invalid_argument("homog_cyclotomic_mobius: n must be >= 1");
  if (!n.fits_ulong_p()) throw std::invalid_argument("homog_cyclotomic_mobius: n too large");
  if (pair.k() <= pair.h()) throw std::domain_error("homog_cyclotomic_mobius: requires k > h");
  Int num = 1, den = 1;
  for (const Int& d : divisors_of(factorize(n))) {
    switch (mobius(n / d)) {
      case 1: num *= term_minus(pair, d); break;
      case -1: den *= term_minus(pair, d); break;
      default: break;
    }
  }
  return exact_div(num, den, "homog_cyclotomic_mobius");
}

ZsigmondyValue zsigmondy_minus_direct(const Int& n, const BasePair& pair) {
  require_zsigmondy_domain(n, pair, "zsigmondy_minus_direct");
  const Int phi = homog_cyclotomic(n, pair);
  // every primitive prime of k^n - h^n sits in Phi_n with full multiplicity
  const Int term = term_minus(pair, n);
  Int value = 1;
  for (const auto& [q, e] : factorize(phi).factors) {
    if (first_index_among_divisors(q, pair, n) != n) continue;
    Int reduced;
    const unsigned long mult =
        mpz_remove(reduced.get_mpz_t(), term.get_mpz_t(), q.get_mpz_t());
    value *= pow_int(q, mult);
  }
  return {Sequence::minus, n, pair, phi, exceptional_prime_of(n, pair), value};
}

ZsigmondyValue zsigmondy_minus(const Int& n, const BasePair& pair) {
  require_zsigmondy_domain(n, pair, "zsigmondy_minus");
  if (n == 2) {
    // Phi_2 = k + h carries every power of two from k^2 - h^2 when
    // 2 | k - h; the primitive part is its odd part.
    const Int phi = pair.k() + pair.h();
    if (pair.diff_even()) {
      return {Sequence::minus, n, pair, phi, Int(2), odd_part(phi)};
    }
    return {Sequence::minus, n, pair, phi, std::nullopt, phi};
  }
  const Int phi = homog_cyclotomic(n, pair);
  const auto exceptional = exceptional_prime_of(n, pair);
  const Int value = exceptional ? exact_div(phi, *exceptional, "zsigmondy_minus") : phi;
  return {Sequence::minus, n, pair, phi, exceptional, value};
}

ZsigmondyValue zsigmondy_plus(const Int& n, const BasePair& pair) {
  require_zsigmondy_domain(n, pair, "zsigmondy_plus");
  if (n == 1 && pair.sum_even()) {
    // the first plus term has no predecessors: all of k + h is primitive
    const Int sum = pair.k() + pair.h();
    return {Sequence::plus, n, pair, sum, std::nullopt, sum};
  }
  auto m = zsigmondy_minus(2 * n, pair);
  return {Sequence::plus, n, pair, m.phi_value, m.exceptional_prime, m.value};
}

ZsigmondyValue zsigmondy_plus_direct(const Int& n, const BasePair& pair) {
  require_zsigmondy_domain(n, pair, "zsigmondy_plus_direct");
  Int kn, hn;
  mpz_pow_ui(kn.get_mpz_t(), pair.k().get_mpz_t(), n.get_ui());
  mpz_pow_ui(hn.get_mpz_t(), pair.h().get_mpz_t(), n.get_ui());
  const Int term = kn + hn;
  Int value = 1;
  for (const auto& [q, e] : factorize(term).factors) {
    // first u <= n with q | k^u + h^u, by direct scan
    const Int k = pair.k() % q, h = pair.h() % q;
    Int ku = 1, hu = 1, first = 0;
    for (Int u = 1; u <= n; ++u) {
      ku = ku * k % q;
      hu = hu * h % q;
      if ((ku + hu) % q == 0) {
        first = u;
        break;
      }
    }
    if (first == n) value *= pow_int(q, e);
  }
  const Int phi = n == 1 && pair.sum_even() ? term : homog_cyclotomic(2 * n, pair);
  return {Sequence::plus, n, pair, phi,
          n == 1 && pair.sum_even() ? std::nullopt : exceptional_prime_of(2 * n, pair),
          value};
}

}  // namespace pidx
