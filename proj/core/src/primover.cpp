#include "pidx/primover.hpp"

#include "pidx/base_pair.hpp"
#include "pidx/order_invariance.hpp"
#include "pidx/primitive_index.hpp"

#include <stdexcept>

namespace pidx {

namespace {

constexpr unsigned long kCosetCheckLimit = 1'000'000;
constexpr unsigned long kExponentLimit = 1'048'576;  // keeps values desk-scale

Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

void attach_coset_check(PrimoverVerdict& v, const Int& order_n) {
  if (!v.n.fits_ulong_p() || v.n.get_ui() > kCosetCheckLimit) return;
  const Int r = cyclotomic_coset_count(v.n, v.base);
  v.coset_identity_holds = r * order_n + 1 == v.n;
}

// Decides between overpseudoprime and ordinary composite from the orders
// of the proper divisors > 1 plus O_n itself; ordinary verdicts keep one
// conflicting pair as the witness.
void finish_composite(PrimoverVerdict& v, std::vector<DivisorOrder> orders,
                      const Int& order_n) {
  orders.push_back({v.n, order_n});
  for (size_t i = 1; i < orders.size(); ++i) {
    if (orders[i].order != orders[0].order) {
      v.klass = PrimoverClass::ordinary_composite;
      v.witness = {orders[0], orders[i]};
      attach_coset_check(v, order_n);
      return;
    }
  }
  v.klass = PrimoverClass::overpseudoprime;
  v.witness = std::move(orders);
  attach_coset_check(v, order_n);
}

void validate_primover_args(const Int& n, const Int& base, const char* who) {
  if (n < 2) throw std::invalid_argument(std::string(who) + ": n must be >= 2");
  if (base < 1) throw std::invalid_argument(std::string(who) + ": base must be >= 1");
  if (gcd(n, base) != 1) throw std::domain_error(std::string(who) + ": requires gcd(n,base) = 1");
}

Int order_of(const Int& modulus, const Int& base) {
  return *mult_order(modulus, base).index;
}

}  // namespace

PrimoverVerdict is_primover(const Int& n, const Int& base) {
  validate_primover_args(n, base, "is_primover");
  PrimoverVerdict v{n, base, PrimoverClass::prime, {}, std::nullopt};
  if (is_prime(n)) {
    const Int on = order_of(n, base);
    v.witness = {{n, on}};
    attach_coset_check(v, on);
    return v;
  }
  std::vector<DivisorOrder> orders;
  Int order_n = 1;
  for (const auto& [p, e] : factorize(n).factors) {
    if (base == 1) {
      orders.push_back({p, 1});
      if (e > 1) orders.push_back({pow_int(p, e), 1});
      continue;
    }
    const Int op = order_of(p, base);
    orders.push_back({p, op});
    if (e > 1) {
      // the gamma-based lift, including the p = 2 special branch
      const Int opa = *pidx_minus_prime_power(p, e, BasePair(base, 1)).index;
      orders.push_back({pow_int(p, e), opa});
      order_n = lcm(order_n, opa);
    } else {
      order_n = lcm(order_n, op);
    }
  }
  finish_composite(v, std::move(orders), order_n);
  return v;
}

PrimoverVerdict is_primover_all_divisors(const Int& n, const Int& base) {
  validate_primover_args(n, base, "is_primover_all_divisors");
  PrimoverVerdict v{n, base, PrimoverClass::prime, {}, std::nullopt};
  if (is_prime(n)) {
    const Int on = *mult_order_oracle(n, base).index;
    v.witness = {{n, on}};
    attach_coset_check(v, on);
    return v;
  }
  std::vector<DivisorOrder> orders;
  for (const Int& d : divisors_of(factorize(n))) {
    if (d == 1) continue;
    orders.push_back({d, *mult_order_oracle(d, base).index});
  }
  const Int order_n = orders.back().order;  // divisors ascend, last is n
  std::vector<DivisorOrder> proper(orders.begin(), orders.end() - 1);
  finish_composite(v, std::move(proper), order_n);
  return v;
}

Int repunit(const Int& n, const Int& k) {
  if (n < 1) throw std::invalid_argument("repunit: n must be >= 1");
  if (k < 2) throw std::invalid_argument("repunit: k must be >= 2");
  if (!n.fits_ulong_p() || n.get_ui() > kExponentLimit) {
    throw std::invalid_argument("repunit: n beyond desk scale");
  }
  Int t;
  mpz_pow_ui(t.get_mpz_t(), k.get_mpz_t(), n.get_ui());
  return (t - 1) / (k - 1);
}

Int z_pq(const Int& p, const Int& q, const Int& k) {
  if (k < 2) throw std::invalid_argument("z_pq: k must be >= 2");
  if (!is_prime(p) || !is_prime(q) || p == q) {
    throw std::domain_error("z_pq: p and q must be distinct primes");
  }
  if (gcd(p * q, k) != 1) throw std::domain_error("z_pq: requires gcd(pq,k) = 1");
  if (!Int(p * q).fits_ulong_p() || Int(p * q).get_ui() > kExponentLimit) {
    throw std::invalid_argument("z_pq: p*q beyond desk scale");
  }
  if (order_of(p, k) == q || order_of(q, k) == p) {
    throw std::domain_error("z_pq: requires p != O_q(k) and q != O_p(k)");
  }
  const unsigned long pu = p.get_ui(), qu = q.get_ui();
  const Int num = (k - 1) * (pow_int(k, pu * qu) - 1);
  const Int den = (pow_int(k, pu) - 1) * (pow_int(k, qu) - 1);
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw std::logic_error("z_pq: inexact division");
  }
  return num / den;
}

Int z_p_op(const Int& p, const Int& k) {
  if (k < 2) throw std::invalid_argument("z_p_op: k must be >= 2");
  if (!is_prime(p)) throw std::domain_error("z_p_op: p must be prime");
  if (gcd(p, k) != 1) throw std::domain_error("z_p_op: requires gcd(p,k) = 1");
  const Int o = order_of(p, k);
  if (!is_prime(o)) throw std::domain_error("z_p_op: O_p(k) must be prime");
  if (!Int(p * o).fits_ulong_p() || Int(p * o).get_ui() > kExponentLimit) {
    throw std::invalid_argument("z_p_op: p*O_p(k) beyond desk scale");
  }
  const unsigned long pu = p.get_ui(), ou = o.get_ui();
  const Int num = (k - 1) * (pow_int(k, pu * ou) - 1);
  const Int den = p * (pow_int(k, pu) - 1) * (pow_int(k, ou) - 1);
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw std::logic_error("z_p_op: inexact division");
  }
  return num / den;
}

Int z_prime_power(const Int& n, unsigned a, const Int& k) {
  if (n < 2) throw std::invalid_argument("z_prime_power: n must be >= 2");
  if (a < 1) throw std::invalid_argument("z_prime_power: a must be >= 1");
  if (k < 2) throw std::invalid_argument("z_prime_power: k must be >= 2");
  Int na, na1;
  mpz_pow_ui(na.get_mpz_t(), n.get_mpz_t(), a);
  mpz_pow_ui(na1.get_mpz_t(), n.get_mpz_t(), a - 1);
  if (!na.fits_ulong_p() || na.get_ui() > kExponentLimit) {
    throw std::invalid_argument("z_prime_power: n^a beyond desk scale");
  }
  const Int num = pow_int(k, na.get_ui()) - 1;
  const Int den = pow_int(k, na1.get_ui()) - 1;
  return num / den;
}

Int wagstaff(const Int& p) {
  if (p == 2 || !is_prime(p)) throw std::domain_error("wagstaff: p must be an odd prime");
  if (!p.fits_ulong_p() || p.get_ui() > kExponentLimit) {
    throw std::invalid_argument("wagstaff: p beyond desk scale");
  }
  Int t;
  mpz_ui_pow_ui(t.get_mpz_t(), 2, p.get_ui());
  return (t + 1) / 3;
}

}  // namespace pidx
