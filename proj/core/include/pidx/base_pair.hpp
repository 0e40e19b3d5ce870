#pragma once

#include "pidx/arith.hpp"

#include <stdexcept>

namespace pidx {

/// The base pair (k, h) of the sequences k^u - h^u and k^u + h^u.
/// Requires k, h >= 1 and k != h, so no term of either sequence is zero.
/// Derived quantities used throughout the lifting formulas are cached.
class BasePair {
 public:
  BasePair(Int k, Int h)
      : k_(std::move(k)), h_(std::move(h)) {
    if (k_ < 1 || h_ < 1) throw std::invalid_argument("BasePair: k and h must be >= 1");
    if (k_ == h_) throw std::invalid_argument("BasePair: k and h must differ");
    gcd_ = gcd(k_, h_);
    nu2_diff_ = nu2(k_ - h_);
    nu2_sum_ = nu2(k_ + h_);
  }

  const Int& k() const { return k_; }
  const Int& h() const { return h_; }
  const Int& kh_gcd() const { return gcd_; }

  unsigned nu2_diff() const { return nu2_diff_; }
  unsigned nu2_sum() const { return nu2_sum_; }
  bool diff_even() const { return nu2_diff_ > 0; }
  bool sum_even() const { return nu2_sum_ > 0; }

  /// k - h = 2 * (odd), the special case of the p = 2 lifting rules.
  bool two_special() const { return nu2_diff_ == 1; }

 private:
  Int k_, h_, gcd_;
  unsigned nu2_diff_, nu2_sum_;
};

}  // namespace pidx
