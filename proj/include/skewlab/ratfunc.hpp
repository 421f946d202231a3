#pragma once

// The rational function field F_p(y): reduced fractions num/den with den
// monic and gcd(num,den) = 1.  Zero is 0/1.  Hosts the valuation
// machinery behind the t^m - a irreducibility certificates and the formal
// derivative d/dy.

#include <cstdint>
#include <optional>
#include <string>

#include "skewlab/fppoly.hpp"

namespace skewlab {

struct RatFunc {
  FpPoly num;
  FpPoly den{1};
  bool operator==(const RatFunc& o) const { return num == o.num && den == o.den; }
};

enum class Place { Y, Infinity };

struct ValuationCertificate {
  Place place;
  int64_t valuation;  // v(a) at the place
  int64_t s;          // the obstruction: s does not divide valuation
};

class FuncField {
 public:
  explicit FuncField(int64_t p);

  int64_t p() const { return p_; }

  RatFunc normalize(FpPoly num, FpPoly den) const;
  RatFunc zero() const { return RatFunc{{}, {1}}; }
  RatFunc one() const { return RatFunc{{1}, {1}}; }
  RatFunc from_int(int64_t k) const;
  RatFunc y(int k = 1) const;  // y^k
  RatFunc from_poly(FpPoly f) const { return normalize(std::move(f), {1}); }

  bool is_zero(const RatFunc& a) const { return fp_is_zero(a.num); }
  RatFunc add(const RatFunc& a, const RatFunc& b) const;
  RatFunc sub(const RatFunc& a, const RatFunc& b) const;
  RatFunc neg(const RatFunc& a) const;
  RatFunc mul(const RatFunc& a, const RatFunc& b) const;
  RatFunc inv(const RatFunc& a) const;  // throws std::domain_error on 0
  RatFunc pow(const RatFunc& a, int64_t e) const;

  // a^p (the Frobenius endomorphism; injective, not surjective).
  RatFunc frobenius(const RatFunc& a) const;

  // Is a = b^p for some b?  Over F_p we have g(y)^p = g(y^p), so membership
  // means every exponent carrying a nonzero coefficient in num and den is
  // divisible by p; the witness is the termwise p-th root.
  std::optional<RatFunc> frobenius_preimage(const RatFunc& a) const;

  // v_y(a) or v_infinity(a); nullopt encodes +infinity (a = 0).
  std::optional<int64_t> valuation(const RatFunc& a, Place place) const;

  // Sound proof that no b satisfies b^s = a, obtained from a place where
  // s does not divide v(a); nullopt = no claim.
  std::optional<ValuationCertificate> sth_power_obstruction(const RatFunc& a, int64_t s) const;

  // Quotient-rule d/dy.
  RatFunc derivative(const RatFunc& a) const;

 private:
  int64_t p_;
};

}  // namespace skewlab
