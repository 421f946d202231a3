#include "skewlab/ratfunc.hpp"

#include <stdexcept>

#include "skewlab/util.hpp"

namespace skewlab {

FuncField::FuncField(int64_t p) : p_(p) {
  if (!is_prime_i64(p)) throw std::invalid_argument("FuncField: p must be prime");
}

RatFunc FuncField::normalize(FpPoly num, FpPoly den) const {
  fp_trim(num);
  fp_trim(den);
  if (fp_is_zero(den)) throw std::domain_error("RatFunc: zero denominator");
  if (fp_is_zero(num)) return zero();
  FpPoly g = fp_gcd(num, den, p_);
  if (fp_deg(g) > 0) {
    FpPoly q, r;
    fp_divmod(num, g, p_, q, r);
    num = q;
    fp_divmod(den, g, p_, q, r);
    den = q;
  }
  int64_t lead_inv = inv_mod_i64(den.back(), p_);
  num = fp_scale(num, lead_inv, p_);
  den = fp_scale(den, lead_inv, p_);
  return RatFunc{std::move(num), std::move(den)};
}

RatFunc FuncField::from_int(int64_t k) const { return RatFunc{fp_const(k, p_), {1}}; }

RatFunc FuncField::y(int k) const { return RatFunc{fp_monomial(k, 1, p_), {1}}; }

RatFunc FuncField::add(const RatFunc& a, const RatFunc& b) const {
  FpPoly num = fp_add(fp_mul(a.num, b.den, p_), fp_mul(b.num, a.den, p_), p_);
  return normalize(std::move(num), fp_mul(a.den, b.den, p_));
}

RatFunc FuncField::neg(const RatFunc& a) const { return RatFunc{fp_neg(a.num, p_), a.den}; }

RatFunc FuncField::sub(const RatFunc& a, const RatFunc& b) const { return add(a, neg(b)); }

RatFunc FuncField::mul(const RatFunc& a, const RatFunc& b) const {
  return normalize(fp_mul(a.num, b.num, p_), fp_mul(a.den, b.den, p_));
}

RatFunc FuncField::inv(const RatFunc& a) const {
  if (is_zero(a)) throw std::domain_error("RatFunc inv: zero is not invertible");
  return normalize(a.den, a.num);
}

RatFunc FuncField::pow(const RatFunc& a, int64_t e) const {
  if (e < 0) return pow(inv(a), -e);
  RatFunc r = one(), base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

RatFunc FuncField::frobenius(const RatFunc& a) const { return pow(a, p_); }

std::optional<RatFunc> FuncField::frobenius_preimage(const RatFunc& a) const {
  auto root = [&](const FpPoly& f) -> std::optional<FpPoly> {
    FpPoly r;
    for (size_t i = 0; i < f.size(); ++i) {
      if (f[i] == 0) continue;
      if (i % p_ != 0) return std::nullopt;
      size_t j = i / p_;
      if (r.size() <= j) r.resize(j + 1, 0);
      r[j] = f[i];
    }
    return r;
  };
  auto rn = root(a.num);
  if (!rn) return std::nullopt;
  auto rd = root(a.den);
  if (!rd) return std::nullopt;
  RatFunc b = normalize(std::move(*rn), std::move(*rd));
  if (!(frobenius(b) == a)) throw std::logic_error("frobenius_preimage: witness failed to verify");
  return b;
}

std::optional<int64_t> FuncField::valuation(const RatFunc& a, Place place) const {
  if (is_zero(a)) return std::nullopt;
  if (place == Place::Y) return fp_valuation_at_zero(a.num) - fp_valuation_at_zero(a.den);
  return fp_deg(a.den) - fp_deg(a.num);
}

std::optional<ValuationCertificate> FuncField::sth_power_obstruction(const RatFunc& a, int64_t s) const {
  if (s < 2) throw std::invalid_argument("sth_power_obstruction: s must be >= 2");
  if (is_zero(a)) throw std::domain_error("sth_power_obstruction: a must be nonzero");
  for (Place place : {Place::Y, Place::Infinity}) {
    int64_t v = *valuation(a, place);
    if (v % s != 0) return ValuationCertificate{place, v, s};
  }
  return std::nullopt;
}

RatFunc FuncField::derivative(const RatFunc& a) const {
  FpPoly num = fp_sub(fp_mul(fp_derivative(a.num, p_), a.den, p_),
                      fp_mul(a.num, fp_derivative(a.den, p_), p_), p_);
  return normalize(std::move(num), fp_mul(a.den, a.den, p_));
}

}  // namespace skewlab
