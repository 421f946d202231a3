#include "skewlab/fppoly.hpp"

#include <stdexcept>

#include "skewlab/util.hpp"

namespace skewlab {

void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int fp_deg(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

bool fp_is_zero(const FpPoly& a) { return a.empty(); }

FpPoly fp_const(int64_t c, int64_t p) {
  c %= p;
  if (c < 0) c += p;
  if (c == 0) return {};
  return {c};
}

FpPoly fp_monomial(int k, int64_t c, int64_t p) {
  c %= p;
  if (c < 0) c += p;
  if (c == 0) return {};
  FpPoly a(k + 1, 0);
  a[k] = c;
  return a;
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b, int64_t p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    int64_t v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    r[i] = v % p;
  }
  fp_trim(r);
  return r;
}

FpPoly fp_neg(const FpPoly& a, int64_t p) {
  FpPoly r(a);
  for (auto& v : r) v = (p - v) % p;
  return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, int64_t p) { return fp_add(a, fp_neg(b, p), p); }

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, int64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  fp_trim(r);
  return r;
}

FpPoly fp_scale(const FpPoly& a, int64_t c, int64_t p) {
  c %= p;
  if (c < 0) c += p;
  if (c == 0) return {};
  FpPoly r(a);
  for (auto& v : r) v = (v * c) % p;
  return r;
}

void fp_divmod(const FpPoly& a, const FpPoly& b, int64_t p, FpPoly& q, FpPoly& r) {
  if (b.empty()) throw std::domain_error("fp_divmod: division by zero polynomial");
  r = a;
  q.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, 0);
  int64_t lead_inv = inv_mod_i64(b.back(), p);
  while (r.size() >= b.size() && !r.empty()) {
    size_t shift = r.size() - b.size();
    int64_t c = (r.back() * lead_inv) % p;
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) {
      r[shift + i] = ((r[shift + i] - c * b[i]) % p + p) % p;
    }
    fp_trim(r);
  }
  fp_trim(q);
}

FpPoly fp_mod(const FpPoly& a, const FpPoly& b, int64_t p) {
  FpPoly q, r;
  fp_divmod(a, b, p, q, r);
  return r;
}

FpPoly fp_make_monic(const FpPoly& a, int64_t p) {
  if (a.empty()) return a;
  return fp_scale(a, inv_mod_i64(a.back(), p), p);
}

FpPoly fp_gcd(FpPoly a, FpPoly b, int64_t p) {
  while (!b.empty()) {
    FpPoly r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_make_monic(a, p);
}

FpPoly fp_derivative(const FpPoly& a, int64_t p) {
  if (a.size() <= 1) return {};
  FpPoly r(a.size() - 1, 0);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = (a[i] * (int64_t)(i % p)) % p;
  fp_trim(r);
  return r;
}

FpPoly fp_pow(const FpPoly& a, int64_t e, int64_t p) {
  FpPoly r = fp_const(1, p);
  FpPoly base = a;
  while (e > 0) {
    if (e & 1) r = fp_mul(r, base, p);
    base = fp_mul(base, base, p);
    e >>= 1;
  }
  return r;
}

int fp_valuation_at_zero(const FpPoly& a) {
  if (a.empty()) return -1;
  int k = 0;
  while (a[k] == 0) ++k;
  return k;
}

bool fp_eq(const FpPoly& a, const FpPoly& b) { return a == b; }

}  // namespace skewlab
