#pragma once

// K[t;sigma,delta]: multiplication from t*a = sigma(a)*t + delta(a),
// two-sided Euclidean division, gcrd/lclm, the evaluation sequences N_i and
// M_i, linear-remainder formulas and dilation f(t) -> f(bt).  Everything is
// generic over the twist (finite field or F_p(y)); left-sided operations
// require sigma to be an automorphism and throw refused_error otherwise.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "skewlab/twist.hpp"

namespace skewlab {

// deg(0) is a sentinel smaller than every achievable degree.
constexpr int kDegZero = -(1 << 30);

template <class E>
struct SkewPoly {
  std::vector<E> c;  // c[i] multiplies t^i; trailing zeros trimmed
  bool operator==(const SkewPoly& o) const { return c == o.c; }
};

using SkewPolyFq = SkewPoly<FqIdx>;
using SkewPolyFunc = SkewPoly<RatFunc>;

template <class TW>
void sp_trim(const TW& tw, SkewPoly<typename TW::Elem>& f) {
  while (!f.c.empty() && tw.is_zero(f.c.back())) f.c.pop_back();
}

template <class E>
int sp_deg(const SkewPoly<E>& f) {
  return f.c.empty() ? kDegZero : static_cast<int>(f.c.size()) - 1;
}

template <class E>
bool sp_is_zero(const SkewPoly<E>& f) {
  return f.c.empty();
}

template <class TW>
SkewPoly<typename TW::Elem> sp_const(const TW& tw, typename TW::Elem a) {
  SkewPoly<typename TW::Elem> f;
  if (!tw.is_zero(a)) f.c.push_back(a);
  return f;
}

template <class TW>
SkewPoly<typename TW::Elem> sp_one(const TW& tw) {
  return sp_const(tw, tw.one());
}

template <class TW>
SkewPoly<typename TW::Elem> sp_monomial(const TW& tw, int k, typename TW::Elem a) {
  SkewPoly<typename TW::Elem> f;
  if (tw.is_zero(a)) return f;
  f.c.assign(k + 1, tw.zero());
  f.c[k] = a;
  return f;
}

template <class TW>
bool sp_is_monic(const TW& tw, const SkewPoly<typename TW::Elem>& f) {
  return !f.c.empty() && tw.eq(f.c.back(), tw.one());
}

template <class TW>
SkewPoly<typename TW::Elem> sp_add(const TW& tw, const SkewPoly<typename TW::Elem>& f,
                                   const SkewPoly<typename TW::Elem>& g) {
  SkewPoly<typename TW::Elem> r;
  size_t n = std::max(f.c.size(), g.c.size());
  r.c.assign(n, tw.zero());
  for (size_t i = 0; i < n; ++i) {
    if (i < f.c.size()) r.c[i] = tw.add(r.c[i], f.c[i]);
    if (i < g.c.size()) r.c[i] = tw.add(r.c[i], g.c[i]);
  }
  sp_trim(tw, r);
  return r;
}

template <class TW>
SkewPoly<typename TW::Elem> sp_neg(const TW& tw, const SkewPoly<typename TW::Elem>& f) {
  SkewPoly<typename TW::Elem> r = f;
  for (auto& x : r.c) x = tw.neg(x);
  return r;
}

template <class TW>
SkewPoly<typename TW::Elem> sp_sub(const TW& tw, const SkewPoly<typename TW::Elem>& f,
                                   const SkewPoly<typename TW::Elem>& g) {
  return sp_add(tw, f, sp_neg(tw, g));
}

// a * f for a constant a (multiplication from the left).
template <class TW>
SkewPoly<typename TW::Elem> sp_scale_left(const TW& tw, typename TW::Elem a,
                                          const SkewPoly<typename TW::Elem>& f) {
  SkewPoly<typename TW::Elem> r;
  if (tw.is_zero(a)) return r;
  r.c.reserve(f.c.size());
  for (auto& x : f.c) r.c.push_back(tw.mul(a, x));
  sp_trim(tw, r);
  return r;
}

// t * f = sum sigma(f_i) t^{i+1} + sum delta(f_i) t^i.
template <class TW>
SkewPoly<typename TW::Elem> sp_times_t(const TW& tw, const SkewPoly<typename TW::Elem>& f) {
  SkewPoly<typename TW::Elem> r;
  if (sp_is_zero(f)) return r;
  r.c.assign(f.c.size() + 1, tw.zero());
  for (size_t i = 0; i < f.c.size(); ++i) {
    r.c[i + 1] = tw.add(r.c[i + 1], tw.sigma(f.c[i]));
    if (!tw.delta_is_zero()) r.c[i] = tw.add(r.c[i], tw.delta(f.c[i]));
  }
  sp_trim(tw, r);
  return r;
}

template <class TW>
SkewPoly<typename TW::Elem> sp_mul(const TW& tw, const SkewPoly<typename TW::Elem>& f,
                                   const SkewPoly<typename TW::Elem>& g) {
  SkewPoly<typename TW::Elem> acc;
  if (sp_is_zero(f) || sp_is_zero(g)) return acc;
  SkewPoly<typename TW::Elem> shifted = g;  // t^i * g
  for (size_t i = 0; i < f.c.size(); ++i) {
    if (i > 0) shifted = sp_times_t(tw, shifted);
    if (!tw.is_zero(f.c[i])) acc = sp_add(tw, acc, sp_scale_left(tw, f.c[i], shifted));
  }
  return acc;
}

template <class TW>
struct SpDivMod {
  SkewPoly<typename TW::Elem> q, r;
};

// g = q*f + r with deg r < deg f.  f needs an invertible leading
// coefficient; over a field any nonzero f qualifies.
template <class TW>
SpDivMod<TW> sp_right_divmod(const TW& tw, const SkewPoly<typename TW::Elem>& g,
                             const SkewPoly<typename TW::Elem>& f) {
  if (sp_is_zero(f)) throw std::domain_error("right_divmod: division by zero");
  SpDivMod<TW> out;
  out.r = g;
  int df = sp_deg(f);
  if (sp_deg(g) >= df) out.q.c.assign(sp_deg(g) - df + 1, tw.zero());
  while (sp_deg(out.r) >= df) {
    int d = sp_deg(out.r) - df;
    // leading coefficient of (c t^d) * f is c * sigma^d(lc(f))
    auto lcf = f.c.back();
    auto s = lcf;
    for (int i = 0; i < d; ++i) s = tw.sigma(s);
    auto c = tw.mul(out.r.c.back(), tw.inv(s));
    out.q.c[d] = tw.add(out.q.c[d], c);
    out.r = sp_sub(tw, out.r, sp_mul(tw, sp_monomial(tw, d, c), f));
  }
  sp_trim(tw, out.q);
  return out;
}

// g = f*q + r with deg r < deg f; requires sigma an automorphism and f monic.
template <class TW>
SpDivMod<TW> sp_left_divmod(const TW& tw, const SkewPoly<typename TW::Elem>& g,
                            const SkewPoly<typename TW::Elem>& f) {
  if (sp_is_zero(f)) throw std::domain_error("left_divmod: division by zero");
  if (!tw.sigma_is_automorphism())
    throw refused_error("left division requires sigma to be an automorphism");
  if (!sp_is_monic(tw, f)) throw std::invalid_argument("left_divmod: divisor must be monic");
  SpDivMod<TW> out;
  out.r = g;
  int m = sp_deg(f);
  if (sp_deg(g) >= m) out.q.c.assign(sp_deg(g) - m + 1, tw.zero());
  while (sp_deg(out.r) >= m) {
    int d = sp_deg(out.r) - m;
    // leading coefficient of f * (c t^d) is sigma^m(c)
    auto c = out.r.c.back();
    for (int i = 0; i < m; ++i) c = tw.sigma_inv(c);
    out.q.c[d] = tw.add(out.q.c[d], c);
    out.r = sp_sub(tw, out.r, sp_mul(tw, f, sp_monomial(tw, d, c)));
  }
  sp_trim(tw, out.q);
  return out;
}

template <class TW>
SkewPoly<typename TW::Elem> sp_make_monic(const TW& tw, const SkewPoly<typename TW::Elem>& f) {
  if (sp_is_zero(f) || sp_is_monic(tw, f)) return f;
  return sp_scale_left(tw, tw.inv(f.c.back()), f);
}

// Greatest common right divisor, monic.  Right Euclidean algorithm.
template <class TW>
SkewPoly<typename TW::Elem> sp_gcrd(const TW& tw, SkewPoly<typename TW::Elem> g,
                                    SkewPoly<typename TW::Elem> h) {
  if (sp_is_zero(g) && sp_is_zero(h)) throw std::domain_error("gcrd(0,0) is undefined");
  while (!sp_is_zero(h)) {
    auto dm = sp_right_divmod(tw, g, h);
    g = std::move(h);
    h = std::move(dm.r);
  }
  return sp_make_monic(tw, g);
}

// Least common left multiple: the monic generator of Rg cap Rh, computed
// from the cofactors of the right Euclidean algorithm.  Satisfies
// deg g + deg h = deg lclm + deg gcrd.
template <class TW>
SkewPoly<typename TW::Elem> sp_lclm(const TW& tw, const SkewPoly<typename TW::Elem>& g,
                                    const SkewPoly<typename TW::Elem>& h) {
  if (sp_is_zero(g) || sp_is_zero(h)) throw std::domain_error("lclm: zero input");
  using P = SkewPoly<typename TW::Elem>;
  P r0 = g, r1 = h;
  P u0 = sp_one(tw), u1;  // r_i = u_i*g + v_i*h; only the u side is needed
  while (!sp_is_zero(r1)) {
    auto dm = sp_right_divmod(tw, r0, r1);
    P u2 = sp_sub(tw, u0, sp_mul(tw, dm.q, u1));
    r0 = std::move(r1);
    r1 = std::move(dm.r);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  // r1 = 0: u1*g + v1*h = 0, so u1*g is a common left multiple of g and h
  P l = sp_make_monic(tw, sp_mul(tw, u1, g));
  int expect = sp_deg(g) + sp_deg(h) - sp_deg(sp_gcrd(tw, g, h));
  if (sp_deg(l) != expect) throw std::logic_error("lclm: degree identity violated");
  return l;
}

// Full table of Delta_{i,j}(a) for 0 <= j <= i <= n, by the recursion
// Delta_{i,j} = delta o Delta_{i-1,j} + sigma o Delta_{i-1,j-1}.
template <class TW>
std::vector<std::vector<typename TW::Elem>> delta_table(const TW& tw, int n,
                                                        const typename TW::Elem& a) {
  std::vector<std::vector<typename TW::Elem>> tab(n + 1);
  tab[0] = {a};  // Delta_{0,0} = id
  for (int i = 1; i <= n; ++i) {
    tab[i].assign(i + 1, tw.zero());
    for (int j = 0; j <= i; ++j) {
      auto v = tw.zero();
      if (j <= i - 1) v = tw.add(v, tw.delta(tab[i - 1][j]));
      if (j >= 1) v = tw.add(v, tw.sigma(tab[i - 1][j - 1]));
      tab[i][j] = v;
    }
  }
  return tab;
}

template <class TW>
typename TW::Elem delta_nj(const TW& tw, int n, int j, const typename TW::Elem& a) {
  if (n < 0 || j < 0 || j > n) throw std::invalid_argument("delta_nj: need 0 <= j <= n");
  return delta_table(tw, n, a)[n][j];
}

// N_0(b) = 1, N_{i+1}(b) = sigma(N_i(b))*b + delta(N_i(b)).
// When delta = 0 this is the product sigma^{i-1}(b)...sigma(b)b, and the
// recursion is cross-checked against that closed form.
template <class TW>
typename TW::Elem n_seq(const TW& tw, int i, const typename TW::Elem& b) {
  if (i < 0) throw std::invalid_argument("n_seq: i must be >= 0");
  auto v = tw.one();
  for (int k = 0; k < i; ++k) v = tw.add(tw.mul(tw.sigma(v), b), tw.delta(v));
  if (tw.delta_is_zero() && i >= 1) {
    auto prod = b;
    auto s = b;
    for (int k = 1; k < i; ++k) {
      s = tw.sigma(s);
      prod = tw.mul(s, prod);
    }
    if (!tw.eq(v, prod)) throw std::logic_error("n_seq: recursion disagrees with closed form");
  }
  return v;
}

// M_0(b) = 1, M_{i+1}(b) = b*sigma^{-1}(M_i(b)) - delta(sigma^{-1}(M_i(b))).
template <class TW>
typename TW::Elem m_seq(const TW& tw, int i, const typename TW::Elem& b) {
  if (i < 0) throw std::invalid_argument("m_seq: i must be >= 0");
  if (!tw.sigma_is_automorphism())
    throw refused_error("m_seq requires sigma to be an automorphism");
  auto v = tw.one();
  for (int k = 0; k < i; ++k) {
    auto w = tw.sigma_inv(v);
    v = tw.sub(tw.mul(b, w), tw.delta(w));
  }
  return v;
}

// Remainder of right division of f by (t - b): sum_i f_i N_i(b).
template <class TW>
typename TW::Elem right_linear_remainder(const TW& tw, const SkewPoly<typename TW::Elem>& f,
                                         const typename TW::Elem& b) {
  auto acc = tw.zero();
  auto n = tw.one();  // N_i(b) as i runs upward
  for (size_t i = 0; i < f.c.size(); ++i) {
    if (i > 0) n = tw.add(tw.mul(tw.sigma(n), b), tw.delta(n));
    if (!tw.is_zero(f.c[i])) acc = tw.add(acc, tw.mul(f.c[i], n));
  }
  return acc;
}

// Coefficients r_i with f = sum t^i r_i (the right-coefficient form);
// requires sigma an automorphism.
template <class TW>
std::vector<typename TW::Elem> to_right_coefficients(const TW& tw,
                                                     const SkewPoly<typename TW::Elem>& f) {
  if (!tw.sigma_is_automorphism())
    throw refused_error("to_right_coefficients requires sigma to be an automorphism");
  int n = sp_deg(f);
  if (n < 0) return {};
  std::vector<typename TW::Elem> out(n + 1, tw.zero());
  SkewPoly<typename TW::Elem> rest = f;
  for (int i = n; i >= 0; --i) {
    if (sp_deg(rest) < i) continue;
    // leading coefficient of t^i c is sigma^i(c)
    auto c = rest.c[i];
    for (int k = 0; k < i; ++k) c = tw.sigma_inv(c);
    out[i] = c;
    rest = sp_sub(tw, rest, sp_mul(tw, sp_monomial(tw, i, tw.one()), sp_const(tw, c)));
  }
  if (!sp_is_zero(rest)) throw std::logic_error("to_right_coefficients: residue left over");
  return out;
}

// Remainder of left division of f by (t - b): sum_i M_i(b) r_i with r the
// right-coefficient form of f.
template <class TW>
typename TW::Elem left_linear_remainder(const TW& tw, const SkewPoly<typename TW::Elem>& f,
                                        const typename TW::Elem& b) {
  auto rc = to_right_coefficients(tw, f);
  auto acc = tw.zero();
  auto m = tw.one();
  for (size_t i = 0; i < rc.size(); ++i) {
    if (i > 0) {
      auto w = tw.sigma_inv(m);
      m = tw.sub(tw.mul(b, w), tw.delta(w));
    }
    if (!tw.is_zero(rc[i])) acc = tw.add(acc, tw.mul(m, rc[i]));
  }
  return acc;
}

// f(t) -> f(bt) for b with sigma(b) = b and delta(b) = 0, so (bt)^i = b^i t^i.
template <class TW>
SkewPoly<typename TW::Elem> sp_dilate(const TW& tw, const SkewPoly<typename TW::Elem>& f,
                                      const typename TW::Elem& b) {
  if (!tw.in_s0(b))
    throw std::invalid_argument("dilate: b must satisfy sigma(b) = b and delta(b) = 0");
  SkewPoly<typename TW::Elem> r;
  r.c.assign(f.c.size(), tw.zero());
  auto bp = tw.one();
  for (size_t i = 0; i < f.c.size(); ++i) {
    if (i > 0) bp = tw.mul(bp, b);
    r.c[i] = tw.mul(f.c[i], bp);
  }
  sp_trim(tw, r);
  return r;
}

// Product in S_f: g*h reduced mod_r f when the degree spills over.
template <class TW>
SkewPoly<typename TW::Elem> sf_mul(const TW& tw, const SkewPoly<typename TW::Elem>& f,
                                   const SkewPoly<typename TW::Elem>& g,
                                   const SkewPoly<typename TW::Elem>& h) {
  auto prod = sp_mul(tw, g, h);
  if (sp_deg(prod) < sp_deg(f)) return prod;
  return sp_right_divmod(tw, prod, f).r;
}

// ft in Rf, i.e. t lies in the right nucleus of S_f.  Symbolic: reduces f*t.
template <class TW>
bool sf_t_in_right_nucleus(const TW& tw, const SkewPoly<typename TW::Elem>& f) {
  auto ft = sp_mul(tw, f, sp_monomial(tw, 1, tw.one()));
  return sp_is_zero(sp_right_divmod(tw, ft, f).r);
}

// A witness g in F_p(y) with g * a0^{-1} not in the image of sigma, showing
// the constant-coefficient equation sigma(z_{m-1}) a0 = g has no solution
// and hence that left multiplication by t on S_f is not surjective.
std::optional<RatFunc> left_division_counterexample(const FuncTwist& tw, const SkewPolyFunc& f);

}  // namespace skewlab
