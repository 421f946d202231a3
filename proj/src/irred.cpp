#include "skewlab/irred.hpp"

#include <algorithm>
#include <stdexcept>

#include "skewlab/oracle.hpp"
#include "skewlab/util.hpp"

namespace skewlab {

namespace {

SkewPolyFq linear(const FqTwist& tw, FqIdx b) {
  // t - b
  SkewPolyFq g;
  g.c = {tw.neg(b), tw.one()};
  return g;
}

SkewPolyFq quadratic(const FqTwist& tw, FqIdx c, FqIdx d) {
  // t^2 - c t - d
  SkewPolyFq g;
  g.c = {tw.neg(d), tw.neg(c), tw.one()};
  return g;
}

void check_right_divides(const FqTwist& tw, const SkewPolyFq& f, const SkewPolyFq& g) {
  if (!sp_is_zero(sp_right_divmod(tw, f, g).r))
    throw std::logic_error("irred: right witness failed verification");
}

void check_left_divides(const FqTwist& tw, const SkewPolyFq& f, const SkewPolyFq& g) {
  if (!sp_is_zero(sp_left_divmod(tw, f, g).r))
    throw std::logic_error("irred: left witness failed verification");
}

void require_monic_degree(const FqTwist& tw, const SkewPolyFq& f, int deg, const char* who) {
  if (sp_deg(f) != deg || !sp_is_monic(tw, f))
    throw std::invalid_argument(std::string(who) + ": expected monic polynomial of degree " +
                                std::to_string(deg));
}

// smallest element of multiplicative order m in Fix(sigma), if any
std::optional<FqIdx> primitive_root_in_fixed(const FqTwist& tw, int m) {
  const FqContext& F = tw.field();
  for (FqIdx a = 1; a < static_cast<FqIdx>(F.order()); ++a) {
    if (tw.sigma(a) != a) continue;
    if (F.element_order(a) == m) return a;
  }
  return std::nullopt;
}

}  // namespace

Verdict irreducible_deg2(const FqTwist& tw, const SkewPolyFq& f) {
  require_monic_degree(tw, f, 2, "irreducible_deg2");
  const int64_t q = tw.field().order();
  for (FqIdx b = 0; b < q; ++b) {
    if (tw.is_zero(right_linear_remainder(tw, f, b))) {
      Verdict v{VerdictKind::Reducible, "deg2"};
      v.right_divisor = linear(tw, b);
      check_right_divides(tw, f, *v.right_divisor);
      return v;
    }
  }
  return Verdict{VerdictKind::Irreducible, "deg2"};
}

Verdict irreducible_deg3(const FqTwist& tw, const SkewPolyFq& f) {
  require_monic_degree(tw, f, 3, "irreducible_deg3");
  const int64_t q = tw.field().order();
  for (FqIdx b = 0; b < q; ++b) {
    if (tw.is_zero(right_linear_remainder(tw, f, b))) {
      Verdict v{VerdictKind::Reducible, "deg3"};
      v.right_divisor = linear(tw, b);
      check_right_divides(tw, f, *v.right_divisor);
      return v;
    }
  }
  for (FqIdx b = 0; b < q; ++b) {
    if (tw.is_zero(left_linear_remainder(tw, f, b))) {
      Verdict v{VerdictKind::Reducible, "deg3"};
      v.left_divisor = linear(tw, b);
      check_left_divides(tw, f, *v.left_divisor);
      return v;
    }
  }
  return Verdict{VerdictKind::Irreducible, "deg3"};
}

bool quadratic_right_divisor(const FqTwist& tw, const SkewPolyFq& f, FqIdx c, FqIdx d) {
  require_monic_degree(tw, f, 4, "quadratic_right_divisor");
  if (!tw.delta_is_zero()) throw refused_error("quadratic_right_divisor requires delta = 0");
  const FqContext& F = tw.field();
  auto s1 = [&](FqIdx x) { return tw.sigma(x); };
  auto s2 = [&](FqIdx x) { return tw.sigma(tw.sigma(x)); };
  // coefficients in the form f = t^4 - a3 t^3 - a2 t^2 - a1 t - a0
  FqIdx a3 = tw.neg(f.c[3]), a2 = tw.neg(f.c[2]), a1 = tw.neg(f.c[1]), a0 = tw.neg(f.c[0]);
  // t-coefficient of the remainder
  FqIdx e1 = F.mul(F.mul(s2(c), s1(c)), c);
  e1 = F.add(e1, F.mul(s2(d), c));
  e1 = F.add(e1, F.mul(s2(c), s1(d)));
  e1 = F.sub(e1, F.mul(a3, F.add(s1(d), F.mul(s1(c), c))));
  e1 = F.sub(e1, F.mul(a2, c));
  e1 = F.sub(e1, a1);
  // constant coefficient of the remainder
  FqIdx e2 = F.mul(s2(d), d);
  e2 = F.add(e2, F.mul(F.mul(s2(c), s1(c)), d));
  e2 = F.sub(e2, F.mul(F.mul(a3, s1(c)), d));
  e2 = F.sub(e2, F.mul(a2, d));
  e2 = F.sub(e2, a0);
  bool divides = (e1 == 0) && (e2 == 0);
  bool direct = sp_is_zero(sp_right_divmod(tw, f, quadratic(tw, c, d)).r);
  if (divides != direct)
    throw std::logic_error("quadratic_right_divisor: remainder equations disagree with division");
  return divides;
}

Verdict irreducible_deg4(const FqTwist& tw, const SkewPolyFq& f) {
  require_monic_degree(tw, f, 4, "irreducible_deg4");
  if (!tw.delta_is_zero()) throw refused_error("irreducible_deg4 requires delta = 0");
  const int64_t q = tw.field().order();
  for (FqIdx b = 0; b < q; ++b) {
    if (tw.is_zero(right_linear_remainder(tw, f, b))) {
      Verdict v{VerdictKind::Reducible, "deg4"};
      v.right_divisor = linear(tw, b);
      check_right_divides(tw, f, *v.right_divisor);
      return v;
    }
  }
  for (FqIdx b = 0; b < q; ++b) {
    if (tw.is_zero(left_linear_remainder(tw, f, b))) {
      Verdict v{VerdictKind::Reducible, "deg4"};
      v.left_divisor = linear(tw, b);
      check_left_divides(tw, f, *v.left_divisor);
      return v;
    }
  }
  for (FqIdx c = 0; c < q; ++c)
    for (FqIdx d = 0; d < q; ++d)
      if (quadratic_right_divisor(tw, f, c, d)) {
        Verdict v{VerdictKind::Reducible, "deg4"};
        v.right_divisor = quadratic(tw, c, d);
        check_right_divides(tw, f, *v.right_divisor);
        return v;
      }
  return Verdict{VerdictKind::Irreducible, "deg4"};
}

Verdict t4_minus_a(const FqTwist& tw, FqIdx a) {
  if (!tw.delta_is_zero()) throw refused_error("t4_minus_a requires delta = 0");
  const FqContext& F = tw.field();
  const int64_t q = F.order();
  SkewPolyFq f;
  f.c.assign(5, 0);
  f.c[0] = tw.neg(a);
  f.c[4] = 1;
  auto s1 = [&](FqIdx x) { return tw.sigma(x); };
  auto s2 = [&](FqIdx x) { return tw.sigma(tw.sigma(x)); };
  for (FqIdx c = 0; c < q; ++c) {
    for (FqIdx d = 0; d < q; ++d) {
      FqIdx e1 = F.add(F.add(F.mul(F.mul(s2(c), s1(c)), c), F.mul(s2(d), c)), F.mul(s2(c), s1(d)));
      FqIdx e2 = F.add(F.mul(s2(d), d), F.mul(F.mul(s2(c), s1(c)), d));
      if (e1 == 0 && e2 == a) {
        Verdict v{VerdictKind::Reducible, "t4-a"};
        v.right_divisor = quadratic(tw, c, d);
        check_right_divides(tw, f, *v.right_divisor);
        return v;
      }
    }
  }
  return Verdict{VerdictKind::Irreducible, "t4-a"};
}

Verdict tm_minus_a_prime(const FqTwist& tw, int m, FqIdx a) {
  if (m < 2 || !is_prime_i64(m)) throw std::invalid_argument("tm_minus_a_prime: m must be prime");
  if (!primitive_root_in_fixed(tw, m))
    throw refused_error("tm_minus_a_prime: the fixed field of sigma has no primitive " +
                        std::to_string(m) + "th root of unity");
  const int64_t q = tw.field().order();
  SkewPolyFq f;
  f.c.assign(m + 1, 0);
  f.c[0] = tw.neg(a);
  f.c[m] = 1;
  for (FqIdx b = 0; b < q; ++b) {
    if (n_seq(tw, m, b) == a) {
      Verdict v{VerdictKind::Reducible, "tm-a-prime"};
      v.right_divisor = linear(tw, b);
      check_right_divides(tw, f, *v.right_divisor);
      return v;
    }
  }
  return Verdict{VerdictKind::Irreducible, "tm-a-prime"};
}

Verdict cor_t3_minus_a(const FqTwist& tw, FqIdx a) {
  if (!tw.delta_is_zero()) throw refused_error("cor_t3_minus_a requires delta = 0");
  const int64_t q = tw.field().order();
  SkewPolyFq f;
  f.c = {tw.neg(a), 0, 0, 1};
  for (FqIdx b = 0; b < q; ++b) {
    if (n_seq(tw, 3, b) == a) {
      Verdict v{VerdictKind::Reducible, "t3-a"};
      v.right_divisor = linear(tw, b);
      check_right_divides(tw, f, *v.right_divisor);
      return v;
    }
  }
  return Verdict{VerdictKind::Irreducible, "t3-a"};
}

CensusReport census(const FqTwist& tw, int m, int jobs) {
  if (m < 2) throw std::invalid_argument("census: m must be >= 2");
  if (tw.r() == 0) throw refused_error("census: sigma must be a nontrivial Frobenius power");
  if (!tw.delta_is_zero()) throw refused_error("census: delta must be zero");
  const FqContext& F = tw.field();
  CensusReport rep;
  rep.p = F.p();
  rep.h = F.h();
  rep.r = tw.r();
  rep.m = m;
  const int64_t n = F.order() - 1;

  rep.s = 0;
  for (int j = 0; j < m; ++j) {
    int64_t term = 1;
    for (int i = 0; i < tw.r() * j; ++i) {
      if (term > (int64_t(1) << 62) / rep.p) throw std::overflow_error("census: s overflows");
      term *= rep.p;
    }
    if (rep.s > (int64_t(1) << 62) - term) throw std::overflow_error("census: s overflows");
    rep.s += term;
  }
  rep.gcd_s = gcd_i64(rep.s, n);

  // u-criterion: t^m - z^u has a right root iff u is a multiple of gcd(s, n)
  std::vector<char> has_root_u(n, 0);
  for (int64_t u = 0; u < n; u += rep.gcd_s) has_root_u[u] = 1;

  // direct scan of the norm-like map b -> N_m(b)
  std::vector<char> has_root_scan(n, 0);
  parallel_for(
      n,
      [&](size_t i) {
        FqIdx b = F.pow(F.z(), static_cast<int64_t>(i));
        has_root_scan[F.dlog(n_seq(tw, m, b))] = 1;
      },
      jobs);
  if (has_root_scan != has_root_u) throw std::logic_error("census: u-criterion disagrees with b-scan");

  for (int64_t u = 0; u < n; ++u)
    if (!has_root_u[u]) rep.no_right_root_u.push_back(u);

  int64_t qfix = pow_checked_i64(rep.p, gcd_i64(tw.r(), rep.h));
  rep.exact = (m == 2 || m == 3) || (is_prime_i64(m) && (qfix - 1) % m == 0);
  if (rep.exact) {
    rep.irreducible_u = rep.no_right_root_u;
    rep.count_irreducible = static_cast<int64_t>(rep.irreducible_u.size());
  }
  return rep;
}

bool bourbaki_degree_check(const FqTwist& tw, int m, FqIdx a) {
  if (m < 2) throw std::invalid_argument("bourbaki_degree_check: m must be >= 2");
  if (!tw.delta_is_zero()) throw refused_error("bourbaki_degree_check requires delta = 0");
  if (!primitive_root_in_fixed(tw, m))
    throw refused_error("bourbaki_degree_check: the fixed field of sigma has no primitive " +
                        std::to_string(m) + "th root of unity");
  SkewPolyFq f;
  f.c.assign(m + 1, 0);
  f.c[0] = tw.neg(a);
  f.c[m] = 1;
  auto fac = oracle_full_factorization(tw, f);
  int d = sp_deg(fac.factors.front());
  for (const auto& g : fac.factors)
    if (sp_deg(g) != d) return false;
  return m % d == 0;
}

Verdict irreducible_auto(const FqTwist& tw, const SkewPolyFq& fin) {
  SkewPolyFq f = sp_make_monic(tw, fin);
  int n = sp_deg(f);
  if (n < 1) throw std::invalid_argument("irreducible: degree must be >= 1");
  if (n == 1) return Verdict{VerdictKind::Irreducible, "deg1"};
  bool tm_shape = true;
  for (int i = 1; i < n; ++i)
    if (!tw.is_zero(f.c[i])) tm_shape = false;
  if (n == 2) return irreducible_deg2(tw, f);
  if (n == 3) {
    if (tm_shape && tw.delta_is_zero()) return cor_t3_minus_a(tw, tw.neg(f.c[0]));
    return irreducible_deg3(tw, f);
  }
  if (n == 4 && tw.delta_is_zero()) {
    if (tm_shape) return t4_minus_a(tw, tw.neg(f.c[0]));
    return irreducible_deg4(tw, f);
  }
  if (tm_shape && is_prime_i64(n)) {
    try {
      return tm_minus_a_prime(tw, n, tw.neg(f.c[0]));
    } catch (const refused_error&) {
      // fall through to the oracle
    }
  }
  Verdict v;
  v.criterion = "oracle";
  if (oracle_is_irreducible(tw, f)) {
    v.kind = VerdictKind::Irreducible;
  } else {
    v.kind = VerdictKind::Reducible;
    for (int d = 1; d < n && !v.right_divisor; ++d) {
      auto divs = oracle_right_factors(tw, f, d);
      if (!divs.empty()) {
        v.right_divisor = divs.front();
        check_right_divides(tw, f, *v.right_divisor);
      }
    }
  }
  return v;
}

FuncVerdict func_tm_minus_a(const FuncTwist& tw, int m, const RatFunc& a) {
  if (m < 2) throw std::invalid_argument("func_tm_minus_a: m must be >= 2");
  if (tw.sigma_kind() != FuncSigmaKind::Frobenius || !tw.delta_is_zero())
    throw refused_error("t^m - a certificates need sigma = Frobenius and delta = 0 over F_p(y)");
  const FuncField& K = tw.field();
  FuncVerdict v;
  int64_t s = 0, term = 1;
  for (int j = 0; j < m; ++j) {
    if (s > (int64_t(1) << 62) - term) throw std::overflow_error("func_tm_minus_a: s overflows");
    s += term;
    term *= K.p();
  }
  v.s = s;
  if (K.is_zero(a)) {
    v.kind = VerdictKind::Reducible;
    v.criterion = "t-divides";
    SkewPolyFunc t;
    t.c = {K.zero(), K.one()};
    v.right_divisor = t;
    return v;
  }
  auto cert = K.sth_power_obstruction(a, s);
  if (!cert) {
    v.kind = VerdictKind::Unknown;
    v.criterion = "unknown";
    return v;
  }
  v.certificate = cert;
  bool complete = (m == 2) || (is_prime_i64(m) && (K.p() - 1) % m == 0);
  if (complete) {
    v.kind = VerdictKind::Irreducible;
    v.criterion = "valuation-certificate";
  } else {
    v.kind = VerdictKind::Unknown;
    v.criterion = "no-right-linear-divisor";
  }
  return v;
}

FuncVerdict func_irreducible_auto(const FuncTwist& tw, const SkewPolyFunc& f) {
  int n = sp_deg(f);
  if (n < 2) throw std::invalid_argument("irreducible: degree must be >= 2");
  if (!sp_is_monic(tw, f)) throw std::invalid_argument("irreducible: f must be monic over F_p(y)");
  for (int i = 1; i < n; ++i)
    if (!tw.is_zero(f.c[i]))
      throw refused_error("only the t^m - a family is supported over F_p(y)");
  return func_tm_minus_a(tw, n, tw.neg(f.c[0]));
}

}  // namespace skewlab
