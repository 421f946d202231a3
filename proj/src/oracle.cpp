#include "skewlab/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "skewlab/util.hpp"

namespace skewlab {

namespace {

constexpr int64_t kEnumGuard = int64_t(1) << 24;

// 0 first, then ascending powers of z.
int64_t z_rank(const FqContext& F, FqIdx a) { return a == 0 ? 0 : 1 + F.dlog(a); }

bool z_less(const FqContext& F, const SkewPolyFq& a, const SkewPolyFq& b) {
  size_t n = std::max(a.c.size(), b.c.size());
  for (size_t i = 0; i < n; ++i) {
    int64_t ra = i < a.c.size() ? z_rank(F, a.c[i]) : 0;
    int64_t rb = i < b.c.size() ? z_rank(F, b.c[i]) : 0;
    if (ra != rb) return ra < rb;
  }
  return false;
}

}  // namespace

std::vector<SkewPolyFq> oracle_right_factors(const FqTwist& tw, const SkewPolyFq& f, int d) {
  int n = sp_deg(f);
  if (d < 1 || d >= n) throw std::invalid_argument("oracle_right_factors: need 1 <= d < deg f");
  int64_t q = tw.field().order();
  int64_t count = 1;
  for (int i = 0; i < d; ++i) {
    count *= q;
    if (count > kEnumGuard) throw std::invalid_argument("oracle_right_factors: enumeration guard exceeded");
  }
  std::vector<SkewPolyFq> out;
  SkewPolyFq g;
  g.c.assign(d + 1, 0);
  g.c[d] = 1;
  for (int64_t k = 0; k < count; ++k) {
    int64_t kk = k;
    for (int i = 0; i < d; ++i) {
      g.c[i] = static_cast<FqIdx>(kk % q);
      kk /= q;
    }
    if (sp_is_zero(sp_right_divmod(tw, f, g).r)) out.push_back(g);
  }
  return out;
}

bool oracle_is_irreducible(const FqTwist& tw, const SkewPolyFq& f) {
  int n = sp_deg(f);
  if (n < 1) return false;
  if (n == 1) return true;
  // every tail degree is scanned, not just d <= n/2, so each hit is
  // independently auditable
  for (int d = 1; d < n; ++d)
    if (!oracle_right_factors(tw, f, d).empty()) return false;
  return true;
}

Factorization oracle_full_factorization(const FqTwist& tw, const SkewPolyFq& f) {
  if (sp_deg(f) < 1) throw std::invalid_argument("oracle_full_factorization: deg f must be >= 1");
  Factorization out;
  SkewPolyFq rest = sp_make_monic(tw, f);
  while (sp_deg(rest) > 0) {
    SkewPolyFq picked;
    bool found = false;
    for (int d = 1; d < sp_deg(rest) && !found; ++d) {
      auto divisors = oracle_right_factors(tw, rest, d);
      if (!divisors.empty()) {
        picked = *std::min_element(divisors.begin(), divisors.end(),
                                   [&](const SkewPolyFq& a, const SkewPolyFq& b) {
                                     return z_less(tw.field(), a, b);
                                   });
        found = true;
      }
    }
    if (!found) {
      out.factors.insert(out.factors.begin(), rest);
      break;
    }
    auto dm = sp_right_divmod(tw, rest, picked);
    if (!sp_is_zero(dm.r)) throw std::logic_error("oracle: picked factor does not divide");
    out.factors.insert(out.factors.begin(), picked);
    rest = dm.q;
  }
  // re-expansion invariant
  SkewPolyFq prod = sp_one(tw);
  for (const auto& g : out.factors) prod = sp_mul(tw, prod, g);
  if (!(prod == sp_make_monic(tw, f)))
    throw std::logic_error("oracle: factorization fails to re-expand");
  return out;
}

}  // namespace skewlab
