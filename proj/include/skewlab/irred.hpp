#pragma once

// Irreducibility criteria: exhaustive linear-divisor scans for degree 2 and
// 3, the quadratic-divisor equations for degree 4, the norm-image test for
// t^m - a with m prime, the finite-field census of t^m - a, and the
// valuation certificates over F_p(y).  Every returned divisor is re-checked
// by an actual division before it leaves the module.

#include <optional>
#include <string>
#include <vector>

#include "skewlab/ratfunc.hpp"
#include "skewlab/skew.hpp"

namespace skewlab {

enum class VerdictKind { Irreducible, Reducible, Unknown };

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::string criterion;
  std::optional<SkewPolyFq> right_divisor;  // monic, verified
  std::optional<SkewPolyFq> left_divisor;   // monic, verified
};

struct FuncVerdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::string criterion;
  std::optional<ValuationCertificate> certificate;
  std::optional<SkewPolyFunc> right_divisor;
  int64_t s = 0;  // the norm exponent behind the certificate
};

// f = t^2 - a1 t - a0: irreducible iff N_2(b) - a1 b - a0 never vanishes.
Verdict irreducible_deg2(const FqTwist& tw, const SkewPolyFq& f);

// Degree 3 needs both the right and the left linear scan.
Verdict irreducible_deg3(const FqTwist& tw, const SkewPolyFq& f);

// (t^2 - c t - d) |_r f for monic f of degree 4, delta = 0, via the two
// remainder equations; cross-checked against an actual division.
bool quadratic_right_divisor(const FqTwist& tw, const SkewPolyFq& f, FqIdx c, FqIdx d);

// Degree 4, delta = 0: no right linear, no left linear, no monic quadratic
// right divisor.
Verdict irreducible_deg4(const FqTwist& tw, const SkewPolyFq& f);

// t^4 - a, delta = 0: a right linear divisor forces a quadratic one, so
// only the (c,d) scan is needed.
Verdict t4_minus_a(const FqTwist& tw, FqIdx a);

// t^m - a with m prime; requires a primitive m-th root of unity in the
// fixed field (searched, not assumed) and is then equivalent to
// N_m(b) != a for all b.  Refuses (refused_error) when the hypothesis
// fails.
Verdict tm_minus_a_prime(const FqTwist& tw, int m, FqIdx a);

// t^3 - a, delta = 0, sigma an automorphism: right scan alone decides.
Verdict cor_t3_minus_a(const FqTwist& tw, FqIdx a);

struct CensusReport {
  int64_t p = 0;
  int h = 0;
  int r = 0;
  int m = 0;
  int64_t s = 0;      // 1 + p^r + ... + p^{r(m-1)}
  int64_t gcd_s = 0;  // gcd(s, p^h - 1)
  // u with t^m - z^u free of right linear divisors (checked two ways)
  std::vector<int64_t> no_right_root_u;
  bool exact = false;  // m in {2,3}, or m prime dividing |Fix(sigma)| - 1
  int64_t count_irreducible = -1;      // when exact
  std::vector<int64_t> irreducible_u;  // when exact
};

// delta = 0, r != 0.  The u-criterion set is cross-checked against a direct
// b-scan of the norm map; a mismatch is a hard failure.
CensusReport census(const FqTwist& tw, int m, int jobs = 1);

// Factors t^m - a by the oracle and checks all factor degrees are equal and
// divide m.  Requires a primitive m-th root of unity in the fixed field.
bool bourbaki_degree_check(const FqTwist& tw, int m, FqIdx a);

// Smallest-degree criterion that applies, for the CLI: picks by degree and
// shape, falling back to the oracle within its guard.
Verdict irreducible_auto(const FqTwist& tw, const SkewPolyFq& f);

// t^m - a over F_p(y) with sigma the Frobenius: certificate route.  A
// valuation obstruction rules out right linear divisors; for m = 2, or m
// prime with a primitive m-th root of unity in F_p, that settles
// irreducibility.
FuncVerdict func_tm_minus_a(const FuncTwist& tw, int m, const RatFunc& a);

// Auto-dispatch for function-field input; only the t^m - a family is
// supported.
FuncVerdict func_irreducible_auto(const FuncTwist& tw, const SkewPolyFunc& f);

}  // namespace skewlab
