#pragma once

// Dense univariate polynomials over the prime field F_p, coefficient of y^i
// at index i, trailing zeros trimmed.  The zero polynomial is the empty
// vector and has degree -1.

#include <cstdint>
#include <vector>

namespace skewlab {

using FpPoly = std::vector<int64_t>;

void fp_trim(FpPoly& a);
int fp_deg(const FpPoly& a);  // -1 for zero
bool fp_is_zero(const FpPoly& a);
FpPoly fp_const(int64_t c, int64_t p);
FpPoly fp_monomial(int k, int64_t c, int64_t p);  // c*y^k

FpPoly fp_add(const FpPoly& a, const FpPoly& b, int64_t p);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b, int64_t p);
FpPoly fp_neg(const FpPoly& a, int64_t p);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b, int64_t p);
FpPoly fp_scale(const FpPoly& a, int64_t c, int64_t p);

// a = q*b + r with deg r < deg b; b must be nonzero.
void fp_divmod(const FpPoly& a, const FpPoly& b, int64_t p, FpPoly& q, FpPoly& r);
FpPoly fp_mod(const FpPoly& a, const FpPoly& b, int64_t p);

// Monic gcd; gcd(0,0) = 0.
FpPoly fp_gcd(FpPoly a, FpPoly b, int64_t p);
FpPoly fp_make_monic(const FpPoly& a, int64_t p);

FpPoly fp_derivative(const FpPoly& a, int64_t p);
FpPoly fp_pow(const FpPoly& a, int64_t e, int64_t p);

// Multiplicity of y = 0 as a root (largest k with y^k | a); -1 for a = 0.
int fp_valuation_at_zero(const FpPoly& a);

bool fp_eq(const FpPoly& a, const FpPoly& b);

}  // namespace skewlab
