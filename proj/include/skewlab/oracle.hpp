#pragma once

// Ground truth by exhaustion: right divisors of every degree are found by
// enumerating all monic candidates and dividing.  Nothing here uses the
// criteria it is meant to check.

#include <vector>

#include "skewlab/skew.hpp"

namespace skewlab {

struct Factorization {
  // skew product of the factors, left to right, equals f
  std::vector<SkewPolyFq> factors;
};

// All monic right divisors of f of degree d (1 <= d < deg f).  Enumeration
// is guarded: |K|^d candidate divisions must stay below 2^24.
std::vector<SkewPolyFq> oracle_right_factors(const FqTwist& tw, const SkewPolyFq& f, int d);

// No proper right divisor of any degree 1..deg f - 1.
bool oracle_is_irreducible(const FqTwist& tw, const SkewPolyFq& f);

// Peels a minimal-degree monic right factor (ties broken by the
// lexicographically least coefficient vector, low-to-high, elements ordered
// 0 < z^0 < z^1 < ...) and recurses on the quotient.
Factorization oracle_full_factorization(const FqTwist& tw, const SkewPolyFq& f);

}  // namespace skewlab
