#pragma once

// Exact arithmetic in F_{p^h}: the field is presented as F_p[x]/(modulus)
// with a verified-irreducible monic modulus and a cached primitive element z.
// Elements are packed radix-p into a single integer (coefficient of x^i is
// the i-th base-p digit), so an element is just a uint32_t plus the context
// it belongs to.  Contexts are immutable after construction and safe to
// share across threads.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skewlab/fppoly.hpp"

namespace skewlab {

using FqIdx = uint32_t;

// Coefficient-vector form of an element (length h, residues in [0,p)).
using FqElem = std::vector<int64_t>;

struct Subfield {
  int64_t q = 0;                      // p^gcd(r,h)
  std::vector<FqElem> basis;          // F_p-basis of the fixed field
  std::vector<FqIdx> elements;        // all q elements, ascending by index
};

class FqContext {
 public:
  // If no modulus is given, picks the lexicographically least monic
  // irreducible of degree h (coefficients compared low-to-high).
  FqContext(int64_t p, int h, std::optional<FpPoly> modulus = std::nullopt);

  int64_t p() const { return p_; }
  int h() const { return h_; }
  int64_t order() const { return q_; }  // p^h
  const FpPoly& modulus() const { return modulus_; }
  FqIdx z() const { return z_; }  // primitive element
  bool has_tables() const { return !log_.empty(); }

  FqIdx zero() const { return 0; }
  FqIdx one() const { return 1; }

  FqIdx add(FqIdx a, FqIdx b) const;
  FqIdx sub(FqIdx a, FqIdx b) const;
  FqIdx neg(FqIdx a) const;
  FqIdx mul(FqIdx a, FqIdx b) const;
  FqIdx inv(FqIdx a) const;  // throws std::domain_error on 0
  FqIdx pow(FqIdx a, int64_t e) const;

  // a^{p^r}; r is reduced mod h internally (sigma^h = id).
  FqIdx frob(FqIdx a, int64_t r) const;
  // Unique s in [0,h) with frob(frob(a,r), s) = a for all a.
  int frob_inverse_power(int64_t r) const;
  // Multiplicative order of sigma_r: h / gcd(r,h).
  int frob_order(int64_t r) const;

  // {a : a^{p^r} = a} with its F_p-basis; cardinality p^gcd(r,h).
  Subfield fixed_subfield(int64_t r) const;

  // prod_{l=0}^{n-1} sigma^l(b), n = order of sigma_r; lands in Fix(sigma).
  FqIdx norm_to_fixed(int64_t r, FqIdx b) const;

  // u in [0, p^h-1) with a = z^u; a must be nonzero.
  int64_t dlog(FqIdx a) const;

  // Packing between coefficient vectors and indices.
  FqIdx pack(const FqElem& coeffs) const;
  FqElem unpack(FqIdx a) const;
  FqIdx from_int(int64_t k) const;  // k mod p, embedded constant

  // Element of index i in the fixed enumeration 0,1,...,q-1.
  FqIdx element_at(int64_t i) const { return static_cast<FqIdx>(i); }

  // Multiplicative order of a nonzero element.
  int64_t element_order(FqIdx a) const;

  std::string to_string() const;  // "p^h/mod=[...]"

 private:
  void build_tables();
  FqIdx mul_direct(FqIdx a, FqIdx b) const;
  FqIdx inv_direct(FqIdx a) const;
  FpPoly to_poly(FqIdx a) const;
  FqIdx from_poly(const FpPoly& f) const;

  int64_t p_;
  int h_;
  int64_t q_;
  FpPoly modulus_;
  FqIdx z_ = 0;
  std::vector<FqIdx> antilog_;       // z^k, k in [0, q-1)
  std::vector<int64_t> log_;         // index -> exponent, log_[0] unused
  std::vector<FqIdx> add_table_;     // only when p != 2 and q small
  std::vector<int64_t> frob_mult_;   // p^r mod (q-1) for r in [0,h)
};

// Shared-ownership convenience used by sessions and twists.
using FqContextPtr = std::shared_ptr<const FqContext>;

// No d with 1 <= d <= h/2 divides... (trial division check used for the
// modulus); exposed for tests.
bool fp_is_irreducible(const FpPoly& f, int64_t p);

}  // namespace skewlab
