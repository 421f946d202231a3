#pragma once

// The nonassociative algebra S_f = K[t;sigma,delta]/K[t;sigma,delta]f for
// monic f of degree m >= 2: skew polynomials of degree < m with product
// g o h = gh mod_r f.  Subspaces (nuclei, commuter, center, S_0, eigenring)
// are computed by exact linear algebra over the prime field, justified by
// prime-field linearity of the associator in each slot.

#include <optional>

#include "skewlab/pfmat.hpp"
#include "skewlab/skew.hpp"

namespace skewlab {

enum class Side { Left, Right };
enum class NucleusKind { Left, Middle, Right };

struct DivisionVerdicts {
  bool right_division = false;     // every R_a bijective (via gcrd(f,a) = 1)
  bool division = false;           // right_division and every L_a bijective
  bool zero_divisor_free = false;  // every L_a injective
};

struct ZeroDivisorWitness {
  SkewPolyFq u, v;     // u o v = 0, both nonzero
  SkewPolyFq factor;   // gcrd-derived proper right factor of f
  bool from_eigenring = false;
};

class PetitAlgebra {
 public:
  // f must be monic of degree >= 2.  A non-monic f with invertible leading
  // coefficient is normalized first (S_f = S_{af}).
  PetitAlgebra(FqTwist tw, SkewPolyFq f);

  const FqTwist& twist() const { return tw_; }
  const SkewPolyFq& f() const { return f_; }
  const FqContext& field() const { return tw_.field(); }
  int m() const { return m_; }
  int dim() const { return dim_; }       // m*h over the prime field
  int64_t size() const { return size_; }  // q^m elements

  // Fixed enumeration of all elements (base-q digits of idx).
  SkewPolyFq element_at(int64_t idx) const;
  int64_t index_of(const SkewPolyFq& a) const;
  std::vector<int32_t> coords(const SkewPolyFq& a) const;
  SkewPolyFq from_coords(const std::vector<int32_t>& v) const;
  SkewPolyFq basis_element(int k) const;  // x^(k mod h) t^(k div h)

  SkewPolyFq pmul(const SkewPolyFq& g, const SkewPolyFq& h) const;
  SkewPolyFq associator(const SkewPolyFq& x, const SkewPolyFq& y, const SkewPolyFq& z) const;

  Subspace nucleus(NucleusKind which) const;
  // Right nucleus recomputed through the idealizer condition fg in Rf and
  // checked against nucleus(Right).
  Subspace eigenring() const;
  Subspace commuter() const;
  Subspace center() const;
  Subspace s0() const;
  Subspace embedded_field() const;  // K as the degree-0 slice
  // Lift a subspace of K (ambient h) into the algebra's coordinates.
  Subspace embed_subfield(const Subspace& b_in_k) const;

  bool t_in_right_nucleus() const;
  bool is_right_semi_invariant() const;
  bool is_right_invariant() const;
  bool is_associative() const;  // associator vanishes on all basis triples
  // B is a subspace of K (ambient h); must be a subring containing 1.
  bool is_b_weak_semi_invariant(const Subspace& b_in_k) const;

  PfMat mult_matrix(const SkewPolyFq& a, Side side) const;
  bool is_right_unit(const SkewPolyFq& a, bool crosscheck = true) const;
  DivisionVerdicts division_verdicts() const;
  std::optional<ZeroDivisorWitness> zero_divisor_to_factor() const;

  // L_{t^j} = L_t^j for j < m; for delta = 0 additionally the pseudo-
  // linearity L_t(a o h) = sigma(a) o L_t(h) and L_h = sum h_i L_t^i.
  bool lt_power_identity() const;

 private:
  Subspace nucleus_uncached(NucleusKind which) const;

  FqTwist tw_;
  SkewPolyFq f_;
  int m_, h_, dim_;
  int64_t size_;
};

// Semi-invariance of monic f without building the algebra:  f(t)c =
// sigma^m(c) f(t) for all c, checked coefficientwise on a prime-field basis
// of K.  For delta = 0 the diagonal form and for sigma = id the binomial
// form are recomputed as cross-checks.
bool is_right_semi_invariant_poly(const FqTwist& tw, const SkewPolyFq& f);

// All monic f of the given degree with K contained in Nuc_r(S_f), found by
// solving the semi-invariance equations as an affine system in the unknown
// coefficients.  For delta = 0 the t^(order of sigma)-family is re-derived
// as a containment cross-check.
std::vector<SkewPolyFq> find_right_semi_invariant(const FqTwist& tw, int m);

}  // namespace skewlab
