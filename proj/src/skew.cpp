#include "skewlab/skew.hpp"

namespace skewlab {

std::optional<RatFunc> left_division_counterexample(const FuncTwist& tw, const SkewPolyFunc& f) {
  if (tw.sigma_kind() != FuncSigmaKind::Frobenius)
    throw refused_error("left_division_counterexample: sigma must be the Frobenius endomorphism");
  if (!tw.delta_is_zero())
    throw std::invalid_argument("left_division_counterexample: delta must be zero");
  if (!sp_is_monic(tw, f)) throw std::invalid_argument("left_division_counterexample: f must be monic");
  if (sp_deg(f) < 2 || tw.is_zero(f.c[0]))
    throw std::invalid_argument("left_division_counterexample: need deg f >= 2 and a_0 != 0");
  const FuncField& K = tw.field();
  // f = t^m - sum a_i t^i has a_0 = -f.c[0]; any g with g a_0^{-1} outside
  // the image of sigma defeats the constant-term equation of L_t
  RatFunc a0 = K.neg(f.c[0]);
  RatFunc g = K.mul(K.y(), a0);
  RatFunc ratio = K.mul(g, K.inv(a0));
  if (K.frobenius_preimage(ratio)) throw std::logic_error("left_division_counterexample: witness failed");
  return g;
}

}  // namespace skewlab
