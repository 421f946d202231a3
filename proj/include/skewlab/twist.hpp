#pragma once

// A twist bundles the coefficient field with the pair (sigma, delta) that
// defines K[t;sigma,delta]:  t*a = sigma(a)*t + delta(a).  Two concrete
// twists are provided: finite fields with sigma a Frobenius power and delta
// zero or inner, and F_p(y) with sigma the (non-surjective) Frobenius
// endomorphism or the identity and delta zero or the formal d/dy.

#include <memory>
#include <random>
#include <stdexcept>

#include "skewlab/fq.hpp"
#include "skewlab/ratfunc.hpp"
#include "skewlab/util.hpp"

namespace skewlab {

enum class FqDeltaKind { Zero, Inner };

class FqTwist {
 public:
  using Elem = FqIdx;

  // Inner(c) is delta(x) = c*x - sigma(x)*c; c = 0 or r = 0 makes it the
  // zero derivation and is normalized accordingly.
  FqTwist(FqContextPtr F, int64_t r, FqDeltaKind dk = FqDeltaKind::Zero, FqIdx c = 0)
      : F_(std::move(F)), dk_(dk), c_(c) {
    r_ = static_cast<int>(((r % F_->h()) + F_->h()) % F_->h());
    if (dk_ == FqDeltaKind::Inner && (c_ == 0 || r_ == 0)) {
      dk_ = FqDeltaKind::Zero;
      c_ = 0;
    }
    check_derivation_law();
  }

  const FqContext& field() const { return *F_; }
  const FqContextPtr& field_ptr() const { return F_; }
  int r() const { return r_; }
  FqDeltaKind delta_kind() const { return dk_; }
  FqIdx inner_c() const { return c_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  Elem add(Elem a, Elem b) const { return F_->add(a, b); }
  Elem sub(Elem a, Elem b) const { return F_->sub(a, b); }
  Elem neg(Elem a) const { return F_->neg(a); }
  Elem mul(Elem a, Elem b) const { return F_->mul(a, b); }
  Elem inv(Elem a) const { return F_->inv(a); }
  Elem pow(Elem a, int64_t e) const { return F_->pow(a, e); }

  Elem sigma(Elem a) const { return F_->frob(a, r_); }
  Elem sigma_pow(Elem a, int64_t k) const { return F_->frob(a, r_ * (k % F_->h())); }
  bool sigma_is_automorphism() const { return true; }
  Elem sigma_inv(Elem a) const { return F_->frob(a, F_->frob_inverse_power(r_)); }
  int sigma_order() const { return F_->frob_order(r_); }

  bool delta_is_zero() const { return dk_ == FqDeltaKind::Zero; }
  Elem delta(Elem a) const {
    if (dk_ == FqDeltaKind::Zero) return 0;
    return F_->sub(F_->mul(c_, a), F_->mul(sigma(a), c_));
  }

  bool in_s0(Elem a) const { return sigma(a) == a && delta(a) == 0; }

  std::string describe() const;

 private:
  void check_derivation_law() const {
    std::mt19937_64 rng(0x5ee3d);
    for (int i = 0; i < 32; ++i) {
      Elem a = static_cast<Elem>(rng() % F_->order());
      Elem b = static_cast<Elem>(rng() % F_->order());
      Elem lhs = delta(mul(a, b));
      Elem rhs = add(mul(sigma(a), delta(b)), mul(delta(a), b));
      if (lhs != rhs) throw std::logic_error("FqTwist: sigma-derivation law violated");
    }
  }

  FqContextPtr F_;
  int r_;
  FqDeltaKind dk_;
  FqIdx c_;
};

enum class FuncSigmaKind { Identity, Frobenius };
enum class FuncDeltaKind { Zero, Ddy };

class FuncTwist {
 public:
  using Elem = RatFunc;

  FuncTwist(FuncField K, FuncSigmaKind sk, FuncDeltaKind dk) : K_(K), sk_(sk), dk_(dk) {
    if (dk_ == FuncDeltaKind::Ddy && sk_ != FuncSigmaKind::Identity)
      throw std::invalid_argument("FuncTwist: d/dy requires sigma = id");
  }

  const FuncField& field() const { return K_; }
  FuncSigmaKind sigma_kind() const { return sk_; }
  FuncDeltaKind delta_kind() const { return dk_; }

  Elem zero() const { return K_.zero(); }
  Elem one() const { return K_.one(); }
  bool is_zero(const Elem& a) const { return K_.is_zero(a); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return K_.add(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return K_.sub(a, b); }
  Elem neg(const Elem& a) const { return K_.neg(a); }
  Elem mul(const Elem& a, const Elem& b) const { return K_.mul(a, b); }
  Elem inv(const Elem& a) const { return K_.inv(a); }
  Elem pow(const Elem& a, int64_t e) const { return K_.pow(a, e); }

  Elem sigma(const Elem& a) const { return sk_ == FuncSigmaKind::Identity ? a : K_.frobenius(a); }
  bool sigma_is_automorphism() const { return sk_ == FuncSigmaKind::Identity; }
  Elem sigma_inv(const Elem& a) const {
    if (sk_ == FuncSigmaKind::Identity) return a;
    throw refused_error("sigma (Frobenius on F_p(y)) is not surjective: no inverse");
  }

  bool delta_is_zero() const { return dk_ == FuncDeltaKind::Zero; }
  Elem delta(const Elem& a) const {
    return dk_ == FuncDeltaKind::Zero ? K_.zero() : K_.derivative(a);
  }

  bool in_s0(const Elem& a) const { return eq(sigma(a), a) && is_zero(delta(a)); }

  std::string describe() const;

 private:
  FuncField K_;
  FuncSigmaKind sk_;
  FuncDeltaKind dk_;
};

}  // namespace skewlab
