#include "skewlab/fq.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "skewlab/pfmat.hpp"
#include "skewlab/util.hpp"

namespace skewlab {

namespace {

constexpr int64_t kMaxOrder = (int64_t(1) << 31) - 1;  // packing limit
constexpr int64_t kTableMax = 1 << 16;
constexpr int64_t kAddTableMax = 1 << 12;
constexpr int64_t kDlogBruteMax = 1 << 20;

std::vector<int64_t> prime_factors(int64_t n) {
  std::vector<int64_t> fs;
  for (int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

}  // namespace

bool fp_is_irreducible(const FpPoly& f, int64_t p) {
  int n = fp_deg(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  // trial division against all monic polynomials of degree <= n/2
  for (int d = 1; d <= n / 2; ++d) {
    int64_t count = pow_checked_i64(p, d);
    FpPoly g(d + 1, 0);
    g[d] = 1;
    for (int64_t k = 0; k < count; ++k) {
      int64_t kk = k;
      for (int i = 0; i < d; ++i) {
        g[i] = kk % p;
        kk /= p;
      }
      if (fp_is_zero(fp_mod(f, g, p))) return false;
    }
  }
  return true;
}

FqContext::FqContext(int64_t p, int h, std::optional<FpPoly> modulus) : p_(p), h_(h) {
  if (!is_prime_i64(p)) throw std::invalid_argument("FqContext: p must be prime");
  if (h < 1) throw std::invalid_argument("FqContext: h must be >= 1");
  q_ = 1;
  for (int i = 0; i < h; ++i) {
    if (q_ > kMaxOrder / p) throw std::invalid_argument("FqContext: field order too large");
    q_ *= p;
  }

  if (modulus) {
    FpPoly m = *modulus;
    fp_trim(m);
    if (fp_deg(m) != h || m.back() != 1)
      throw std::invalid_argument("FqContext: modulus must be monic of degree h");
    for (auto c : m)
      if (c < 0 || c >= p) throw std::invalid_argument("FqContext: modulus coefficient out of range");
    if (!fp_is_irreducible(m, p)) throw std::invalid_argument("FqContext: modulus is reducible");
    modulus_ = std::move(m);
  } else {
    // lexicographically least monic irreducible, coefficients compared
    // low-to-high (c0 is the most significant position of the comparison)
    FpPoly cand(h + 1, 0);
    cand[h] = 1;
    bool found = false;
    int64_t total = q_;
    for (int64_t k = 0; k < total && !found; ++k) {
      int64_t kk = k;
      for (int i = h - 1; i >= 0; --i) {
        cand[i] = kk % p;
        kk /= p;
      }
      if (fp_is_irreducible(cand, p)) {
        modulus_ = cand;
        found = true;
      }
    }
    if (!found) throw std::logic_error("FqContext: no irreducible modulus found");
  }

  // primitive element: smallest index whose multiplicative order is q-1
  if (q_ == 2) {
    z_ = 1;
  } else {
    bool exhaustive = q_ <= kTableMax;
    std::vector<int64_t> factors = exhaustive ? std::vector<int64_t>{} : prime_factors(q_ - 1);
    for (FqIdx a = 1; a < (FqIdx)q_; ++a) {
      bool ok;
      if (exhaustive) {
        FqIdx x = a;
        int64_t ord = 1;
        while (x != 1) {
          x = mul_direct(x, a);
          ++ord;
          if (ord > q_ - 1) throw std::logic_error("FqContext: order overflow");
        }
        ok = (ord == q_ - 1);
      } else {
        ok = true;
        for (int64_t ell : factors) {
          FqIdx y = a;
          int64_t e = (q_ - 1) / ell;
          FqIdx r = 1;
          FqIdx base = a;
          while (e > 0) {
            if (e & 1) r = mul_direct(r, base);
            base = mul_direct(base, base);
            e >>= 1;
          }
          (void)y;
          if (r == 1) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        z_ = a;
        break;
      }
    }
    if (z_ == 0) throw std::logic_error("FqContext: no primitive element found");
  }

  if (q_ <= kTableMax) build_tables();

  frob_mult_.resize(h_);
  for (int r = 0; r < h_; ++r) frob_mult_[r] = pow_mod_i64(p_, r, q_ - 1 == 0 ? 1 : q_ - 1);
}

void FqContext::build_tables() {
  antilog_.resize(q_ - 1);
  log_.assign(q_, -1);
  FqIdx x = 1;
  for (int64_t k = 0; k < q_ - 1; ++k) {
    antilog_[k] = x;
    log_[x] = k;
    x = mul_direct(x, z_);
  }
  if (x != 1) throw std::logic_error("FqContext: primitive element order mismatch");
  if (p_ != 2 && q_ <= kAddTableMax) {
    add_table_.resize(q_ * q_);
    for (FqIdx a = 0; a < (FqIdx)q_; ++a) {
      FqElem ca = unpack(a);
      for (FqIdx b = 0; b < (FqIdx)q_; ++b) {
        FqElem cb = unpack(b);
        FqElem cc(h_);
        for (int i = 0; i < h_; ++i) cc[i] = (ca[i] + cb[i]) % p_;
        add_table_[(size_t)a * q_ + b] = pack(cc);
      }
    }
  }
}

FpPoly FqContext::to_poly(FqIdx a) const {
  FpPoly f;
  int64_t v = a;
  while (v > 0) {
    f.push_back(v % p_);
    v /= p_;
  }
  return f;
}

FqIdx FqContext::from_poly(const FpPoly& f) const {
  FqIdx a = 0;
  for (int i = fp_deg(f); i >= 0; --i) a = static_cast<FqIdx>(a * p_ + f[i]);
  return a;
}

FqIdx FqContext::mul_direct(FqIdx a, FqIdx b) const {
  if (a == 0 || b == 0) return 0;
  return from_poly(fp_mod(fp_mul(to_poly(a), to_poly(b), p_), modulus_, p_));
}

FqIdx FqContext::inv_direct(FqIdx a) const {
  if (a == 0) throw std::domain_error("Fq inv: zero is not invertible");
  // extended Euclid in F_p[x]
  FpPoly r0 = modulus_, r1 = to_poly(a);
  FpPoly t0 = {}, t1 = {1};
  while (!fp_is_zero(r1)) {
    FpPoly q, r;
    fp_divmod(r0, r1, p_, q, r);
    FpPoly t = fp_sub(t0, fp_mul(q, t1, p_), p_);
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  // r0 is a unit constant
  int64_t c = inv_mod_i64(r0.empty() ? 0 : r0[0], p_);
  return from_poly(fp_scale(t0, c, p_));
}

FqIdx FqContext::add(FqIdx a, FqIdx b) const {
  if (p_ == 2) return a ^ b;
  if (!add_table_.empty()) return add_table_[(size_t)a * q_ + b];
  FqIdx r = 0;
  int64_t mult = 1;
  for (int i = 0; i < h_; ++i) {
    int64_t da = (a / mult) % p_, db = (b / mult) % p_;
    r += static_cast<FqIdx>(((da + db) % p_) * mult);
    mult *= p_;
  }
  return r;
}

FqIdx FqContext::neg(FqIdx a) const {
  if (p_ == 2) return a;
  FqIdx r = 0;
  int64_t mult = 1;
  int64_t v = a;
  for (int i = 0; i < h_; ++i) {
    int64_t d = v % p_;
    v /= p_;
    r += static_cast<FqIdx>(((p_ - d) % p_) * mult);
    mult *= p_;
  }
  return r;
}

FqIdx FqContext::sub(FqIdx a, FqIdx b) const { return add(a, neg(b)); }

FqIdx FqContext::mul(FqIdx a, FqIdx b) const {
  if (a == 0 || b == 0) return 0;
  if (!log_.empty()) {
    int64_t e = log_[a] + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return antilog_[e];
  }
  return mul_direct(a, b);
}

FqIdx FqContext::inv(FqIdx a) const {
  if (a == 0) throw std::domain_error("Fq inv: zero is not invertible");
  if (!log_.empty()) {
    int64_t e = (q_ - 1 - log_[a]) % (q_ - 1);
    return antilog_[e];
  }
  return inv_direct(a);
}

FqIdx FqContext::pow(FqIdx a, int64_t e) const {
  if (e < 0) return pow(inv(a), -e);
  if (a == 0) return e == 0 ? 1 : 0;
  if (!log_.empty()) {
    int64_t u = (__int128)log_[a] * (e % (q_ - 1)) % (q_ - 1);
    return antilog_[u];
  }
  FqIdx r = 1, base = a;
  while (e > 0) {
    if (e & 1) r = mul_direct(r, base);
    base = mul_direct(base, base);
    e >>= 1;
  }
  return r;
}

FqIdx FqContext::frob(FqIdx a, int64_t r) const {
  r %= h_;
  if (r < 0) r += h_;
  if (r == 0 || a == 0) return a;
  if (!log_.empty()) {
    int64_t u = (__int128)log_[a] * frob_mult_[r] % (q_ - 1);
    return antilog_[u];
  }
  FqIdx x = a;
  for (int64_t i = 0; i < r; ++i) x = pow(x, p_);
  return x;
}

int FqContext::frob_inverse_power(int64_t r) const {
  r %= h_;
  if (r < 0) r += h_;
  return static_cast<int>((h_ - r) % h_);
}

int FqContext::frob_order(int64_t r) const {
  r %= h_;
  if (r < 0) r += h_;
  if (r == 0) return 1;
  return static_cast<int>(h_ / gcd_i64(r, h_));
}

Subfield FqContext::fixed_subfield(int64_t r) const {
  // kernel of (sigma_r - id) as an F_p-linear map on coefficient vectors
  PfMat mat(h_, h_, p_);
  for (int k = 0; k < h_; ++k) {
    FqIdx ek = pack(FqElem([&] {
      FqElem e(h_, 0);
      e[k] = 1;
      return e;
    }()));
    FqElem img = unpack(frob(ek, r));
    FqElem orig(h_, 0);
    orig[k] = 1;
    for (int i = 0; i < h_; ++i) mat.at(i, k) = static_cast<int32_t>(((img[i] - orig[i]) % p_ + p_) % p_);
  }
  PfMat ker = mat.nullspace();
  Subfield sf;
  sf.q = pow_checked_i64(p_, ker.rows());
  for (int i = 0; i < ker.rows(); ++i) {
    FqElem v(h_);
    for (int j = 0; j < h_; ++j) v[j] = ker.at(i, j);
    sf.basis.push_back(v);
  }
  if (q_ <= kDlogBruteMax) {
    for (FqIdx a = 0; a < (FqIdx)q_; ++a)
      if (frob(a, r) == a) sf.elements.push_back(a);
  }
  return sf;
}

FqIdx FqContext::norm_to_fixed(int64_t r, FqIdx b) const {
  int n = frob_order(r);
  FqIdx acc = 1;
  for (int l = 0; l < n; ++l) acc = mul(acc, frob(b, r * l));
  return acc;
}

int64_t FqContext::dlog(FqIdx a) const {
  if (a == 0) throw std::domain_error("dlog: zero has no discrete log");
  if (!log_.empty()) return log_[a];
  if (q_ <= kDlogBruteMax) {
    FqIdx x = 1;
    for (int64_t u = 0; u < q_ - 1; ++u) {
      if (x == a) return u;
      x = mul(x, z_);
    }
    throw std::logic_error("dlog: exhausted group without hit");
  }
  // baby-step giant-step
  int64_t n = q_ - 1;
  int64_t m = 1;
  while (m * m < n) ++m;
  std::unordered_map<FqIdx, int64_t> baby;
  FqIdx x = 1;
  for (int64_t j = 0; j < m; ++j) {
    baby.emplace(x, j);
    x = mul(x, z_);
  }
  FqIdx zm_inv = inv(pow(z_, m));
  FqIdx gamma = a;
  for (int64_t i = 0; i < m + 1; ++i) {
    auto it = baby.find(gamma);
    if (it != baby.end()) return (i * m + it->second) % n;
    gamma = mul(gamma, zm_inv);
  }
  throw std::logic_error("dlog: BSGS failed");
}

FqIdx FqContext::pack(const FqElem& coeffs) const {
  if (static_cast<int>(coeffs.size()) > h_) {
    for (size_t i = h_; i < coeffs.size(); ++i)
      if (coeffs[i] != 0) throw std::invalid_argument("Fq pack: coefficient vector too long");
  }
  FqIdx a = 0;
  for (int i = std::min<int>(h_, coeffs.size()) - 1; i >= 0; --i) {
    int64_t c = coeffs[i] % p_;
    if (c < 0) c += p_;
    a = static_cast<FqIdx>(a * p_ + c);
  }
  return a;
}

FqElem FqContext::unpack(FqIdx a) const {
  FqElem c(h_, 0);
  int64_t v = a;
  for (int i = 0; i < h_ && v > 0; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

FqIdx FqContext::from_int(int64_t k) const {
  k %= p_;
  if (k < 0) k += p_;
  return static_cast<FqIdx>(k);
}

int64_t FqContext::element_order(FqIdx a) const {
  if (a == 0) throw std::domain_error("element_order: zero");
  int64_t o = q_ - 1;
  for (int64_t ell : prime_factors(q_ - 1)) {
    while (o % ell == 0 && pow(a, o / ell) == 1) o /= ell;
  }
  return o;
}

std::string FqContext::to_string() const {
  std::string s = std::to_string(p_) + "^" + std::to_string(h_) + "/mod=[";
  for (size_t i = 0; i < modulus_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(modulus_[i]);
  }
  s += "]";
  return s;
}

}  // namespace skewlab
