#include "skewlab/petit.hpp"

#include <algorithm>
#include <stdexcept>

#include "skewlab/util.hpp"

namespace skewlab {

namespace {

constexpr int64_t kEnumGuard = int64_t(1) << 20;
constexpr int64_t kPairScanGuard = int64_t(1) << 24;

// binomial coefficients mod p (Pascal)
std::vector<std::vector<int64_t>> binom_mod(int n, int64_t p) {
  std::vector<std::vector<int64_t>> b(n + 1);
  for (int i = 0; i <= n; ++i) {
    b[i].assign(i + 1, 1);
    for (int j = 1; j < i; ++j) b[i][j] = (b[i - 1][j - 1] + b[i - 1][j]) % p;
  }
  return b;
}

}  // namespace

PetitAlgebra::PetitAlgebra(FqTwist tw, SkewPolyFq f) : tw_(std::move(tw)), f_(std::move(f)) {
  sp_trim(tw_, f_);
  if (sp_deg(f_) < 2) throw std::invalid_argument("PetitAlgebra: deg f must be >= 2");
  if (!sp_is_monic(tw_, f_)) f_ = sp_make_monic(tw_, f_);
  m_ = sp_deg(f_);
  h_ = tw_.field().h();
  dim_ = m_ * h_;
  size_ = 1;
  for (int i = 0; i < m_; ++i) {
    if (size_ > (int64_t(1) << 62) / tw_.field().order())
      throw std::invalid_argument("PetitAlgebra: algebra too large");
    size_ *= tw_.field().order();
  }
}

SkewPolyFq PetitAlgebra::element_at(int64_t idx) const {
  if (idx < 0 || idx >= size_) throw std::invalid_argument("element_at: index out of range");
  SkewPolyFq a;
  a.c.assign(m_, 0);
  int64_t q = tw_.field().order();
  for (int i = 0; i < m_; ++i) {
    a.c[i] = static_cast<FqIdx>(idx % q);
    idx /= q;
  }
  sp_trim(tw_, a);
  return a;
}

int64_t PetitAlgebra::index_of(const SkewPolyFq& a) const {
  if (sp_deg(a) >= m_) throw std::invalid_argument("index_of: degree out of range");
  int64_t q = tw_.field().order(), idx = 0;
  for (int i = m_ - 1; i >= 0; --i) {
    FqIdx c = i < static_cast<int>(a.c.size()) ? a.c[i] : 0;
    idx = idx * q + c;
  }
  return idx;
}

std::vector<int32_t> PetitAlgebra::coords(const SkewPolyFq& a) const {
  if (sp_deg(a) >= m_) throw std::invalid_argument("coords: degree out of range");
  std::vector<int32_t> v(dim_, 0);
  for (int i = 0; i < static_cast<int>(a.c.size()); ++i) {
    FqElem e = tw_.field().unpack(a.c[i]);
    for (int k = 0; k < h_; ++k) v[i * h_ + k] = static_cast<int32_t>(e[k]);
  }
  return v;
}

SkewPolyFq PetitAlgebra::from_coords(const std::vector<int32_t>& v) const {
  if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("from_coords: size mismatch");
  SkewPolyFq a;
  a.c.assign(m_, 0);
  for (int i = 0; i < m_; ++i) {
    FqElem e(h_);
    for (int k = 0; k < h_; ++k) e[k] = v[i * h_ + k];
    a.c[i] = tw_.field().pack(e);
  }
  sp_trim(tw_, a);
  return a;
}

SkewPolyFq PetitAlgebra::basis_element(int k) const {
  std::vector<int32_t> v(dim_, 0);
  v[k] = 1;
  return from_coords(v);
}

SkewPolyFq PetitAlgebra::pmul(const SkewPolyFq& g, const SkewPolyFq& h) const {
  if (sp_deg(g) >= m_ || sp_deg(h) >= m_) throw std::invalid_argument("pmul: degree out of range");
  return sf_mul(tw_, f_, g, h);
}

SkewPolyFq PetitAlgebra::associator(const SkewPolyFq& x, const SkewPolyFq& y,
                                    const SkewPolyFq& z) const {
  return sp_sub(tw_, pmul(pmul(x, y), z), pmul(x, pmul(y, z)));
}

Subspace PetitAlgebra::nucleus_uncached(NucleusKind which) const {
  // linear system over F_p: the associator is additive and prime-field
  // linear in each slot, so vanishing on all basis pairs suffices
  int64_t p = tw_.field().p();
  PfMat sys(0, dim_, p);
  std::vector<SkewPolyFq> basis(dim_);
  for (int k = 0; k < dim_; ++k) basis[k] = basis_element(k);
  for (int a = 0; a < dim_; ++a) {
    for (int b = 0; b < dim_; ++b) {
      // rows: coords of associator with x = e_k in the chosen slot
      std::vector<std::vector<int32_t>> cols(dim_);
      for (int k = 0; k < dim_; ++k) {
        SkewPolyFq assoc;
        switch (which) {
          case NucleusKind::Left: assoc = associator(basis[k], basis[a], basis[b]); break;
          case NucleusKind::Middle: assoc = associator(basis[a], basis[k], basis[b]); break;
          case NucleusKind::Right: assoc = associator(basis[a], basis[b], basis[k]); break;
        }
        cols[k] = coords(assoc);
      }
      for (int out = 0; out < dim_; ++out) {
        std::vector<int32_t> row(dim_);
        bool nonzero = false;
        for (int k = 0; k < dim_; ++k) {
          row[k] = cols[k][out];
          nonzero |= row[k] != 0;
        }
        if (nonzero) sys.append_row(row);
      }
    }
  }
  if (sys.rows() == 0) return Subspace::full(dim_, p);
  return Subspace(sys.nullspace());
}

Subspace PetitAlgebra::nucleus(NucleusKind which) const { return nucleus_uncached(which); }

Subspace PetitAlgebra::eigenring() const {
  Subspace nr = nucleus(NucleusKind::Right);
  // idealizer route: g with f*g in Rf, i.e. kernel of g -> (f*g mod_r f)
  int64_t p = tw_.field().p();
  PfMat mat(dim_, dim_, p);
  for (int k = 0; k < dim_; ++k) {
    auto img = coords(sp_right_divmod(tw_, sp_mul(tw_, f_, basis_element(k)), f_).r);
    for (int out = 0; out < dim_; ++out) mat.at(out, k) = img[out];
  }
  Subspace ideal(mat.nullspace());
  if (!(ideal == nr)) throw std::logic_error("eigenring: idealizer disagrees with right nucleus");
  return nr;
}

Subspace PetitAlgebra::commuter() const {
  int64_t p = tw_.field().p();
  PfMat sys(0, dim_, p);
  std::vector<SkewPolyFq> basis(dim_);
  for (int k = 0; k < dim_; ++k) basis[k] = basis_element(k);
  for (int b = 0; b < dim_; ++b) {
    std::vector<std::vector<int32_t>> cols(dim_);
    for (int k = 0; k < dim_; ++k)
      cols[k] = coords(sp_sub(tw_, pmul(basis[k], basis[b]), pmul(basis[b], basis[k])));
    for (int out = 0; out < dim_; ++out) {
      std::vector<int32_t> row(dim_);
      bool nonzero = false;
      for (int k = 0; k < dim_; ++k) {
        row[k] = cols[k][out];
        nonzero |= row[k] != 0;
      }
      if (nonzero) sys.append_row(row);
    }
  }
  if (sys.rows() == 0) return Subspace::full(dim_, p);
  return Subspace(sys.nullspace());
}

Subspace PetitAlgebra::center() const {
  return commuter()
      .intersect(nucleus(NucleusKind::Left))
      .intersect(nucleus(NucleusKind::Middle))
      .intersect(nucleus(NucleusKind::Right));
}

Subspace PetitAlgebra::embedded_field() const {
  PfMat gen(h_, dim_, tw_.field().p());
  for (int k = 0; k < h_; ++k) gen.at(k, k) = 1;
  return Subspace(std::move(gen));
}

Subspace PetitAlgebra::s0() const { return commuter().intersect(embedded_field()); }

Subspace PetitAlgebra::embed_subfield(const Subspace& b_in_k) const {
  if (b_in_k.ambient() != h_) throw std::invalid_argument("embed_subfield: ambient mismatch");
  PfMat gen(b_in_k.dim(), dim_, tw_.field().p());
  for (int r = 0; r < b_in_k.dim(); ++r)
    for (int k = 0; k < h_; ++k) gen.at(r, k) = b_in_k.basis().at(r, k);
  return Subspace(std::move(gen));
}

bool PetitAlgebra::t_in_right_nucleus() const { return sf_t_in_right_nucleus(tw_, f_); }

bool PetitAlgebra::is_right_semi_invariant() const { return is_right_semi_invariant_poly(tw_, f_); }

bool PetitAlgebra::is_right_invariant() const {
  return is_right_semi_invariant() && t_in_right_nucleus();
}

bool PetitAlgebra::is_associative() const {
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b)
      for (int c = 0; c < dim_; ++c)
        if (!sp_is_zero(associator(basis_element(a), basis_element(b), basis_element(c))))
          return false;
  return true;
}

bool PetitAlgebra::is_b_weak_semi_invariant(const Subspace& b_in_k) const {
  if (b_in_k.ambient() != h_) throw std::invalid_argument("B must live in K's coordinate space");
  const FqContext& F = tw_.field();
  auto pack_row = [&](const std::vector<int32_t>& row) {
    FqElem e(row.begin(), row.end());
    return F.pack(e);
  };
  // subring check: contains 1, closed under multiplication
  {
    FqElem one_v(h_, 0);
    one_v[0] = 1;
    std::vector<int32_t> one_row(h_, 0);
    one_row[0] = 1;
    if (!b_in_k.contains(one_row)) throw std::invalid_argument("B is not a subring: 1 not in B");
    for (int i = 0; i < b_in_k.dim(); ++i)
      for (int j = 0; j < b_in_k.dim(); ++j) {
        FqIdx prod = F.mul(pack_row(b_in_k.basis().row(i)), pack_row(b_in_k.basis().row(j)));
        FqElem e = F.unpack(prod);
        std::vector<int32_t> v(e.begin(), e.end());
        if (!b_in_k.contains(v))
          throw std::invalid_argument("B is not a subring: not closed under multiplication");
      }
  }
  bool ok = true;
  for (int i = 0; i < b_in_k.dim(); ++i) {
    FqIdx c = pack_row(b_in_k.basis().row(i));
    auto tab = delta_table(tw_, m_, c);
    FqIdx smc = tw_.sigma_pow(c, m_);
    bool eq1 = true;
    for (int j = 0; j < m_ && eq1; ++j) {
      FqIdx lhs = F.mul(smc, j < static_cast<int>(f_.c.size()) ? f_.c[j] : 0);
      FqIdx rhs = 0;
      for (int i2 = j; i2 <= m_; ++i2) {
        FqIdx fi = i2 < static_cast<int>(f_.c.size()) ? f_.c[i2] : 0;
        if (fi) rhs = F.add(rhs, F.mul(fi, tab[i2][j]));
      }
      if (lhs != rhs) eq1 = false;
    }
    if (tw_.delta_is_zero()) {
      // diagonal form: sigma^m(c) a_j = a_j sigma^j(c) for c in B
      bool diag = true;
      for (int j = 0; j < m_ && diag; ++j) {
        FqIdx fj = j < static_cast<int>(f_.c.size()) ? f_.c[j] : 0;
        if (fj == 0) continue;
        if (F.mul(smc, fj) != F.mul(fj, tw_.sigma_pow(c, j))) diag = false;
      }
      if (diag != eq1) throw std::logic_error("b_weak: diagonal form disagrees");
    }
    if (!eq1) ok = false;
  }
  return ok;
}

PfMat PetitAlgebra::mult_matrix(const SkewPolyFq& a, Side side) const {
  PfMat mat(dim_, dim_, tw_.field().p());
  for (int k = 0; k < dim_; ++k) {
    SkewPolyFq e = basis_element(k);
    auto img = coords(side == Side::Left ? pmul(a, e) : pmul(e, a));
    for (int out = 0; out < dim_; ++out) mat.at(out, k) = img[out];
  }
  return mat;
}

bool PetitAlgebra::is_right_unit(const SkewPolyFq& a, bool crosscheck) const {
  if (sp_is_zero(a)) throw std::domain_error("is_right_unit: a must be nonzero");
  bool unit = sp_deg(sp_gcrd(tw_, f_, a)) == 0;
  if (crosscheck) {
    bool bij = mult_matrix(a, Side::Right).rank() == dim_;
    if (bij != unit) throw std::logic_error("is_right_unit: gcrd and rank disagree");
  }
  return unit;
}

DivisionVerdicts PetitAlgebra::division_verdicts() const {
  if (size_ > kEnumGuard) throw std::invalid_argument("division_verdicts: algebra too large");
  DivisionVerdicts out;
  out.right_division = true;
  bool all_l_bijective = true;

  // L_a is additive and prime-field linear in a, so L_a is assembled from
  // the dim basis matrices
  const int64_t p = tw_.field().p();
  std::vector<PfMat> lbasis;
  std::vector<std::vector<uint64_t>> lbasis_bits;  // p = 2 fast path
  for (int k = 0; k < dim_; ++k) {
    PfMat mat = mult_matrix(basis_element(k), Side::Left);
    if (p == 2 && dim_ <= 64) {
      std::vector<uint64_t> rows(dim_, 0);
      for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c)
          if (mat.at(r, c)) rows[r] |= uint64_t(1) << c;
      lbasis_bits.push_back(std::move(rows));
    } else {
      lbasis.push_back(std::move(mat));
    }
  }

  for (int64_t idx = 1; idx < size_; ++idx) {
    SkewPolyFq a = element_at(idx);
    if (out.right_division && sp_deg(sp_gcrd(tw_, f_, a)) != 0) out.right_division = false;
    if (!all_l_bijective) {
      if (!out.right_division) break;  // both verdicts settled
      continue;
    }
    auto cv = coords(a);
    int rank;
    if (!lbasis_bits.empty()) {
      std::vector<uint64_t> rows(dim_, 0);
      for (int k = 0; k < dim_; ++k)
        if (cv[k])
          for (int r = 0; r < dim_; ++r) rows[r] ^= lbasis_bits[k][r];
      rank = rank_f2(std::move(rows), dim_);
    } else {
      PfMat acc(dim_, dim_, p);
      for (int k = 0; k < dim_; ++k) {
        if (cv[k] == 0) continue;
        for (int r = 0; r < dim_; ++r)
          for (int c = 0; c < dim_; ++c)
            acc.at(r, c) = static_cast<int32_t>((acc.at(r, c) + int64_t(cv[k]) * lbasis[k].at(r, c)) % p);
      }
      rank = acc.rank();
    }
    if (rank != dim_) all_l_bijective = false;
  }
  out.zero_divisor_free = all_l_bijective;
  out.division = out.right_division && all_l_bijective;
  return out;
}

std::optional<ZeroDivisorWitness> PetitAlgebra::zero_divisor_to_factor() const {
  auto make_witness = [&](const SkewPolyFq& u, const SkewPolyFq& v,
                          bool from_eig) -> std::optional<ZeroDivisorWitness> {
    for (const SkewPolyFq* cand : {&u, &v}) {
      SkewPolyFq g = sp_gcrd(tw_, f_, *cand);
      int d = sp_deg(g);
      if (d >= 1 && d < m_) {
        if (!sp_is_zero(sp_right_divmod(tw_, f_, g).r))
          throw std::logic_error("zero_divisor_to_factor: factor fails to divide");
        return ZeroDivisorWitness{u, v, g, from_eig};
      }
    }
    return std::nullopt;
  };

  // eigenring first: zero divisors there always hand over a factor
  Subspace eig = nucleus(NucleusKind::Right);
  if (eig.cardinality() <= kEnumGuard) {
    auto elems = eig.enumerate(kEnumGuard);
    for (const auto& uc : elems) {
      SkewPolyFq u = from_coords(uc);
      if (sp_is_zero(u)) continue;
      for (const auto& vc : elems) {
        SkewPolyFq v = from_coords(vc);
        if (sp_is_zero(v)) continue;
        if (sp_is_zero(pmul(u, v))) {
          auto w = make_witness(u, v, true);
          if (w) return w;
          throw std::logic_error("zero_divisor_to_factor: eigenring pair gave no factor");
        }
      }
    }
  }
  // full scan
  if (size_ * size_ <= kPairScanGuard) {
    for (int64_t i = 1; i < size_; ++i) {
      SkewPolyFq u = element_at(i);
      for (int64_t j = 1; j < size_; ++j) {
        SkewPolyFq v = element_at(j);
        if (sp_is_zero(pmul(u, v))) {
          auto w = make_witness(u, v, false);
          if (w) return w;
          throw std::logic_error("zero_divisor_to_factor: pair gave no factor");
        }
      }
    }
    return std::nullopt;
  }
  // large algebra: fall back to the rank route
  for (int64_t i = 1; i < size_; ++i) {
    SkewPolyFq u = element_at(i);
    PfMat l = mult_matrix(u, Side::Left);
    PfMat ker = l.nullspace();
    if (ker.rows() > 0) {
      SkewPolyFq v = from_coords(ker.row(0));
      auto w = make_witness(u, v, false);
      if (w) return w;
      throw std::logic_error("zero_divisor_to_factor: kernel pair gave no factor");
    }
  }
  return std::nullopt;
}

bool PetitAlgebra::lt_power_identity() const {
  SkewPolyFq t = sp_monomial(tw_, 1, tw_.one());
  PfMat lt = mult_matrix(t, Side::Left);
  for (int j = 0; j < m_; ++j) {
    if (!(mult_matrix(sp_monomial(tw_, j, tw_.one()), Side::Left) == lt.pow(j))) return false;
  }
  // L_h = sum h_i L_t^i, with h_i acting by left scaling
  {
    int64_t count = std::min<int64_t>(size_, 256);
    for (int64_t idx = 0; idx < count; ++idx) {
      SkewPolyFq hpoly = element_at(idx);
      PfMat sum(dim_, dim_, tw_.field().p());
      for (int i = 0; i < static_cast<int>(hpoly.c.size()); ++i) {
        if (hpoly.c[i] == 0) continue;
        PfMat la = mult_matrix(sp_const(tw_, hpoly.c[i]), Side::Left);
        sum = sum.add(la.mul(lt.pow(i)));
      }
      if (!(sum == mult_matrix(hpoly, Side::Left))) return false;
    }
  }
  if (tw_.delta_is_zero() && size_ * tw_.field().order() <= (int64_t(1) << 16)) {
    // pseudo-linearity: L_t(a o h) = sigma(a) o L_t(h)
    for (int64_t ai = 0; ai < tw_.field().order(); ++ai) {
      SkewPolyFq ap = sp_const(tw_, static_cast<FqIdx>(ai));
      SkewPolyFq sap = sp_const(tw_, tw_.sigma(static_cast<FqIdx>(ai)));
      for (int64_t hi = 0; hi < size_; ++hi) {
        SkewPolyFq hp = element_at(hi);
        SkewPolyFq lhs = pmul(t, pmul(ap, hp));
        SkewPolyFq rhs = pmul(sap, pmul(t, hp));
        if (!(lhs == rhs)) return false;
      }
    }
  }
  return true;
}

bool is_right_semi_invariant_poly(const FqTwist& tw, const SkewPolyFq& f) {
  if (!sp_is_monic(tw, f)) throw std::invalid_argument("semi-invariance test expects monic f");
  const FqContext& F = tw.field();
  int m = sp_deg(f);
  int h = F.h();
  bool ok = true;
  for (int k = 0; k < h && ok; ++k) {
    FqElem basis_vec(h, 0);
    basis_vec[k] = 1;
    FqIdx c = F.pack(basis_vec);
    auto tab = delta_table(tw, m, c);
    FqIdx smc = tw.sigma_pow(c, m);
    bool eq1 = true;
    for (int j = 0; j < m && eq1; ++j) {
      FqIdx lhs = F.mul(smc, j < static_cast<int>(f.c.size()) ? f.c[j] : 0);
      FqIdx rhs = 0;
      for (int i = j; i <= m; ++i) {
        FqIdx fi = i < static_cast<int>(f.c.size()) ? f.c[i] : 0;
        if (fi) rhs = F.add(rhs, F.mul(fi, tab[i][j]));
      }
      if (lhs != rhs) eq1 = false;
    }
    if (tw.delta_is_zero()) {
      bool diag = true;
      for (int j = 0; j < m && diag; ++j) {
        FqIdx fj = j < static_cast<int>(f.c.size()) ? f.c[j] : 0;
        if (fj == 0) continue;
        if (F.mul(smc, fj) != F.mul(fj, tw.sigma_pow(c, j))) diag = false;
      }
      if (diag != eq1) throw std::logic_error("semi-invariance: diagonal form disagrees");
    }
    if (tw.r() == 0) {
      // sigma = id: c a_j = sum binom(i,j) a_i delta^{i-j}(c)
      auto binom = binom_mod(m, F.p());
      bool bin = true;
      for (int j = 0; j < m && bin; ++j) {
        FqIdx lhs = F.mul(c, j < static_cast<int>(f.c.size()) ? f.c[j] : 0);
        FqIdx rhs = 0;
        FqIdx dpow = c;  // delta^{i-j}(c) built up incrementally per i
        for (int i = j; i <= m; ++i) {
          FqIdx fi = i < static_cast<int>(f.c.size()) ? f.c[i] : 0;
          if (fi) {
            FqIdx term = F.mul(fi, dpow);
            int64_t bc = binom[i][j];
            FqIdx scaled = 0;
            for (int64_t rep = 0; rep < bc; ++rep) scaled = F.add(scaled, term);
            rhs = F.add(rhs, scaled);
          }
          dpow = tw.delta(dpow);
        }
        if (lhs != rhs) bin = false;
      }
      if (bin != eq1) throw std::logic_error("semi-invariance: binomial form disagrees");
    }
    if (!eq1) ok = false;
  }
  return ok;
}

std::vector<SkewPolyFq> find_right_semi_invariant(const FqTwist& tw, int m) {
  if (m < 1) throw std::invalid_argument("find_right_semi_invariant: m must be >= 1");
  const FqContext& F = tw.field();
  int h = F.h();
  int64_t p = F.p();
  int unknowns = m * h;  // coefficients a_0..a_{m-1} over the prime field

  PfMat sys(0, unknowns, p);
  std::vector<int32_t> rhs_all;
  for (int k = 0; k < h; ++k) {
    FqElem bv(h, 0);
    bv[k] = 1;
    FqIdx c = F.pack(bv);
    auto tab = delta_table(tw, m, c);
    FqIdx smc = tw.sigma_pow(c, m);
    for (int j = 0; j < m; ++j) {
      // sigma^m(c) a_j - sum_{i=j}^{m-1} Delta_{i,j}(c) a_i = Delta_{m,j}(c)
      // as h scalar rows in the unknowns' coordinates
      std::vector<std::vector<int32_t>> colimg(unknowns);
      for (int i = 0; i < m; ++i) {
        for (int kk = 0; kk < h; ++kk) {
          FqElem ev(h, 0);
          ev[kk] = 1;
          FqIdx e = F.pack(ev);
          FqIdx val = 0;
          if (i == j) val = F.mul(smc, e);
          if (i >= j) val = F.sub(val, F.mul(tab[i][j], e));
          FqElem img = F.unpack(val);
          colimg[i * h + kk] = std::vector<int32_t>(img.begin(), img.end());
        }
      }
      FqElem rhs = F.unpack(tab[m][j]);
      for (int out = 0; out < h; ++out) {
        std::vector<int32_t> row(unknowns);
        for (int u = 0; u < unknowns; ++u) row[u] = colimg[u][out];
        sys.append_row(row);
        rhs_all.push_back(static_cast<int32_t>(rhs[out]));
      }
    }
  }

  std::vector<SkewPolyFq> found;
  auto particular = sys.solve(rhs_all);
  if (particular) {
    PfMat null = sys.nullspace();
    int64_t count = pow_checked_i64(p, null.rows());
    if (count > (int64_t(1) << 20))
      throw std::invalid_argument("find_right_semi_invariant: solution family too large");
    for (int64_t idx = 0; idx < count; ++idx) {
      std::vector<int32_t> x = *particular;
      int64_t ii = idx;
      for (int r = 0; r < null.rows(); ++r) {
        int64_t mult = ii % p;
        ii /= p;
        if (mult)
          for (int u = 0; u < unknowns; ++u)
            x[u] = static_cast<int32_t>((x[u] + mult * null.at(r, u)) % p);
      }
      SkewPolyFq f;
      f.c.assign(m + 1, 0);
      f.c[m] = 1;
      for (int i = 0; i < m; ++i) {
        FqElem e(h);
        for (int kk = 0; kk < h; ++kk) e[kk] = x[i * h + kk];
        f.c[i] = F.pack(e);
      }
      if (!is_right_semi_invariant_poly(tw, f))
        throw std::logic_error("find_right_semi_invariant: candidate failed verification");
      found.push_back(std::move(f));
    }
  }
  std::sort(found.begin(), found.end(), [](const SkewPolyFq& a, const SkewPolyFq& b) {
    return a.c < b.c;
  });

  // containment cross-check for delta = 0: every monic polynomial in t^k
  // (k the order of sigma) of matching degree is semi-invariant
  if (tw.delta_is_zero() && tw.r() != 0) {
    int k = tw.sigma_order();
    if (m % k == 0) {
      int n = m / k;
      int64_t fam = 1;
      bool small = true;
      for (int i = 0; i < n && small; ++i) {
        fam *= F.order();
        if (fam > 4096) small = false;
      }
      if (small) {
        for (int64_t idx = 0; idx < fam; ++idx) {
          SkewPolyFq g;
          g.c.assign(m + 1, 0);
          g.c[m] = 1;
          int64_t ii = idx;
          for (int i = 0; i < n; ++i) {
            g.c[i * k] = static_cast<FqIdx>(ii % F.order());
            ii /= F.order();
          }
          bool in = std::binary_search(found.begin(), found.end(), g,
                                       [](const SkewPolyFq& a, const SkewPolyFq& b) { return a.c < b.c; });
          if (!in) throw std::logic_error("find_right_semi_invariant: t^k family member missing");
        }
      }
    }
  }
  return found;
}

}  // namespace skewlab
