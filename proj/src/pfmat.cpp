#include "skewlab/pfmat.hpp"

#include <stdexcept>

#include "skewlab/util.hpp"

namespace skewlab {

std::vector<int32_t> PfMat::row(int r) const {
  return std::vector<int32_t>(a_.begin() + size_t(r) * cols_, a_.begin() + size_t(r + 1) * cols_);
}

void PfMat::set_row(int r, const std::vector<int32_t>& v) {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("PfMat: row size mismatch");
  std::copy(v.begin(), v.end(), a_.begin() + size_t(r) * cols_);
}

void PfMat::append_row(const std::vector<int32_t>& v) {
  if (cols_ == 0) cols_ = static_cast<int>(v.size());
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("PfMat: row size mismatch");
  a_.insert(a_.end(), v.begin(), v.end());
  ++rows_;
}

PfMat PfMat::identity(int n, int64_t p) {
  PfMat m(n, n, p);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

PfMat PfMat::mul(const PfMat& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("PfMat::mul: shape mismatch");
  PfMat r(rows_, other.cols_, p_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      int64_t v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < other.cols_; ++j)
        r.at(i, j) = static_cast<int32_t>((r.at(i, j) + v * other.at(k, j)) % p_);
    }
  return r;
}

PfMat PfMat::add(const PfMat& other) const {
  if (cols_ != other.cols_ || rows_ != other.rows_) throw std::invalid_argument("PfMat::add: shape mismatch");
  PfMat r(rows_, cols_, p_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = static_cast<int32_t>((a_[i] + other.a_[i]) % p_);
  return r;
}

PfMat PfMat::pow(int64_t e) const {
  if (rows_ != cols_) throw std::invalid_argument("PfMat::pow: square matrices only");
  PfMat r = identity(rows_, p_);
  PfMat base = *this;
  while (e > 0) {
    if (e & 1) r = r.mul(base);
    base = base.mul(base);
    e >>= 1;
  }
  return r;
}

int PfMat::rref() {
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows_; ++r)
      if (at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = 0; c < cols_; ++c) std::swap(at(pivot, c), at(rank, c));
    int64_t piv_inv = inv_mod_i64(at(rank, col), p_);
    for (int c = 0; c < cols_; ++c) at(rank, c) = static_cast<int32_t>((at(rank, c) * piv_inv) % p_);
    for (int r = 0; r < rows_; ++r) {
      if (r == rank) continue;
      int64_t f = at(r, col);
      if (f == 0) continue;
      for (int c = 0; c < cols_; ++c)
        at(r, c) = static_cast<int32_t>(((at(r, c) - f * at(rank, c)) % p_ + p_) % p_);
    }
    ++rank;
  }
  return rank;
}

int PfMat::rank() const {
  PfMat copy = *this;
  return copy.rref();
}

PfMat PfMat::nullspace() const {
  PfMat red = *this;
  int rank = red.rref();
  std::vector<int> pivot_col(rank, -1);
  std::vector<bool> is_pivot(cols_, false);
  for (int r = 0; r < rank; ++r) {
    for (int c = 0; c < cols_; ++c)
      if (red.at(r, c) != 0) {
        pivot_col[r] = c;
        is_pivot[c] = true;
        break;
      }
  }
  PfMat basis(0, cols_, p_);
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<int32_t> v(cols_, 0);
    v[free] = 1;
    for (int r = 0; r < rank; ++r) {
      int64_t val = red.at(r, free);
      v[pivot_col[r]] = static_cast<int32_t>(((-val) % p_ + p_) % p_);
    }
    basis.append_row(v);
  }
  basis.rref();
  return basis;
}

std::optional<std::vector<int32_t>> PfMat::solve(const std::vector<int32_t>& b) const {
  if (static_cast<int>(b.size()) != rows_) throw std::invalid_argument("PfMat::solve: rhs size mismatch");
  PfMat aug(rows_, cols_ + 1, p_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_) = static_cast<int32_t>(((b[r] % p_) + p_) % p_);
  }
  int rank = aug.rref();
  std::vector<int32_t> x(cols_, 0);
  for (int r = 0; r < rank; ++r) {
    int lead = -1;
    for (int c = 0; c <= cols_; ++c)
      if (aug.at(r, c) != 0) {
        lead = c;
        break;
      }
    if (lead == cols_) return std::nullopt;  // 0 = nonzero
    if (lead >= 0) x[lead] = aug.at(r, cols_);
  }
  return x;
}

Subspace::Subspace(PfMat gen) : basis_(std::move(gen)) {
  int rank = basis_.rref();
  PfMat trimmed(rank, basis_.cols(), basis_.p());
  for (int r = 0; r < rank; ++r) trimmed.set_row(r, basis_.row(r));
  basis_ = std::move(trimmed);
}

Subspace Subspace::zero(int n, int64_t p) { return Subspace(PfMat(0, n, p)); }

Subspace Subspace::full(int n, int64_t p) { return Subspace(PfMat::identity(n, p)); }

bool Subspace::contains(const std::vector<int32_t>& v) const {
  PfMat aug = basis_;
  aug.append_row(v);
  return aug.rank() == basis_.rows();
}

bool Subspace::contains(const Subspace& other) const {
  for (int r = 0; r < other.basis_.rows(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Subspace Subspace::intersect(const Subspace& other) const {
  // (U cap V) = (U^perp + V^perp)^perp with the standard dot product
  PfMat up = basis_.nullspace();
  PfMat vp = other.basis_.nullspace();
  PfMat stacked(0, ambient(), p());
  for (int r = 0; r < up.rows(); ++r) stacked.append_row(up.row(r));
  for (int r = 0; r < vp.rows(); ++r) stacked.append_row(vp.row(r));
  if (stacked.rows() == 0) return full(ambient(), p());
  return Subspace(stacked.nullspace());
}

int64_t Subspace::cardinality() const {
  return pow_checked_i64(p(), dim());
}

std::vector<std::vector<int32_t>> Subspace::enumerate(int64_t limit) const {
  int64_t n = cardinality();
  if (n > limit) throw std::invalid_argument("Subspace::enumerate: too many elements");
  std::vector<std::vector<int32_t>> out;
  out.reserve(n);
  int d = dim();
  int64_t pp = p();
  for (int64_t k = 0; k < n; ++k) {
    std::vector<int32_t> v(ambient(), 0);
    int64_t kk = k;
    for (int i = 0; i < d; ++i) {
      int64_t c = kk % pp;
      kk /= pp;
      if (c != 0)
        for (int j = 0; j < ambient(); ++j)
          v[j] = static_cast<int32_t>((v[j] + c * basis_.at(i, j)) % pp);
    }
    out.push_back(std::move(v));
  }
  return out;
}

int rank_f2(std::vector<uint64_t> rows, int cols) {
  int rank = 0;
  for (int col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
    uint64_t bit = uint64_t(1) << col;
    int pivot = -1;
    for (size_t r = rank; r < rows.size(); ++r)
      if (rows[r] & bit) {
        pivot = static_cast<int>(r);
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[pivot], rows[rank]);
    for (size_t r = 0; r < rows.size(); ++r)
      if (static_cast<int>(r) != rank && (rows[r] & bit)) rows[r] ^= rows[rank];
    ++rank;
  }
  return rank;
}

}  // namespace skewlab
