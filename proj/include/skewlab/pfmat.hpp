#pragma once

// Exact dense linear algebra over a prime field F_p.  Everything is
// row-oriented; reduced row echelon form is the canonical representative of
// a row space, so two subspaces are equal iff their canonical matrices are.

#include <cstdint>
#include <optional>
#include <vector>

namespace skewlab {

class PfMat {
 public:
  PfMat() = default;
  PfMat(int rows, int cols, int64_t p) : rows_(rows), cols_(cols), p_(p), a_(size_t(rows) * cols, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int64_t p() const { return p_; }

  int32_t& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  int32_t at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  std::vector<int32_t> row(int r) const;
  void set_row(int r, const std::vector<int32_t>& v);
  void append_row(const std::vector<int32_t>& v);

  PfMat mul(const PfMat& other) const;
  PfMat pow(int64_t e) const;  // square matrices
  PfMat add(const PfMat& other) const;
  static PfMat identity(int n, int64_t p);
  bool operator==(const PfMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  // In-place reduced row echelon form; returns rank.
  int rref();
  int rank() const;

  // Basis of {x : A x = 0}, rows are the basis vectors, in rref.
  PfMat nullspace() const;

  // One solution of A x = b, or nullopt if inconsistent.
  std::optional<std::vector<int32_t>> solve(const std::vector<int32_t>& b) const;

 private:
  int rows_ = 0, cols_ = 0;
  int64_t p_ = 2;
  std::vector<int32_t> a_;
};

// A subspace of F_p^n stored as a canonical (rref) basis matrix.
class Subspace {
 public:
  Subspace() = default;
  // Rows of gen span the subspace; reduced to canonical form.
  Subspace(PfMat gen);
  static Subspace zero(int n, int64_t p);
  static Subspace full(int n, int64_t p);

  int dim() const { return basis_.rows(); }
  int ambient() const { return basis_.cols(); }
  int64_t p() const { return basis_.p(); }
  const PfMat& basis() const { return basis_; }

  bool contains(const std::vector<int32_t>& v) const;
  bool contains(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

  // Number of elements p^dim; throws on overflow past 2^62.
  int64_t cardinality() const;

  // Enumerate all p^dim coordinate vectors of the subspace (span of the
  // basis rows); guarded against more than `limit` elements.
  std::vector<std::vector<int32_t>> enumerate(int64_t limit) const;

 private:
  PfMat basis_;
};

// Rank of a matrix over F_2 given as bit-rows (cols <= 64).  Fast path for
// the exhaustive sweeps.
int rank_f2(std::vector<uint64_t> rows, int cols);

}  // namespace skewlab
