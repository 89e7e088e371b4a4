#pragma once

#include <cstdint>
#include <vector>

#include "fclab/gfp.hpp"
#include "fclab/ring.hpp"

namespace fclab {

/// Sparse matrix over GF(p), stored by rows; no explicit zeros.
class GfpMatrix {
 public:
  GfpMatrix() = default;
  GfpMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void add(std::size_t r, std::size_t c, std::uint64_t v, const PrimeField& F);
  void set_row(std::size_t r, SparseVec row) { data_[r] = std::move(row); }
  const SparseVec& row(std::size_t r) const { return data_[r]; }

  bool is_zero() const;

  /// Matrix product (this * other) with standard map composition.
  GfpMatrix multiply(const GfpMatrix& other, const PrimeField& F) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<SparseVec> data_;
};

struct RankProfile {
  std::size_t rank = 0;
  std::size_t nullity = 0;
};

/// Incremental row echelon form.  Pivot choice is the first nonzero entry of
/// each incoming row, rows in insertion order; fully deterministic.
class Echelon {
 public:
  Echelon(std::size_t cols, PrimeField F) : F_(F), pivot_of_col_(cols, NO_PIVOT) {}

  /// Reduce and install; returns true when the rank grew.
  bool insert(SparseVec row);

  /// Reduce a copy against the current pivots.
  SparseVec residual(SparseVec row) const;
  bool in_span(SparseVec row) const { return residual(std::move(row)).empty(); }

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return pivot_of_col_.size(); }

 private:
  static constexpr std::uint32_t NO_PIVOT = 0xffffffffu;
  PrimeField F_;
  std::vector<SparseVec> rows_;               // normalized pivot rows
  std::vector<std::uint32_t> pivot_of_col_;   // col -> index into rows_
  void axpy(SparseVec& row, std::uint64_t c, const SparseVec& pivot) const;
};

/// Fraction-free Gaussian elimination over GF(p); rank + nullity = cols.
RankProfile rank_profile(const GfpMatrix& M, const PrimeField& F);

/// Rank of the stacked rows of several matrices over a common column space.
std::size_t stacked_rank(const std::vector<const GfpMatrix*>& parts, std::size_t cols,
                         const PrimeField& F);

}  // namespace fclab
