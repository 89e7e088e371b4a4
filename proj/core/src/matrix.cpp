#include "fclab/matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fclab {

void GfpMatrix::add(std::size_t r, std::size_t c, std::uint64_t v, const PrimeField& F) {
  v %= F.p();
  if (v == 0) return;
  SparseVec& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    it->second = F.add(it->second, v);
    if (it->second == 0) row.erase(it);
  } else {
    row.insert(it, {static_cast<std::uint32_t>(c), v});
  }
}

bool GfpMatrix::is_zero() const {
  for (const SparseVec& r : data_)
    if (!r.empty()) return false;
  return true;
}

GfpMatrix GfpMatrix::multiply(const GfpMatrix& other, const PrimeField& F) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix shape mismatch");
  GfpMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::map<std::uint32_t, std::uint64_t> acc;
    for (const auto& [k, a] : data_[r]) {
      for (const auto& [c, b] : other.data_[k]) {
        std::uint64_t& slot = acc[c];
        slot = F.add(slot, F.mul(a, b));
      }
    }
    SparseVec row;
    for (const auto& [c, v] : acc)
      if (v != 0) row.emplace_back(c, v);
    out.data_[r] = std::move(row);
  }
  return out;
}

void Echelon::axpy(SparseVec& row, std::uint64_t c, const SparseVec& pivot) const {
  // row -= c * pivot, both sorted by column.
  SparseVec out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, F_.neg(F_.mul(c, pivot[j].second)));
      ++j;
    } else {
      std::uint64_t v = F_.sub(row[i].second, F_.mul(c, pivot[j].second));
      if (v != 0) out.emplace_back(row[i].first, v);
      ++i;
      ++j;
    }
  }
  row = std::move(out);
}

SparseVec Echelon::residual(SparseVec row) const {
  while (!row.empty()) {
    std::uint32_t lead = row.front().first;
    std::uint32_t pr = pivot_of_col_[lead];
    if (pr == NO_PIVOT) return row;
    axpy(row, row.front().second, rows_[pr]);
  }
  return row;
}

bool Echelon::insert(SparseVec row) {
  row = residual(std::move(row));
  if (row.empty()) return false;
  // Normalize the leading entry to 1 and install.
  std::uint64_t inv = F_.inv(row.front().second);
  for (auto& [c, v] : row) v = F_.mul(v, inv);
  pivot_of_col_[row.front().first] = static_cast<std::uint32_t>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

RankProfile rank_profile(const GfpMatrix& M, const PrimeField& F) {
  Echelon e(M.cols(), F);
  for (std::size_t r = 0; r < M.rows(); ++r) e.insert(M.row(r));
  return {e.rank(), M.cols() - e.rank()};
}

std::size_t stacked_rank(const std::vector<const GfpMatrix*>& parts, std::size_t cols,
                         const PrimeField& F) {
  Echelon e(cols, F);
  for (const GfpMatrix* m : parts)
    for (std::size_t r = 0; r < m->rows(); ++r) e.insert(m->row(r));
  return e.rank();
}

}  // namespace fclab
