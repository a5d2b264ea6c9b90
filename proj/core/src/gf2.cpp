#include "topobound/gf2.hpp"

#include <algorithm>
#include <bit>
#include <iterator>

#include "topobound/error.hpp"

namespace topobound {

std::size_t SparseMatrixGF2::nonzeros() const {
  std::size_t total = 0;
  for (const auto& c : columns) total += c.size();
  return total;
}

RankStrategy choose_strategy(const SparseMatrixGF2& matrix) {
  if (matrix.rows <= 8192) return RankStrategy::dense;
  const double cells = static_cast<double>(matrix.rows) * static_cast<double>(matrix.columns.size());
  const double density = cells > 0 ? static_cast<double>(matrix.nonzeros()) / cells : 0.0;
  if (matrix.rows <= 32768 && density >= 0.05) return RankStrategy::dense;
  return RankStrategy::sparse;
}

namespace {

void check_column(const std::vector<std::uint32_t>& column, std::size_t rows) {
  for (std::size_t i = 0; i < column.size(); ++i) {
    if (column[i] >= rows || (i > 0 && column[i] <= column[i - 1])) {
      throw InvalidArgument("GF(2) column is not a sorted list of row indices");
    }
  }
}

ColumnReduction reduce_dense(const SparseMatrixGF2& m, const std::vector<char>* skip) {
  const std::size_t words = (m.rows + 63) / 64;
  std::vector<std::int64_t> owner(m.rows, -1);
  std::vector<std::vector<std::uint64_t>> basis;
  ColumnReduction out;
  std::vector<std::uint64_t> col(words);
  for (std::size_t j = 0; j < m.columns.size(); ++j) {
    if (skip && (*skip)[j]) continue;
    const auto& sparse = m.columns[j];
    check_column(sparse, m.rows);
    if (sparse.empty()) continue;
    std::fill(col.begin(), col.end(), 0);
    for (auto r : sparse) col[r / 64] |= std::uint64_t{1} << (r % 64);
    std::size_t top = sparse.back() / 64 + 1;
    while (true) {
      while (top > 0 && col[top - 1] == 0) --top;
      if (top == 0) break;
      const std::size_t low = (top - 1) * 64 + (63 - std::countl_zero(col[top - 1]));
      if (owner[low] < 0) {
        owner[low] = static_cast<std::int64_t>(basis.size());
        basis.emplace_back(col.begin(), col.begin() + top);
        out.pivot_rows.push_back(static_cast<std::uint32_t>(low));
        ++out.rank;
        break;
      }
      const auto& b = basis[owner[low]];
      for (std::size_t w = 0; w < b.size(); ++w) col[w] ^= b[w];
    }
  }
  return out;
}

ColumnReduction reduce_sparse(const SparseMatrixGF2& m, const std::vector<char>* skip) {
  std::vector<std::int64_t> owner(m.rows, -1);
  std::vector<std::vector<std::uint32_t>> basis;
  ColumnReduction out;
  std::vector<std::uint32_t> col;
  std::vector<std::uint32_t> sum;
  for (std::size_t j = 0; j < m.columns.size(); ++j) {
    if (skip && (*skip)[j]) continue;
    check_column(m.columns[j], m.rows);
    col = m.columns[j];
    while (!col.empty()) {
      const std::uint32_t low = col.back();
      if (owner[low] < 0) {
        owner[low] = static_cast<std::int64_t>(basis.size());
        basis.push_back(col);
        out.pivot_rows.push_back(low);
        ++out.rank;
        break;
      }
      const auto& b = basis[owner[low]];
      sum.clear();
      std::set_symmetric_difference(col.begin(), col.end(), b.begin(), b.end(),
                                    std::back_inserter(sum));
      col.swap(sum);
    }
  }
  return out;
}

}  // namespace

ColumnReduction reduce_columns(const SparseMatrixGF2& matrix, RankStrategy strategy,
                               const std::vector<char>* skip) {
  if (skip && skip->size() != matrix.columns.size()) {
    throw InvalidArgument("skip mask size does not match column count");
  }
  if (strategy == RankStrategy::automatic) strategy = choose_strategy(matrix);
  return strategy == RankStrategy::dense ? reduce_dense(matrix, skip) : reduce_sparse(matrix, skip);
}

std::size_t gf2_rank(const SparseMatrixGF2& matrix, RankStrategy strategy) {
  return reduce_columns(matrix, strategy).rank;
}

}  // namespace topobound
