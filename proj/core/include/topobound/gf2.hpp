#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace topobound {

/// Matrix over GF(2) stored by columns; each column lists its nonzero row
/// indices in increasing order.
struct SparseMatrixGF2 {
  std::size_t rows = 0;
  std::vector<std::vector<std::uint32_t>> columns;

  std::size_t nonzeros() const;
};

enum class RankStrategy { automatic, dense, sparse };

struct ColumnReduction {
  std::size_t rank = 0;
  /// Pivot (largest row index) of every nonzero reduced column.
  std::vector<std::uint32_t> pivot_rows;
};

/// Dense bit-packed elimination for small or dense matrices, sorted index
/// vectors otherwise.
RankStrategy choose_strategy(const SparseMatrixGF2& matrix);

/// Left-to-right column reduction. Columns flagged in `skip` are treated as
/// zero (the caller guarantees they reduce to zero anyway).
ColumnReduction reduce_columns(const SparseMatrixGF2& matrix,
                               RankStrategy strategy = RankStrategy::automatic,
                               const std::vector<char>* skip = nullptr);

std::size_t gf2_rank(const SparseMatrixGF2& matrix, RankStrategy strategy = RankStrategy::automatic);

}  // namespace topobound
