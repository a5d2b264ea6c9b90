#include "topobound/homology.hpp"

#include <algorithm>
#include <sstream>

namespace topobound {

bool ChainComplexGF2::is_complex() const {
  for (std::size_t d = 1; d < boundaries.size(); ++d) {
    const auto& lower = boundaries[d - 1];
    for (const auto& column : boundaries[d].columns) {
      std::vector<std::uint32_t> image;
      for (auto r : column) {
        for (auto s : lower.columns[r]) image.push_back(s);
      }
      std::sort(image.begin(), image.end());
      for (std::size_t i = 0; i < image.size();) {
        std::size_t j = i;
        while (j < image.size() && image[j] == image[i]) ++j;
        if ((j - i) % 2) return false;
        i = j;
      }
    }
  }
  return true;
}

ChainComplexGF2 chain_complex(const SimplicialComplex& k) {
  ChainComplexGF2 out;
  const int dim = k.dimension();
  for (int d = -1; d <= dim; ++d) out.ranks.push_back(k.count(static_cast<std::size_t>(d + 1)));
  Face sub;
  for (int d = 0; d <= dim; ++d) {
    const std::size_t size = static_cast<std::size_t>(d) + 1;
    SparseMatrixGF2 m;
    m.rows = k.count(size - 1);
    m.columns.resize(k.count(size));
    for (std::size_t i = 0; i < k.count(size); ++i) {
      auto f = k.face(size, i);
      auto& column = m.columns[i];
      column.reserve(size);
      for (std::size_t drop = 0; drop < size; ++drop) {
        sub.clear();
        for (std::size_t j = 0; j < size; ++j) {
          if (j != drop) sub.push_back(f[j]);
        }
        column.push_back(static_cast<std::uint32_t>(*k.face_index(sub)));
      }
      std::sort(column.begin(), column.end());
    }
    out.boundaries.push_back(std::move(m));
  }
  return out;
}

std::size_t BettiProfile::at(int degree) const {
  if (degree == -1) return minus_one;
  if (degree < -1 || static_cast<std::size_t>(degree) >= betti.size()) return 0;
  return betti[static_cast<std::size_t>(degree)];
}

long BettiProfile::euler() const {
  long total = -static_cast<long>(minus_one);
  for (std::size_t d = 0; d < betti.size(); ++d) {
    total += (d % 2 == 0 ? 1 : -1) * static_cast<long>(betti[d]);
  }
  return total;
}

BettiProfile betti_gf2(const ChainComplexGF2& chains, RankStrategy strategy) {
  const int dim = chains.dimension();
  // rank_of[d] = rank of boundaries[d]; computed top-down so that pivots of
  // the higher boundary clear columns of the lower one.
  std::vector<std::size_t> rank_of(static_cast<std::size_t>(dim + 2), 0);
  std::vector<char> cleared;
  for (int d = dim; d >= 0; --d) {
    const auto& m = chains.boundaries[static_cast<std::size_t>(d)];
    std::vector<char> skip(m.columns.size(), 0);
    if (!cleared.empty()) skip.swap(cleared);
    auto reduction = reduce_columns(m, strategy, &skip);
    rank_of[static_cast<std::size_t>(d)] = reduction.rank;
    cleared.assign(m.rows, 0);
    for (auto r : reduction.pivot_rows) cleared[r] = 1;
  }
  BettiProfile out;
  const std::size_t r0 = dim >= 0 ? rank_of[0] : 0;
  out.minus_one = 1 - r0;
  for (int d = 0; d <= dim; ++d) {
    const std::size_t faces = chains.ranks[static_cast<std::size_t>(d + 1)];
    const std::size_t kernel = faces - rank_of[static_cast<std::size_t>(d)];
    out.betti.push_back(kernel - rank_of[static_cast<std::size_t>(d + 1)]);
  }
  return out;
}

BettiProfile betti_gf2(const SimplicialComplex& complex, RankStrategy strategy) {
  return betti_gf2(chain_complex(complex), strategy);
}

int acyclicity(const BettiProfile& betti) {
  if (betti.minus_one > 0) return -2;
  const int dim = static_cast<int>(betti.betti.size()) - 1;
  for (int d = 0; d <= dim; ++d) {
    if (betti.at(d) != 0) return d - 1;
  }
  return dim;
}

int acyclicity(const SimplicialComplex& complex) { return acyclicity(betti_gf2(complex)); }

std::string IndexInterval::to_string() const {
  std::ostringstream os;
  os << '[' << lower << ", ";
  if (upper) {
    os << *upper;
  } else {
    os << "inf";
  }
  os << ']';
  return os.str();
}

IndexInterval index_interval(const Z2Complex& z, std::size_t cap) {
  SimplicialComplex k = materialize(z.complex(), cap);
  IndexInterval out;
  out.lower = 1 + acyclicity(k);
  if (z.is_free()) out.upper = k.dimension();
  return out;
}

}  // namespace topobound
