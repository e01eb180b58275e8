#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ustar/kernels/rank_kernels.hpp"
#include "ustar/metric_space.hpp"

namespace ustar {

/// Distance matrix with each entry replaced by its index in the distance
/// spectrum (0 on the diagonal, 1..k off it). Two finite spaces are weakly
/// similar iff their rank matrices agree up to a simultaneous permutation of
/// rows and columns.
class RankMatrix {
 public:
  RankMatrix() = default;

  /// From an explicit square matrix of ranks. The ranks must already be
  /// contiguous (every value in 0..max occurs); this is checked.
  static RankMatrix from_ranks(const std::vector<std::vector<std::uint32_t>>& ranks);

  std::size_t size() const noexcept { return n_; }
  /// Number of distinct positive ranks (k); the spectrum has k + 1 entries.
  std::uint32_t max_rank() const noexcept { return max_rank_; }

  std::uint32_t operator()(std::size_t i, std::size_t j) const noexcept {
    return cells_[i * stride_ + j];
  }

  kernels::RankView view() const noexcept { return {cells_.data(), n_, stride_}; }

  std::vector<std::vector<std::uint32_t>> rows() const;

  /// Space with point names p1..pn and distances equal to the ranks.
  FiniteSemimetricSpace to_space() const;
  FiniteSemimetricSpace to_space(std::vector<std::string> names) const;

  friend bool operator==(const RankMatrix& a, const RankMatrix& b) {
    return a.n_ == b.n_ && a.max_rank_ == b.max_rank_ && a.cells_ == b.cells_;
  }

 private:
  friend RankMatrix rank_matrix(const FiniteSemimetricSpace&);
  RankMatrix(std::size_t n);

  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::uint32_t max_rank_ = 0;
  std::vector<std::uint32_t> cells_;
};

RankMatrix rank_matrix(const FiniteSemimetricSpace& space);

}  // namespace ustar
