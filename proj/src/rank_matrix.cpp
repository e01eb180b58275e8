#include "ustar/rank_matrix.hpp"

#include <algorithm>

#include "ustar/error.hpp"

namespace ustar {
namespace {

std::size_t padded(std::size_t n) {
  return (n + kernels::kLaneWidth - 1) / kernels::kLaneWidth * kernels::kLaneWidth;
}

}  // namespace

RankMatrix::RankMatrix(std::size_t n)
    : n_(n), stride_(padded(n)), cells_(n * padded(n), kernels::kPadRank) {}

RankMatrix RankMatrix::from_ranks(const std::vector<std::vector<std::uint32_t>>& ranks) {
  const std::size_t n = ranks.size();
  RankMatrix out(n);
  std::vector<bool> used;
  for (std::size_t i = 0; i < n; ++i) {
    if (ranks[i].size() != n) throw Error(ErrorCode::ShapeMismatch, "rank matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint32_t r = ranks[i][j];
      if (r != ranks[j][i]) throw Error(ErrorCode::AsymmetricMatrix, "rank matrix");
      if ((i == j) != (r == 0))
        throw Error(i == j ? ErrorCode::NonzeroDiagonal : ErrorCode::ZeroOffDiagonal,
                    "rank matrix");
      if (r >= kernels::kPadRank) throw Error(ErrorCode::ShapeMismatch, "rank too large");
      if (r >= used.size()) used.resize(r + 1, false);
      used[r] = true;
      out.cells_[i * out.stride_ + j] = r;
      out.max_rank_ = std::max(out.max_rank_, r);
    }
  }
  if (std::find(used.begin(), used.end(), false) != used.end())
    throw Error(ErrorCode::ShapeMismatch, "ranks are not contiguous");
  return out;
}

std::vector<std::vector<std::uint32_t>> RankMatrix::rows() const {
  std::vector<std::vector<std::uint32_t>> out(n_, std::vector<std::uint32_t>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

FiniteSemimetricSpace RankMatrix::to_space() const { return to_space(default_point_names(n_)); }

FiniteSemimetricSpace RankMatrix::to_space(std::vector<std::string> names) const {
  std::vector<std::vector<Rational>> m(n_, std::vector<Rational>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m[i][j] = (*this)(i, j);
  return validate_semimetric(std::move(names), m);
}

RankMatrix rank_matrix(const FiniteSemimetricSpace& space) {
  const std::size_t n = space.size();
  const DistanceSpectrum spectrum = distance_spectrum(space);
  if (spectrum.size() >= kernels::kPadRank)
    throw Error(ErrorCode::ShapeMismatch, "too many distinct distances");
  RankMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto it =
          std::lower_bound(spectrum.values.begin(), spectrum.values.end(), space.d(i, j));
      out.cells_[i * out.stride_ + j] =
          static_cast<std::uint32_t>(it - spectrum.values.begin());
    }
  }
  out.max_rank_ = static_cast<std::uint32_t>(spectrum.size() - 1);
  return out;
}

}  // namespace ustar
