#include <algorithm>

#include "ustar/kernels/rank_kernels.hpp"

namespace ustar::kernels::scalar {

std::optional<Triple> first_triangle_violation(RankView view) {
  const std::size_t n = view.n;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t* ri = view.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint32_t rij = ri[j];
      const std::uint32_t* rj = view.row(j);
      for (std::size_t k = 0; k < n; ++k)
        if (rij > std::max(ri[k], rj[k]))
          return Triple{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                        static_cast<std::uint32_t>(k)};
    }
  }
  return std::nullopt;
}

void offdiag_row_min(RankView view, std::span<std::uint32_t> out) {
  for (std::size_t x = 0; x < view.n; ++x) {
    std::uint32_t best = kPadRank;
    const std::uint32_t* rx = view.row(x);
    for (std::size_t y = 0; y < view.n; ++y)
      if (y != x) best = std::min(best, rx[y]);
    out[x] = best;
  }
}

void center_mask(RankView view, std::span<const std::uint32_t> row_min,
                 std::span<std::uint8_t> out) {
  for (std::size_t c = 0; c < view.n; ++c) {
    const std::uint32_t* rc = view.row(c);
    bool ok = true;
    for (std::size_t x = 0; x < view.n && ok; ++x)
      if (x != c && rc[x] != row_min[x]) ok = false;
    out[c] = ok ? 1 : 0;
  }
}

}  // namespace ustar::kernels::scalar
