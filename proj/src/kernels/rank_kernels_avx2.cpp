// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <algorithm>
#include <bit>

#include "ustar/kernels/rank_kernels.hpp"

namespace ustar::kernels::avx2 {
namespace {

inline __m256i load(const std::uint32_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline unsigned lane_mask(__m256i v) {
  return static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(v)));
}

inline std::uint32_t hmin(__m256i v) {
  __m128i m = _mm_min_epu32(_mm256_castsi256_si128(v), _mm256_extracti128_si256(v, 1));
  m = _mm_min_epu32(m, _mm_shuffle_epi32(m, _MM_SHUFFLE(1, 0, 3, 2)));
  m = _mm_min_epu32(m, _mm_shuffle_epi32(m, _MM_SHUFFLE(2, 3, 0, 1)));
  return static_cast<std::uint32_t>(_mm_cvtsi128_si32(m));
}

}  // namespace

std::optional<Triple> first_triangle_violation(RankView view) {
  const std::size_t n = view.n;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t* ri = view.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const __m256i rij = _mm256_set1_epi32(static_cast<int>(ri[j]));
      const std::uint32_t* rj = view.row(j);
      // Padding lanes hold kPadRank, which no rank exceeds.
      for (std::size_t k = 0; k < n; k += kLaneWidth) {
        const __m256i m = _mm256_max_epu32(load(ri + k), load(rj + k));
        const unsigned hits = lane_mask(_mm256_cmpgt_epi32(rij, m));
        if (hits != 0)
          return Triple{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                        static_cast<std::uint32_t>(k + std::countr_zero(hits))};
      }
    }
  }
  return std::nullopt;
}

void offdiag_row_min(RankView view, std::span<std::uint32_t> out) {
  const __m256i lanes = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  const __m256i pad = _mm256_set1_epi32(static_cast<int>(kPadRank));
  for (std::size_t x = 0; x < view.n; ++x) {
    const std::uint32_t* rx = view.row(x);
    const __m256i self = _mm256_set1_epi32(static_cast<int>(x));
    __m256i best = pad;
    for (std::size_t k = 0; k < view.n; k += kLaneWidth) {
      const __m256i idx = _mm256_add_epi32(lanes, _mm256_set1_epi32(static_cast<int>(k)));
      const __m256i diag = _mm256_cmpeq_epi32(idx, self);
      const __m256i v = _mm256_blendv_epi8(load(rx + k), pad, diag);
      best = _mm256_min_epu32(best, v);
    }
    out[x] = hmin(best);
  }
}

void center_mask(RankView view, std::span<const std::uint32_t> row_min,
                 std::span<std::uint8_t> out) {
  const std::size_t n = view.n;
  const std::size_t full = n / kLaneWidth * kLaneWidth;
  for (std::size_t c = 0; c < n; ++c) {
    const std::uint32_t* rc = view.row(c);
    bool ok = true;
    for (std::size_t k = 0; k < full && ok; k += kLaneWidth) {
      unsigned bad = ~lane_mask(_mm256_cmpeq_epi32(load(rc + k), load(row_min.data() + k))) & 0xffu;
      if (c >= k && c < k + kLaneWidth) bad &= ~(1u << (c - k));
      ok = bad == 0;
    }
    for (std::size_t x = full; x < n && ok; ++x)
      if (x != c && rc[x] != row_min[x]) ok = false;
    out[c] = ok ? 1 : 0;
  }
}

}  // namespace ustar::kernels::avx2
