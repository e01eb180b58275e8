#include <gtest/gtest.h>

#include <vector>

#include "support/generators.hpp"
#include "ustar/error.hpp"
#include "ustar/kernels/rank_kernels.hpp"
#include "ustar/metric_space.hpp"
#include "ustar/rank_matrix.hpp"

using namespace ustar;
using namespace ustar::testing;
namespace k = ustar::kernels;

namespace {

// Random symmetric rank matrix laid out with padding, independent of RankMatrix.
struct Padded {
  std::size_t n, stride;
  std::vector<std::uint32_t> cells;
  k::RankView view() const { return {cells.data(), n, stride}; }
};

Padded random_ranks(Rng& rng, std::size_t n, std::uint32_t max_rank) {
  Padded p{n, (n + k::kLaneWidth - 1) / k::kLaneWidth * k::kLaneWidth, {}};
  if (p.stride == 0) p.stride = k::kLaneWidth;
  p.cells.assign(n * p.stride, k::kPadRank);
  for (std::size_t i = 0; i < n; ++i) {
    p.cells[i * p.stride + i] = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      p.cells[i * p.stride + j] = p.cells[j * p.stride + i] =
          1 + static_cast<std::uint32_t>(rng() % max_rank);
  }
  return p;
}

}  // namespace

TEST(Kernels, ScalarMatchesAvx2OnRandomMatrices) {
#if USTAR_HAVE_AVX2_KERNELS
  if (!k::backend_available(k::Backend::Avx2)) GTEST_SKIP() << "CPU lacks AVX2";
  Rng rng(21);
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = 1 + rng() % 37;
    const auto p = random_ranks(rng, n, 1 + rng() % 6);
    EXPECT_EQ(k::scalar::first_triangle_violation(p.view()),
              k::avx2::first_triangle_violation(p.view()))
        << "n = " << n;

    std::vector<std::uint32_t> min_s(n), min_v(n);
    k::scalar::offdiag_row_min(p.view(), min_s);
    k::avx2::offdiag_row_min(p.view(), min_v);
    EXPECT_EQ(min_s, min_v);

    std::vector<std::uint8_t> mask_s(n), mask_v(n);
    k::scalar::center_mask(p.view(), min_s, mask_s);
    k::avx2::center_mask(p.view(), min_s, mask_v);
    EXPECT_EQ(mask_s, mask_v);
  }
#else
  GTEST_SKIP() << "no vector kernels on this architecture";
#endif
}

TEST(Kernels, ScalarTriangleScanMatchesDefinition) {
  Rng rng(22);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    const auto p = random_ranks(rng, n, 3);
    std::optional<k::Triple> expected;
    for (std::uint32_t i = 0; i < n && !expected; ++i)
      for (std::uint32_t j = 0; j < n && !expected; ++j)
        for (std::uint32_t l = 0; l < n && !expected; ++l)
          if (p.view().at(i, j) > std::max(p.view().at(i, l), p.view().at(l, j)))
            expected = k::Triple{i, j, l};
    EXPECT_EQ(k::scalar::first_triangle_violation(p.view()), expected);
  }
}

TEST(Kernels, BackendSwitchLeavesResultsUnchanged) {
  Rng rng(23);
  std::vector<FiniteSemimetricSpace> pool;
  for (int i = 0; i < 200; ++i)
    pool.push_back(rng() % 2 ? random_ultrametric(rng, 1 + rng() % 20)
                             : random_semimetric(rng, 1 + rng() % 20, 3));
  const auto before = k::active_backend();
  std::vector<bool> results[2];
  int slot = 0;
  for (auto backend : {k::Backend::Scalar, k::Backend::Avx2}) {
    if (!k::backend_available(backend)) continue;
    k::set_active_backend(backend);
    for (const auto& s : pool) results[slot].push_back(is_ultrametric(s).ultrametric);
    ++slot;
  }
  k::set_active_backend(before);
  if (slot == 2) EXPECT_EQ(results[0], results[1]);
}

TEST(Kernels, RankMatrixPaddingIsStable) {
  Rng rng(24);
  for (int i = 0; i < 50; ++i) {
    const auto s = random_semimetric(rng, 1 + rng() % 17, 4);
    const auto r = rank_matrix(s);
    EXPECT_EQ(r.view().stride % k::kLaneWidth, 0u);
    for (std::size_t row = 0; row < r.size(); ++row)
      for (std::size_t col = r.size(); col < r.view().stride; ++col)
        EXPECT_EQ(r.view().at(row, col), k::kPadRank);
  }
}
