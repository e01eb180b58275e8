#pragma once

// Order-level inner loops over integer rank matrices.
//
// A rank view is an n x n row-major matrix of uint32 ranks with a row stride
// that is a multiple of kLaneWidth. Padding cells (columns n..stride-1) hold
// kPadRank. Every kernel has a scalar reference and, on x86-64, an AVX2
// variant chosen at runtime; both must produce identical results.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace ustar::kernels {

inline constexpr std::size_t kLaneWidth = 8;
inline constexpr std::uint32_t kPadRank = 0x7fffffffu;

struct RankView {
  const std::uint32_t* data = nullptr;
  std::size_t n = 0;
  std::size_t stride = 0;

  const std::uint32_t* row(std::size_t i) const noexcept { return data + i * stride; }
  std::uint32_t at(std::size_t i, std::size_t j) const noexcept { return data[i * stride + j]; }
};

using Triple = std::array<std::uint32_t, 3>;

enum class Backend { Scalar, Avx2 };

std::string_view to_string(Backend backend) noexcept;

/// Best backend the running CPU supports.
Backend detect_backend() noexcept;

/// Backend used by the dispatching entry points. Defaults to detect_backend();
/// the USTAR_FORCE_SCALAR environment variable pins it to Scalar.
Backend active_backend() noexcept;
void set_active_backend(Backend backend);

bool backend_available(Backend backend) noexcept;

/// First (i, j, k) in lexicographic order with r[i][j] > max(r[i][k], r[k][j]).
/// Requires a symmetric matrix.
std::optional<Triple> first_triangle_violation(RankView view);

/// out[x] = min over y != x of r[x][y]; out[x] = kPadRank when n == 1.
void offdiag_row_min(RankView view, std::span<std::uint32_t> out);

/// out[c] = 1 iff r[c][x] == row_min[x] for every x != c.
void center_mask(RankView view, std::span<const std::uint32_t> row_min,
                 std::span<std::uint8_t> out);

namespace scalar {
std::optional<Triple> first_triangle_violation(RankView view);
void offdiag_row_min(RankView view, std::span<std::uint32_t> out);
void center_mask(RankView view, std::span<const std::uint32_t> row_min,
                 std::span<std::uint8_t> out);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define USTAR_HAVE_AVX2_KERNELS 1
namespace avx2 {
std::optional<Triple> first_triangle_violation(RankView view);
void offdiag_row_min(RankView view, std::span<std::uint32_t> out);
void center_mask(RankView view, std::span<const std::uint32_t> row_min,
                 std::span<std::uint8_t> out);
}  // namespace avx2
#else
#define USTAR_HAVE_AVX2_KERNELS 0
#endif

}  // namespace ustar::kernels
