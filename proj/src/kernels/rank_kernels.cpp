#include "ustar/kernels/rank_kernels.hpp"

#include <atomic>
#include <cstdlib>

#include "ustar/error.hpp"

namespace ustar::kernels {
namespace {

Backend initial_backend() noexcept {
  if (const char* force = std::getenv("USTAR_FORCE_SCALAR"); force && *force && *force != '0')
    return Backend::Scalar;
  return detect_backend();
}

std::atomic<Backend>& active() noexcept {
  static std::atomic<Backend> backend{initial_backend()};
  return backend;
}

}  // namespace

std::string_view to_string(Backend backend) noexcept {
  return backend == Backend::Avx2 ? "avx2" : "scalar";
}

bool backend_available(Backend backend) noexcept {
  if (backend == Backend::Scalar) return true;
#if USTAR_HAVE_AVX2_KERNELS
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend detect_backend() noexcept {
  return backend_available(Backend::Avx2) ? Backend::Avx2 : Backend::Scalar;
}

Backend active_backend() noexcept { return active().load(std::memory_order_relaxed); }

void set_active_backend(Backend backend) {
  if (!backend_available(backend))
    throw Error(ErrorCode::PreconditionFailed,
                std::string("kernel backend not supported on this CPU: ") +
                    std::string(to_string(backend)));
  active().store(backend, std::memory_order_relaxed);
}

std::optional<Triple> first_triangle_violation(RankView view) {
#if USTAR_HAVE_AVX2_KERNELS
  if (active_backend() == Backend::Avx2) return avx2::first_triangle_violation(view);
#endif
  return scalar::first_triangle_violation(view);
}

void offdiag_row_min(RankView view, std::span<std::uint32_t> out) {
#if USTAR_HAVE_AVX2_KERNELS
  if (active_backend() == Backend::Avx2) return avx2::offdiag_row_min(view, out);
#endif
  scalar::offdiag_row_min(view, out);
}

void center_mask(RankView view, std::span<const std::uint32_t> row_min,
                 std::span<std::uint8_t> out) {
#if USTAR_HAVE_AVX2_KERNELS
  if (active_backend() == Backend::Avx2) return avx2::center_mask(view, row_min, out);
#endif
  scalar::center_mask(view, row_min, out);
}

}  // namespace ustar::kernels
