#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ustar/metric_space.hpp"
#include "ustar/rank_matrix.hpp"

namespace ustar {

/// phi[i] is the index in `b` that point i of `a` maps to; the distance
/// ranks satisfy rank_a(i, j) == rank_b(phi[i], phi[j]).
struct WeakSimilarity {
  bool similar = false;
  std::optional<std::vector<std::size_t>> phi;

  explicit operator bool() const noexcept { return similar; }
};

/// Backtracking over rank-preserving assignments, candidates restricted to
/// points with the same sorted row of ranks. Returns the first bijection in
/// search order (points of `a` assigned in order, candidates tried by index).
WeakSimilarity weakly_similar(const FiniteSemimetricSpace& a, const FiniteSemimetricSpace& b);
WeakSimilarity weakly_similar(const RankMatrix& a, const RankMatrix& b);

/// Relabeling-invariant key: the lexicographically least reading of the
/// upper triangle column by column (r01, r02, r12, r03, ...) over all point
/// orderings. Equal forms iff weakly similar.
class CanonicalForm {
 public:
  std::size_t size() const noexcept { return n_; }
  std::uint32_t max_rank() const noexcept { return max_rank_; }
  const std::vector<std::uint32_t>& key() const noexcept { return key_; }
  /// Point order (indices into the input space) realizing the minimum.
  const std::vector<std::size_t>& ordering() const noexcept { return ordering_; }

  /// The minimal rank matrix itself.
  RankMatrix matrix() const;
  /// 64-bit FNV-1a over (n, max_rank, key) as 16 lowercase hex digits.
  std::string digest() const;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.n_ == b.n_ && a.max_rank_ == b.max_rank_ && a.key_ == b.key_;
  }
  friend std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.max_rank_ <=> b.max_rank_; c != 0) return c;
    return a.key_ <=> b.key_;
  }

 private:
  friend CanonicalForm canonical_form(const RankMatrix&);
  std::size_t n_ = 0;
  std::uint32_t max_rank_ = 0;
  std::vector<std::uint32_t> key_;
  std::vector<std::size_t> ordering_;
};

CanonicalForm canonical_form(const FiniteSemimetricSpace& space);
CanonicalForm canonical_form(const RankMatrix& ranks);

}  // namespace ustar
