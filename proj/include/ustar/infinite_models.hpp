#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ustar/labeled_tree.hpp"
#include "ustar/metric_space.hpp"
#include "ustar/tail_law.hpp"

namespace ustar {

inline constexpr std::uint64_t kDefaultTruncation = 64;

/// A labeled star presented finitely: the center label, finitely many
/// exceptional leaf labels, then the leaves of a tail law. Leaf order is
/// exceptional labels first, then tail terms 1, 2, ...
class StarSpec {
 public:
  /// Throws NegativeLabel, or NotGenerating when the center and some leaf are
  /// both labeled 0.
  StarSpec(Rational center_label, std::vector<Rational> exceptional, TailLaw tail);

  const Rational& center_label() const noexcept { return center_label_; }
  const std::vector<Rational>& exceptional() const noexcept { return exceptional_; }
  const TailLaw& tail() const noexcept { return tail_; }

  bool is_infinite() const noexcept { return !tail_.is_finite(); }
  std::optional<std::uint64_t> leaf_count() const;

  /// Label of leaf k (1-based).
  Rational leaf_label(std::uint64_t k) const;
  std::vector<Rational> leaf_labels(std::uint64_t count) const;

  /// Center "c" plus leaves x1..xk (k capped by the leaf count).
  LabeledStarGraph truncate(std::uint64_t k, std::string center = "c") const;

  friend bool operator==(const StarSpec&, const StarSpec&) = default;

 private:
  Rational center_label_;
  std::vector<Rational> exceptional_;
  TailLaw tail_;
};

enum class CompactnessReason { Compact, FiniteSpace, CenterLabelPositive, InfiniteAEps };

std::string_view to_string(CompactnessReason reason) noexcept;

struct CompactnessReport {
  bool compact = false;
  CompactnessReason reason = CompactnessReason::Compact;
  /// For InfiniteAEps: an eps with {x : l(x) >= eps} infinite.
  std::optional<Rational> eps;

  explicit operator bool() const noexcept { return compact; }
};

/// An infinite star is compact iff its center is labeled 0 and every
/// {x : l(x) >= eps}, eps > 0, is finite. Finite stars are always compact.
CompactnessReport is_compact_star(const StarSpec& spec);

/// Leaf labels sorted non-increasingly as a decreasing ray. Exceptional labels
/// are merged into the tail stream; on ties the exceptional label goes first.
/// Throws NotCompact or FiniteSpec.
RaySpec star_to_ray(const StarSpec& spec);

/// The completion of a ray with labels decreasing to 0: one added point x0
/// that is the center of a star with leaf labels l*(x_n).
struct CompletionModel {
  std::string added_point = "x0";
  StarSpec star;
  RaySpec ray;

  /// Index 0 is x0, index n >= 1 is x_n.
  Rational distance(std::uint64_t a, std::uint64_t b) const;
  /// x0 followed by x1..xk.
  FiniteSemimetricSpace truncate(std::uint64_t k) const;
};

/// Throws NotDecreasingToZero unless the ray is flagged decreasing and has
/// an infinite tail with limit 0.
CompletionModel ray_to_completion(const RaySpec& ray);

/// The ultrametric on nonnegative reals: 0 if p == q, else max{p, q}.
/// Throws NegativeInput.
Rational dplus(const Rational& p, const Rational& q);

/// Candidate subset of nonnegative reals: a strictly decreasing positive
/// head t_1 > ... > t_k, an optional tail law continuing it, and whether 0 is
/// included.
struct DplusSubset {
  std::vector<Rational> head;
  std::optional<TailLaw> tail;
  bool include_zero = false;
};

enum class DplusVerdict { Finite, CompactSequence, MissingLimitPoint, NotDecreasingToZero };

std::string_view to_string(DplusVerdict verdict) noexcept;

struct DplusCompactness {
  bool compact = false;
  DplusVerdict verdict = DplusVerdict::Finite;
  /// Leading terms of the sequence, for the two negative verdicts.
  std::vector<Rational> witness_prefix;

  explicit operator bool() const noexcept { return compact; }
};

/// An infinite subset is compact under dplus iff it is a sequence strictly
/// decreasing to 0 together with 0. Finite subsets are compact. Throws
/// MalformedPresentation on a non-positive or non-decreasing head, or a tail
/// that does not continue below the head.
DplusCompactness dplus_compact_subset(const DplusSubset& candidate,
                                      std::uint64_t witness_terms = 8);

/// The elements of a finite sample of the subset (head, tail terms, 0) as a
/// space under dplus, points named by value.
FiniteSemimetricSpace dplus_space(const std::vector<Rational>& sample);

}  // namespace ustar
