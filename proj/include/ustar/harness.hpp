#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ustar/metric_space.hpp"
#include "ustar/rank_matrix.hpp"
#include "ustar/us_decision.hpp"
#include "ustar/weak_similarity.hpp"

namespace ustar {

inline constexpr std::size_t kMaxEnumerationPoints = 8;

/// Rooted tree whose leaves are the points 0..n-1 and whose internal nodes
/// (each with >= 2 children) carry levels 1..k, strictly increasing towards
/// the root, every level used. The rank of two points is the level of their
/// lowest common ancestor.
struct RankedHierarchy {
  struct Node {
    std::vector<std::size_t> children;  // empty for leaves
    std::uint32_t level = 0;            // 0 for leaves
    std::size_t point = 0;              // leaves only
  };
  std::vector<Node> nodes;
  std::size_t root = 0;

  std::size_t point_count() const;
  RankMatrix ranks() const;
};

/// Unlabeled shapes: rooted trees with n leaves, every internal node having
/// at least two children. Leaves are numbered in depth-first order.
std::vector<RankedHierarchy> hierarchy_shapes(std::size_t n);

/// All ways to level the internal nodes of `shape`.
std::vector<RankedHierarchy> level_assignments(const RankedHierarchy& shape);

struct EnumerationOptions {
  unsigned jobs = 1;
};

/// One representative per weak-similarity class of n-point ultrametric
/// spaces, distances equal to ranks 1..k, points p1..pn, sorted by canonical
/// form. Throws BoundExceeded outside 1..kMaxEnumerationPoints.
std::vector<FiniteSemimetricSpace> enumerate_classes(std::size_t n,
                                                     EnumerationOptions options = {});

struct ClassVerdict {
  FiniteSemimetricSpace space;
  std::string digest;
  bool us = false;
  std::vector<std::string> centers;
  std::optional<QuadrupleReport> constructive;
  std::optional<QuadrupleReport> exhaustive;
  bool discrepancy = false;
  std::string note;
};

struct CenterCriterionReport {
  std::size_t n = 0;
  std::vector<ClassVerdict> classes;
  std::size_t us_count = 0;
  std::size_t discrepancies = 0;
};

/// For each class: center criterion vs. constructive quadruple search vs.
/// exhaustive weak-similarity scan. A discrepancy is any disagreement on
/// existence or an invalid constructive witness.
CenterCriterionReport verify_center_criterion(std::size_t n, EnumerationOptions options = {});

/// Brute-force tree-generability: every labeled tree on the points (via
/// Pruefer sequences) with labels drawn from the distance spectrum. Labels
/// outside the spectrum can be lowered to the largest spectrum value below
/// them without changing any path maximum, so this search is complete.
/// Practical for n <= 5.
std::optional<LabeledTree> find_generating_tree(const FiniteSemimetricSpace& space);

struct TreeGenerationEntry {
  FiniteSemimetricSpace space;
  std::string digest;
  bool us = false;
  bool tree_generable = false;
  /// Four-point criterion (n == 4 only).
  std::optional<bool> four_point_criterion;
  bool discrepancy = false;
};

struct TreeGenerationReport {
  std::vector<TreeGenerationEntry> classes;         // all classes, n = 1..4
  std::vector<TreeGenerationEntry> five_point;      // tree-generated five-point witnesses
  std::size_t discrepancies = 0;
  /// Five-point witnesses that are tree-generated and not US.
  std::size_t boundary_witnesses = 0;
};

TreeGenerationReport verify_tree_generation();

/// The five-point spaces generated by the paths with labels (2,2,3,1,1) and
/// (2,2,3,2,2), vertices v1..v5.
LabeledTree fixture_t1();
LabeledTree fixture_t2();

enum class ProbeOutcome { TriviallyUs, Embedded, Unresolved };

std::string_view to_string(ProbeOutcome outcome) noexcept;

struct ProbeReport {
  ProbeOutcome outcome = ProbeOutcome::Unresolved;
  std::optional<FiniteSemimetricSpace> extension;
  bool extension_ultrametric = false;
  bool added_point_is_center = false;
};

/// Tries the one-point extension d(c, x) := min over y != x of d(x, y). Any
/// failure is reported as Unresolved, never as a counterexample. Throws
/// PreconditionFailed unless the space is ultrametric and free of forbidden
/// quadruples.
ProbeReport center_extension_probe(const FiniteSemimetricSpace& space,
                                 std::string added_point = "c*");

}  // namespace ustar
