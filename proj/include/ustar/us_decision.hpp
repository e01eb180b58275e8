#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ustar/labeled_tree.hpp"
#include "ustar/metric_space.hpp"

namespace ustar {

/// Points x0 with d(x0, x) <= d(y, x) whenever x0 != x != y, in input order.
struct CenterReport {
  std::vector<std::string> centers;
};

enum class QuadrupleKind { X4, Y4 };

std::string_view to_string(QuadrupleKind kind) noexcept;

/// Four points with d(x,y) = d(x,w) = d(z,y) = d(z,w) = big and both
/// within-pair distances small1 = d(x,z), small2 = d(y,w) below big.
/// Normalized: small1 <= small2, x before z and y before w in point order,
/// and on small1 == small2 the pair holding the earlier point comes first.
struct QuadrupleReport {
  std::string x, y, z, w;
  Rational big, small1, small2;
  QuadrupleKind kind = QuadrupleKind::X4;

  friend bool operator==(const QuadrupleReport&, const QuadrupleReport&) = default;
};

/// The two four-point obstructions: p1..p4 with d(p1,p3) = 1, d(p2,p4) = 2
/// (X4) or 2 (Y4), every other pair at distance 3.
FiniteSemimetricSpace fixture_x4();
FiniteSemimetricSpace fixture_y4();

/// Throws NotUltrametric for non-ultrametric input.
CenterReport find_centers(const FiniteSemimetricSpace& space);
bool is_us(const FiniteSemimetricSpace& space);

/// Star with center x0 (label 0) and l(x) = d(x, x0) on the remaining points,
/// in input order. Throws NotACenter (or UnknownPoint).
LabeledStarGraph build_star(const FiniteSemimetricSpace& space, std::string_view x0);

/// Direct search: with l(x) = min over y != x of d(x, y), take the first pair
/// x < y with d(x,y) > max{l(x), l(y)}, then the first z with d(x,z) < d(x,y)
/// and the first w with d(y,w) < d(x,y). Returns nullopt when no such pair
/// exists or the extraction breaks down (the latter cannot happen in an
/// ultrametric space). No consistency check against the center criterion.
std::optional<QuadrupleReport> constructive_forbidden_quadruple(const FiniteSemimetricSpace& space);

/// Oracle: scans 4-subsets in lexicographic order and returns the first one
/// weakly similar to X4 or Y4, decided by weakly_similar against the fixtures.
std::optional<QuadrupleReport> exhaustive_forbidden_quadruple(const FiniteSemimetricSpace& space);

/// Constructive search, cross-checked with the center criterion. Falls back
/// to the exhaustive scan when the constructive path yields nothing on a
/// non-US space; throws InternalInconsistency if the results cannot be
/// reconciled.
std::optional<QuadrupleReport> find_forbidden_quadruple(const FiniteSemimetricSpace& space);

/// Four-point spaces only: true iff some point is at diameter distance from
/// the other three.
bool four_point_tree_generable(const FiniteSemimetricSpace& space);

/// The three equivalent conditions for a finite semimetric space with
/// card X != 3: (i) the space is US; (ii) every four-point subspace is
/// weakly similar to a US-space; (iii) every four-point subspace is weakly
/// similar to a tree-generated space.
struct UsStatements {
  bool in_us = false;
  bool every4_us = false;
  bool every4_tree = false;
  /// false when card X == 3, where the three need not agree.
  bool equivalence_applies = true;

  bool agree() const noexcept { return in_us == every4_us && every4_us == every4_tree; }
};

/// Evaluates the three statements independently for any cardinality.
UsStatements evaluate_us_statements(const FiniteSemimetricSpace& space);

/// As evaluate_us_statements, but throws CardinalityThree for 3-point input
/// and InternalInconsistency if the statements disagree.
UsStatements semimetric_us_check(const FiniteSemimetricSpace& space);

}  // namespace ustar
