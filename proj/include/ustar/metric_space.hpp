#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ustar/rational.hpp"

namespace ustar {

/// A finite semimetric space over named points with an exact distance matrix.
///
/// Instances only come out of validate_semimetric (or operations built on
/// it), so every object satisfies: zero diagonal, symmetry, strictly positive
/// off-diagonal entries, unique names, at least one point.
class FiniteSemimetricSpace {
 public:
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<std::string>& points() const noexcept { return points_; }
  const std::string& name(std::size_t i) const { return points_.at(i); }

  const Rational& d(std::size_t i, std::size_t j) const { return dist_[i * size() + j]; }

  /// Index of a point by name, or nullopt.
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Row-major n*n copy of the matrix.
  std::vector<std::vector<Rational>> matrix() const;

  friend bool operator==(const FiniteSemimetricSpace&, const FiniteSemimetricSpace&) = default;

 private:
  friend FiniteSemimetricSpace validate_semimetric(std::vector<std::string>,
                                                   const std::vector<std::vector<Rational>>&);
  FiniteSemimetricSpace(std::vector<std::string> points, std::vector<Rational> dist)
      : points_(std::move(points)), dist_(std::move(dist)) {}

  std::vector<std::string> points_;
  std::vector<Rational> dist_;
};

/// D(X): the sorted set of all distances, always starting with 0.
struct DistanceSpectrum {
  std::vector<Rational> values;

  std::size_t size() const noexcept { return values.size(); }
  friend bool operator==(const DistanceSpectrum&, const DistanceSpectrum&) = default;
};

/// A triple breaking the strong triangle inequality: lhs = d(x,y) > rhs = max{d(x,z), d(z,y)}.
struct TripleWitness {
  std::string x, y, z;
  Rational lhs, rhs;
};

struct UltrametricCheck {
  bool ultrametric = true;
  std::optional<TripleWitness> witness;

  explicit operator bool() const noexcept { return ultrametric; }
};

/// Validates a candidate matrix against the semimetric axioms. Entries are
/// scanned row-major and the first violation is reported (NonzeroDiagonal,
/// NegativeDistance, AsymmetricMatrix, ZeroOffDiagonal); duplicate names are
/// checked before any entry.
FiniteSemimetricSpace validate_semimetric(std::vector<std::string> names,
                                          const std::vector<std::vector<Rational>>& matrix);

/// Re-validation of an existing space; returns an equal space.
FiniteSemimetricSpace validate_semimetric(const FiniteSemimetricSpace& space);

/// Strong triangle inequality over all ordered triples. The witness is the
/// first violating (x, y, z) in lexicographic index order.
UltrametricCheck is_ultrametric(const FiniteSemimetricSpace& space);

DistanceSpectrum distance_spectrum(const FiniteSemimetricSpace& space);

/// Induced subspace on the named points, in the order of `space`. Repeated
/// names in `subset` are collapsed.
FiniteSemimetricSpace restrict(const FiniteSemimetricSpace& space,
                               std::span<const std::string> subset);
FiniteSemimetricSpace restrict_indices(const FiniteSemimetricSpace& space,
                                       std::span<const std::size_t> indices);

/// Points named p1..pn.
std::vector<std::string> default_point_names(std::size_t n);

}  // namespace ustar
