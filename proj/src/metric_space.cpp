#include "ustar/metric_space.hpp"

#include <algorithm>
#include <unordered_set>

#include "ustar/error.hpp"
#include "ustar/rank_matrix.hpp"

namespace ustar {

std::optional<std::size_t> FiniteSemimetricSpace::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i] == name) return i;
  return std::nullopt;
}

std::vector<std::vector<Rational>> FiniteSemimetricSpace::matrix() const {
  const std::size_t n = size();
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = d(i, j);
  return out;
}

FiniteSemimetricSpace validate_semimetric(std::vector<std::string> names,
                                          const std::vector<std::vector<Rational>>& matrix) {
  const std::size_t n = names.size();
  if (n == 0) throw Error(ErrorCode::EmptySpace, "a space needs at least one point");
  if (matrix.size() != n)
    throw Error(ErrorCode::ShapeMismatch, std::to_string(n) + " names but " +
                                              std::to_string(matrix.size()) + " rows");
  for (std::size_t i = 0; i < n; ++i)
    if (matrix[i].size() != n)
      throw Error(ErrorCode::ShapeMismatch,
                  "row " + std::to_string(i) + " has " + std::to_string(matrix[i].size()) +
                      " entries, expected " + std::to_string(n));

  std::unordered_set<std::string> seen;
  for (const auto& name : names)
    if (!seen.insert(name).second) throw Error(ErrorCode::DuplicateName, "'" + name + "'");

  auto where = [&](std::size_t i, std::size_t j) {
    return "d(" + names[i] + ", " + names[j] + ") = " + format_rational(matrix[i][j]);
  };
  std::vector<Rational> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& v = matrix[i][j];
      if (i == j) {
        if (v != 0) throw Error(ErrorCode::NonzeroDiagonal, where(i, j));
      } else if (v < 0) {
        throw Error(ErrorCode::NegativeDistance, where(i, j));
      } else if (v != matrix[j][i]) {
        throw Error(ErrorCode::AsymmetricMatrix, where(i, j) + " but " + where(j, i));
      } else if (v == 0) {
        throw Error(ErrorCode::ZeroOffDiagonal, where(i, j));
      }
      flat.push_back(v);
    }
  }
  return FiniteSemimetricSpace(std::move(names), std::move(flat));
}

FiniteSemimetricSpace validate_semimetric(const FiniteSemimetricSpace& space) {
  return validate_semimetric(space.points(), space.matrix());
}

UltrametricCheck is_ultrametric(const FiniteSemimetricSpace& space) {
  if (space.size() < 3) return {};
  const RankMatrix ranks = rank_matrix(space);
  const auto hit = kernels::first_triangle_violation(ranks.view());
  if (!hit) return {};
  const auto [x, y, z] = *hit;
  return {false, TripleWitness{space.name(x), space.name(y), space.name(z), space.d(x, y),
                               std::max(space.d(x, z), space.d(z, y))}};
}

DistanceSpectrum distance_spectrum(const FiniteSemimetricSpace& space) {
  const std::size_t n = space.size();
  std::vector<Rational> values;
  values.reserve(n * (n - 1) / 2 + 1);
  values.emplace_back(0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) values.push_back(space.d(i, j));
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return {std::move(values)};
}

FiniteSemimetricSpace restrict_indices(const FiniteSemimetricSpace& space,
                                       std::span<const std::size_t> indices) {
  std::vector<std::size_t> keep(indices.begin(), indices.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.empty()) throw Error(ErrorCode::EmptySubset, "restriction to the empty set");
  if (keep.back() >= space.size())
    throw Error(ErrorCode::UnknownPoint, "index " + std::to_string(keep.back()));

  std::vector<std::string> names;
  std::vector<std::vector<Rational>> m(keep.size(), std::vector<Rational>(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a) {
    names.push_back(space.name(keep[a]));
    for (std::size_t b = 0; b < keep.size(); ++b) m[a][b] = space.d(keep[a], keep[b]);
  }
  return validate_semimetric(std::move(names), m);
}

FiniteSemimetricSpace restrict(const FiniteSemimetricSpace& space,
                               std::span<const std::string> subset) {
  if (subset.empty()) throw Error(ErrorCode::EmptySubset, "restriction to the empty set");
  std::vector<std::size_t> indices;
  indices.reserve(subset.size());
  for (const auto& name : subset) {
    const auto idx = space.index_of(name);
    if (!idx) throw Error(ErrorCode::UnknownPoint, "'" + name + "'");
    indices.push_back(*idx);
  }
  return restrict_indices(space, indices);
}

std::vector<std::string> default_point_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back("p" + std::to_string(i));
  return names;
}

}  // namespace ustar
