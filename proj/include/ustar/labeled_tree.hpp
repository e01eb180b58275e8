#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ustar/metric_space.hpp"
#include "ustar/rational.hpp"
#include "ustar/tail_law.hpp"

namespace ustar {

using NamedEdge = std::pair<std::string, std::string>;

/// A finite tree with a nonnegative rational label on every vertex. Shape
/// (connected, acyclic, no self-loops or repeated edges) is verified once at
/// construction.
class LabeledTree {
 public:
  LabeledTree(std::vector<std::string> vertices, std::vector<Rational> labels,
              const std::vector<NamedEdge>& edges);

  std::size_t size() const noexcept { return vertices_.size(); }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Rational>& labels() const noexcept { return labels_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_.at(v); }

  std::optional<std::size_t> index_of(std::string_view vertex) const;
  const Rational& label(std::size_t v) const { return labels_.at(v); }

  /// Copy with one label replaced.
  LabeledTree with_label(std::size_t v, Rational label) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Rational> labels_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// A star: center adjacent to each leaf, no other edges.
class LabeledStarGraph {
 public:
  LabeledStarGraph(std::string center, Rational center_label, std::vector<std::string> leaves,
                   std::vector<Rational> leaf_labels);

  const std::string& center() const noexcept { return center_; }
  const Rational& center_label() const noexcept { return center_label_; }
  const std::vector<std::string>& leaves() const noexcept { return leaves_; }
  const std::vector<Rational>& leaf_labels() const noexcept { return leaf_labels_; }

  /// Label of any vertex (center or leaf); UnknownVertex otherwise.
  const Rational& label(std::string_view vertex) const;

  /// Vertex order: center first, then leaves.
  LabeledTree to_tree() const;

  friend bool operator==(const LabeledStarGraph&, const LabeledStarGraph&) = default;

 private:
  std::string center_;
  Rational center_label_;
  std::vector<std::string> leaves_;
  std::vector<Rational> leaf_labels_;
};

/// Ray x_1, x_2, ...: an explicit label prefix followed by an optional tail
/// law. With the `decreasing` flag the labels are checked non-increasing and
/// positive at construction.
class RaySpec {
 public:
  RaySpec(std::vector<Rational> prefix, std::optional<TailLaw> tail, bool decreasing);

  const std::vector<Rational>& prefix() const noexcept { return prefix_; }
  const std::optional<TailLaw>& tail() const noexcept { return tail_; }
  bool decreasing() const noexcept { return decreasing_; }

  /// Number of vertices, or nullopt for an infinite ray.
  std::optional<std::uint64_t> length() const;
  /// l*(x_n), n >= 1. IndexOutOfRange outside the ray.
  Rational label(std::uint64_t n) const;
  std::vector<Rational> labels(std::uint64_t count) const;

  /// Path x_1 -- x_2 -- ... -- x_k with the first k labels.
  LabeledTree truncate(std::uint64_t k) const;

  friend bool operator==(const RaySpec&, const RaySpec&);

 private:
  std::vector<Rational> prefix_;
  std::optional<TailLaw> tail_;
  bool decreasing_ = false;
};

struct GeneratingCheck {
  bool generating = true;
  std::optional<NamedEdge> bad_edge;

  explicit operator bool() const noexcept { return generating; }
};

/// Every edge needs an endpoint with positive label; reports the first edge
/// (in edge order) whose endpoints are both labeled 0.
GeneratingCheck validate_generating(const LabeledTree& tree);

/// d(u, v) = max label on the u--v path, endpoints included; d(u, u) = 0.
/// No generating check: zero-zero edges yield zero off-diagonal entries.
std::vector<std::vector<Rational>> path_max_matrix(const LabeledTree& tree);

/// Throws NotGenerating when validate_generating fails.
FiniteSemimetricSpace generate_ultrametric(const LabeledTree& tree);

Rational star_distance(const LabeledStarGraph& star, std::string_view u, std::string_view v);

/// Decreasing rays: l*(x_min(m,n)). Otherwise the max label over x_min..x_max.
Rational ray_distance(const RaySpec& ray, std::uint64_t m, std::uint64_t n);

// Text format: one "vertex label" line per vertex, one "u -- v" line per
// edge; '#' starts a comment, blank lines are ignored.
LabeledTree parse_tree_text(std::string_view text);
std::string format_tree_text(const LabeledTree& tree);

/// Graphviz DOT, vertices and edges in stored order, labels as node text.
std::string to_dot(const LabeledTree& tree, std::string_view graph_name = "T");
std::string to_dot(const LabeledStarGraph& star, std::string_view graph_name = "S");

}  // namespace ustar
