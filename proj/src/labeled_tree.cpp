#include "ustar/labeled_tree.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "ustar/error.hpp"

namespace ustar {
namespace {

std::string describe(const NamedEdge& e) { return e.first + " -- " + e.second; }

}  // namespace

LabeledTree::LabeledTree(std::vector<std::string> vertices, std::vector<Rational> labels,
                         const std::vector<NamedEdge>& edges)
    : vertices_(std::move(vertices)), labels_(std::move(labels)) {
  const std::size_t n = vertices_.size();
  if (n == 0) throw Error(ErrorCode::NotATree, "a tree needs at least one vertex");
  if (labels_.size() != n)
    throw Error(ErrorCode::ShapeMismatch, "one label per vertex is required");

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(vertices_[i], i).second)
      throw Error(ErrorCode::DuplicateName, "'" + vertices_[i] + "'");
    if (labels_[i] < 0)
      throw Error(ErrorCode::NegativeLabel,
                  "l(" + vertices_[i] + ") = " + format_rational(labels_[i]));
  }

  if (edges.size() != n - 1)
    throw Error(ErrorCode::NotATree, std::to_string(n) + " vertices need " +
                                         std::to_string(n - 1) + " edges, got " +
                                         std::to_string(edges.size()));
  adjacency_.assign(n, {});
  for (const auto& e : edges) {
    const auto u = index.find(e.first);
    const auto v = index.find(e.second);
    if (u == index.end()) throw Error(ErrorCode::UnknownVertex, "'" + e.first + "'");
    if (v == index.end()) throw Error(ErrorCode::UnknownVertex, "'" + e.second + "'");
    if (u->second == v->second) throw Error(ErrorCode::NotATree, "self-loop " + describe(e));
    auto& nu = adjacency_[u->second];
    if (std::find(nu.begin(), nu.end(), v->second) != nu.end())
      throw Error(ErrorCode::NotATree, "repeated edge " + describe(e));
    nu.push_back(v->second);
    adjacency_[v->second].push_back(u->second);
    edges_.emplace_back(u->second, v->second);
  }

  // n - 1 edges plus connectivity means acyclic.
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adjacency_[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != n) throw Error(ErrorCode::NotATree, "graph is disconnected");
}

std::optional<std::size_t> LabeledTree::index_of(std::string_view vertex) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == vertex) return i;
  return std::nullopt;
}

LabeledTree LabeledTree::with_label(std::size_t v, Rational label) const {
  LabeledTree copy = *this;
  if (label < 0) throw Error(ErrorCode::NegativeLabel, "l(" + vertices_.at(v) + ")");
  copy.labels_.at(v) = std::move(label);
  return copy;
}

LabeledStarGraph::LabeledStarGraph(std::string center, Rational center_label,
                                   std::vector<std::string> leaves,
                                   std::vector<Rational> leaf_labels)
    : center_(std::move(center)),
      center_label_(std::move(center_label)),
      leaves_(std::move(leaves)),
      leaf_labels_(std::move(leaf_labels)) {
  if (leaves_.size() != leaf_labels_.size())
    throw Error(ErrorCode::ShapeMismatch, "one label per leaf is required");
  // Shape checks (unique names, nonnegative labels) are shared with LabeledTree.
  (void)to_tree();
}

const Rational& LabeledStarGraph::label(std::string_view vertex) const {
  if (vertex == center_) return center_label_;
  for (std::size_t i = 0; i < leaves_.size(); ++i)
    if (leaves_[i] == vertex) return leaf_labels_[i];
  throw Error(ErrorCode::UnknownVertex, "'" + std::string(vertex) + "'");
}

LabeledTree LabeledStarGraph::to_tree() const {
  std::vector<std::string> vertices{center_};
  vertices.insert(vertices.end(), leaves_.begin(), leaves_.end());
  std::vector<Rational> labels{center_label_};
  labels.insert(labels.end(), leaf_labels_.begin(), leaf_labels_.end());
  std::vector<NamedEdge> edges;
  edges.reserve(leaves_.size());
  for (const auto& leaf : leaves_) edges.emplace_back(center_, leaf);
  return LabeledTree(std::move(vertices), std::move(labels), edges);
}

RaySpec::RaySpec(std::vector<Rational> prefix, std::optional<TailLaw> tail, bool decreasing)
    : prefix_(std::move(prefix)), tail_(std::move(tail)), decreasing_(decreasing) {
  for (const auto& l : prefix_)
    if (l < 0) throw Error(ErrorCode::NegativeLabel, "ray label " + format_rational(l));
  if (tail_ && tail_->length() == std::uint64_t{0}) tail_.reset();
  if (prefix_.empty() && !tail_) throw Error(ErrorCode::NotATree, "a ray needs a vertex");
  if (!decreasing_) return;

  auto fail = [](const std::string& why) { throw Error(ErrorCode::NotDecreasing, why); };
  for (std::size_t i = 0; i < prefix_.size(); ++i) {
    if (prefix_[i] <= 0) fail("label " + std::to_string(i + 1) + " is not positive");
    if (i > 0 && prefix_[i] > prefix_[i - 1])
      fail("label " + std::to_string(i + 1) + " exceeds its predecessor");
  }
  if (tail_) {
    if (!tail_->non_increasing()) fail("tail law is not non-increasing");
    const Rational first = tail_->at(1);
    if (!prefix_.empty() && first > prefix_.back()) fail("tail starts above the prefix");
    // Positivity of every tail term: the infimum of a non-increasing law is
    // its limit (infinite laws) or its last term (finite laws).
    const Rational floor_value =
        tail_->is_finite() ? tail_->at(*tail_->length()) : *tail_->limit();
    const bool attained = tail_->is_finite() || std::holds_alternative<Constant>(tail_->kind());
    if (floor_value < 0 || (floor_value == 0 && attained)) fail("tail labels are not positive");
  }
}

std::optional<std::uint64_t> RaySpec::length() const {
  if (!tail_) return prefix_.size();
  if (const auto len = tail_->length()) return prefix_.size() + *len;
  return std::nullopt;
}

Rational RaySpec::label(std::uint64_t n) const {
  if (n == 0) throw Error(ErrorCode::IndexOutOfRange, "ray vertices are 1-based");
  if (const auto len = length(); len && n > *len)
    throw Error(ErrorCode::IndexOutOfRange,
                "x_" + std::to_string(n) + " on a ray of length " + std::to_string(*len));
  if (n <= prefix_.size()) return prefix_[n - 1];
  return tail_->at(n - prefix_.size());
}

std::vector<Rational> RaySpec::labels(std::uint64_t count) const {
  if (const auto len = length()) count = std::min(count, *len);
  std::vector<Rational> out;
  out.reserve(count);
  for (std::uint64_t n = 1; n <= count; ++n) out.push_back(label(n));
  return out;
}

LabeledTree RaySpec::truncate(std::uint64_t k) const {
  if (k == 0) throw Error(ErrorCode::IndexOutOfRange, "truncation needs k >= 1");
  std::vector<std::string> names;
  std::vector<Rational> labels = this->labels(k);
  if (labels.size() < k)
    throw Error(ErrorCode::IndexOutOfRange, "ray has only " + std::to_string(labels.size()) +
                                                " vertices");
  std::vector<NamedEdge> edges;
  for (std::uint64_t n = 1; n <= k; ++n) {
    names.push_back("x" + std::to_string(n));
    if (n > 1) edges.emplace_back(names[n - 2], names[n - 1]);
  }
  return LabeledTree(std::move(names), std::move(labels), edges);
}

bool operator==(const RaySpec& a, const RaySpec& b) {
  return a.prefix_ == b.prefix_ && a.tail_ == b.tail_ && a.decreasing_ == b.decreasing_;
}

GeneratingCheck validate_generating(const LabeledTree& tree) {
  for (const auto& [u, v] : tree.edges())
    if (tree.label(u) == 0 && tree.label(v) == 0)
      return {false, NamedEdge{tree.vertices()[u], tree.vertices()[v]}};
  return {};
}

std::vector<std::vector<Rational>> path_max_matrix(const LabeledTree& tree) {
  const std::size_t n = tree.size();
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
  std::vector<std::size_t> parent(n);
  std::vector<std::size_t> stack;
  for (std::size_t source = 0; source < n; ++source) {
    auto& row = out[source];
    // row[v] holds the running path maximum from source to v.
    row[source] = tree.label(source);
    parent[source] = source;
    stack.assign(1, source);
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : tree.neighbors(v)) {
        if (w == parent[v]) continue;
        parent[w] = v;
        row[w] = std::max(row[v], tree.label(w));
        stack.push_back(w);
      }
    }
    row[source] = 0;
  }
  return out;
}

FiniteSemimetricSpace generate_ultrametric(const LabeledTree& tree) {
  if (const auto check = validate_generating(tree); !check)
    throw Error(ErrorCode::NotGenerating,
                "both endpoints of " + describe(*check.bad_edge) + " are labeled 0");
  return validate_semimetric(tree.vertices(), path_max_matrix(tree));
}

Rational star_distance(const LabeledStarGraph& star, std::string_view u, std::string_view v) {
  const Rational& lu = star.label(u);
  const Rational& lv = star.label(v);
  if (u == v) return 0;
  return std::max({star.center_label(), lu, lv});
}

Rational ray_distance(const RaySpec& ray, std::uint64_t m, std::uint64_t n) {
  const std::uint64_t lo = std::min(m, n);
  const std::uint64_t hi = std::max(m, n);
  // Validates both indices.
  (void)ray.label(hi);
  if (lo == 0) (void)ray.label(lo);
  if (m == n) return 0;
  if (ray.decreasing()) return ray.label(lo);
  Rational best = ray.label(lo);
  for (std::uint64_t i = lo + 1; i <= hi; ++i) best = std::max(best, ray.label(i));
  return best;
}

LabeledTree parse_tree_text(std::string_view text) {
  std::vector<std::string> vertices;
  std::vector<Rational> labels;
  std::vector<NamedEdge> edges;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() == 3 && tokens[1] == "--") {
      edges.emplace_back(tokens[0], tokens[2]);
    } else if (tokens.size() == 2) {
      vertices.push_back(tokens[0]);
      labels.push_back(parse_rational(tokens[1]));
    } else {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": expected 'vertex label' or 'u -- v'");
    }
  }
  return LabeledTree(std::move(vertices), std::move(labels), edges);
}

std::string format_tree_text(const LabeledTree& tree) {
  std::string out;
  for (std::size_t v = 0; v < tree.size(); ++v)
    out += tree.vertices()[v] + " " + format_rational(tree.label(v)) + "\n";
  for (const auto& [u, v] : tree.edges())
    out += tree.vertices()[u] + " -- " + tree.vertices()[v] + "\n";
  return out;
}

namespace {

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const LabeledTree& tree, std::string_view graph_name) {
  std::string out = "graph " + dot_quote(graph_name) + " {\n  node [shape=circle];\n";
  for (std::size_t v = 0; v < tree.size(); ++v)
    out += "  " + dot_quote(tree.vertices()[v]) +
           " [label=" + dot_quote(format_rational(tree.label(v))) + "];\n";
  for (const auto& [u, v] : tree.edges())
    out += "  " + dot_quote(tree.vertices()[u]) + " -- " + dot_quote(tree.vertices()[v]) + ";\n";
  return out + "}\n";
}

std::string to_dot(const LabeledStarGraph& star, std::string_view graph_name) {
  return to_dot(star.to_tree(), graph_name);
}

}  // namespace ustar
