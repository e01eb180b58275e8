#include "ustar/harness.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>

#include "ustar/error.hpp"
#include "ustar/labeled_tree.hpp"

namespace ustar {
namespace {

// Unlabeled shape: sorted child list of (leaf count, shape index) pairs.
struct ShapeKey {
  std::vector<std::pair<std::size_t, std::size_t>> children;
};

class ShapeCatalog {
 public:
  const std::vector<ShapeKey>& shapes(std::size_t leaves) {
    while (by_size_.size() <= leaves) grow();
    return by_size_[leaves];
  }

  RankedHierarchy expand(std::size_t leaves, std::size_t index) {
    RankedHierarchy h;
    std::size_t next_point = 0;
    h.root = emit(h, leaves, index, next_point);
    return h;
  }

 private:
  void grow() {
    const std::size_t m = by_size_.size();
    std::vector<ShapeKey> out;
    if (m == 1) out.push_back({});
    if (m >= 2) {
      std::vector<std::size_t> parts;
      partitions(m, m - 1, parts, out);
    }
    by_size_.push_back(std::move(out));
  }

  void partitions(std::size_t remaining, std::size_t max_part, std::vector<std::size_t>& parts,
                  std::vector<ShapeKey>& out) {
    if (remaining == 0) {
      if (parts.size() >= 2) {
        std::vector<std::pair<std::size_t, std::size_t>> chosen;
        choose(parts, 0, chosen, out);
      }
      return;
    }
    for (std::size_t p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      partitions(remaining - p, p, parts, out);
      parts.pop_back();
    }
  }

  // Equal parts take non-increasing shape indices so each multiset appears once.
  void choose(const std::vector<std::size_t>& parts, std::size_t i,
              std::vector<std::pair<std::size_t, std::size_t>>& chosen,
              std::vector<ShapeKey>& out) {
    if (i == parts.size()) {
      out.push_back({chosen});
      return;
    }
    const std::size_t count = by_size_[parts[i]].size();
    const std::size_t limit =
        (i > 0 && parts[i] == parts[i - 1]) ? chosen.back().second + 1 : count;
    for (std::size_t s = 0; s < limit; ++s) {
      chosen.emplace_back(parts[i], s);
      choose(parts, i + 1, chosen, out);
      chosen.pop_back();
    }
  }

  std::size_t emit(RankedHierarchy& h, std::size_t leaves, std::size_t index,
                   std::size_t& next_point) {
    const std::size_t id = h.nodes.size();
    h.nodes.emplace_back();
    if (leaves == 1) {
      h.nodes[id].point = next_point++;
      return id;
    }
    for (const auto& [size, sub] : by_size_[leaves][index].children) {
      const std::size_t child = emit(h, size, sub, next_point);
      h.nodes[id].children.push_back(child);
    }
    return id;
  }

  std::vector<std::vector<ShapeKey>> by_size_{{}};
};

void assign_levels(const RankedHierarchy& shape, const std::vector<std::size_t>& internal,
                   std::vector<std::uint32_t>& level, std::uint32_t current,
                   std::size_t assigned, std::vector<RankedHierarchy>& out) {
  if (assigned == internal.size()) {
    RankedHierarchy h = shape;
    for (std::size_t id : internal) h.nodes[id].level = level[id];
    out.push_back(std::move(h));
    return;
  }
  // Nodes whose internal children all sit on lower levels.
  std::vector<std::size_t> available;
  for (std::size_t id : internal) {
    if (level[id] != 0) continue;
    const auto& ch = shape.nodes[id].children;
    if (std::all_of(ch.begin(), ch.end(), [&](std::size_t c) {
          return shape.nodes[c].children.empty() || (level[c] != 0 && level[c] < current);
        }))
      available.push_back(id);
  }
  const std::size_t subsets = std::size_t{1} << available.size();
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    std::size_t taken = 0;
    for (std::size_t b = 0; b < available.size(); ++b)
      if (mask >> b & 1u) {
        level[available[b]] = current;
        ++taken;
      }
    assign_levels(shape, internal, level, current + 1, assigned + taken, out);
    for (std::size_t b = 0; b < available.size(); ++b)
      if (mask >> b & 1u) level[available[b]] = 0;
  }
}

void require_bound(std::size_t n) {
  if (n < 1 || n > kMaxEnumerationPoints)
    throw Error(ErrorCode::BoundExceeded, "point count " + std::to_string(n) + " outside 1.." +
                                              std::to_string(kMaxEnumerationPoints));
}

template <class T, class Fn>
auto parallel_map(const std::vector<T>& items, unsigned jobs, Fn fn) {
  using R = decltype(fn(items.front()));
  std::vector<std::optional<R>> slots(items.size());
  jobs = std::max(1u, jobs);
  if (jobs == 1 || items.size() < 2) {
    for (std::size_t i = 0; i < items.size(); ++i) slots[i].emplace(fn(items[i]));
  } else {
    std::vector<std::future<void>> workers;
    for (unsigned w = 0; w < jobs; ++w)
      workers.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < items.size(); i += jobs) slots[i].emplace(fn(items[i]));
      }));
    for (auto& f : workers) f.get();
  }
  std::vector<R> results;
  results.reserve(items.size());
  for (auto& slot : slots) results.push_back(std::move(*slot));
  return results;
}

}  // namespace

std::size_t RankedHierarchy::point_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes.begin(), nodes.end(), [](const Node& n) { return n.children.empty(); }));
}

RankMatrix RankedHierarchy::ranks() const {
  const std::size_t n = point_count();
  std::vector<std::vector<std::uint32_t>> r(n, std::vector<std::uint32_t>(n, 0));
  // Points below `id`, filling ranks between different children of each node.
  std::function<std::vector<std::size_t>(std::size_t)> collect = [&](std::size_t id) {
    const Node& node = nodes[id];
    if (node.children.empty()) return std::vector<std::size_t>{node.point};
    std::vector<std::size_t> all;
    for (std::size_t child : node.children) {
      const auto below = collect(child);
      for (std::size_t a : all)
        for (std::size_t b : below) r[a][b] = r[b][a] = node.level;
      all.insert(all.end(), below.begin(), below.end());
    }
    return all;
  };
  collect(root);
  return RankMatrix::from_ranks(r);
}

std::vector<RankedHierarchy> hierarchy_shapes(std::size_t n) {
  require_bound(n);
  ShapeCatalog catalog;
  std::vector<RankedHierarchy> out;
  for (std::size_t i = 0; i < catalog.shapes(n).size(); ++i) out.push_back(catalog.expand(n, i));
  return out;
}

std::vector<RankedHierarchy> level_assignments(const RankedHierarchy& shape) {
  std::vector<std::size_t> internal;
  for (std::size_t id = 0; id < shape.nodes.size(); ++id)
    if (!shape.nodes[id].children.empty()) internal.push_back(id);
  std::vector<RankedHierarchy> out;
  if (internal.empty()) {
    out.push_back(shape);
    return out;
  }
  std::vector<std::uint32_t> level(shape.nodes.size(), 0);
  assign_levels(shape, internal, level, 1, 0, out);
  return out;
}

std::vector<FiniteSemimetricSpace> enumerate_classes(std::size_t n, EnumerationOptions options) {
  const auto shapes = hierarchy_shapes(n);
  const auto forms_per_shape = parallel_map(shapes, options.jobs, [](const RankedHierarchy& s) {
    std::vector<CanonicalForm> forms;
    for (const auto& h : level_assignments(s)) forms.push_back(canonical_form(h.ranks()));
    return forms;
  });
  std::map<CanonicalForm, bool> unique;
  for (const auto& forms : forms_per_shape)
    for (const auto& f : forms) unique.emplace(f, true);
  std::vector<FiniteSemimetricSpace> out;
  out.reserve(unique.size());
  for (const auto& [form, _] : unique) out.push_back(form.matrix().to_space());
  return out;
}

CenterCriterionReport verify_center_criterion(std::size_t n, EnumerationOptions options) {
  const auto classes = enumerate_classes(n, options);
  CenterCriterionReport report;
  report.n = n;
  report.classes = parallel_map(classes, options.jobs, [](const FiniteSemimetricSpace& s) {
    ClassVerdict v{s, canonical_form(s).digest()};
    v.centers = find_centers(s).centers;
    v.us = !v.centers.empty();
    v.constructive = constructive_forbidden_quadruple(s);
    v.exhaustive = exhaustive_forbidden_quadruple(s);
    if (v.us == v.constructive.has_value()) {
      v.discrepancy = true;
      v.note = v.us ? "constructive witness in a space with a center"
                    : "no center but constructive search found nothing";
    } else if (v.us == v.exhaustive.has_value()) {
      v.discrepancy = true;
      v.note = v.us ? "forbidden four-point subspace in a space with a center"
                    : "no center and no forbidden four-point subspace";
    }
    return v;
  });
  for (const auto& v : report.classes) {
    report.us_count += v.us ? 1 : 0;
    report.discrepancies += v.discrepancy ? 1 : 0;
  }
  return report;
}

std::optional<LabeledTree> find_generating_tree(const FiniteSemimetricSpace& space) {
  const std::size_t n = space.size();
  const RankMatrix target = rank_matrix(space);
  const DistanceSpectrum spectrum = distance_spectrum(space);
  const std::uint32_t levels = static_cast<std::uint32_t>(spectrum.size());

  auto build = [&](const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                   const std::vector<std::uint32_t>& lab) {
    std::vector<Rational> labels;
    for (auto l : lab) labels.push_back(spectrum.values[l]);
    std::vector<NamedEdge> named;
    for (auto [u, v] : edges) named.emplace_back(space.name(u), space.name(v));
    return LabeledTree(space.points(), std::move(labels), named);
  };

  if (n == 1) return build({}, {0});

  // A generating label never exceeds the distance to the nearest other point.
  std::vector<std::uint32_t> cap(n, levels - 1);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t u = 0; u < n; ++u)
      if (u != v) cap[v] = std::min(cap[v], target(u, v));

  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> trees;
  if (n == 2) {
    trees.push_back({{0, 1}});
  } else {
    std::vector<std::size_t> code(n - 2, 0);
    while (true) {
      // Pruefer decoding.
      std::vector<std::size_t> degree(n, 1);
      for (auto c : code) ++degree[c];
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      for (auto c : code) {
        std::size_t leaf = 0;
        while (degree[leaf] != 1) ++leaf;
        edges.emplace_back(leaf, c);
        --degree[leaf];
        --degree[c];
      }
      std::size_t u = n, v = n;
      for (std::size_t i = 0; i < n; ++i)
        if (degree[i] == 1) (u == n ? u : v) = i;
      edges.emplace_back(u, v);
      trees.push_back(std::move(edges));

      std::size_t pos = 0;
      while (pos < code.size() && ++code[pos] == n) code[pos++] = 0;
      if (pos == code.size()) break;
    }
  }

  std::vector<std::uint32_t> lab(n, 0);
  std::vector<std::vector<std::size_t>> adj(n);
  std::vector<std::uint32_t> pmax(n);
  std::vector<std::size_t> parent(n), stack;
  for (const auto& edges : trees) {
    for (auto& a : adj) a.clear();
    for (auto [u, v] : edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    std::fill(lab.begin(), lab.end(), 0);
    while (true) {
      bool generating = true;
      for (auto [u, v] : edges) generating = generating && (lab[u] > 0 || lab[v] > 0);
      bool match = generating;
      for (std::size_t s = 0; s < n && match; ++s) {
        pmax[s] = lab[s];
        parent[s] = s;
        stack.assign(1, s);
        while (!stack.empty()) {
          const std::size_t v = stack.back();
          stack.pop_back();
          for (std::size_t w : adj[v]) {
            if (w == parent[v]) continue;
            parent[w] = v;
            pmax[w] = std::max(pmax[v], lab[w]);
            stack.push_back(w);
          }
        }
        for (std::size_t t = 0; t < n && match; ++t)
          if (t != s) match = pmax[t] == target(s, t);
      }
      if (match) return build(edges, lab);

      std::size_t pos = 0;
      while (pos < n && ++lab[pos] > cap[pos]) lab[pos++] = 0;
      if (pos == n) break;
    }
  }
  return std::nullopt;
}

LabeledTree fixture_t1() {
  return LabeledTree({"v1", "v2", "v3", "v4", "v5"}, {2, 2, 3, 1, 1},
                     {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}, {"v4", "v5"}});
}

LabeledTree fixture_t2() {
  return LabeledTree({"v1", "v2", "v3", "v4", "v5"}, {2, 2, 3, 2, 2},
                     {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}, {"v4", "v5"}});
}

TreeGenerationReport verify_tree_generation() {
  TreeGenerationReport report;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& s : enumerate_classes(n)) {
      TreeGenerationEntry e{s, canonical_form(s).digest()};
      e.us = is_us(s);
      e.tree_generable = find_generating_tree(s).has_value();
      if (n == 4) e.four_point_criterion = four_point_tree_generable(s);
      e.discrepancy = e.us != e.tree_generable ||
                      (e.four_point_criterion && *e.four_point_criterion != e.tree_generable);
      report.discrepancies += e.discrepancy ? 1 : 0;
      report.classes.push_back(std::move(e));
    }
  }
  for (const auto& tree : {fixture_t1(), fixture_t2()}) {
    const auto s = generate_ultrametric(tree);
    TreeGenerationEntry e{s, canonical_form(s).digest()};
    e.us = is_us(s);
    e.tree_generable = find_generating_tree(s).has_value();
    report.boundary_witnesses += (e.tree_generable && !e.us) ? 1 : 0;
    report.five_point.push_back(std::move(e));
  }
  return report;
}

std::string_view to_string(ProbeOutcome outcome) noexcept {
  switch (outcome) {
    case ProbeOutcome::TriviallyUs: return "TriviallyUs";
    case ProbeOutcome::Embedded: return "Embedded";
    case ProbeOutcome::Unresolved: return "Unresolved";
  }
  return "Unknown";
}

ProbeReport center_extension_probe(const FiniteSemimetricSpace& space, std::string added_point) {
  if (!is_ultrametric(space))
    throw Error(ErrorCode::PreconditionFailed, "probe needs an ultrametric space");
  if (const auto q = find_forbidden_quadruple(space))
    throw Error(ErrorCode::PreconditionFailed,
                "space contains a forbidden quadruple on " + q->x + ", " + q->y + ", " + q->z +
                    ", " + q->w);
  ProbeReport report;
  const std::size_t n = space.size();
  if (n == 1) {
    report.outcome = ProbeOutcome::TriviallyUs;
    return report;
  }

  std::vector<std::string> names = space.points();
  names.push_back(std::move(added_point));
  std::vector<std::vector<Rational>> m = space.matrix();
  m.emplace_back(n + 1);
  for (std::size_t x = 0; x < n; ++x) {
    Rational nearest = space.d(x, x == 0 ? 1 : 0);
    for (std::size_t y = 0; y < n; ++y)
      if (y != x) nearest = std::min(nearest, space.d(x, y));
    m[x].push_back(nearest);
    m[n][x] = nearest;
  }
  auto extension = validate_semimetric(std::move(names), m);
  report.extension_ultrametric = static_cast<bool>(is_ultrametric(extension));
  if (report.extension_ultrametric) {
    const auto centers = find_centers(extension).centers;
    report.added_point_is_center =
        std::find(centers.begin(), centers.end(), extension.name(n)) != centers.end();
  }
  report.outcome = report.extension_ultrametric && report.added_point_is_center
                       ? ProbeOutcome::Embedded
                       : ProbeOutcome::Unresolved;
  report.extension = std::move(extension);
  return report;
}

}  // namespace ustar
