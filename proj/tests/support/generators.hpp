#pragma once

// Random generators and brute-force oracles shared by the test suites. The
// oracles work straight from definitions on exact rationals and deliberately
// avoid the library's rank kernels and search routines.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ustar/labeled_tree.hpp"
#include "ustar/metric_space.hpp"
#include "ustar/rational.hpp"

namespace ustar::testing {

using Rng = std::mt19937_64;

/// p/q with 1 <= p <= max_num, 1 <= q <= max_den.
inline Rational random_positive_rational(Rng& rng, long max_num = 20, long max_den = 6) {
  std::uniform_int_distribution<long> num(1, max_num), den(1, max_den);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline std::vector<std::string> names(std::size_t n, const std::string& prefix = "v") {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + 1));
  return out;
}

/// Star with center "c"; center label 0 or (rarely) positive; leaf labels
/// positive rationals, with deliberate ties.
inline LabeledStarGraph random_star(Rng& rng, std::size_t leaves, bool allow_center_label = true) {
  std::vector<Rational> labels;
  for (std::size_t i = 0; i < leaves; ++i) {
    if (!labels.empty() && rng() % 4 == 0)
      labels.push_back(labels[rng() % labels.size()]);
    else
      labels.push_back(random_positive_rational(rng));
  }
  Rational center = 0;
  if (allow_center_label && rng() % 3 == 0) center = random_positive_rational(rng, 6, 4);
  return LabeledStarGraph("c", center, names(leaves), labels);
}

/// Uniform random labeled tree (random attachment) with labels from
/// {0} and small positive rationals, repaired so every edge has a positive end.
inline LabeledTree random_generating_tree(Rng& rng, std::size_t n) {
  std::vector<std::string> vs = names(n);
  std::vector<NamedEdge> edges;
  std::vector<Rational> labels(n);
  for (std::size_t i = 0; i < n; ++i)
    labels[i] = rng() % 3 == 0 ? Rational(0) : random_positive_rational(rng, 8, 2);
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t parent = rng() % i;
    edges.emplace_back(vs[parent], vs[i]);
    if (labels[parent] == 0 && labels[i] == 0) labels[i] = random_positive_rational(rng, 8, 2);
  }
  return LabeledTree(vs, labels, edges);
}

/// Symmetric matrix with small integer distances; ultrametric by chance often
/// enough for mixed pools.
inline FiniteSemimetricSpace random_semimetric(Rng& rng, std::size_t n, long max_value = 4) {
  std::uniform_int_distribution<long> value(1, max_value);
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m[i][j] = m[j][i] = value(rng);
  return validate_semimetric(names(n, "p"), m);
}

inline FiniteSemimetricSpace random_ultrametric(Rng& rng, std::size_t n) {
  if (rng() % 2 == 0) return generate_ultrametric(random_generating_tree(rng, n));
  // Hierarchical merge: repeatedly join random clusters at increasing heights.
  std::vector<std::vector<std::size_t>> clusters;
  for (std::size_t i = 0; i < n; ++i) clusters.push_back({i});
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, 0));
  Rational height = 0;
  while (clusters.size() > 1) {
    height += random_positive_rational(rng, 3, 3);
    std::shuffle(clusters.begin(), clusters.end(), rng);
    const std::size_t take = 2 + rng() % std::min<std::size_t>(clusters.size() - 1, 2);
    std::vector<std::size_t> merged;
    for (std::size_t c = 0; c < take; ++c) {
      for (std::size_t a : merged)
        for (std::size_t b : clusters[c]) m[a][b] = m[b][a] = height;
      merged.insert(merged.end(), clusters[c].begin(), clusters[c].end());
    }
    clusters.erase(clusters.begin(), clusters.begin() + static_cast<long>(take));
    clusters.push_back(std::move(merged));
  }
  return validate_semimetric(names(n, "p"), m);
}

/// The same space with points permuted (names travel with their points).
inline FiniteSemimetricSpace permuted(const FiniteSemimetricSpace& s, Rng& rng) {
  std::vector<std::size_t> perm(s.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::string> nm;
  std::vector<std::vector<Rational>> m(s.size(), std::vector<Rational>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i) {
    nm.push_back(s.name(perm[i]));
    for (std::size_t j = 0; j < s.size(); ++j) m[i][j] = s.d(perm[i], perm[j]);
  }
  return validate_semimetric(nm, m);
}

/// Applies a strictly increasing map to every off-diagonal distance.
template <class Fn>
FiniteSemimetricSpace transformed(const FiniteSemimetricSpace& s, Fn fn) {
  auto m = s.matrix();
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (i != j) m[i][j] = fn(m[i][j]);
  return validate_semimetric(s.points(), m);
}

// ---- oracles -------------------------------------------------------------

/// First violating ordered triple, straight from the definition.
inline std::optional<std::array<std::size_t, 3>> oracle_triangle_violation(
    const FiniteSemimetricSpace& s) {
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = 0; y < s.size(); ++y)
      for (std::size_t z = 0; z < s.size(); ++z)
        if (s.d(x, y) > std::max(s.d(x, z), s.d(z, y))) return std::array{x, y, z};
  return std::nullopt;
}

/// Points x0 with d(x0, x) <= d(y, x) whenever x0 != x != y.
inline std::vector<std::size_t> oracle_centers(const FiniteSemimetricSpace& s) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < s.size(); ++c) {
    bool ok = true;
    for (std::size_t x = 0; x < s.size() && ok; ++x)
      for (std::size_t y = 0; y < s.size() && ok; ++y)
        if (c != x && x != y && s.d(c, x) > s.d(y, x)) ok = false;
    if (ok) out.push_back(c);
  }
  return out;
}

/// Weak similarity by trying every permutation and checking that the induced
/// distance correspondence is a strictly increasing bijection of spectra.
inline bool oracle_weakly_similar(const FiniteSemimetricSpace& a, const FiniteSemimetricSpace& b) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        for (std::size_t k = 0; k < n && ok; ++k)
          for (std::size_t l = 0; l < n && ok; ++l) {
            const int da = (a.d(i, j) > a.d(k, l)) - (a.d(i, j) < a.d(k, l));
            const int db = (b.d(perm[i], perm[j]) > b.d(perm[k], perm[l])) -
                           (b.d(perm[i], perm[j]) < b.d(perm[k], perm[l]));
            ok = da == db;
          }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Forbidden quadruple existence straight from the pattern: four distinct
/// points, two pairs, all cross distances equal and above both pair distances.
inline bool oracle_has_forbidden_quadruple(const FiniteSemimetricSpace& s) {
  const std::size_t n = s.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
          // pairs {a, c} and {b, d}
          const Rational& big = s.d(a, b);
          if (s.d(a, d) == big && s.d(c, b) == big && s.d(c, d) == big && s.d(a, c) < big &&
              s.d(b, d) < big)
            return true;
        }
  return false;
}

/// Path-max distance by explicit path search between two vertices.
inline Rational oracle_path_max(const LabeledTree& t, std::size_t u, std::size_t v) {
  if (u == v) return 0;
  std::vector<std::size_t> parent(t.size(), t.size());
  std::vector<std::size_t> queue{u};
  parent[u] = u;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (std::size_t w : t.neighbors(queue[head]))
      if (parent[w] == t.size()) {
        parent[w] = queue[head];
        queue.push_back(w);
      }
  Rational best = t.label(v);
  for (std::size_t x = v; x != u; x = parent[x]) best = std::max(best, t.label(parent[x]));
  return best;
}

}  // namespace ustar::testing
