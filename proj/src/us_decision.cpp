#include "ustar/us_decision.hpp"

#include <algorithm>
#include <array>

#include "ustar/error.hpp"
#include "ustar/rank_matrix.hpp"
#include "ustar/weak_similarity.hpp"

namespace ustar {
namespace {

FiniteSemimetricSpace four_point_fixture(long d13) {
  const Rational three(3);
  std::vector<std::vector<Rational>> m(4, std::vector<Rational>(4, three));
  for (int i = 0; i < 4; ++i) m[i][i] = 0;
  m[0][2] = m[2][0] = d13;
  m[1][3] = m[3][1] = 2;
  return validate_semimetric(default_point_names(4), m);
}

void require_ultrametric(const FiniteSemimetricSpace& space) {
  if (const auto check = is_ultrametric(space); !check) {
    const auto& w = *check.witness;
    throw Error(ErrorCode::NotUltrametric,
                "d(" + w.x + ", " + w.y + ") = " + format_rational(w.lhs) + " > max via " + w.z +
                    " = " + format_rational(w.rhs));
  }
}

std::vector<std::uint8_t> center_flags(const RankMatrix& ranks) {
  const std::size_t n = ranks.size();
  std::vector<std::uint32_t> row_min(n);
  std::vector<std::uint8_t> flags(n);
  kernels::offdiag_row_min(ranks.view(), row_min);
  kernels::center_mask(ranks.view(), row_min, flags);
  return flags;
}

// Pairs {a, c} and {b, d} are the small pairs.
QuadrupleReport normalized(const FiniteSemimetricSpace& s, std::size_t a, std::size_t c,
                           std::size_t b, std::size_t d) {
  if (c < a) std::swap(a, c);
  if (d < b) std::swap(b, d);
  const bool swap_pairs = s.d(b, d) < s.d(a, c) || (s.d(b, d) == s.d(a, c) && b < a);
  if (swap_pairs) {
    std::swap(a, b);
    std::swap(c, d);
  }
  QuadrupleReport r;
  r.x = s.name(a);
  r.z = s.name(c);
  r.y = s.name(b);
  r.w = s.name(d);
  r.big = s.d(a, b);
  r.small1 = s.d(a, c);
  r.small2 = s.d(b, d);
  r.kind = r.small1 == r.small2 ? QuadrupleKind::Y4 : QuadrupleKind::X4;
  return r;
}

bool valid_quadruple(const FiniteSemimetricSpace& s, std::size_t x, std::size_t z, std::size_t y,
                     std::size_t w) {
  const std::array<std::size_t, 4> pts{x, y, z, w};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (pts[i] == pts[j]) return false;
  const Rational& big = s.d(x, y);
  return s.d(x, w) == big && s.d(z, y) == big && s.d(z, w) == big && s.d(x, z) < big &&
         s.d(y, w) < big;
}

}  // namespace

std::string_view to_string(QuadrupleKind kind) noexcept {
  return kind == QuadrupleKind::X4 ? "X4" : "Y4";
}

FiniteSemimetricSpace fixture_x4() { return four_point_fixture(1); }
FiniteSemimetricSpace fixture_y4() { return four_point_fixture(2); }

CenterReport find_centers(const FiniteSemimetricSpace& space) {
  require_ultrametric(space);
  CenterReport report;
  if (space.size() == 1) {
    report.centers.push_back(space.name(0));
    return report;
  }
  const auto flags = center_flags(rank_matrix(space));
  for (std::size_t i = 0; i < space.size(); ++i)
    if (flags[i]) report.centers.push_back(space.name(i));
  return report;
}

bool is_us(const FiniteSemimetricSpace& space) { return !find_centers(space).centers.empty(); }

LabeledStarGraph build_star(const FiniteSemimetricSpace& space, std::string_view x0) {
  const auto center = space.index_of(x0);
  if (!center) throw Error(ErrorCode::UnknownPoint, "'" + std::string(x0) + "'");
  const auto report = find_centers(space);
  if (std::find(report.centers.begin(), report.centers.end(), x0) == report.centers.end())
    throw Error(ErrorCode::NotACenter, "'" + std::string(x0) + "'");

  std::vector<std::string> leaves;
  std::vector<Rational> labels;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (i == *center) continue;
    leaves.push_back(space.name(i));
    labels.push_back(space.d(i, *center));
  }
  return LabeledStarGraph(std::string(x0), Rational(0), std::move(leaves), std::move(labels));
}

std::optional<QuadrupleReport> constructive_forbidden_quadruple(
    const FiniteSemimetricSpace& space) {
  const std::size_t n = space.size();
  if (n < 4) return std::nullopt;

  std::vector<Rational> nearest(n);
  for (std::size_t x = 0; x < n; ++x) {
    nearest[x] = space.d(x, x == 0 ? 1 : 0);
    for (std::size_t y = 0; y < n; ++y)
      if (y != x) nearest[x] = std::min(nearest[x], space.d(x, y));
  }

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      const Rational& dxy = space.d(x, y);
      if (!(dxy > std::max(nearest[x], nearest[y]))) continue;
      std::optional<std::size_t> z, w;
      for (std::size_t c = 0; c < n && !z; ++c)
        if (c != x && space.d(x, c) < dxy) z = c;
      for (std::size_t c = 0; c < n && !w; ++c)
        if (c != y && space.d(y, c) < dxy) w = c;
      if (!z || !w || !valid_quadruple(space, x, *z, y, *w)) return std::nullopt;
      return normalized(space, x, *z, y, *w);
    }
  }
  return std::nullopt;
}

std::optional<QuadrupleReport> exhaustive_forbidden_quadruple(
    const FiniteSemimetricSpace& space) {
  const std::size_t n = space.size();
  if (n < 4) return std::nullopt;
  const RankMatrix x4 = rank_matrix(fixture_x4());
  const RankMatrix y4 = rank_matrix(fixture_y4());

  std::array<std::size_t, 4> idx{};
  for (idx[0] = 0; idx[0] < n; ++idx[0])
    for (idx[1] = idx[0] + 1; idx[1] < n; ++idx[1])
      for (idx[2] = idx[1] + 1; idx[2] < n; ++idx[2])
        for (idx[3] = idx[2] + 1; idx[3] < n; ++idx[3]) {
          const RankMatrix sub = rank_matrix(restrict_indices(space, idx));
          for (const RankMatrix* fixture : {&x4, &y4}) {
            // phi maps subspace points onto fixture points p1..p4, whose
            // small pairs are {p1, p3} and {p2, p4}.
            const auto sim = weakly_similar(sub, *fixture);
            if (!sim) continue;
            std::array<std::size_t, 4> at{};
            for (std::size_t k = 0; k < 4; ++k) at[(*sim.phi)[k]] = idx[k];
            return normalized(space, at[0], at[2], at[1], at[3]);
          }
        }
  return std::nullopt;
}

std::optional<QuadrupleReport> find_forbidden_quadruple(const FiniteSemimetricSpace& space) {
  const bool us = is_us(space);  // also rejects non-ultrametric input
  auto found = constructive_forbidden_quadruple(space);
  if (found && us)
    throw Error(ErrorCode::InternalInconsistency,
                "forbidden quadruple found in a space that has a center");
  if (found || us) return found;
  found = exhaustive_forbidden_quadruple(space);
  if (!found)
    throw Error(ErrorCode::InternalInconsistency,
                "space has no center but contains no forbidden quadruple");
  return found;
}

bool four_point_tree_generable(const FiniteSemimetricSpace& space) {
  if (space.size() != 4)
    throw Error(ErrorCode::NotFourPoints, std::to_string(space.size()) + " points");
  require_ultrametric(space);
  Rational diameter = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) diameter = std::max(diameter, space.d(i, j));
  for (std::size_t c = 0; c < 4; ++c) {
    bool all = true;
    for (std::size_t x = 0; x < 4 && all; ++x)
      if (x != c) all = space.d(c, x) == diameter;
    if (all) return true;
  }
  return false;
}

UsStatements evaluate_us_statements(const FiniteSemimetricSpace& space) {
  const std::size_t n = space.size();
  UsStatements out;
  out.equivalence_applies = n != 3;
  out.in_us = is_ultrametric(space) && is_us(space);
  out.every4_us = true;
  out.every4_tree = true;
  std::array<std::size_t, 4> idx{};
  for (idx[0] = 0; idx[0] < n; ++idx[0])
    for (idx[1] = idx[0] + 1; idx[1] < n; ++idx[1])
      for (idx[2] = idx[1] + 1; idx[2] < n; ++idx[2])
        for (idx[3] = idx[2] + 1; idx[3] < n; ++idx[3]) {
          const auto sub = restrict_indices(space, idx);
          // A space weakly similar to an ultrametric one is ultrametric, and
          // both four-point criteria only compare distances.
          if (!is_ultrametric(sub)) {
            out.every4_us = out.every4_tree = false;
            return out;
          }
          out.every4_us = out.every4_us && is_us(sub);
          out.every4_tree = out.every4_tree && four_point_tree_generable(sub);
        }
  return out;
}

UsStatements semimetric_us_check(const FiniteSemimetricSpace& space) {
  if (space.size() == 3)
    throw Error(ErrorCode::CardinalityThree,
                "the three US statements are not equivalent for three-point spaces");
  const auto out = evaluate_us_statements(space);
  if (!out.agree())
    throw Error(ErrorCode::InternalInconsistency, "US statements (i), (ii), (iii) disagree");
  return out;
}

}  // namespace ustar
