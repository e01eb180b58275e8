#include "ustar/infinite_models.hpp"

#include <algorithm>

#include "ustar/error.hpp"

namespace ustar {

StarSpec::StarSpec(Rational center_label, std::vector<Rational> exceptional, TailLaw tail)
    : center_label_(std::move(center_label)),
      exceptional_(std::move(exceptional)),
      tail_(std::move(tail)) {
  if (center_label_ < 0)
    throw Error(ErrorCode::NegativeLabel, "center label " + format_rational(center_label_));
  for (const auto& l : exceptional_)
    if (l < 0) throw Error(ErrorCode::NegativeLabel, "leaf label " + format_rational(l));
  if (center_label_ > 0) return;

  auto zero_leaf = [] {
    throw Error(ErrorCode::NotGenerating, "center and a leaf are both labeled 0");
  };
  for (const auto& l : exceptional_)
    if (l == 0) zero_leaf();
  if (tail_.is_finite()) {
    for (const auto& l : tail_.prefix(*tail_.length()))
      if (l == 0) zero_leaf();
  } else if (const auto* k = std::get_if<Constant>(&tail_.kind()); k && k->q == 0) {
    zero_leaf();
  }
}

std::optional<std::uint64_t> StarSpec::leaf_count() const {
  if (const auto len = tail_.length()) return exceptional_.size() + *len;
  return std::nullopt;
}

Rational StarSpec::leaf_label(std::uint64_t k) const {
  if (k == 0) throw Error(ErrorCode::IndexOutOfRange, "leaves are 1-based");
  if (k <= exceptional_.size()) return exceptional_[k - 1];
  return tail_.at(k - exceptional_.size());
}

std::vector<Rational> StarSpec::leaf_labels(std::uint64_t count) const {
  if (const auto len = leaf_count()) count = std::min(count, *len);
  std::vector<Rational> out;
  out.reserve(count);
  for (std::uint64_t k = 1; k <= count; ++k) out.push_back(leaf_label(k));
  return out;
}

LabeledStarGraph StarSpec::truncate(std::uint64_t k, std::string center) const {
  std::vector<Rational> labels = leaf_labels(k);
  std::vector<std::string> leaves;
  for (std::size_t i = 1; i <= labels.size(); ++i) leaves.push_back("x" + std::to_string(i));
  return LabeledStarGraph(std::move(center), center_label_, std::move(leaves), std::move(labels));
}

std::string_view to_string(CompactnessReason reason) noexcept {
  switch (reason) {
    case CompactnessReason::Compact: return "Compact";
    case CompactnessReason::FiniteSpace: return "FiniteSpace";
    case CompactnessReason::CenterLabelPositive: return "CenterLabelPositive";
    case CompactnessReason::InfiniteAEps: return "InfiniteA_eps";
  }
  return "Unknown";
}

CompactnessReport is_compact_star(const StarSpec& spec) {
  if (!spec.is_infinite()) return {true, CompactnessReason::FiniteSpace, std::nullopt};
  if (spec.center_label() > 0)
    return {false, CompactnessReason::CenterLabelPositive, std::nullopt};
  // Finitely many exceptional leaves never make an A_eps infinite, so only the
  // tail matters. Every law in the family has infinite A_eps for some eps
  // exactly when its limit is positive, and eps = limit is such a witness.
  const Rational limit = *spec.tail().limit();
  if (limit > 0) {
    if (spec.tail().count_at_least(limit).has_value())
      throw Error(ErrorCode::InternalInconsistency, "tail law limit/count mismatch");
    return {false, CompactnessReason::InfiniteAEps, limit};
  }
  return {true, CompactnessReason::Compact, std::nullopt};
}

RaySpec star_to_ray(const StarSpec& spec) {
  if (!spec.is_infinite()) throw Error(ErrorCode::FiniteSpec, "star has finitely many leaves");
  if (const auto c = is_compact_star(spec); !c)
    throw Error(ErrorCode::NotCompact, std::string(to_string(c.reason)));

  std::vector<Rational> pending = spec.exceptional();
  std::stable_sort(pending.begin(), pending.end(), std::greater<>());
  // Every exceptional label is positive and the tail tends to 0, so each one
  // is overtaken after finitely many tail terms.
  std::vector<Rational> prefix;
  std::uint64_t consumed = 0;
  for (const auto& label : pending) {
    while (spec.tail().at(consumed + 1) > label) prefix.push_back(spec.tail().at(++consumed));
    prefix.push_back(label);
  }
  return RaySpec(std::move(prefix), spec.tail().skipped(consumed), true);
}

Rational CompletionModel::distance(std::uint64_t a, std::uint64_t b) const {
  if (a == b) return 0;
  if (a == 0) return ray.label(b);
  if (b == 0) return ray.label(a);
  return ray.label(std::min(a, b));
}

FiniteSemimetricSpace CompletionModel::truncate(std::uint64_t k) const {
  std::vector<std::string> names{added_point};
  for (std::uint64_t n = 1; n <= k; ++n) names.push_back("x" + std::to_string(n));
  std::vector<std::vector<Rational>> m(k + 1, std::vector<Rational>(k + 1));
  for (std::uint64_t a = 0; a <= k; ++a)
    for (std::uint64_t b = 0; b <= k; ++b) m[a][b] = distance(a, b);
  return validate_semimetric(std::move(names), m);
}

CompletionModel ray_to_completion(const RaySpec& ray) {
  if (!ray.decreasing())
    throw Error(ErrorCode::NotDecreasingToZero, "ray is not flagged decreasing");
  if (!ray.tail() || ray.tail()->is_finite())
    throw Error(ErrorCode::NotDecreasingToZero, "ray is finite");
  if (*ray.tail()->limit() != 0)
    throw Error(ErrorCode::NotDecreasingToZero,
                "labels tend to " + format_rational(*ray.tail()->limit()));
  return CompletionModel{"x0", StarSpec(Rational(0), ray.prefix(), *ray.tail()), ray};
}

Rational dplus(const Rational& p, const Rational& q) {
  if (p < 0 || q < 0)
    throw Error(ErrorCode::NegativeInput, format_rational(p < 0 ? p : q));
  if (p == q) return 0;
  return std::max(p, q);
}

std::string_view to_string(DplusVerdict verdict) noexcept {
  switch (verdict) {
    case DplusVerdict::Finite: return "Finite";
    case DplusVerdict::CompactSequence: return "CompactSequence";
    case DplusVerdict::MissingLimitPoint: return "MissingLimitPoint";
    case DplusVerdict::NotDecreasingToZero: return "NotDecreasingToZero";
  }
  return "Unknown";
}

DplusCompactness dplus_compact_subset(const DplusSubset& candidate,
                                      std::uint64_t witness_terms) {
  auto malformed = [](const std::string& why) {
    throw Error(ErrorCode::MalformedPresentation, why);
  };
  const auto& head = candidate.head;
  for (std::size_t i = 0; i < head.size(); ++i) {
    if (head[i] <= 0) malformed("head values must be positive; use include_zero for 0");
    if (i > 0 && head[i] >= head[i - 1]) malformed("head must be strictly decreasing");
  }
  const TailLaw* tail = candidate.tail ? &*candidate.tail : nullptr;
  if (tail && tail->length() == std::uint64_t{0}) tail = nullptr;
  if (tail) {
    if (!tail->non_increasing()) malformed("tail must be non-increasing");
    const Rational first = tail->at(1);
    if (first <= 0) malformed("tail values must be positive");
    if (!head.empty() && first >= head.back()) malformed("tail must continue below the head");
    if (tail->is_finite()) {
      if (!tail->strictly_decreasing()) malformed("finite tail must be strictly decreasing");
      if (tail->at(*tail->length()) <= 0) malformed("tail values must be positive");
    }
  }

  if (!tail || tail->is_finite()) return {true, DplusVerdict::Finite, {}};

  std::vector<Rational> prefix = head;
  for (const auto& v : tail->prefix(witness_terms)) prefix.push_back(v);
  if (!tail->strictly_decreasing() || *tail->limit() != 0)
    return {false, DplusVerdict::NotDecreasingToZero, std::move(prefix)};
  if (!candidate.include_zero) return {false, DplusVerdict::MissingLimitPoint, std::move(prefix)};
  return {true, DplusVerdict::CompactSequence, {}};
}

FiniteSemimetricSpace dplus_space(const std::vector<Rational>& sample) {
  if (sample.empty()) throw Error(ErrorCode::EmptySpace, "empty sample");
  std::vector<std::string> names;
  std::vector<std::vector<Rational>> m(sample.size(), std::vector<Rational>(sample.size()));
  for (std::size_t i = 0; i < sample.size(); ++i) {
    names.push_back(format_rational(sample[i]));
    for (std::size_t j = 0; j < sample.size(); ++j) m[i][j] = dplus(sample[i], sample[j]);
  }
  return validate_semimetric(std::move(names), m);
}

}  // namespace ustar
