#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "ustar/error.hpp"
#include "ustar/infinite_models.hpp"
#include "ustar/us_decision.hpp"

using namespace ustar;
using namespace ustar::testing;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InternalInconsistency;
}

const Rational half = make_rational(1, 2);
const Rational third = make_rational(1, 3);
const Rational quarter = make_rational(1, 4);

}  // namespace

TEST(TailLaw, TermsLimitsAndCounts) {
  const TailLaw harmonic(Harmonic{1});
  EXPECT_EQ(harmonic.prefix(3), (std::vector<Rational>{1, half, third}));
  EXPECT_EQ(*harmonic.limit(), 0);
  EXPECT_EQ(harmonic.count_at_least(quarter), 4u);
  EXPECT_TRUE(harmonic.strictly_decreasing());

  const TailLaw geometric(Geometric{1, half});
  EXPECT_EQ(geometric.prefix(3), (std::vector<Rational>{half, quarter, make_rational(1, 8)}));
  EXPECT_EQ(geometric.count_at_least(make_rational(1, 8)), 3u);
  EXPECT_EQ(geometric.skipped(2).at(1), make_rational(1, 8));

  const TailLaw constant(Constant{1});
  EXPECT_FALSE(constant.count_at_least(1).has_value());
  EXPECT_EQ(constant.count_at_least(2), 0u);
  EXPECT_TRUE(constant.non_increasing());
  EXPECT_FALSE(constant.strictly_decreasing());

  const TailLaw finite(ExplicitFinite{{3, 1}});
  EXPECT_EQ(finite.length(), 2u);
  EXPECT_EQ(code_of([&] { finite.at(3); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([] { TailLaw(Geometric{1, 1}); }), ErrorCode::InvalidTailLaw);
  EXPECT_EQ(code_of([] { TailLaw(Harmonic{0}); }), ErrorCode::InvalidTailLaw);
}

TEST(TailLaw, CountAtLeastMatchesTermScan) {
  const std::vector<TailLaw> laws{TailLaw(Harmonic{3}), TailLaw(Geometric{5, third}),
                                  TailLaw(Harmonic{make_rational(7, 2)}, 4),
                                  TailLaw(Geometric{2, make_rational(3, 4)}, 1)};
  Rng rng(61);
  for (const auto& law : laws)
    for (int i = 0; i < 50; ++i) {
      const Rational eps = random_positive_rational(rng, 5, 40);
      const auto count = *law.count_at_least(eps);
      for (std::uint64_t n = 1; n <= count; ++n) ASSERT_GE(law.at(n), eps);
      EXPECT_LT(law.at(count + 1), eps);
    }
}

TEST(Compactness, Examples) {
  const auto harmonic = is_compact_star(StarSpec(0, {}, TailLaw(Harmonic{1})));
  EXPECT_TRUE(harmonic);
  EXPECT_EQ(harmonic.reason, CompactnessReason::Compact);

  const auto centered = is_compact_star(StarSpec(quarter, {}, TailLaw(Harmonic{1})));
  EXPECT_FALSE(centered);
  EXPECT_EQ(centered.reason, CompactnessReason::CenterLabelPositive);

  const auto constant = is_compact_star(StarSpec(0, {}, TailLaw(Constant{1})));
  EXPECT_FALSE(constant);
  EXPECT_EQ(constant.reason, CompactnessReason::InfiniteAEps);
  EXPECT_EQ(constant.eps, Rational(1));

  const auto finite = is_compact_star(StarSpec(0, {1, 2}, TailLaw::empty()));
  EXPECT_TRUE(finite);
  EXPECT_EQ(finite.reason, CompactnessReason::FiniteSpace);

  EXPECT_EQ(code_of([] { StarSpec(0, {0}, TailLaw::empty()); }), ErrorCode::NotGenerating);
  EXPECT_EQ(code_of([] { StarSpec(-1, {}, TailLaw::empty()); }), ErrorCode::NegativeLabel);
}

TEST(StarToRay, MergesExceptionalLabelsIntoTail) {
  const auto ray = star_to_ray(StarSpec(0, {half, 2}, TailLaw(Harmonic{1})));
  EXPECT_TRUE(ray.decreasing());
  EXPECT_EQ(ray.labels(6), (std::vector<Rational>{2, 1, half, half, third, quarter}));
  EXPECT_EQ(ray.label(100), make_rational(1, 98));

  const auto geometric = star_to_ray(StarSpec(0, {}, TailLaw(Geometric{1, half})));
  EXPECT_EQ(geometric.labels(3), (std::vector<Rational>{half, quarter, make_rational(1, 8)}));

  EXPECT_EQ(code_of([] { star_to_ray(StarSpec(0, {1}, TailLaw::empty())); }),
            ErrorCode::FiniteSpec);
  EXPECT_EQ(code_of([] { star_to_ray(StarSpec(0, {}, TailLaw(Constant{1}))); }),
            ErrorCode::NotCompact);
}

TEST(StarToRay, RayMetricEmbedsInTruncatedStar) {
  const std::vector<StarSpec> specs{
      StarSpec(0, {half, 2}, TailLaw(Harmonic{1})),
      StarSpec(0, {third, third, 5}, TailLaw(Geometric{3, half})),
      StarSpec(0, {}, TailLaw(Harmonic{make_rational(2, 3)}, 3)),
  };
  for (const auto& spec : specs) {
    const auto ray = star_to_ray(spec);
    const std::uint64_t k = 24;
    // Enough star leaves to contain the k largest labels.
    const auto star_space = generate_ultrametric(spec.truncate(k + spec.exceptional().size()).to_tree());
    std::vector<Rational> star_labels;
    for (std::size_t i = 1; i < star_space.size(); ++i) star_labels.push_back(star_space.d(0, i));
    std::sort(star_labels.begin(), star_labels.end(), std::greater<>());
    for (std::uint64_t m = 1; m <= k; ++m) {
      EXPECT_EQ(ray.label(m), star_labels[m - 1]);
      for (std::uint64_t n = 1; n <= k; ++n)
        if (m != n) EXPECT_EQ(ray_distance(ray, m, n), std::max(star_labels[m - 1], star_labels[n - 1]));
    }
  }
}

TEST(Completion, GeometricRayDistances) {
  const RaySpec ray({}, TailLaw(Geometric{1, half}), true);
  const auto model = ray_to_completion(ray);
  EXPECT_EQ(model.star.center_label(), 0);
  EXPECT_EQ(model.distance(0, 3), make_rational(1, 8));
  EXPECT_EQ(model.distance(2, 5), quarter);
  EXPECT_EQ(model.distance(4, 4), 0);
  const auto space = model.truncate(10);
  EXPECT_EQ(space.name(0), "x0");
  EXPECT_TRUE(is_ultrametric(space));
  EXPECT_EQ(find_centers(space).centers, (std::vector<std::string>{"x0", "x10"}));
}

TEST(Completion, HarmonicRayGivesHarmonicStar) {
  const auto model = ray_to_completion(RaySpec({}, TailLaw(Harmonic{1}), true));
  EXPECT_EQ(model.star.leaf_labels(4), (std::vector<Rational>{1, half, third, quarter}));
  EXPECT_EQ(code_of([] { ray_to_completion(RaySpec({}, TailLaw(Constant{1}), true)); }),
            ErrorCode::NotDecreasingToZero);
  EXPECT_EQ(code_of([] { ray_to_completion(RaySpec({1, half}, std::nullopt, true)); }),
            ErrorCode::NotDecreasingToZero);
}

TEST(Completion, RoundTripReproducesLabelStream) {
  const std::vector<RaySpec> rays{
      RaySpec({}, TailLaw(Harmonic{1}), true),
      RaySpec({4, 4, 3}, TailLaw(Geometric{2, half}), true),
      RaySpec({2}, TailLaw(Harmonic{3}, 2), true),
  };
  for (const auto& ray : rays) {
    const auto back = star_to_ray(ray_to_completion(ray).star);
    EXPECT_EQ(back.labels(256), ray.labels(256));
  }
}

TEST(Dplus, ValuesAndErrors) {
  EXPECT_EQ(dplus(3, 3), 0);
  EXPECT_EQ(dplus(0, 5), 5);
  EXPECT_EQ(dplus(third, half), half);
  EXPECT_EQ(code_of([] { dplus(-1, 2); }), ErrorCode::NegativeInput);
}

TEST(Dplus, SamplesAreUltrametric) {
  Rng rng(62);
  for (int i = 0; i < 200; ++i) {
    std::vector<Rational> sample;
    const std::size_t n = 1 + rng() % 10;
    if (rng() % 2) sample.push_back(0);
    while (sample.size() < n) {
      const Rational v = random_positive_rational(rng, 30, 10);
      if (std::find(sample.begin(), sample.end(), v) == sample.end()) sample.push_back(v);
    }
    const auto s = dplus_space(sample);
    EXPECT_FALSE(oracle_triangle_violation(s).has_value());
    EXPECT_TRUE(is_ultrametric(s));
  }
}

TEST(Dplus, CompactSubsets) {
  const auto with_zero = dplus_compact_subset({{}, TailLaw(Harmonic{1}), true});
  EXPECT_TRUE(with_zero);
  EXPECT_EQ(with_zero.verdict, DplusVerdict::CompactSequence);

  const auto without_zero = dplus_compact_subset({{}, TailLaw(Harmonic{1}), false});
  EXPECT_FALSE(without_zero);
  EXPECT_EQ(without_zero.verdict, DplusVerdict::MissingLimitPoint);
  EXPECT_EQ(without_zero.witness_prefix.size(), 8u);

  const auto finite = dplus_compact_subset({{3, 1, half}, std::nullopt, false});
  EXPECT_TRUE(finite);
  EXPECT_EQ(finite.verdict, DplusVerdict::Finite);

  for (bool zero : {false, true}) {
    const auto constant = dplus_compact_subset({{}, TailLaw(Constant{1}), zero});
    EXPECT_FALSE(constant);
    EXPECT_EQ(constant.verdict, DplusVerdict::NotDecreasingToZero);
  }
  EXPECT_EQ(code_of([] { dplus_compact_subset({{1, 2}, std::nullopt, false}); }),
            ErrorCode::MalformedPresentation);
}
