#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "ustar/rational.hpp"

namespace ustar {

/// Closed family of label sequences l(x_1), l(x_2), ... used to present
/// infinite stars and rays finitely. New kinds must keep `count_at_least`
/// exact, since compactness is decided from it.
struct Harmonic {
  Rational c;  // l(x_n) = c / n
};
struct Geometric {
  Rational a;  // l(x_n) = a * r^n
  Rational r;
};
struct Constant {
  Rational q;
};
struct ExplicitFinite {
  std::vector<Rational> values;
};

class TailLaw {
 public:
  using Kind = std::variant<Harmonic, Geometric, Constant, ExplicitFinite>;

  /// Validates parameters: c > 0, a > 0, 0 < r < 1, q >= 0, finite values >= 0.
  /// `skip` drops the first `skip` terms of the underlying law.
  explicit TailLaw(Kind kind, std::uint64_t skip = 0);

  static TailLaw empty() { return TailLaw(ExplicitFinite{}); }

  const Kind& kind() const noexcept { return kind_; }
  std::uint64_t skip() const noexcept { return skip_; }

  bool is_finite() const noexcept { return std::holds_alternative<ExplicitFinite>(kind_); }
  /// Number of terms for a finite law; nullopt for infinite ones.
  std::optional<std::uint64_t> length() const;

  /// Term n (1-based). Throws IndexOutOfRange past the end of a finite law.
  Rational at(std::uint64_t n) const;

  /// Limit of the sequence; nullopt for finite laws.
  std::optional<Rational> limit() const;

  /// l(x_n) >= l(x_{n+1}) for every represented n.
  bool non_increasing() const;
  /// l(x_n) > l(x_{n+1}) for every represented n.
  bool strictly_decreasing() const;

  /// |{n : l(x_n) >= eps}| for eps > 0, or nullopt when that set is infinite.
  std::optional<std::uint64_t> count_at_least(const Rational& eps) const;

  /// Same law with `extra` more leading terms dropped.
  TailLaw skipped(std::uint64_t extra) const;

  std::vector<Rational> prefix(std::uint64_t count) const;

  friend bool operator==(const TailLaw&, const TailLaw&);

 private:
  Kind kind_;
  std::uint64_t skip_ = 0;
};

bool operator==(const Harmonic&, const Harmonic&);
bool operator==(const Geometric&, const Geometric&);
bool operator==(const Constant&, const Constant&);
bool operator==(const ExplicitFinite&, const ExplicitFinite&);

}  // namespace ustar
