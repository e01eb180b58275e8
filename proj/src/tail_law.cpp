#include "ustar/tail_law.hpp"

#include <cstdint>

#include "ustar/error.hpp"

namespace ustar {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

Rational power(const Rational& base, std::uint64_t exponent) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

void check(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidTailLaw, what);
}

}  // namespace

TailLaw::TailLaw(Kind kind, std::uint64_t skip) : kind_(std::move(kind)), skip_(skip) {
  std::visit(Overloaded{
                 [](const Harmonic& h) { check(h.c > 0, "harmonic law needs c > 0"); },
                 [](const Geometric& g) {
                   check(g.a > 0, "geometric law needs a > 0");
                   check(g.r > 0 && g.r < 1, "geometric law needs 0 < r < 1");
                 },
                 [](const Constant& k) { check(k.q >= 0, "constant law needs q >= 0"); },
                 [](const ExplicitFinite& f) {
                   for (const auto& v : f.values) check(v >= 0, "finite law values must be >= 0");
                 },
             },
             kind_);
}

std::optional<std::uint64_t> TailLaw::length() const {
  if (const auto* f = std::get_if<ExplicitFinite>(&kind_))
    return f->values.size() > skip_ ? f->values.size() - skip_ : 0;
  return std::nullopt;
}

Rational TailLaw::at(std::uint64_t n) const {
  if (n == 0) throw Error(ErrorCode::IndexOutOfRange, "tail terms are 1-based");
  const std::uint64_t m = n + skip_;
  return std::visit(Overloaded{
                        [&](const Harmonic& h) -> Rational {
                          Rational out = h.c / Rational(mpz_class(std::to_string(m)));
                          out.canonicalize();
                          return out;
                        },
                        [&](const Geometric& g) -> Rational {
                          Rational out = g.a * power(g.r, m);
                          out.canonicalize();
                          return out;
                        },
                        [](const Constant& k) -> Rational { return k.q; },
                        [&](const ExplicitFinite& f) -> Rational {
                          if (m > f.values.size())
                            throw Error(ErrorCode::IndexOutOfRange,
                                        "term " + std::to_string(n) + " of a finite law");
                          return f.values[m - 1];
                        },
                    },
                    kind_);
}

std::optional<Rational> TailLaw::limit() const {
  return std::visit(Overloaded{
                        [](const Harmonic&) -> std::optional<Rational> { return Rational(0); },
                        [](const Geometric&) -> std::optional<Rational> { return Rational(0); },
                        [](const Constant& k) -> std::optional<Rational> { return k.q; },
                        [](const ExplicitFinite&) -> std::optional<Rational> {
                          return std::nullopt;
                        },
                    },
                    kind_);
}

bool TailLaw::non_increasing() const {
  if (const auto* f = std::get_if<ExplicitFinite>(&kind_)) {
    for (std::size_t i = skip_ + 1; i < f->values.size(); ++i)
      if (f->values[i] > f->values[i - 1]) return false;
  }
  return true;
}

bool TailLaw::strictly_decreasing() const {
  if (std::holds_alternative<Constant>(kind_)) return false;
  if (const auto* f = std::get_if<ExplicitFinite>(&kind_)) {
    for (std::size_t i = skip_ + 1; i < f->values.size(); ++i)
      if (f->values[i] >= f->values[i - 1]) return false;
  }
  return true;
}

std::optional<std::uint64_t> TailLaw::count_at_least(const Rational& eps) const {
  if (eps <= 0) throw Error(ErrorCode::PreconditionFailed, "count_at_least needs eps > 0");
  const auto after_skip = [this](std::uint64_t upto) -> std::uint64_t {
    return upto > skip_ ? upto - skip_ : 0;
  };
  return std::visit(
      Overloaded{
          [&](const Harmonic& h) -> std::optional<std::uint64_t> {
            // c/m >= eps  <=>  m <= c/eps
            const Rational bound = h.c / eps;
            const mpz_class floor_bound = bound.get_num() / bound.get_den();
            if (!floor_bound.fits_ulong_p()) return after_skip(UINT64_MAX);
            return after_skip(floor_bound.get_ui());
          },
          [&](const Geometric& g) -> std::optional<std::uint64_t> {
            std::uint64_t last = 0;
            Rational term = g.a * g.r;
            while (term >= eps) {
              ++last;
              term *= g.r;
            }
            return after_skip(last);
          },
          [&](const Constant& k) -> std::optional<std::uint64_t> {
            if (k.q >= eps) return std::nullopt;
            return 0;
          },
          [&](const ExplicitFinite& f) -> std::optional<std::uint64_t> {
            std::uint64_t count = 0;
            for (std::size_t i = skip_; i < f.values.size(); ++i)
              if (f.values[i] >= eps) ++count;
            return count;
          },
      },
      kind_);
}

TailLaw TailLaw::skipped(std::uint64_t extra) const { return TailLaw(kind_, skip_ + extra); }

std::vector<Rational> TailLaw::prefix(std::uint64_t count) const {
  if (const auto len = length()) count = std::min(count, *len);
  std::vector<Rational> out;
  out.reserve(count);
  for (std::uint64_t n = 1; n <= count; ++n) out.push_back(at(n));
  return out;
}

bool operator==(const Harmonic& a, const Harmonic& b) { return a.c == b.c; }
bool operator==(const Geometric& a, const Geometric& b) { return a.a == b.a && a.r == b.r; }
bool operator==(const Constant& a, const Constant& b) { return a.q == b.q; }
bool operator==(const ExplicitFinite& a, const ExplicitFinite& b) { return a.values == b.values; }

bool operator==(const TailLaw& a, const TailLaw& b) {
  return a.skip_ == b.skip_ && a.kind_ == b.kind_;
}

}  // namespace ustar
