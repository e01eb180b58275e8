#include "ustar/weak_similarity.hpp"

#include <algorithm>
#include <cstdio>

namespace ustar {
namespace {

std::vector<std::vector<std::uint32_t>> row_signatures(const RankMatrix& m) {
  std::vector<std::vector<std::uint32_t>> sig(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    sig[i].reserve(m.size());
    for (std::size_t j = 0; j < m.size(); ++j) sig[i].push_back(m(i, j));
    std::sort(sig[i].begin(), sig[i].end());
  }
  return sig;
}

class SimilaritySearch {
 public:
  SimilaritySearch(const RankMatrix& a, const RankMatrix& b)
      : a_(a), b_(b), sig_a_(row_signatures(a)), sig_b_(row_signatures(b)),
        phi_(a.size()), used_(b.size(), false) {}

  bool run() { return assign(0); }
  std::vector<std::size_t> phi() const { return phi_; }

 private:
  bool assign(std::size_t i) {
    if (i == a_.size()) return true;
    for (std::size_t j = 0; j < b_.size(); ++j) {
      if (used_[j] || sig_a_[i] != sig_b_[j]) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < i && consistent; ++k)
        consistent = a_(k, i) == b_(phi_[k], j);
      if (!consistent) continue;
      phi_[i] = j;
      used_[j] = true;
      if (assign(i + 1)) return true;
      used_[j] = false;
    }
    return false;
  }

  const RankMatrix& a_;
  const RankMatrix& b_;
  std::vector<std::vector<std::uint32_t>> sig_a_, sig_b_;
  std::vector<std::size_t> phi_;
  std::vector<bool> used_;
};

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const RankMatrix& m) : m_(m), placed_(m.size(), false) {
    const std::size_t n = m.size();
    twins_.assign(n * n, false);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        bool same = true;
        for (std::size_t x = 0; x < n && same; ++x)
          if (x != a && x != b) same = m(a, x) == m(b, x);
        twins_[a * n + b] = twins_[b * n + a] = same;
      }
  }

  void run() { descend(); }
  const std::vector<std::uint32_t>& best_key() const { return best_key_; }
  const std::vector<std::size_t>& best_order() const { return best_order_; }

 private:
  void descend() {
    const std::size_t n = m_.size();
    const std::size_t depth = order_.size();
    if (depth == n) {
      if (!have_best_ || key_ < best_key_) {
        best_key_ = key_;
        best_order_ = order_;
        have_best_ = true;
      }
      return;
    }

    // The next key segment is the column of ranks from the placed points to
    // the new point; only candidates minimizing it can reach the minimum.
    std::vector<std::uint32_t> min_col;
    std::vector<std::size_t> candidates;
    std::vector<std::uint32_t> col(depth);
    for (std::size_t c = 0; c < n; ++c) {
      if (placed_[c]) continue;
      for (std::size_t k = 0; k < depth; ++k) col[k] = m_(order_[k], c);
      if (candidates.empty() || col < min_col) {
        min_col = col;
        candidates.assign(1, c);
      } else if (col == min_col) {
        candidates.push_back(c);
      }
    }

    const std::size_t base = key_.size();
    key_.insert(key_.end(), min_col.begin(), min_col.end());
    if (have_best_ &&
        std::lexicographical_compare(best_key_.begin(), best_key_.begin() + key_.size(),
                                     key_.begin(), key_.end())) {
      key_.resize(base);
      return;
    }

    std::vector<std::size_t> tried;
    for (std::size_t c : candidates) {
      // Swapping unplaced twins is an automorphism; one representative suffices.
      if (std::any_of(tried.begin(), tried.end(),
                      [&](std::size_t t) { return twins_[t * n + c]; }))
        continue;
      tried.push_back(c);
      placed_[c] = true;
      order_.push_back(c);
      descend();
      order_.pop_back();
      placed_[c] = false;
    }
    key_.resize(base);
  }

  const RankMatrix& m_;
  std::vector<bool> twins_;
  std::vector<bool> placed_;
  std::vector<std::size_t> order_;
  std::vector<std::uint32_t> key_;
  std::vector<std::uint32_t> best_key_;
  std::vector<std::size_t> best_order_;
  bool have_best_ = false;
};

}  // namespace

WeakSimilarity weakly_similar(const RankMatrix& a, const RankMatrix& b) {
  if (a.size() != b.size() || a.max_rank() != b.max_rank()) return {};
  SimilaritySearch search(a, b);
  if (!search.run()) return {};
  return {true, search.phi()};
}

WeakSimilarity weakly_similar(const FiniteSemimetricSpace& a, const FiniteSemimetricSpace& b) {
  return weakly_similar(rank_matrix(a), rank_matrix(b));
}

CanonicalForm canonical_form(const RankMatrix& ranks) {
  CanonicalSearch search(ranks);
  search.run();
  CanonicalForm form;
  form.n_ = ranks.size();
  form.max_rank_ = ranks.max_rank();
  form.key_ = search.best_key();
  form.ordering_ = search.best_order();
  return form;
}

CanonicalForm canonical_form(const FiniteSemimetricSpace& space) {
  return canonical_form(rank_matrix(space));
}

RankMatrix CanonicalForm::matrix() const {
  std::vector<std::vector<std::uint32_t>> rows(n_, std::vector<std::uint32_t>(n_, 0));
  std::size_t pos = 0;
  for (std::size_t j = 1; j < n_; ++j)
    for (std::size_t i = 0; i < j; ++i) rows[i][j] = rows[j][i] = key_[pos++];
  return RankMatrix::from_ranks(rows);
}

std::string CanonicalForm::digest() const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](std::uint64_t word) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (word >> (8 * byte)) & 0xffu;
      h *= 0x100000001b3ull;
    }
  };
  mix(n_);
  mix(max_rank_);
  for (std::uint32_t r : key_) mix(r);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace ustar
