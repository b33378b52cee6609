#pragma once

/**
 * Probability and divergence primitives shared by the decoding pipeline and
 * the analysis harness. Everything here is a pure function over immutable
 * inputs and safe to call from any number of threads.
 *
 * Conventions, fixed project-wide:
 *  - logits may carry the exclusion sentinel kExcludedLogit (-inf), placed
 *    only by masking; softmax maps it to probability exactly 0
 *  - all logarithms are natural, so JSD is bounded by ln 2 (kJsdUpperBound)
 *  - KL terms use the branch convention 0 * log(0/m) = 0 (no epsilon smoothing)
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "ibd/errors.hpp"
#include "ibd/rng.hpp"

namespace ibd {

using TokenId = int;

/// Exclusion sentinel: a logit value distinct from every ordinary finite entry.
inline constexpr double kExcludedLogit = -std::numeric_limits<double>::infinity();

/// Upper bound of the Jensen-Shannon divergence under natural log.
inline const double kJsdUpperBound = std::log(2.0);

inline bool is_excluded(double logit) { return logit == kExcludedLogit; }

/// Length-|V| vector of unnormalized log-odds over the vocabulary.
struct LogitVector {
  std::vector<double> values;

  LogitVector() = default;
  explicit LogitVector(std::vector<double> v) : values(std::move(v)) {}

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
  double& operator[](std::size_t i) { return values[i]; }
};

/// Length-|V| probability vector; entries nonnegative, summing to 1.
struct ProbDistribution {
  std::vector<double> probs;

  ProbDistribution() = default;
  explicit ProbDistribution(std::vector<double> p) : probs(std::move(p)) {}

  std::size_t size() const { return probs.size(); }
  double operator[](std::size_t i) const { return probs[i]; }
};

// ============================================================================
// Softmax
// ============================================================================

/// In-place softmax over a raw buffer. Excluded entries map to exactly 0.
/// Max-subtraction keeps entries up to +-700 from overflowing.
inline void softmax_inplace(std::span<double> x) {
  double max_val = kExcludedLogit;
  for (double v : x) {
    if (!is_excluded(v) && v > max_val) max_val = v;
  }
  if (is_excluded(max_val)) throw NumericError("softmax: empty support (all entries excluded)");
  double sum = 0.0;
  for (double& v : x) {
    v = std::exp(v - max_val);  // exp(-inf) == +0.0 exactly
    sum += v;
  }
  for (double& v : x) v /= sum;
}

inline ProbDistribution softmax(const LogitVector& logits) {
  std::vector<double> out(logits.values);
  softmax_inplace(out);
  return ProbDistribution(std::move(out));
}

/// log p under softmax(logits), computed stably (used by beam scoring).
inline double log_softmax_at(const LogitVector& logits, std::size_t index) {
  double max_val = kExcludedLogit;
  for (double v : logits.values) {
    if (!is_excluded(v) && v > max_val) max_val = v;
  }
  if (is_excluded(max_val)) throw NumericError("log_softmax: empty support");
  double sum = 0.0;
  for (double v : logits.values) sum += std::exp(v - max_val);
  return logits.values[index] - max_val - std::log(sum);
}

// ============================================================================
// Divergences and scores
// ============================================================================

/// Jensen-Shannon divergence, natural log:
///   JSD(p||q) = 1/2 KL(p||m) + 1/2 KL(q||m),  m = (p+q)/2.
/// Symmetric, bounded by kJsdUpperBound, exactly 0 for identical inputs.
inline double jsd(const ProbDistribution& p, const ProbDistribution& q) {
  if (p.size() != q.size()) throw NumericError("jsd: length mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double pi = p[i];
    const double qi = q[i];
    const double mi = 0.5 * (pi + qi);
    if (pi > 0.0) acc += 0.5 * pi * std::log(pi / mi);
    if (qi > 0.0) acc += 0.5 * qi * std::log(qi / mi);
  }
  // Rounding can push near-identical inputs a hair below zero.
  return std::max(acc, 0.0);
}

/// CD score: elementwise logits_hat - logits_base.
inline std::vector<double> cd_score(const LogitVector& logits_hat, const LogitVector& logits_base) {
  if (logits_hat.size() != logits_base.size()) throw NumericError("cd_score: length mismatch");
  std::vector<double> out(logits_hat.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = logits_hat[i] - logits_base[i];
  return out;
}

// ============================================================================
// Selection
// ============================================================================

/// Index of the maximum value; ties broken by lowest index. Excluded entries
/// never win.
inline TokenId argmax_with_tiebreak(std::span<const double> values) {
  if (values.empty()) throw NumericError("argmax: empty input");
  std::size_t best = values.size();
  double best_val = kExcludedLogit;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (is_excluded(values[i])) continue;
    if (best == values.size() || values[i] > best_val) {
      best = i;
      best_val = values[i];
    }
  }
  if (best == values.size()) throw NumericError("argmax: all entries excluded");
  return static_cast<TokenId>(best);
}

/// Seeded categorical draw by cumulative inversion: returns the first index i
/// with cumsum(probs[0..i]) > u, u uniform in [0,1). Zero-probability entries
/// are never selected.
inline TokenId sample_categorical(std::span<const double> probs, SplitMix64& rng) {
  if (probs.empty()) throw NumericError("sample_categorical: empty input");
  const double u = rng.uniform();
  double cum = 0.0;
  std::size_t last_positive = probs.size();
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] <= 0.0) continue;
    last_positive = i;
    cum += probs[i];
    if (u < cum) return static_cast<TokenId>(i);
  }
  // Rounding may leave cum a hair under 1; fall back to the last live entry.
  if (last_positive == probs.size()) throw NumericError("sample_categorical: no positive mass");
  return static_cast<TokenId>(last_positive);
}

}  // namespace ibd
