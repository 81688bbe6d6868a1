// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "patsum/common.hpp"
#include "patsum/itemset.hpp"

namespace patsum {

/// Quality values to be summarized by a subcollection; usually supports or
/// frequencies of mined itemsets.
using QualityMap = std::map<Itemset, double, CardLexLess>;

struct Estimator {
  enum class Kind { kZeroDefault, kMaxSuperset, kIndependence };
  Kind kind = Kind::kMaxSuperset;
  double default_frequency = 0.0;  // independence estimator only

  static Estimator zero_default() { return {Kind::kZeroDefault, 0.0}; }
  static Estimator max_superset() { return {Kind::kMaxSuperset, 0.0}; }
  static Estimator independence(double delta) {
    return {Kind::kIndependence, delta};
  }
};

struct Loss {
  enum class Kind { kLp, kSquaredErrorSum, kCountExceeding };
  Kind kind = Kind::kSquaredErrorSum;
  double p = 2.0;      // kLp
  double eps = 0.0;    // kCountExceeding
  bool include_empty = false;

  static Loss lp(double p) { return {Kind::kLp, p, 0.0, false}; }
  static Loss squared_error_sum() {
    return {Kind::kSquaredErrorSum, 2.0, 0.0, false};
  }
  static Loss count_exceeding(double eps) {
    return {Kind::kCountExceeding, 0.0, eps, false};
  }

  // Sum-form losses (sum of a nondecreasing transform of the non-negative
  // error) carry the greedy 1-1/e decrease guarantee.
  bool sum_form() const { return kind != Kind::kLp || p == 1.0; }
};

namespace detail {

inline double estimate_one(const Itemset& x, const QualityMap& quality,
                           const std::vector<Itemset>& sub,
                           const Estimator& est) {
  switch (est.kind) {
    case Estimator::Kind::kZeroDefault: {
      for (const Itemset& y : sub)
        if (y == x) return quality.at(x);
      return 0.0;
    }
    case Estimator::Kind::kMaxSuperset: {
      double best = 0.0;
      bool any = false;
      for (const Itemset& y : sub)
        if (x.subset_of(y)) {
          best = any ? std::max(best, quality.at(y)) : quality.at(y);
          any = true;
        }
      return any ? best : 0.0;
    }
    case Estimator::Kind::kIndependence: {
      double product = 1.0;
      for (Item a : x.items()) {
        double fr = est.default_frequency;
        for (const Itemset& y : sub)
          if (y.size() == 1 && y.items()[0] == a) {
            fr = quality.at(y);
            break;
          }
        product *= fr;
      }
      return product;
    }
  }
  return 0.0;
}

}  // namespace detail

/// Loss of estimating the whole quality map from the subcollection.
inline double evaluate_loss(const QualityMap& quality,
                            const std::vector<Itemset>& sub,
                            const Estimator& est, const Loss& loss) {
  double sum = 0.0;
  long long exceeding = 0;
  for (const auto& [x, truth] : quality) {
    if (x.empty() && !loss.include_empty) continue;
    double err = std::abs(truth - detail::estimate_one(x, quality, sub, est));
    switch (loss.kind) {
      case Loss::Kind::kLp:
        sum += std::pow(err, loss.p);
        break;
      case Loss::Kind::kSquaredErrorSum:
        sum += err * err;
        break;
      case Loss::Kind::kCountExceeding:
        if (err > loss.eps) ++exceeding;
        break;
    }
  }
  if (loss.kind == Loss::Kind::kCountExceeding)
    return static_cast<double>(exceeding);
  if (loss.kind == Loss::Kind::kLp) return std::pow(sum, 1.0 / loss.p);
  return sum;
}

struct PatternOrdering {
  std::vector<Itemset> sequence;
  std::vector<double> prefix_loss;  // prefix_loss[i] after i patterns;
                                    // prefix_loss[0] is the initial loss
};

namespace detail {

inline double loss_from_errors(const std::vector<double>& errors,
                               const Loss& loss) {
  double sum = 0.0;
  long long exceeding = 0;
  for (double err : errors) {
    switch (loss.kind) {
      case Loss::Kind::kLp:
        sum += std::pow(err, loss.p);
        break;
      case Loss::Kind::kSquaredErrorSum:
        sum += err * err;
        break;
      case Loss::Kind::kCountExceeding:
        if (err > loss.eps) ++exceeding;
        break;
    }
  }
  if (loss.kind == Loss::Kind::kCountExceeding)
    return static_cast<double>(exceeding);
  if (loss.kind == Loss::Kind::kLp) return std::pow(sum, 1.0 / loss.p);
  return sum;
}

}  // namespace detail

/// Oracle variant: re-evaluates every candidate subcollection from scratch.
inline PatternOrdering order_patterns_naive(const QualityMap& quality,
                                            const Estimator& est,
                                            const Loss& loss) {
  PatternOrdering out;
  std::vector<Itemset> remaining;
  for (const auto& [x, q] : quality) remaining.push_back(x);
  std::vector<Itemset> prefix;
  out.prefix_loss.push_back(evaluate_loss(quality, prefix, est, loss));
  while (!remaining.empty()) {
    std::size_t best = 0;
    double best_loss = 0.0;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      prefix.push_back(remaining[i]);
      double candidate = evaluate_loss(quality, prefix, est, loss);
      prefix.pop_back();
      if (i == 0 || candidate < best_loss) {
        best = i;
        best_loss = candidate;
      }
    }
    prefix.push_back(remaining[best]);
    out.sequence.push_back(remaining[best]);
    out.prefix_loss.push_back(best_loss);
    remaining.erase(remaining.begin() + best);
  }
  return out;
}

/// Greedy ordering: step i picks the pattern minimizing the loss of the
/// extended prefix; ties go to the (cardinality, lexicographic) smallest.
/// For the max-superset estimator only the estimates of patterns below the
/// candidate are touched when scoring it.
inline PatternOrdering order_patterns(const QualityMap& quality,
                                      const Estimator& est, const Loss& loss) {
  if (est.kind != Estimator::Kind::kMaxSuperset)
    return order_patterns_naive(quality, est, loss);

  std::vector<Itemset> patterns;
  std::vector<double> truth;
  std::vector<bool> in_loss;
  for (const auto& [x, q] : quality) {
    patterns.push_back(x);
    truth.push_back(q);
    in_loss.push_back(!x.empty() || loss.include_empty);
  }
  const std::size_t n = patterns.size();
  std::vector<double> estimate(n, 0.0);
  std::vector<double> errors;
  for (std::size_t i = 0; i < n; ++i)
    if (in_loss[i]) errors.push_back(std::abs(truth[i]));

  PatternOrdering out;
  out.prefix_loss.push_back(detail::loss_from_errors(errors, loss));
  std::vector<bool> chosen(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    double best_loss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (chosen[i]) continue;
      errors.clear();
      for (std::size_t j = 0; j < n; ++j) {
        if (!in_loss[j]) continue;
        double e = estimate[j];
        if (patterns[j].subset_of(patterns[i]))
          e = std::max(e, truth[i]);
        errors.push_back(std::abs(truth[j] - e));
      }
      double candidate = detail::loss_from_errors(errors, loss);
      if (best == n || candidate < best_loss) {
        best = i;
        best_loss = candidate;
      }
    }
    chosen[best] = true;
    for (std::size_t j = 0; j < n; ++j)
      if (patterns[j].subset_of(patterns[best]))
        estimate[j] = std::max(estimate[j], truth[best]);
    out.sequence.push_back(patterns[best]);
    out.prefix_loss.push_back(best_loss);
  }
  return out;
}

struct BestSubcollection {
  std::vector<Itemset> members;
  double loss = 0.0;
};

/// Exact optimum over all k-subsets; the oracle for the greedy ordering.
/// Guarded to collections of at most 18 patterns.
inline BestSubcollection best_k_bruteforce(const QualityMap& quality,
                                           const Estimator& est,
                                           const Loss& loss, std::size_t k) {
  std::vector<Itemset> all;
  for (const auto& [x, q] : quality) all.push_back(x);
  if (all.size() > 18)
    throw PreconditionError("brute-force search is limited to 18 patterns");
  if (k > all.size()) k = all.size();

  BestSubcollection best;
  bool first = true;
  std::vector<std::size_t> choice(k);
  // Enumerate k-combinations in lexicographic index order.
  for (std::size_t i = 0; i < k; ++i) choice[i] = i;
  while (true) {
    std::vector<Itemset> sub;
    for (std::size_t index : choice) sub.push_back(all[index]);
    double candidate = evaluate_loss(quality, sub, est, loss);
    if (first || candidate < best.loss) {
      best = {sub, candidate};
      first = false;
    }
    if (k == 0) break;
    // Advance the combination.
    std::size_t pos = k;
    while (pos > 0 && choice[pos - 1] == all.size() - k + pos - 1) --pos;
    if (pos == 0) break;
    ++choice[pos - 1];
    for (std::size_t i = pos; i < k; ++i) choice[i] = choice[i - 1] + 1;
  }
  if (first) best.loss = evaluate_loss(quality, {}, est, loss);
  return best;
}

struct GuaranteeReport {
  double worst_ratio = 1.0;       // min over k of decrease ratio
  std::size_t worst_k = 0;
  std::vector<double> ratios;     // ratios[k-1] for k = 1..kMax
  bool holds = true;              // worst_ratio >= 1 - 1/e
};

/// Checks decrease(greedy, k) >= (1 - 1/e) * decrease(opt, k) for each
/// k <= kMax. Requires the max-superset estimator and a sum-form loss.
inline GuaranteeReport verify_guarantee(const QualityMap& quality,
                                        const Estimator& est, const Loss& loss,
                                        std::size_t k_max) {
  if (est.kind != Estimator::Kind::kMaxSuperset)
    throw PreconditionError("guarantee requires the max-superset estimator");
  if (!loss.sum_form())
    throw PreconditionError("guarantee requires a sum-form loss");
  PatternOrdering ordering = order_patterns(quality, est, loss);
  k_max = std::min(k_max, ordering.sequence.size());

  GuaranteeReport report;
  const double threshold = 1.0 - 1.0 / std::exp(1.0);
  const double initial = ordering.prefix_loss[0];
  for (std::size_t k = 1; k <= k_max; ++k) {
    double greedy_decrease = initial - ordering.prefix_loss[k];
    double opt_decrease =
        initial - best_k_bruteforce(quality, est, loss, k).loss;
    double ratio = opt_decrease <= 0.0 ? 1.0 : greedy_decrease / opt_decrease;
    report.ratios.push_back(ratio);
    if (ratio < report.worst_ratio) {
      report.worst_ratio = ratio;
      report.worst_k = k;
    }
  }
  report.holds = report.worst_ratio >= threshold - 1e-12;
  return report;
}

}  // namespace patsum
