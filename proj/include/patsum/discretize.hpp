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
#include <limits>
#include <map>
#include <optional>
#include <type_traits>
#include <vector>

#include "patsum/collection.hpp"
#include "patsum/common.hpp"
#include "patsum/mining.hpp"

namespace patsum {

namespace detail {

template <typename V>
V abs_value(const V& v) {
  if constexpr (std::is_same_v<V, Rat>)
    return v < Rat(0) ? -v : v;
  else
    return std::abs(v);
}

template <typename V>
std::string value_str(const V& v) {
  if constexpr (std::is_same_v<V, Rat>)
    return to_string(v);
  else
    return std::to_string(v);
}

template <typename V>
long long bin_index(const V& x, const V& width) {
  if constexpr (std::is_same_v<V, Rat>) {
    Rat q = x / width;
    long long index = q.numerator() / q.denominator();
    if (q.numerator() % q.denominator() != 0 && q.numerator() < 0) --index;
    return index;
  } else {
    return static_cast<long long>(std::floor(x / width));
  }
}

}  // namespace detail

/// Order-preserving map from observed values to a finite point set.
/// The cover algorithms below are comparison-based, so they run on plain
/// binary64 values or on exact rationals alike; the worked examples with
/// boundary-exact inputs use the rational instantiation.
template <typename V>
struct BasicDiscretization {
  std::map<V, V> mapping;
  std::vector<V> points;  // sorted distinct range
  V max_abs_error{};

  const V& at(const V& x) const {
    auto it = mapping.find(x);
    if (it == mapping.end())
      throw PreconditionError("discretization undefined for value " +
                              detail::value_str(x));
    return it->second;
  }
};

using Discretization = BasicDiscretization<double>;
using RatDiscretization = BasicDiscretization<Rat>;

/// Fixed-grid discretization with maximum absolute error eps.
inline double disc_absolute(double x, double eps) {
  if (!(x > 0.0 && x <= 1.0)) throw PreconditionError("x must be in (0, 1]");
  if (!(eps > 0.0)) throw PreconditionError("eps must be positive");
  return eps + 2.0 * eps * std::floor(x / (2.0 * eps));
}

/// Fixed-grid discretization with approximation ratio in
/// [1-eps, 1/(1-eps)].
inline double disc_relative(double x, double eps) {
  if (!(x > 0.0 && x <= 1.0)) throw PreconditionError("x must be in (0, 1]");
  if (!(eps > 0.0 && eps < 1.0))
    throw PreconditionError("eps must be in (0, 1)");
  double exponent =
      1.0 + 2.0 * std::floor(std::log(x) / (2.0 * std::log(1.0 - eps)));
  return std::pow(1.0 - eps, exponent);
}

/// The error bound of disc_absolute can be lowered to this value without
/// changing the number of grid points. Exposed as a helper only.
inline double tightened_abs_error(double eps) {
  if (!(eps > 0.0)) throw PreconditionError("eps must be positive");
  return 1.0 / (2.0 * std::ceil(1.0 / (2.0 * eps)));
}

namespace detail {

template <typename V>
std::vector<V> sorted_unique(std::vector<V> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

template <typename V>
void check_sorted(const std::vector<V>& values) {
  if (!std::is_sorted(values.begin(), values.end()))
    throw PreconditionError("point array must be sorted ascending");
}

template <typename V>
BasicDiscretization<V> finish_cover(std::map<V, V> mapping) {
  BasicDiscretization<V> disc;
  disc.mapping = std::move(mapping);
  for (const auto& [x, d] : disc.mapping) {
    disc.max_abs_error = std::max(disc.max_abs_error, abs_value<V>(x - d));
    if (disc.points.empty() || disc.points.back() != d)
      disc.points.push_back(d);
  }
  return disc;
}

}  // namespace detail

/// Greedy interval cover: repeatedly maps the smallest uncovered value d and
/// everything within [d, d+2eps] to d+eps. Point count is minimum among all
/// discretizations with max absolute error at most eps.
template <typename V>
BasicDiscretization<V> interval_cover(std::vector<V> values, const V& eps) {
  if (!(eps > V{})) throw PreconditionError("eps must be positive");
  std::vector<V> p = detail::sorted_unique(std::move(values));
  std::map<V, V> mapping;
  std::size_t i = 0;
  while (i < p.size()) {
    V d = p[i];
    while (i < p.size() && p[i] <= d + eps + eps) mapping[p[i++]] = d + eps;
  }
  return detail::finish_cover(std::move(mapping));
}

inline Discretization interval_cover(std::vector<double> values, double eps) {
  return interval_cover<double>(std::move(values), eps);
}

/// Single linear pass over a pre-sorted array; identical mapping to
/// interval_cover.
template <typename V>
BasicDiscretization<V> prefix_cover(const std::vector<V>& values,
                                    const V& eps) {
  if (!(eps > V{})) throw PreconditionError("eps must be positive");
  detail::check_sorted(values);
  std::map<V, V> mapping;
  std::optional<V> d;
  for (const V& x : values) {
    if (!d || *d < x - eps) d = x + eps;
    mapping[x] = *d;
  }
  return detail::finish_cover(std::move(mapping));
}

inline Discretization prefix_cover(const std::vector<double>& values,
                                   double eps) {
  return prefix_cover<double>(values, eps);
}

/// Bin by the fixed grid of width 2eps, then repair bins left to right so
/// each cover interval is anchored at a real point. Equivalent to
/// interval_cover without pre-sorting the whole set.
template <typename V>
BasicDiscretization<V> bin_cover(std::vector<V> values, const V& eps) {
  if (!(eps > V{})) throw PreconditionError("eps must be positive");
  std::vector<V> p = detail::sorted_unique(std::move(values));
  std::map<long long, std::vector<V>> bins;
  for (const V& x : p) bins[detail::bin_index(x, eps + eps)].push_back(x);

  std::map<V, V> mapping;
  std::optional<V> d;
  for (auto& [index, bin] : bins) {
    for (const V& x : bin) {
      if (!d || x > *d + eps + eps) d = x;
      mapping[x] = *d + eps;
    }
  }
  return detail::finish_cover(std::move(mapping));
}

inline Discretization bin_cover(std::vector<double> values, double eps) {
  return bin_cover<double>(std::move(values), eps);
}

template <typename V>
struct BasicLogCoverResult {
  std::vector<V> points;
  std::size_t comparisons = 0;  // value comparisons against the array
};

using LogCoverResult = BasicLogCoverResult<double>;

/// Greedy cover points of a sorted array found by binary search; only the
/// point set is materialized.
template <typename V>
BasicLogCoverResult<V> log_cover(const std::vector<V>& values, const V& eps) {
  if (!(eps > V{})) throw PreconditionError("eps must be positive");
  detail::check_sorted(values);
  BasicLogCoverResult<V> out;
  std::size_t i = 0;
  while (i < values.size()) {
    V d = values[i] + eps;
    out.points.push_back(d);
    // Smallest index whose value exceeds d + eps.
    std::size_t lo = i, hi = values.size();
    while (hi > lo + 1) {
      std::size_t mid = (lo + hi) / 2;
      ++out.comparisons;
      if (values[mid] <= d + eps)
        lo = mid;
      else
        hi = mid;
    }
    i = hi;
  }
  return out;
}

inline LogCoverResult log_cover(const std::vector<double>& values,
                                double eps) {
  return log_cover<double>(values, eps);
}

/// Per-interval best single discretization point and its weighted
/// sum-of-absolute-errors loss, for every interval of the sorted array.
struct ErrorMatrices {
  std::size_t n = 0;
  std::vector<double> eps;  // row-major, eps(i, j) for i <= j, 0-based
  std::vector<double> mu;

  double loss(std::size_t i, std::size_t j) const { return eps[i * n + j]; }
  double point(std::size_t i, std::size_t j) const { return mu[i * n + j]; }
};

/// Weighted medians and losses for all subarrays. The median tie-break picks
/// the smallest point achieving the minimum.
inline ErrorMatrices dp_valuate_abs(const std::vector<double>& values,
                                    const std::vector<double>& weights) {
  detail::check_sorted(values);
  if (values.size() != weights.size())
    throw PreconditionError("one weight per point required");
  for (double w : weights)
    if (w < 0.0) throw PreconditionError("weights must be non-negative");

  const std::size_t n = values.size();
  ErrorMatrices m;
  m.n = n;
  m.eps.assign(n * n, 0.0);
  m.mu.assign(n * n, 0.0);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double subtotal = 0.0;
      for (std::size_t k = i; k <= j; ++k) subtotal += weights[k];
      std::size_t median = i;
      double acc = 0.0;
      for (std::size_t k = i; k <= j; ++k) {
        acc += weights[k];
        if (2.0 * acc >= subtotal) {
          median = k;
          break;
        }
      }
      double mu = values[median];
      double loss = 0.0;
      for (std::size_t k = i; k <= j; ++k)
        loss += weights[k] * std::abs(values[k] - mu);
      m.mu[i * n + j] = mu;
      m.eps[i * n + j] = loss;
    }
  }
  return m;
}

/// delta(k, i) = best loss of the first i+1 points with k+1 discretization
/// points; omega(k, i) = end of the prefix preceding the last segment.
struct DPTables {
  std::size_t n = 0;
  std::vector<double> delta;      // row-major, (k, i) 0-based
  std::vector<std::size_t> omega;  // last segment of the optimum is
                                   // [omega(k,i)+1 .. i]; omega(0,i) is 0
                                   // and unused

  double loss(std::size_t k, std::size_t i) const { return delta[k * n + i]; }
  std::size_t split(std::size_t k, std::size_t i) const {
    return omega[k * n + i];
  }
};

/// Fills the segmentation tables from the error matrices. Ties keep the
/// first (leftmost) segment start, i.e. the longest last segment.
inline DPTables dp_tabulate(const std::vector<double>& values,
                            const ErrorMatrices& m) {
  const std::size_t n = values.size();
  if (m.n != n) throw PreconditionError("error matrices do not match points");
  DPTables t;
  t.n = n;
  t.delta.assign(n * n, std::numeric_limits<double>::infinity());
  t.omega.assign(n * n, 0);

  for (std::size_t i = 0; i < n; ++i) t.delta[i] = m.loss(0, i);
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = k; i < n; ++i) {
      double best = std::numeric_limits<double>::infinity();
      std::size_t best_j = k;
      for (std::size_t j = k; j <= i; ++j) {
        double candidate = t.delta[(k - 1) * n + (j - 1)] + m.loss(j, i);
        if (candidate < best) {
          best = candidate;
          best_j = j;
        }
      }
      t.delta[k * n + i] = best;
      t.omega[k * n + i] = best_j - 1;
    }
  }
  return t;
}

/// Full mapping realizing loss delta(k-1, n-1) with k points.
inline Discretization extract_discretization(const std::vector<double>& values,
                                             const ErrorMatrices& m,
                                             const DPTables& t,
                                             std::size_t k) {
  const std::size_t n = values.size();
  if (k < 1 || k > n) throw PreconditionError("k must be in [1, |P|]");
  std::map<double, double> mapping;
  std::size_t end = n - 1;
  for (std::size_t level = k; level >= 1; --level) {
    std::size_t start = (level == 1) ? 0 : t.split(level - 1, end) + 1;
    double mu = m.point(start, end);
    for (std::size_t i = start; i <= end; ++i) mapping[values[i]] = mu;
    if (level == 1) break;
    end = t.split(level - 1, end);
  }
  return detail::finish_cover(std::move(mapping));
}

/// Point set only, O(k) walk over the tables.
inline std::vector<double> extract_points(const std::vector<double>& values,
                                          const ErrorMatrices& m,
                                          const DPTables& t, std::size_t k) {
  const std::size_t n = values.size();
  if (k < 1 || k > n) throw PreconditionError("k must be in [1, |P|]");
  std::vector<double> points;
  std::size_t end = n - 1;
  for (std::size_t level = k; level >= 1; --level) {
    std::size_t start = (level == 1) ? 0 : t.split(level - 1, end) + 1;
    points.push_back(m.point(start, end));
    if (level == 1) break;
    end = t.split(level - 1, end);
  }
  std::reverse(points.begin(), points.end());
  return points;
}

/// Relabels every member's frequency with its discretized value and keeps
/// the members that are closed with respect to the relabeled values.
/// Original supports are preserved on the survivors. The rational
/// instantiation keys the mapping by exact frequencies.
template <typename V>
RatedCollection condense_by_discretization(
    const RatedCollection& c, const BasicDiscretization<V>& disc) {
  std::map<Itemset, V, CardLexLess> relabeled;
  for (const auto& [x, supp] : c.entries()) {
    if constexpr (std::is_same_v<V, Rat>)
      relabeled.emplace(x, disc.at(c.frequency(x)));
    else
      relabeled.emplace(x, disc.at(to_double(c.frequency(x))));
  }
  return c.restrict_to(closed_members(relabeled));
}

}  // namespace patsum
