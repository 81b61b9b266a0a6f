#pragma once

// Brute-force reference computations. These deliberately share no code path
// with the optimized routines they check.

#include "neardist/geometry.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace neardist::oracles {

/// Uniform double in [0, 1) built from the top 53 bits, identical on every platform.
double unit_uniform(std::mt19937_64& rng);

/// n points in [0, side)^dim with all distances >= min_dist, by rejection.
PointSet random_separated_set(std::mt19937_64& rng, std::size_t dim, std::size_t n, double side,
                              double min_dist = 1.0);

PointSet random_points(std::mt19937_64& rng, std::size_t dim, std::size_t n);

/// Pairs whose distance lies in some [a, a+length] (additive) or [a, a(1+eps)].
std::int64_t brute_pairs_in_additive_windows(const PointSet& points, std::span<const double> anchors,
                                             double length);
std::int64_t brute_pairs_in_multiplicative_windows(const PointSet& points, std::span<const double> anchors,
                                                   double eps);

/// Pairs at distance strictly greater than `gap`.
std::int64_t brute_pairs_farther_than(const PointSet& points, double gap);

/// T(n, s) from T(m, s) = T(m-1, s) + (m-1) - floor((m-1)/(s-1)), T(0, s) = 0.
std::int64_t turan_by_recurrence(std::int64_t n, std::int64_t s);

/// Edge count of the balanced complete (s-1)-partite graph, built vertex by vertex.
std::int64_t turan_by_graph(std::int64_t n, std::int64_t s);

/// Max values coverable by k windows [t, t+length], trying every k-subset of
/// distinct values as left endpoints.
std::int64_t exhaustive_window_placement(std::span<const double> sorted, int k, double length);

/// Smallest number of windows [t, t(1+eps)] covering all values, by subset search.
std::size_t brute_min_multiplicative_cover(std::span<const double> sorted, double eps);

/// m(d, k) by flat loops over every composition, every p assignment and every
/// (possibly unbalanced) q split.
std::int64_t flat_m_enumerator(int d, int k);

} // namespace neardist::oracles
