#pragma once

#include "neardist/geometry.hpp"
#include "neardist/intervals.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace neardist {

/// Pairs (i<j) whose distance lies in the closed union of the family's windows.
std::int64_t count_pairs_in_family(const PointSet& points, const IntervalFamily& family);
std::int64_t count_values_in_family(std::span<const double> values, const IntervalFamily& family);

struct WindowPlacement {
    std::int64_t count = 0;
    IntervalFamily family;
};

/// Maximum number of sorted values covered by k closed windows [t, t+L].
/// Windows are right-anchored at observed values:
///   f(j,i) = max(f(j,i-1), f(j-1, lo(i)-1) + i - lo(i) + 1).
/// The reported family uses left endpoints value[lo(i)], deduplicated.
WindowPlacement best_k_windows_sorted(std::span<const double> sorted, int k, double length);

WindowPlacement best_k_windows(const PointSet& points, int k, double length);

/// Same optimum for windows [t, t(1+eps)].
WindowPlacement best_k_multiplicative_windows(const PointSet& points, int k, double eps);

/// Max edges of an n-vertex graph without K_s: C(n,2) - sum C(n_i,2) over the
/// balanced partition into s-1 parts.
std::int64_t turan_number(std::int64_t n, std::int64_t s);

enum class BoundKind { turan_m, turan_dk };

std::string to_string(BoundKind kind);
BoundKind parse_bound_kind(const std::string& text);

struct HistogramBin {
    double lower = 0.0;
    double upper = 0.0;
    std::int64_t count = 0;
};

struct SpectrumReport {
    std::size_t n = 0;
    std::size_t dim = 0;
    int k = 1;
    WindowMode mode = WindowMode::additive;
    double length_or_eps = 1.0;
    std::int64_t pair_count_in_family = 0;
    IntervalFamily best_family;
    std::int64_t turan_reference = 0;
    std::string bound_name;
    /// Windows a greedy multiplicative sweep needs to cover every distance (multiplicative mode).
    std::int64_t cover_window_count = 0;
    std::vector<HistogramBin> histogram;

    nlohmann::json to_json() const;
};

/// m_{d-1} for turan_m (dimension - 1 must be in 1..8) or (d+1)^k for turan_dk.
SpectrumReport spectrum_report(const PointSet& points, int k, WindowMode mode, double length_or_eps,
                               BoundKind bound);

} // namespace neardist
