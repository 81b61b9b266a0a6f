#include "neardist/spectrum.hpp"

#include "neardist/errors.hpp"
#include "neardist/verification.hpp"

#include <algorithm>
#include <cmath>

namespace neardist {

std::int64_t count_values_in_family(std::span<const double> values, const IntervalFamily& family) {
    family.validate();
    std::int64_t count = 0;
    for (double v : values) {
        if (family.contains(v)) {
            ++count;
        }
    }
    return count;
}

std::int64_t count_pairs_in_family(const PointSet& points, const IntervalFamily& family) {
    family.validate();
    std::int64_t count = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (family.contains(distance(points[i], points[j]))) {
                ++count;
            }
        }
    }
    return count;
}

namespace {

// Generic DP; `fits(lo_value, hi_value)` says whether a window starting at
// lo_value reaches hi_value.
template <typename Fits>
std::pair<std::int64_t, std::vector<std::size_t>> window_dp(std::span<const double> v, int k, Fits fits) {
    const std::size_t m = v.size();
    if (m == 0 || k < 1) {
        return {0, {}};
    }
    std::vector<std::size_t> lo(m);
    std::size_t left = 0;
    for (std::size_t i = 0; i < m; ++i) {
        while (!fits(v[left], v[i])) {
            ++left;
        }
        lo[i] = left;
    }

    const auto kk = static_cast<std::size_t>(k);
    // f[j][i+1]: best with j windows over the first i+1 values; take[j][i+1]
    // marks that a window ends at value i.
    std::vector<std::vector<std::int64_t>> f(kk + 1, std::vector<std::int64_t>(m + 1, 0));
    std::vector<std::vector<char>> take(kk + 1, std::vector<char>(m + 1, 0));
    for (std::size_t j = 1; j <= kk; ++j) {
        for (std::size_t i = 1; i <= m; ++i) {
            const std::size_t l = lo[i - 1];
            const std::int64_t with = f[j - 1][l] + static_cast<std::int64_t>(i - l);
            if (with > f[j][i - 1]) {
                f[j][i] = with;
                take[j][i] = 1;
            } else {
                f[j][i] = f[j][i - 1];
            }
        }
    }

    std::vector<std::size_t> starts;
    std::size_t j = kk;
    std::size_t i = m;
    while (j > 0 && i > 0) {
        if (take[j][i]) {
            starts.push_back(lo[i - 1]);
            i = lo[i - 1];
            --j;
        } else {
            --i;
        }
    }
    std::reverse(starts.begin(), starts.end());
    return {f[kk][m], starts};
}

std::vector<double> dedup_anchors(std::span<const double> values, const std::vector<std::size_t>& starts) {
    std::vector<double> anchors;
    for (std::size_t s : starts) {
        if (anchors.empty() || values[s] > anchors.back()) {
            anchors.push_back(values[s]);
        }
    }
    return anchors;
}

} // namespace

WindowPlacement best_k_windows_sorted(std::span<const double> sorted, int k, double length) {
    if (k < 1) {
        throw InputError("best_k_windows needs k >= 1");
    }
    if (!(length > 0.0) || !std::isfinite(length)) {
        throw InputError("window length must be positive");
    }
    auto [count, starts] = window_dp(sorted, k, [length](double a, double b) {
        return in_additive_window(b, a, length);
    });
    WindowPlacement out;
    out.count = count;
    out.family.mode = WindowMode::additive;
    out.family.width = length;
    out.family.anchors = dedup_anchors(sorted, starts);
    return out;
}

WindowPlacement best_k_windows(const PointSet& points, int k, double length) {
    const auto dm = distance_multiset(points);
    return best_k_windows_sorted(dm.values, k, length);
}

WindowPlacement best_k_multiplicative_windows(const PointSet& points, int k, double eps) {
    if (k < 1) {
        throw InputError("best_k_multiplicative_windows needs k >= 1");
    }
    if (!(eps > 0.0) || !std::isfinite(eps)) {
        throw InputError("window ratio eps must be positive");
    }
    const auto dm = distance_multiset(points);
    if (dm.values.front() <= 0.0) {
        throw InputError("duplicate points: a zero distance fits no multiplicative window");
    }
    // Membership is evaluated on the raw distances, so log rounding cannot leak in.
    auto [count, starts] = window_dp(dm.values, k, [eps](double a, double b) {
        return in_multiplicative_window(b, a, eps);
    });
    WindowPlacement out;
    out.count = count;
    out.family.mode = WindowMode::multiplicative;
    out.family.width = eps;
    out.family.anchors = dedup_anchors(dm.values, starts);
    return out;
}

std::int64_t turan_number(std::int64_t n, std::int64_t s) {
    if (s < 2) {
        throw InputError("turan_number needs s >= 2");
    }
    if (n < 0) {
        throw InputError("turan_number needs n >= 0");
    }
    const std::int64_t parts = s - 1;
    const std::int64_t q = n / parts;
    const std::int64_t r = n % parts;
    auto c2 = [](std::int64_t x) { return x * (x - 1) / 2; };
    return c2(n) - r * c2(q + 1) - (parts - r) * c2(q);
}

std::string to_string(BoundKind kind) {
    return kind == BoundKind::turan_m ? "turan_m" : "turan_dk";
}

BoundKind parse_bound_kind(const std::string& text) {
    if (text == "turan_m") {
        return BoundKind::turan_m;
    }
    if (text == "turan_dk") {
        return BoundKind::turan_dk;
    }
    throw InputError("unknown bound '" + text + "' (expected turan_m or turan_dk)");
}

SpectrumReport spectrum_report(const PointSet& points, int k, WindowMode mode, double length_or_eps,
                               BoundKind bound) {
    SpectrumReport rep;
    rep.n = points.size();
    rep.dim = points.dim();
    rep.k = k;
    rep.mode = mode;
    rep.length_or_eps = length_or_eps;

    const auto n = static_cast<std::int64_t>(points.size());
    if (bound == BoundKind::turan_m) {
        const int lower_dim = static_cast<int>(points.dim()) - 1;
        if (lower_dim < 1 || lower_dim > 8) {
            throw UnsupportedError("m_{d-1} is tabulated only for d - 1 in 1..8");
        }
        const int m = *md_table(lower_dim).value;
        rep.turan_reference = turan_number(n, m + 1);
        rep.bound_name = "T(n, m_" + std::to_string(lower_dim) + " + 1)";
    } else {
        std::int64_t classes = 1;
        for (int i = 0; i < k; ++i) {
            classes *= static_cast<std::int64_t>(points.dim()) + 1;
            if (classes > n) {
                break;
            }
        }
        rep.turan_reference = turan_number(n, classes + 1);
        rep.bound_name = "T(n, (d+1)^k + 1)";
    }

    const auto dm = distance_multiset(points);
    WindowPlacement best = mode == WindowMode::additive ? best_k_windows_sorted(dm.values, k, length_or_eps)
                                                        : best_k_multiplicative_windows(points, k, length_or_eps);
    rep.pair_count_in_family = best.count;
    rep.best_family = best.family;
    if (mode == WindowMode::multiplicative) {
        rep.cover_window_count = static_cast<std::int64_t>(min_multiplicative_cover(dm.values, length_or_eps).size());
    }
    for (double a : best.family.anchors) {
        HistogramBin bin{a, best.family.upper(a), 0};
        const bool additive = mode == WindowMode::additive;
        for (double v : dm.values) {
            if (additive ? in_additive_window(v, a, length_or_eps) : in_multiplicative_window(v, a, length_or_eps)) {
                ++bin.count;
            }
        }
        rep.histogram.push_back(bin);
    }
    return rep;
}

nlohmann::json SpectrumReport::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["dim"] = dim;
    j["k"] = k;
    j["mode"] = to_string(mode);
    j["length_or_eps"] = length_or_eps;
    j["count"] = pair_count_in_family;
    j["anchors"] = best_family.anchors;
    j["turan_reference"] = turan_reference;
    j["bound_name"] = bound_name;
    j["ratio_count_over_bound"] =
        turan_reference > 0 ? static_cast<double>(pair_count_in_family) / static_cast<double>(turan_reference) : 0.0;
    if (mode == WindowMode::multiplicative) {
        j["cover_window_count"] = cover_window_count;
    }
    nlohmann::json hist = nlohmann::json::array();
    for (const auto& b : histogram) {
        hist.push_back({{"lower", b.lower}, {"upper", b.upper}, {"count", b.count}});
    }
    j["histogram"] = hist;
    return j;
}

} // namespace neardist
