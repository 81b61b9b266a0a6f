#include "neardist/acceptance.hpp"

#include "neardist/constructions.hpp"
#include "neardist/oracles.hpp"
#include "neardist/spectrum.hpp"
#include "neardist/verification.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace neardist {

namespace {

constexpr double kEps = 0.1;
constexpr double kRatioThreshold = 10.0;

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t out = 1;
    for (int i = 0; i < e; ++i) {
        out *= b;
    }
    return out;
}

} // namespace

CriterionResult check_stacked_sharpness() {
    CriterionResult r{1, "stacked sets attain T(n, m_{d-1}+1) with k=2 unit windows", true, {}};
    struct Case {
        int d;
        std::size_t n;
        std::int64_t frozen;
    };
    // Frozen from the balanced-partition formula: 300, 250, 240, 405.
    const Case cases[] = {{2, 30, 300}, {3, 25, 250}, {4, 24, 240}, {5, 30, 405}};
    std::ostringstream os;
    for (const auto& c : cases) {
        const PointSet base = known_two_distance_set(c.d - 1);
        const double scale = static_cast<double>(c.n * c.n);
        const PointSet q = stacked_set(base, c.n, scale);
        const auto n = static_cast<std::int64_t>(c.n);
        const std::int64_t s = *md_table(c.d - 1).value + 1;

        const std::int64_t dp = best_k_windows(q, 2, 1.0).count;
        const std::int64_t formula = turan_number(n, s);
        std::vector<double> anchors = distinct_values(distance_multiset(base).values);
        for (double& a : anchors) {
            a *= scale;
        }
        const std::int64_t brute = oracles::brute_pairs_in_additive_windows(q, anchors, 1.0);
        const bool ok = dp == formula && brute == formula && oracles::turan_by_recurrence(n, s) == formula &&
                        formula == c.frozen;
        r.passed = r.passed && ok;
        os << "(d=" << c.d << ",n=" << c.n << "): dp=" << dp << " brute=" << brute << " T=" << formula << "; ";
    }
    r.detail = os.str();
    return r;
}

CriterionResult check_simplex_sum_sizes() {
    CriterionResult r{2, "simplex-sum sets have (d+1)^k points and need <= k windows", true, {}};
    std::ostringstream os;
    for (int d = 1; d <= 3; ++d) {
        for (int k = 1; k <= 3; ++k) {
            const PointSet s = simplex_sum_set(d, k, default_eps1(kEps));
            const auto windows = verify_weak_eps_k(s, kEps).window_count;
            const bool ok = static_cast<std::int64_t>(s.size()) == ipow(d + 1, k) &&
                            windows <= static_cast<std::size_t>(k);
            r.passed = r.passed && ok;
            os << "(" << d << "," << k << "):" << s.size() << "/" << windows << (ok ? "" : "!") << " ";
        }
    }
    r.detail = os.str();
    return r;
}

CriterionResult check_clustered_turan() {
    CriterionResult r{3, "clustered sets realize T(n, (d+1)^k+1) cross pairs", true, {}};
    struct Case {
        int d, k;
        std::size_t n;
    };
    const Case cases[] = {{1, 1, 4}, {1, 2, 8}, {2, 1, 9}, {2, 2, 27}};
    std::ostringstream os;
    for (const auto& c : cases) {
        const double eps1 = default_eps1(kEps);
        const PointSet p = clustered_turan_set(c.d, c.k, eps1, c.n);
        const std::int64_t t = turan_number(static_cast<std::int64_t>(c.n), ipow(c.d + 1, c.k) + 1);
        const auto anchors = clustered_turan_anchors(c.k, eps1);
        const std::int64_t in_windows = oracles::brute_pairs_in_multiplicative_windows(p, anchors, matched_eps(eps1));
        const std::int64_t cross = oracles::brute_pairs_farther_than(p, std::pow(eps1, c.k));
        const bool ok = in_windows == t && cross == t;
        r.passed = r.passed && ok;
        os << "(" << c.d << "," << c.k << "," << c.n << "): " << in_windows << "/" << cross << " vs T=" << t << "; ";
    }
    r.detail = os.str();
    return r;
}

CriterionResult check_decomposition_certificates() {
    CriterionResult r{4, "decomposition certificates bound simplex-sum sets by (d+1)^k", true, {}};
    std::ostringstream os;
    for (int d = 1; d <= 3; ++d) {
        for (int k = 1; k <= 3; ++k) {
            const PointSet s = simplex_sum_set(d, k, default_eps1(kEps));
            const auto tree = certify_decomposition(s, d, k, kEps, kRatioThreshold);
            const bool ok = tree.ok() && tree.root.bound == ipow(d + 1, k) &&
                            static_cast<std::int64_t>(tree.root.cardinality()) <= tree.root.bound;
            r.passed = r.passed && ok;
            os << "(" << d << "," << k << "):" << tree.root.bound << (ok ? "" : "!") << " ";
        }
    }
    r.detail = os.str();
    return r;
}

CriterionResult check_mdk_oracle() {
    CriterionResult r{5, "maximize_m agrees with the flat enumerator (d<=8, k<=6)", true, {}};
    int mismatches = 0;
    for (int d = 2; d <= 8; ++d) {
        for (int k = 1; k <= 6; ++k) {
            if (maximize_m(d, k).value != oracles::flat_m_enumerator(d, k)) {
                ++mismatches;
            }
        }
    }
    bool spots = maximize_m(3, 2).value == 4;
    for (int d = 2; d <= 8; ++d) {
        spots = spots && maximize_m(d, 1).value == d;
    }
    for (int k = 1; k <= 6; ++k) {
        spots = spots && maximize_m(2, k).value == k + 1;
    }
    r.passed = mismatches == 0 && spots;
    r.detail = std::to_string(mismatches) + " mismatches over 42 cases; spot values " + (spots ? "ok" : "FAILED");
    return r;
}

CriterionResult check_window_dp(std::uint64_t seed) {
    CriterionResult r{6, "window DP equals exhaustive placement on 200 random separated sets", true, {}};
    std::mt19937_64 rng(seed);
    int mismatches = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng() % 11;
        const std::size_t dim = 1 + rng() % 3;
        const int k = 1 + static_cast<int>(rng() % 3);
        const double length = 0.25 + 2.75 * oracles::unit_uniform(rng);
        const double side = 1.5 * std::pow(static_cast<double>(n), 1.0 / static_cast<double>(dim)) + 1.0;
        const PointSet p = oracles::random_separated_set(rng, dim, n, side);
        const auto dm = distance_multiset(p);
        const auto best = best_k_windows_sorted(dm.values, k, length);
        const std::int64_t oracle = oracles::exhaustive_window_placement(dm.values, k, length);
        if (best.count != oracle || count_pairs_in_family(p, best.family) != best.count) {
            ++mismatches;
        }
    }
    r.passed = mismatches == 0;
    r.detail = std::to_string(mismatches) + " mismatches (seed " + std::to_string(seed) + ")";
    return r;
}

CriterionResult check_two_distance_table() {
    CriterionResult r{7, "m_d table within binomial bounds; known sets are two-distance", true, {}};
    std::ostringstream os;
    const int expected[] = {3, 5, 6, 10, 16, 27, 29, 45};
    for (int d = 1; d <= 8; ++d) {
        const MdEntry e = md_table(d);
        const bool ok = e.value && *e.value == expected[d - 1] && e.lower <= *e.value && *e.value <= e.upper;
        r.passed = r.passed && ok;
    }
    for (int d = 1; d <= 4; ++d) {
        const PointSet s = known_two_distance_set(d);
        const bool ok = verify_k_distance_set(s, 2).ok && static_cast<int>(s.size()) == *md_table(d).value;
        r.passed = r.passed && ok;
        os << "m_" << d << "=" << s.size() << (ok ? "" : "!") << " ";
    }
    r.detail = os.str();
    return r;
}

CriterionResult check_schuette_samples(std::uint64_t seed) {
    CriterionResult r{8, "random (d+2)-point sets respect the Schuette ratio bound", true, {}};
    std::mt19937_64 rng(seed);
    std::ostringstream os;
    for (int d = 2; d <= 5; ++d) {
        double worst = std::numeric_limits<double>::infinity();
        int violations = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            const PointSet p = oracles::random_points(rng, static_cast<std::size_t>(d), static_cast<std::size_t>(d + 2));
            const double ratio = max_min_ratio(p);
            worst = std::min(worst, ratio);
            if (ratio < schuette_bound(d) - 1e-9) {
                ++violations;
            }
        }
        r.passed = r.passed && violations == 0;
        os << "d=" << d << " min ratio " << worst << " >= " << schuette_bound(d) << "; ";
    }
    r.detail = os.str();
    return r;
}

CriterionResult check_greedy_cover(std::uint64_t seed) {
    CriterionResult r{9, "greedy multiplicative cover is minimal (<= 10 distances)", true, {}};
    std::mt19937_64 rng(seed + 9);
    int mismatches = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng() % 4;  // at most 10 distances
        const std::size_t dim = 1 + rng() % 3;
        const double eps = 0.01 + 0.6 * oracles::unit_uniform(rng);
        const PointSet p = oracles::random_separated_set(rng, dim, n, 4.0, 0.05);
        const auto dm = distance_multiset(p);
        if (verify_weak_eps_k(p, eps).window_count != oracles::brute_min_multiplicative_cover(dm.values, eps)) {
            ++mismatches;
        }
    }
    r.passed = mismatches == 0;
    r.detail = std::to_string(mismatches) + " mismatches over 100 instances";
    return r;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
    return {check_stacked_sharpness(),       check_simplex_sum_sizes(), check_clustered_turan(),
            check_decomposition_certificates(), check_mdk_oracle(),        check_window_dp(seed),
            check_two_distance_table(),      check_schuette_samples(seed), check_greedy_cover(seed)};
}

std::string acceptance_markdown(const std::vector<CriterionResult>& rows) {
    std::ostringstream os;
    os << "# Reproduction summary\n\n| # | check | result | detail |\n|---|---|---|---|\n";
    int passed = 0;
    for (const auto& row : rows) {
        passed += row.passed ? 1 : 0;
        os << "| " << row.id << " | " << row.title << " | " << (row.passed ? "PASS" : "FAIL") << " | "
           << row.detail << " |\n";
    }
    os << "\n" << passed << "/" << rows.size() << " checks passed.\n";
    return os.str();
}

} // namespace neardist
