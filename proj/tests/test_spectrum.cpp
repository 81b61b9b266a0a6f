#include "neardist/constructions.hpp"
#include "neardist/errors.hpp"
#include "neardist/oracles.hpp"
#include "neardist/spectrum.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace neardist;

TEST(CountPairs, UnitSquareAndLine) {
    const PointSet line(1, {{0.0}, {1.0}, {2.0}});
    IntervalFamily fam{WindowMode::additive, {1.0}, 0.5};
    EXPECT_EQ(count_pairs_in_family(line, fam), 2);
    fam.anchors = {1.0, 2.0};
    EXPECT_EQ(count_pairs_in_family(line, fam), 3);

    const PointSet sq(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    IntervalFamily mult{WindowMode::multiplicative, {1.0}, 0.5};
    EXPECT_EQ(count_pairs_in_family(sq, mult), 6);
    mult.width = 0.1;
    EXPECT_EQ(count_pairs_in_family(sq, mult), 4);
}

TEST(CountPairs, ClosedEndpointsWithTolerance) {
    const std::vector<double> vals{1.0, 2.0, 2.0 + 1e-12, 2.1};
    IntervalFamily fam{WindowMode::additive, {1.0}, 1.0};
    EXPECT_EQ(count_values_in_family(vals, fam), 3);
}

TEST(CountPairs, MatchesBruteOnRandomFamilies) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const PointSet p = oracles::random_points(rng, 1 + static_cast<std::size_t>(trial % 3), 12);
        std::vector<double> anchors;
        for (int a = 0; a < 1 + trial % 4; ++a) {
            anchors.push_back(0.05 + oracles::unit_uniform(rng));
        }
        std::sort(anchors.begin(), anchors.end());
        const double len = 0.01 + 0.2 * oracles::unit_uniform(rng);
        EXPECT_EQ(count_pairs_in_family(p, {WindowMode::additive, anchors, len}),
                  oracles::brute_pairs_in_additive_windows(p, anchors, len));
        EXPECT_EQ(count_pairs_in_family(p, {WindowMode::multiplicative, anchors, len}),
                  oracles::brute_pairs_in_multiplicative_windows(p, anchors, len));
    }
}

TEST(BestKWindows, ExampleSequence) {
    const std::vector<double> vals{1, 1, 2, 10, 10.5};
    const auto r = best_k_windows_sorted(vals, 2, 1.0);
    EXPECT_EQ(r.count, 5);
    EXPECT_EQ(count_values_in_family(vals, r.family), 5);
    EXPECT_LE(r.family.anchors.size(), 2u);
    EXPECT_EQ(best_k_windows_sorted(vals, 1, 1.0).count, 3);
    EXPECT_EQ(best_k_windows_sorted(std::vector<double>{}, 2, 1.0).count, 0);
}

TEST(BestKWindows, OneWideWindowCoversEverything) {
    std::mt19937_64 rng(8);
    const PointSet p = oracles::random_points(rng, 3, 20);
    EXPECT_EQ(best_k_windows(p, 1, 10.0).count, 190);
}

TEST(BestKWindows, StackedPentagon) {
    ConstructionRequest r;
    r.construction = "stacked";
    r.d = 3;
    r.n = 25;
    const Construction c = build_construction(r);
    EXPECT_GE(best_k_windows(c.points, 2, 1.0).count, 250);
}

TEST(BestKWindows, MonotoneInKAndLength) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const PointSet p = oracles::random_points(rng, 2, 15);
        std::int64_t prev = 0;
        for (int k = 1; k <= 5; ++k) {
            const auto c = best_k_windows(p, k, 0.05).count;
            EXPECT_GE(c, prev);
            EXPECT_GE(best_k_windows(p, k, 0.1).count, c);
            prev = c;
        }
    }
}

TEST(BestKWindows, EqualsExhaustiveSearch) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = 3 + static_cast<std::size_t>(trial % 10);
        std::vector<double> vals(m);
        for (auto& v : vals) {
            v = (1.0 + std::floor(oracles::unit_uniform(rng) * 40.0)) / 8.0;
        }
        std::sort(vals.begin(), vals.end());
        const int k = 1 + trial % 3;
        const double len = 0.25 * static_cast<double>(1 + trial % 6);
        const auto r = best_k_windows_sorted(vals, k, len);
        EXPECT_EQ(r.count, oracles::exhaustive_window_placement(vals, k, len)) << trial;
        EXPECT_EQ(count_values_in_family(vals, r.family), r.count);
    }
}

TEST(BestKWindows, MultiplicativeMatchesBruteCount) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        const PointSet p = oracles::random_points(rng, 2, 10);
        const auto r = best_k_multiplicative_windows(p, 2, 0.2);
        EXPECT_EQ(r.family.mode, WindowMode::multiplicative);
        EXPECT_EQ(oracles::brute_pairs_in_multiplicative_windows(p, r.family.anchors, 0.2), r.count);
        // Every multiplicative window [a, 1.2a] fits an additive one of width 0.2 * max distance.
        EXPECT_GE(r.count, 1);
    }
}

TEST(BestKWindows, RejectsBadArguments) {
    const std::vector<double> vals{1, 2};
    EXPECT_THROW(best_k_windows_sorted(vals, 0, 1.0), InputError);
    EXPECT_THROW(best_k_windows_sorted(vals, 1, -1.0), InputError);
}

TEST(Turan, Values) {
    EXPECT_EQ(turan_number(6, 3), 9);
    EXPECT_EQ(turan_number(30, 4), 300);
    EXPECT_EQ(turan_number(5, 7), 10);
    EXPECT_EQ(turan_number(0, 3), 0);
    EXPECT_EQ(turan_number(9, 4), 27);
    EXPECT_THROW(turan_number(5, 1), InputError);
    EXPECT_THROW(turan_number(-1, 3), InputError);
}

TEST(Turan, MatchesRecurrenceAndGraph) {
    for (std::int64_t n = 0; n <= 60; ++n) {
        for (std::int64_t s = 2; s <= 12; ++s) {
            const auto t = turan_number(n, s);
            EXPECT_EQ(t, oracles::turan_by_recurrence(n, s));
            EXPECT_EQ(t, oracles::turan_by_graph(n, s));
            EXPECT_LE(t, n * (n - 1) / 2);
            if (s > n) {
                EXPECT_EQ(t, n * (n - 1) / 2);
            }
            EXPECT_LE(t, turan_number(n, s + 1));
            EXPECT_LE(t, turan_number(n + 1, s));
        }
    }
}

TEST(SpectrumReport, AdditiveOnStacked) {
    ConstructionRequest r;
    r.construction = "stacked";
    r.d = 2;
    r.n = 9;
    const Construction c = build_construction(r);
    const auto rep = spectrum_report(c.points, 2, WindowMode::additive, 1.0, BoundKind::turan_m);
    EXPECT_EQ(rep.n, 9u);
    EXPECT_EQ(rep.dim, 2u);
    EXPECT_GE(rep.pair_count_in_family, 27);
    EXPECT_EQ(rep.turan_reference, 27);
    const auto j = rep.to_json();
    for (const char* key : {"n", "dim", "k", "mode", "count", "anchors", "turan_reference", "bound_name",
                            "ratio_count_over_bound", "histogram"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_FALSE(j.contains("cover_window_count"));
}

TEST(SpectrumReport, MultiplicativeOnClustered) {
    ConstructionRequest r;
    r.construction = "clustered-turan";
    r.d = 2;
    r.k = 1;
    r.n = 9;
    const Construction c = build_construction(r);
    const auto rep = spectrum_report(c.points, 1, WindowMode::multiplicative, 0.1, BoundKind::turan_dk);
    EXPECT_EQ(rep.pair_count_in_family, 27);
    EXPECT_EQ(rep.turan_reference, 27);
    EXPECT_TRUE(rep.to_json().contains("cover_window_count"));
    EXPECT_GE(rep.cover_window_count, 1);
}

TEST(SpectrumReport, UnsupportedDimension) {
    const PointSet p(10, {Coords(10, 0.0), Coords(10, 1.0)});
    EXPECT_THROW(spectrum_report(p, 1, WindowMode::additive, 1.0, BoundKind::turan_m), UnsupportedError);
    EXPECT_NO_THROW(spectrum_report(p, 1, WindowMode::additive, 1.0, BoundKind::turan_dk));
    const PointSet line(1, {{0.0}, {1.0}});
    EXPECT_THROW(spectrum_report(line, 1, WindowMode::additive, 1.0, BoundKind::turan_m), UnsupportedError);
}

TEST(SpectrumReport, BoundKindNames) {
    EXPECT_EQ(parse_bound_kind(to_string(BoundKind::turan_m)), BoundKind::turan_m);
    EXPECT_EQ(parse_bound_kind(to_string(BoundKind::turan_dk)), BoundKind::turan_dk);
    EXPECT_THROW(parse_bound_kind("bogus"), InputError);
}
