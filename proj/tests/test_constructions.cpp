#include "neardist/constructions.hpp"
#include "neardist/errors.hpp"
#include "neardist/oracles.hpp"
#include "neardist/spectrum.hpp"
#include "neardist/verification.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <random>

using namespace neardist;

namespace {

std::vector<double> distinct_distances(const PointSet& p) {
    return distinct_values(distance_multiset(p).values);
}

// Every admissible witness for (d, k), q_parts balanced in ascending order.
std::vector<MdkWitness> all_witnesses(int d, int k) {
    std::vector<MdkWitness> out;
    for (int e = 0; e <= d - 1; ++e) {
        const int f = d - 1 - e;
        std::function<void(int, std::vector<int>&, std::vector<int>&, int)> rec =
            [&](int left, std::vector<int>& es, std::vector<int>& ps, int psum) {
                if (left == 0) {
                    for (int q = 0; q <= (f > 0 ? k - psum : 0); ++q) {
                        MdkWitness w;
                        w.d = d;
                        w.k = k;
                        w.e = e;
                        w.f = f;
                        w.ell = static_cast<int>(es.size());
                        w.e_parts = es;
                        w.p_parts = ps;
                        w.q_total = q;
                        for (int j = 0; j < f; ++j) {
                            w.q_parts.push_back(q / f + (j >= f - q % f ? 1 : 0));
                        }
                        w.value = w.product();
                        out.push_back(w);
                    }
                    return;
                }
                for (int part = 1; part <= left; ++part) {
                    for (int p = 1; 2 * p <= part + 1 && psum + p <= k; ++p) {
                        es.push_back(part);
                        ps.push_back(p);
                        rec(left - part, es, ps, psum + p);
                        es.pop_back();
                        ps.pop_back();
                    }
                }
            };
        std::vector<int> es;
        std::vector<int> ps;
        rec(e, es, ps, 0);
    }
    return out;
}

std::int64_t brute_cross_pairs(const std::vector<std::size_t>& sizes) {
    std::vector<std::size_t> label;
    for (std::size_t c = 0; c < sizes.size(); ++c) {
        label.insert(label.end(), sizes[c], c);
    }
    std::int64_t count = 0;
    for (std::size_t i = 0; i < label.size(); ++i) {
        for (std::size_t j = i + 1; j < label.size(); ++j) {
            count += label[i] != label[j] ? 1 : 0;
        }
    }
    return count;
}

} // namespace

TEST(RegularSimplex, SmallCases) {
    const PointSet seg = regular_simplex(1, 1.0);
    EXPECT_EQ(seg, PointSet(1, {{0.0}, {1.0}}));
    for (double v : distance_multiset(regular_simplex(2, 1.0)).values) {
        EXPECT_NEAR(v, 1.0, 1e-12);
    }
    const PointSet tet = regular_simplex(3, 2.0);
    EXPECT_EQ(tet.size(), 4u);
    const auto dm = distance_multiset(tet);
    EXPECT_EQ(dm.size(), 6u);
    for (double v : dm.values) {
        EXPECT_NEAR(v, 2.0, 2e-9);
    }
}

TEST(RegularSimplex, AllEdgesEqualUpToDimensionTwelve) {
    for (int d = 1; d <= 12; ++d) {
        const PointSet s = regular_simplex(d, 0.7);
        EXPECT_EQ(s.size(), static_cast<std::size_t>(d + 1));
        for (double v : distance_multiset(s).values) {
            EXPECT_NEAR(v, 0.7, 0.7e-9);
        }
    }
    EXPECT_THROW(regular_simplex(0, 1.0), InputError);
    EXPECT_THROW(regular_simplex(2, -1.0), InputError);
}

TEST(BinomialSimplexSet, TriangleOctahedronSegment) {
    const PointSet tri = binomial_simplex_set(2, 1, 1.0);
    EXPECT_EQ(tri.size(), 3u);
    for (double v : distance_multiset(tri).values) {
        EXPECT_NEAR(v, 1.0, 1e-12);
    }

    const PointSet oct = binomial_simplex_set(3, 2, 1.0);
    EXPECT_EQ(oct.size(), 6u);
    const auto dist = distinct_distances(oct);
    ASSERT_EQ(dist.size(), 2u);
    EXPECT_NEAR(dist[0], 1.0, 1e-12);
    EXPECT_NEAR(dist[1], std::sqrt(2.0), 1e-12);

    const PointSet seg = binomial_simplex_set(1, 1, 5.0);
    EXPECT_EQ(seg.size(), 2u);
    EXPECT_NEAR(min_separation(seg), 5.0, 1e-12);
}

TEST(BinomialSimplexSet, DistanceSetIsLambdaRootR) {
    for (int e = 1; e <= 7; ++e) {
        for (int p = 1; 2 * p <= e + 1; ++p) {
            const double lambda = 1.5;
            const PointSet s = binomial_simplex_set(e, p, lambda);
            EXPECT_EQ(static_cast<std::int64_t>(s.size()), binomial(e + 1, p));
            EXPECT_EQ(s.dim(), static_cast<std::size_t>(e));
            if (s.size() < 2) {
                continue;
            }
            const auto dist = distinct_distances(s);
            ASSERT_EQ(dist.size(), static_cast<std::size_t>(p)) << e << "," << p;
            for (int r = 1; r <= p; ++r) {
                EXPECT_NEAR(dist[static_cast<std::size_t>(r - 1)], lambda * std::sqrt(r), 1e-9);
            }
        }
    }
}

TEST(BinomialSimplexSet, RejectsBadP) {
    EXPECT_THROW(binomial_simplex_set(3, 3, 1.0), InputError);
    EXPECT_THROW(binomial_simplex_set(3, 0, 1.0), InputError);
    EXPECT_THROW(binomial_simplex_set(0, 1, 1.0), InputError);
}

TEST(ArithmeticProgression, Cases) {
    EXPECT_EQ(arithmetic_progression(0, 1.0).size(), 1u);
    EXPECT_EQ(distance_multiset(arithmetic_progression(2, 1.0)).values, (std::vector<double>{1, 1, 2}));
    EXPECT_EQ(distinct_distances(arithmetic_progression(3, 2.0)), (std::vector<double>{2, 4, 6}));
    EXPECT_THROW(arithmetic_progression(-1, 1.0), InputError);
}

TEST(ProductSet, SingleProgression) {
    MdkWitness w;
    w.d = 2;
    w.k = 1;
    w.e = 0;
    w.f = 1;
    w.q_total = 1;
    w.q_parts = {1};
    w.value = 2;
    const PointSet p = product_set(w);
    EXPECT_EQ(p.size(), 2u);
    EXPECT_EQ(distance_multiset(p).size(), 1u);
}

TEST(ProductSet, TwoSegmentsGiveTwoWindows) {
    MdkWitness w;
    w.d = 3;
    w.k = 2;
    w.e = 2;
    w.ell = 2;
    w.e_parts = {1, 1};
    w.p_parts = {1, 1};
    w.value = 4;
    const PointSet p = product_set(w, {1e4, 1.0});
    EXPECT_EQ(p.size(), 4u);
    EXPECT_EQ(p.dim(), 2u);
    EXPECT_LE(verify_weak_eps_k(p, 1e-3).window_count, 2u);
}

TEST(ProductSet, TwoProgressionsGiveThreeWindows) {
    MdkWitness w;
    w.d = 3;
    w.k = 3;
    w.f = 2;
    w.q_total = 3;
    w.q_parts = {2, 1};
    w.value = 6;
    const PointSet p = product_set(w, {1e4, 1.0});
    EXPECT_EQ(p.size(), 6u);
    EXPECT_EQ(p.dim(), 2u);
    EXPECT_LE(verify_weak_eps_k(p, 1e-3).window_count, 3u);
}

TEST(ProductSet, InconsistentWitnessThrows) {
    MdkWitness w;
    w.d = 3;
    w.k = 2;
    w.f = 2;
    w.q_total = 2;
    w.q_parts = {2, 0};  // unbalanced
    w.value = 3;
    EXPECT_THROW(product_set(w), InputError);
    w.q_parts = {1, 1};
    w.value = 5;  // wrong product
    EXPECT_THROW(product_set(w), InputError);
    w.value = 4;
    EXPECT_NO_THROW(product_set(w));
    EXPECT_THROW(product_set(w, {1.0, 1.0}), InputError);
}

TEST(ProductSet, CardinalityAndWindowsForAllSmallWitnesses) {
    int checked = 0;
    for (int d = 2; d <= 6; ++d) {
        for (int k = 1; k <= 4; ++k) {
            for (const auto& w : all_witnesses(d, k)) {
                ASSERT_NO_THROW(w.validate());
                if (w.value > 200) {
                    continue;
                }
                const PointSet p = product_set(w);
                ASSERT_EQ(static_cast<std::int64_t>(p.size()), w.value);
                EXPECT_EQ(p.dim(), static_cast<std::size_t>(d - 1));
                if (p.size() >= 2) {
                    EXPECT_LE(verify_weak_eps_k(p, 1e-3).window_count,
                              static_cast<std::size_t>(w.p_total() + w.q_total));
                    EXPECT_GE(min_separation(p), 1.0 - 1e-9);
                }
                ++checked;
            }
        }
    }
    EXPECT_GT(checked, 100);
}

TEST(StackedSet, ThreeColumnsOnALine) {
    const std::size_t n = 9;
    const PointSet base(1, {{0.0}, {1.0}, {2.0}});
    const PointSet q = stacked_set(base, n, 81.0);
    EXPECT_EQ(q.size(), 9u);
    EXPECT_EQ(q.dim(), 2u);
    const std::vector<double> anchors{81.0, 162.0};
    EXPECT_EQ(oracles::brute_pairs_in_additive_windows(q, anchors, 1.0), 27);
    EXPECT_EQ(turan_number(9, 4), 27);
}

TEST(StackedSet, PentagonColumnsReachTuranNumber) {
    const std::size_t n = 25;
    const PointSet q = stacked_set(known_two_distance_set(2), n, 625.0);
    EXPECT_EQ(q.dim(), 3u);
    const std::vector<double> anchors{625.0, 625.0 * (1.0 + std::sqrt(5.0)) / 2.0};
    const std::int64_t brute = oracles::brute_pairs_in_additive_windows(q, anchors, 1.0);
    EXPECT_EQ(brute, 250);
    EXPECT_EQ(brute, turan_number(25, 6));
}

TEST(StackedSet, ClassSizesAndLayout) {
    const PointSet base(1, {{0.0}, {1.0}, {2.0}});
    const PointSet q = stacked_set(base, 8, 10.0);
    // Sizes 3, 3, 2: larger classes first.
    EXPECT_EQ(q[0], (Coords{0.0, 0.0}));
    EXPECT_EQ(q[2], (Coords{0.0, 2.0}));
    EXPECT_EQ(q[3], (Coords{10.0, 0.0}));
    EXPECT_EQ(q[6], (Coords{20.0, 0.0}));
    EXPECT_EQ(q[7], (Coords{20.0, 1.0}));
    EXPECT_EQ(balanced_sizes(8, 3), (std::vector<std::size_t>{3, 3, 2}));
    EXPECT_EQ(balanced_sizes(2, 3), (std::vector<std::size_t>{1, 1, 0}));
}

TEST(StackedSet, EdgeCases) {
    const PointSet base(1, {{0.0}, {1.0}});
    EXPECT_EQ(stacked_set(base, 1, 5.0).size(), 1u);
    EXPECT_THROW(stacked_set(base, 3, 0.0), InputError);
    EXPECT_THROW(stacked_set(PointSet(1), 3, 1.0), InputError);
    EXPECT_THROW(stacked_set(PointSet(1, {{0.0}, {0.0}}), 3, 1.0), InputError);
}

TEST(StackedSet, SeparatedWheneverScaledBaseIs) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t dim = 1 + static_cast<std::size_t>(trial % 3);
        const PointSet base = oracles::random_separated_set(rng, dim, 2 + static_cast<std::size_t>(trial % 5), 3.0, 0.2);
        const double scale = 1.0 / min_separation(base) * (1.0 + oracles::unit_uniform(rng));
        const PointSet q = stacked_set(base, 1 + static_cast<std::size_t>(trial % 17), scale);
        if (q.size() >= 2) {
            EXPECT_GE(min_separation(q), 1.0 - 1e-12);
        }
    }
}

TEST(SimplexSumSet, Cardinalities) {
    EXPECT_EQ(simplex_sum_set(1, 1, 0.01).size(), 2u);
    EXPECT_EQ(simplex_sum_set(2, 2, 0.01).size(), 9u);
    EXPECT_EQ(simplex_sum_set(3, 2, 0.01).size(), 16u);
    for (int d = 1; d <= 3; ++d) {
        for (int k = 1; k <= 3; ++k) {
            EXPECT_EQ(simplex_sum_set(d, k, 0.01).size(), static_cast<std::size_t>(std::pow(d + 1, k)));
        }
    }
}

TEST(SimplexSumSet, WindowsWithinGeometricTail) {
    const double eps1 = 0.01;
    const PointSet s = simplex_sum_set(2, 2, eps1);
    const double ratio = (1.0 + eps1 / (1.0 - eps1)) / (1.0 - eps1 / (1.0 - eps1));
    const auto v = verify_weak_eps_k(s, ratio - 1.0);
    EXPECT_LE(v.window_count, 2u);
}

TEST(SimplexSumSet, PairDistancesFollowFirstDifferingSimplex) {
    for (int d = 1; d <= 3; ++d) {
        for (int k = 1; k <= 3; ++k) {
            const double eps1 = 0.05;
            const PointSet s = simplex_sum_set(d, k, eps1);
            const auto edges = simplex_sum_edges(k, eps1);
            auto digits = [&](std::size_t idx) {
                std::vector<std::size_t> out(static_cast<std::size_t>(k));
                for (int p = k - 1; p >= 0; --p) {
                    out[static_cast<std::size_t>(p)] = idx % static_cast<std::size_t>(d + 1);
                    idx /= static_cast<std::size_t>(d + 1);
                }
                return out;
            };
            for (std::size_t a = 0; a < s.size(); ++a) {
                for (std::size_t b = a + 1; b < s.size(); ++b) {
                    const auto da = digits(a);
                    const auto db = digits(b);
                    std::size_t p = 0;
                    while (da[p] == db[p]) {
                        ++p;
                    }
                    double tail = 0.0;
                    for (std::size_t q = p + 1; q < edges.size(); ++q) {
                        tail += edges[q];
                    }
                    const double r = distance(s[a], s[b]);
                    EXPECT_GE(r, edges[p] - tail - 1e-12);
                    EXPECT_LE(r, edges[p] + tail + 1e-12);
                }
            }
        }
    }
}

TEST(SimplexSumSet, Eps1Range) {
    EXPECT_THROW(simplex_sum_set(2, 2, 0.0), InputError);
    EXPECT_THROW(simplex_sum_set(2, 2, 0.3), InputError);
    EXPECT_DOUBLE_EQ(default_eps1(0.1), 0.01);
    EXPECT_DOUBLE_EQ(default_eps1(0.02), 0.005);
    EXPECT_DOUBLE_EQ(eps1_limit(1.0), kMaxEps1);
    // The matched ratio is exactly the one the limit inverts.
    for (double eps : {0.01, 0.1, 0.5, 1.0}) {
        EXPECT_NEAR(matched_eps(eps1_limit(eps)), eps, 1e-12);
    }
}

TEST(ClusteredTuranSet, CrossPairCounts) {
    struct Case {
        int d, k;
        std::size_t n;
        std::int64_t expected;
    };
    for (const Case c : {Case{1, 1, 4, 4}, Case{2, 1, 9, 27}, Case{1, 2, 8, 24}}) {
        const double eps1 = 0.01;
        const PointSet p = clustered_turan_set(c.d, c.k, eps1, c.n);
        EXPECT_EQ(p.size(), c.n);
        const std::size_t classes = static_cast<std::size_t>(std::pow(c.d + 1, c.k));
        EXPECT_EQ(brute_cross_pairs(balanced_sizes(c.n, classes)), c.expected);
        EXPECT_EQ(oracles::brute_pairs_farther_than(p, std::pow(eps1, c.k)), c.expected);
        IntervalFamily fam{WindowMode::multiplicative, clustered_turan_anchors(c.k, eps1), matched_eps(eps1)};
        EXPECT_EQ(count_pairs_in_family(p, fam), c.expected);
        EXPECT_EQ(turan_number(static_cast<std::int64_t>(c.n), static_cast<std::int64_t>(classes) + 1), c.expected);
    }
}

TEST(ColumnsSet, ThreePoints) {
    const PointSet p = columns_set(100.0, 100.0, 3);
    EXPECT_EQ(distance_multiset(p).values, (std::vector<double>{100, 100, 200}));
}

TEST(ColumnsSet, EqualGapsUseTwoWindows) {
    const PointSet p = columns_set(81.0, 81.0, 9);
    const std::vector<double> anchors{81.0, 162.0};
    EXPECT_EQ(oracles::brute_pairs_in_additive_windows(p, anchors, 1.0), 27);
    EXPECT_EQ(27, turan_number(9, 4));
    EXPECT_GE(27, 81 / 3);
}

TEST(ColumnsSet, DistinctGapsUseThreeWindows) {
    const PointSet p = columns_set(81.0, 100.0, 9);
    const std::vector<double> anchors{81.0, 100.0, 181.0};
    EXPECT_EQ(oracles::brute_pairs_in_additive_windows(p, anchors, 1.0), 27);
    // Each window alone holds only its column pair.
    EXPECT_EQ(oracles::brute_pairs_in_additive_windows(p, std::vector<double>{181.0}, 1.0), 9);
}

TEST(ColumnsSet, SmallGapsWarnButEmit) {
    ConstructionRequest req;
    req.construction = "columns";
    req.n = 9;
    req.t1 = 5.0;
    req.t2 = 5.0;
    const Construction c = build_construction(req);
    EXPECT_EQ(c.points.size(), 9u);
    EXPECT_FALSE(c.warnings.empty());
    EXPECT_FALSE(columns_parameters_ok(5.0, 5.0, 9));
    EXPECT_TRUE(columns_parameters_ok(81.0, 100.0, 9));
    EXPECT_THROW(columns_set(1.0, 1.0, 2), InputError);
}

TEST(KnownTwoDistanceSet, Sizes) {
    EXPECT_EQ(known_two_distance_set(1).size(), 3u);
    const auto pent = distinct_distances(known_two_distance_set(2));
    ASSERT_EQ(pent.size(), 2u);
    EXPECT_NEAR(pent[0], 1.0, 1e-12);
    EXPECT_NEAR(pent[1], 1.6180339887, 1e-10);
    EXPECT_EQ(known_two_distance_set(3).size(), 6u);
    const PointSet four = known_two_distance_set(4);
    EXPECT_EQ(four.size(), 10u);
    EXPECT_EQ(distinct_distances(four).size(), 2u);
    EXPECT_THROW(known_two_distance_set(5), UnsupportedError);
    EXPECT_THROW(known_two_distance_set(0), UnsupportedError);
}

TEST(BuildConstruction, MetadataCountsReproduceWithAnchors) {
    std::vector<ConstructionRequest> reqs;
    auto add = [&](const std::string& name, int d, int k, std::size_t n) {
        ConstructionRequest r;
        r.construction = name;
        r.d = d;
        r.k = k;
        r.n = n;
        reqs.push_back(r);
    };
    add("simplex", 3, 1, 0);
    add("binomial", 4, 2, 0);
    add("progression", 1, 1, 5);
    add("two-distance", 2, 1, 0);
    add("product", 4, 3, 0);
    add("product", 3, 2, 0);
    add("stacked", 3, 2, 25);
    add("stacked", 5, 2, 30);
    add("simplex-sum", 2, 2, 0);
    add("clustered-turan", 2, 2, 27);
    add("clustered-turan", 1, 3, 20);
    add("columns", 2, 3, 10);
    for (const auto& r : reqs) {
        const Construction c = build_construction(r);
        EXPECT_EQ(c.points.size(), c.expected_cardinality) << r.construction;
        ASSERT_TRUE(c.expected_pair_count.has_value());
        EXPECT_EQ(count_pairs_in_family(c.points, c.family()), *c.expected_pair_count) << r.construction;
        EXPECT_TRUE(c.warnings.empty()) << r.construction;
        const auto meta = c.metadata();
        for (const char* key : {"construction", "parameters", "expected_cardinality", "expected_window_anchors"}) {
            EXPECT_TRUE(meta.contains(key)) << key;
        }
    }
    ConstructionRequest bad;
    bad.construction = "nope";
    EXPECT_THROW(build_construction(bad), InputError);
}

TEST(BuildConstruction, StackedWithTinyScaleWarns) {
    ConstructionRequest r;
    r.construction = "stacked";
    r.d = 3;
    r.n = 25;
    r.scale = 2.0;
    EXPECT_FALSE(build_construction(r).warnings.empty());
}
