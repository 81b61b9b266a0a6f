#include "neardist/oracles.hpp"

#include <algorithm>
#include <cmath>

namespace neardist::oracles {

namespace {

constexpr double kSlack = 1e-9;

double euclid(const Coords& a, const Coords& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += (a[i] - b[i]) * (a[i] - b[i]);
    }
    return std::sqrt(s);
}

bool in_add(double x, double a, double len) {
    return x >= a * (1.0 - kSlack) && x <= (a + len) * (1.0 + kSlack);
}

bool in_mul(double x, double a, double eps) {
    return x >= a * (1.0 - kSlack) && x <= a * (1.0 + eps) * (1.0 + kSlack);
}

std::vector<double> distinct(std::span<const double> sorted) {
    std::vector<double> out;
    for (double v : sorted) {
        if (out.empty() || v != out.back()) {
            out.push_back(v);
        }
    }
    return out;
}

} // namespace

double unit_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

PointSet random_points(std::mt19937_64& rng, std::size_t dim, std::size_t n) {
    PointSet out(dim);
    for (std::size_t i = 0; i < n; ++i) {
        Coords p(dim);
        for (double& x : p) {
            x = unit_uniform(rng);
        }
        out.push_back(std::move(p));
    }
    return out;
}

PointSet random_separated_set(std::mt19937_64& rng, std::size_t dim, std::size_t n, double side,
                              double min_dist) {
    PointSet out(dim);
    std::size_t attempts = 0;
    while (out.size() < n) {
        Coords p(dim);
        for (double& x : p) {
            x = side * unit_uniform(rng);
        }
        bool ok = true;
        for (const auto& q : out.points()) {
            if (euclid(p, q) < min_dist) {
                ok = false;
                break;
            }
        }
        if (ok) {
            out.push_back(std::move(p));
        }
        if (++attempts > 100000 * n) {
            // Box too crowded; grow it rather than loop forever.
            side *= 2.0;
        }
    }
    return out;
}

std::int64_t brute_pairs_in_additive_windows(const PointSet& points, std::span<const double> anchors,
                                             double length) {
    std::int64_t count = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            const double r = euclid(points[i], points[j]);
            if (std::any_of(anchors.begin(), anchors.end(), [&](double a) { return in_add(r, a, length); })) {
                ++count;
            }
        }
    }
    return count;
}

std::int64_t brute_pairs_in_multiplicative_windows(const PointSet& points, std::span<const double> anchors,
                                                   double eps) {
    std::int64_t count = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            const double r = euclid(points[i], points[j]);
            if (std::any_of(anchors.begin(), anchors.end(), [&](double a) { return in_mul(r, a, eps); })) {
                ++count;
            }
        }
    }
    return count;
}

std::int64_t brute_pairs_farther_than(const PointSet& points, double gap) {
    std::int64_t count = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (euclid(points[i], points[j]) > gap) {
                ++count;
            }
        }
    }
    return count;
}

std::int64_t turan_by_recurrence(std::int64_t n, std::int64_t s) {
    std::int64_t t = 0;
    for (std::int64_t m = 1; m <= n; ++m) {
        t += (m - 1) - (m - 1) / (s - 1);
    }
    return t;
}

std::int64_t turan_by_graph(std::int64_t n, std::int64_t s) {
    // Vertex v goes to part v mod (s-1); count pairs in different parts.
    std::int64_t edges = 0;
    for (std::int64_t u = 0; u < n; ++u) {
        for (std::int64_t v = u + 1; v < n; ++v) {
            if (u % (s - 1) != v % (s - 1)) {
                ++edges;
            }
        }
    }
    return edges;
}

std::int64_t exhaustive_window_placement(std::span<const double> sorted, int k, double length) {
    const auto starts = distinct(sorted);
    const std::size_t m = starts.size();
    const std::size_t kk = std::min<std::size_t>(static_cast<std::size_t>(k), m);
    std::int64_t best = 0;
    std::vector<std::size_t> pick(kk);
    // All kk-subsets of the distinct values (fewer windows never do better).
    for (std::size_t i = 0; i < kk; ++i) {
        pick[i] = i;
    }
    while (true) {
        std::int64_t covered = 0;
        for (double v : sorted) {
            for (std::size_t w : pick) {
                if (in_add(v, starts[w], length)) {
                    ++covered;
                    break;
                }
            }
        }
        best = std::max(best, covered);
        std::size_t i = kk;
        while (i > 0 && pick[i - 1] == m - kk + i - 1) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++pick[i - 1];
        for (std::size_t j = i; j < kk; ++j) {
            pick[j] = pick[j - 1] + 1;
        }
    }
    return best;
}

std::size_t brute_min_multiplicative_cover(std::span<const double> sorted, double eps) {
    const auto cand = distinct(sorted);
    const std::size_t m = cand.size();
    std::size_t best = m;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (size >= best) {
            continue;
        }
        bool all = true;
        for (double v : sorted) {
            bool hit = false;
            for (std::size_t w = 0; w < m && !hit; ++w) {
                hit = ((mask >> w) & 1U) && in_mul(v, cand[w], eps);
            }
            if (!hit) {
                all = false;
                break;
            }
        }
        if (all) {
            best = size;
        }
    }
    return best;
}

std::int64_t flat_m_enumerator(int d, int k) {
    auto choose = [](int n, int r) {
        std::int64_t c = 1;
        for (int i = 1; i <= r; ++i) {
            c = c * (n - r + i) / i;
        }
        return c;
    };
    std::int64_t best = 0;
    for (int e = 0; e <= d - 1; ++e) {
        const int f = d - 1 - e;
        // Compositions of e: bit b set means a cut after position b+1.
        const std::uint32_t masks = e == 0 ? 1U : (1U << (e - 1));
        for (std::uint32_t mask = 0; mask < masks; ++mask) {
            std::vector<int> parts;
            if (e > 0) {
                int run = 1;
                for (int b = 0; b < e - 1; ++b) {
                    if ((mask >> b) & 1U) {
                        parts.push_back(run);
                        run = 1;
                    } else {
                        ++run;
                    }
                }
                parts.push_back(run);
            }
            // p_i in 1..(e_i+1)/2 by mixed-radix counting.
            std::vector<int> p(parts.size(), 1);
            while (true) {
                int psum = 0;
                std::int64_t simplex_factor = 1;
                for (std::size_t i = 0; i < parts.size(); ++i) {
                    psum += p[i];
                    simplex_factor *= choose(parts[i] + 1, p[i]);
                }
                if (psum <= k) {
                    const int room = f == 0 ? 0 : k - psum;
                    // Every q tuple with entries 0..room and sum <= room.
                    std::vector<int> q(static_cast<std::size_t>(f), 0);
                    while (true) {
                        int qsum = 0;
                        std::int64_t prog_factor = 1;
                        for (int x : q) {
                            qsum += x;
                            prog_factor *= x + 1;
                        }
                        if (qsum <= room) {
                            best = std::max(best, simplex_factor * prog_factor);
                        }
                        std::size_t at = 0;
                        while (at < q.size() && q[at] == room) {
                            q[at] = 0;
                            ++at;
                        }
                        if (at == q.size()) {
                            break;
                        }
                        ++q[at];
                    }
                }
                std::size_t at = 0;
                while (at < p.size() && p[at] == (parts[at] + 1) / 2) {
                    p[at] = 1;
                    ++at;
                }
                if (at == p.size()) {
                    break;
                }
                ++p[at];
            }
        }
    }
    return best;
}

} // namespace neardist::oracles
