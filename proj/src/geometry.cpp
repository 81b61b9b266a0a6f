#include "neardist/geometry.hpp"

#include "neardist/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>
#include <thread>

namespace neardist {

PointSet::PointSet(std::size_t dim) : dim_(dim) {
    if (dim == 0) {
        throw InputError("point set dimension must be positive");
    }
}

PointSet::PointSet(std::size_t dim, std::vector<Coords> points) : PointSet(dim) {
    points_.reserve(points.size());
    for (auto& p : points) {
        push_back(std::move(p));
    }
}

void PointSet::push_back(Coords p) {
    if (p.size() != dim_) {
        throw InputError("point has " + std::to_string(p.size()) + " coordinates, expected " +
                         std::to_string(dim_));
    }
    for (double x : p) {
        if (!std::isfinite(x)) {
            throw InputError("non-finite coordinate");
        }
    }
    points_.push_back(std::move(p));
}

double distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw InputError("dimension mismatch in distance");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double t = a[i] - b[i];
        sum += t * t;
    }
    return std::sqrt(sum);
}

unsigned worker_count() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("NEARDIST_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && cap >= 1) {
            hw = std::min(hw, static_cast<unsigned>(cap));
        }
    }
    return hw;
}

namespace {

// Offset of row i in the row-major upper triangle of an n x n matrix.
std::size_t row_offset(std::size_t i, std::size_t n) {
    return i * n - i * (i + 1) / 2;
}

void fill_rows(const PointSet& points, std::size_t first, std::size_t last,
               std::vector<double>& values, std::vector<PairIndex>& pairs) {
    const std::size_t n = points.size();
    for (std::size_t i = first; i < last; ++i) {
        std::size_t at = row_offset(i, n);
        for (std::size_t j = i + 1; j < n; ++j, ++at) {
            values[at] = distance(points[i], points[j]);
            pairs[at] = {i, j};
        }
    }
}

} // namespace

DistanceMultiset distance_multiset(const PointSet& points) {
    const std::size_t n = points.size();
    if (n < 2) {
        throw EmptyResultError("distance multiset needs at least two points");
    }
    const std::size_t m = n * (n - 1) / 2;
    std::vector<double> raw(m);
    std::vector<PairIndex> raw_pairs(m);

    const unsigned workers = std::min<std::size_t>(worker_count(), m >= 4096 ? n - 1 : 1);
    if (workers <= 1) {
        fill_rows(points, 0, n - 1, raw, raw_pairs);
    } else {
        // Rows are split so each worker gets a similar number of pairs.
        std::vector<std::size_t> cuts{0};
        const std::size_t per = m / workers + 1;
        std::size_t acc = 0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            acc += n - 1 - i;
            if (acc >= per * cuts.size() && cuts.size() < workers) {
                cuts.push_back(i + 1);
            }
        }
        cuts.push_back(n - 1);
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w + 1 < cuts.size(); ++w) {
            pool.emplace_back(fill_rows, std::cref(points), cuts[w], cuts[w + 1], std::ref(raw),
                              std::ref(raw_pairs));
        }
    }

    // raw is already in (i,j) order, so a stable sort gives the (value, i, j) order.
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return raw[a] < raw[b]; });

    DistanceMultiset out;
    out.values.reserve(m);
    out.pairs.reserve(m);
    for (std::size_t idx : order) {
        out.values.push_back(raw[idx]);
        out.pairs.push_back(raw_pairs[idx]);
    }
    return out;
}

double min_separation(const PointSet& points) {
    if (points.size() < 2) {
        throw EmptyResultError("min_separation needs at least two points");
    }
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            best = std::min(best, distance(points[i], points[j]));
        }
    }
    return best;
}

bool is_separated(const PointSet& points, double threshold, double rel_tol) {
    return min_separation(points) >= threshold * (1.0 - rel_tol);
}

std::vector<PairIndex> duplicate_pairs(const PointSet& points) {
    std::vector<PairIndex> out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i] == points[j]) {
                out.push_back({i, j});
            }
        }
    }
    return out;
}

double max_min_ratio(const PointSet& points) {
    if (points.size() < 2) {
        throw EmptyResultError("max_min_ratio needs at least two points");
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            const double r = distance(points[i], points[j]);
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
    }
    if (lo == 0.0) {
        throw InputError("max_min_ratio: duplicate points give a zero minimum distance");
    }
    return hi / lo;
}

PointSet embed_hyperplane(const PointSet& points, std::span<const double> normal, double rel_tol) {
    const std::size_t m = points.dim();
    if (normal.size() != m) {
        throw InputError("hyperplane normal has wrong dimension");
    }
    if (m < 2) {
        throw InputError("cannot embed a hyperplane of R^1");
    }
    const double nlen = std::sqrt(std::inner_product(normal.begin(), normal.end(), normal.begin(), 0.0));
    if (nlen == 0.0 || !std::isfinite(nlen)) {
        throw InputError("hyperplane normal must be a nonzero finite vector");
    }
    Coords unit(normal.begin(), normal.end());
    for (double& x : unit) {
        x /= nlen;
    }

    if (!points.empty()) {
        const double c = std::inner_product(unit.begin(), unit.end(), points[0].begin(), 0.0);
        for (std::size_t i = 0; i < points.size(); ++i) {
            const auto& p = points[i];
            const double h = std::inner_product(unit.begin(), unit.end(), p.begin(), 0.0);
            const double norm = std::sqrt(std::inner_product(p.begin(), p.end(), p.begin(), 0.0));
            if (std::abs(h - c) > rel_tol * std::max({1.0, std::abs(c), norm})) {
                throw InputError("point " + std::to_string(i) + " is off the hyperplane");
            }
        }
    }

    // Gram-Schmidt over e_0..e_{m-1} projected onto the hyperplane, fixed index order.
    std::vector<Coords> basis;
    for (std::size_t axis = 0; axis < m && basis.size() + 1 < m; ++axis) {
        Coords v(m, 0.0);
        v[axis] = 1.0;
        for (std::size_t r = 0; r < m; ++r) {
            v[r] -= unit[axis] * unit[r];
        }
        for (const auto& b : basis) {
            const double dot = std::inner_product(v.begin(), v.end(), b.begin(), 0.0);
            for (std::size_t r = 0; r < m; ++r) {
                v[r] -= dot * b[r];
            }
        }
        const double len = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
        if (len < 1e-6) {
            continue;
        }
        for (double& x : v) {
            x /= len;
        }
        basis.push_back(std::move(v));
    }

    PointSet out(m - 1);
    for (const auto& p : points.points()) {
        Coords y(m - 1);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            y[b] = std::inner_product(basis[b].begin(), basis[b].end(), p.begin(), 0.0);
        }
        out.push_back(std::move(y));
    }
    return out;
}

std::vector<double> distinct_values(std::span<const double> sorted, double rel_tol) {
    std::vector<double> out;
    for (double v : sorted) {
        if (out.empty() || v > out.back() * (1.0 + rel_tol) + (out.back() == 0.0 ? rel_tol : 0.0)) {
            out.push_back(v);
        }
    }
    return out;
}

} // namespace neardist
