#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace neardist {

/// Default relative tolerance for every geometric comparison.
inline constexpr double kRelTol = 1e-9;

using Coords = std::vector<double>;

/// n points in R^dim. A point's identity is its index.
class PointSet {
public:
    explicit PointSet(std::size_t dim);
    PointSet(std::size_t dim, std::vector<Coords> points);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }

    const Coords& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<Coords>& points() const noexcept { return points_; }

    /// Throws InputError on wrong length or non-finite coordinates.
    void push_back(Coords p);

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    std::size_t dim_;
    std::vector<Coords> points_;
};

struct PairIndex {
    std::size_t i;
    std::size_t j;
    friend bool operator==(const PairIndex&, const PairIndex&) = default;
};

/// All C(n,2) pairwise distances, sorted ascending; ties ordered by (i,j).
struct DistanceMultiset {
    std::vector<double> values;
    std::vector<PairIndex> pairs;

    std::size_t size() const noexcept { return values.size(); }
};

double distance(std::span<const double> a, std::span<const double> b);

DistanceMultiset distance_multiset(const PointSet& points);

/// Smallest pairwise distance; 0 when the set contains a duplicate.
double min_separation(const PointSet& points);

bool is_separated(const PointSet& points, double threshold = 1.0, double rel_tol = kRelTol);

/// Indices (i,j), i<j, of coincident points.
std::vector<PairIndex> duplicate_pairs(const PointSet& points);

/// max distance / min distance. Throws InputError on duplicates.
double max_min_ratio(const PointSet& points);

/// Re-coordinatizes points lying in the hyperplane <x, normal> = c of R^m
/// isometrically into R^(m-1).
PointSet embed_hyperplane(const PointSet& points, std::span<const double> normal,
                          double rel_tol = kRelTol);

/// Distinct values of a sorted sequence, clustered at relative tolerance.
std::vector<double> distinct_values(std::span<const double> sorted, double rel_tol = kRelTol);

/// Worker cap from NEARDIST_THREADS (>= 1).
unsigned worker_count();

} // namespace neardist
