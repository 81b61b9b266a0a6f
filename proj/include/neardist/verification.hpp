#pragma once

#include "neardist/geometry.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace neardist {

struct DistanceCluster {
    double min = 0.0;
    double max = 0.0;
    std::size_t multiplicity = 0;

    double relative_width() const { return min > 0.0 ? max / min - 1.0 : 0.0; }
};

struct DistanceClusters {
    std::vector<DistanceCluster> clusters;

    nlohmann::json to_json() const;
};

/// Greedy left-to-right clustering: a new cluster opens when the next value
/// exceeds (cluster min) * (1 + rel_tol).
DistanceClusters cluster_distances(std::span<const double> sorted, double rel_tol);

struct KDistanceVerdict {
    bool ok = false;
    DistanceClusters clusters;
};

KDistanceVerdict verify_k_distance_set(const PointSet& points, int k, double rel_tol = kRelTol);

/// Anchors of the minimum cover of sorted positive values by windows
/// [t, t(1+eps)]: each window starts at the smallest uncovered value.
std::vector<double> min_multiplicative_cover(std::span<const double> sorted, double eps);

struct WeakEpsVerdict {
    std::size_t window_count = 0;
    std::vector<double> anchors;
};

/// Throws InputError on duplicate points.
WeakEpsVerdict verify_weak_eps_k(const PointSet& points, double eps);

/// Sharp lower bound on max/min distance for d+2 points in R^d.
double schuette_bound(int d);

/// Requires exactly dim + 2 points.
bool check_schuette(const PointSet& points);

struct DecompositionNode {
    enum class Kind { leaf, split };

    Kind kind = Kind::leaf;
    /// Member indices into the certified point set, ascending.
    std::vector<std::size_t> members;
    /// Window budget handed down by the parent (root: windows found).
    int budget = 0;
    /// Windows found on this node's own distances.
    int windows = 0;
    std::vector<double> anchors;
    /// (d+1)^windows.
    std::int64_t bound = 1;
    // Split nodes only.
    int ell = 0;
    std::int64_t class_bound = 0;
    std::int64_t representative_bound = 0;
    std::vector<DecompositionNode> classes;
    std::unique_ptr<DecompositionNode> representatives;

    std::optional<std::string> failure;

    std::size_t cardinality() const { return members.size(); }

    DecompositionNode() = default;
    DecompositionNode(DecompositionNode&&) = default;
    DecompositionNode& operator=(DecompositionNode&&) = default;
};

struct DecompositionTree {
    DecompositionNode root;
    int d = 1;
    int k = 1;
    double eps = 0.1;
    double ratio_threshold = 10.0;

    /// No failure marker anywhere in the tree.
    bool ok() const;
    /// All failure messages, depth first.
    std::vector<std::string> failures() const;
    nlohmann::json to_json() const;
};

/// Recursive small/large partition certifying |P| <= (d+1)^k.
/// Preconditions: eps in (0, 1], ratio_threshold > 2, verify_weak_eps_k(P, eps) <= k.
DecompositionTree certify_decomposition(const PointSet& points, int d, int k, double eps,
                                        double ratio_threshold = 10.0);

struct MdEntry {
    std::optional<int> value;
    int lower = 0;
    int upper = 0;
};

/// Maximum two-distance set sizes m_d for d = 1..8, with C(d+1,2) <= m_d <= C(d+2,2).
MdEntry md_table(int d);

} // namespace neardist
