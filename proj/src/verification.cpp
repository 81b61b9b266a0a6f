#include "neardist/verification.hpp"

#include "neardist/errors.hpp"
#include "neardist/intervals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>

namespace neardist {

// ---------------------------------------------------------------------------
// k-distance and weakly (eps, k)-distance checks

DistanceClusters cluster_distances(std::span<const double> sorted, double rel_tol) {
    DistanceClusters out;
    for (double v : sorted) {
        if (out.clusters.empty() || v > out.clusters.back().min * (1.0 + rel_tol)) {
            out.clusters.push_back({v, v, 0});
        }
        auto& c = out.clusters.back();
        c.max = v;
        ++c.multiplicity;
    }
    return out;
}

nlohmann::json DistanceClusters::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : clusters) {
        arr.push_back({{"min", c.min}, {"max", c.max}, {"multiplicity", c.multiplicity},
                       {"relative_width", c.relative_width()}});
    }
    return arr;
}

KDistanceVerdict verify_k_distance_set(const PointSet& points, int k, double rel_tol) {
    const auto dm = distance_multiset(points);
    KDistanceVerdict out;
    out.clusters = cluster_distances(dm.values, rel_tol);
    out.ok = dm.values.front() > 0.0 && k >= 0 &&
             out.clusters.clusters.size() <= static_cast<std::size_t>(k);
    return out;
}

std::vector<double> min_multiplicative_cover(std::span<const double> sorted, double eps) {
    if (!(eps > 0.0) || !std::isfinite(eps)) {
        throw InputError("window ratio eps must be positive");
    }
    std::vector<double> anchors;
    for (double v : sorted) {
        if (!(v > 0.0)) {
            throw InputError("zero distance cannot be covered by a multiplicative window");
        }
        if (anchors.empty() || !in_multiplicative_window(v, anchors.back(), eps)) {
            anchors.push_back(v);
        }
    }
    return anchors;
}

WeakEpsVerdict verify_weak_eps_k(const PointSet& points, double eps) {
    const auto dm = distance_multiset(points);
    if (dm.values.front() <= 0.0) {
        throw InputError("duplicate points: zero distance is not coverable");
    }
    WeakEpsVerdict out;
    out.anchors = min_multiplicative_cover(dm.values, eps);
    out.window_count = out.anchors.size();
    return out;
}

// ---------------------------------------------------------------------------
// Schuette

double schuette_bound(int d) {
    if (d < 1) {
        throw InputError("schuette_bound needs d >= 1");
    }
    const double dd = d;
    if (d % 2 == 0) {
        return std::sqrt(1.0 + 2.0 / dd);
    }
    return std::sqrt(1.0 + 2.0 * (dd + 2.0) / (dd * (dd + 2.0) - 1.0));
}

bool check_schuette(const PointSet& points) {
    if (points.size() != points.dim() + 2) {
        throw InputError("check_schuette needs exactly dim + 2 points");
    }
    return max_min_ratio(points) >= schuette_bound(static_cast<int>(points.dim())) - 1e-9;
}

// ---------------------------------------------------------------------------
// Decomposition certificate

namespace {

std::int64_t saturating_pow(std::int64_t base, int exp) {
    std::int64_t out = 1;
    for (int i = 0; i < exp; ++i) {
        if (out > std::numeric_limits<std::int64_t>::max() / base) {
            return std::numeric_limits<std::int64_t>::max();
        }
        out *= base;
    }
    return out;
}

class Certifier {
public:
    Certifier(const PointSet& points, int d, double eps, double ratio_threshold)
        : points_(points), base_(static_cast<std::int64_t>(d) + 1), eps_(eps), threshold_(ratio_threshold) {}

    DecompositionNode build(std::vector<std::size_t> members, int budget) const {
        DecompositionNode node;
        node.members = std::move(members);
        node.budget = budget;

        std::vector<double> dists;
        for (std::size_t a = 0; a < node.members.size(); ++a) {
            for (std::size_t b = a + 1; b < node.members.size(); ++b) {
                dists.push_back(dist(node.members[a], node.members[b]));
            }
        }
        std::sort(dists.begin(), dists.end());
        node.anchors = min_multiplicative_cover(dists, eps_);
        node.windows = static_cast<int>(node.anchors.size());
        node.bound = saturating_pow(base_, node.windows);

        if (node.windows > budget) {
            node.failure = "needs " + std::to_string(node.windows) + " windows but the budget is " +
                           std::to_string(budget);
        }

        const int j = node.windows;
        if (j <= 1 || node.anchors.back() / node.anchors.front() <= threshold_) {
            check_cardinality(node);
            return node;
        }

        node.kind = DecompositionNode::Kind::split;
        const double step = std::pow(threshold_, 1.0 / (j - 1));
        int ell = 1;
        while (ell < j && !(node.anchors[static_cast<std::size_t>(ell)] /
                                node.anchors[static_cast<std::size_t>(ell - 1)] > step)) {
            ++ell;
        }
        if (ell == j) {
            // Rounding kept every consecutive ratio under the step; certify as a leaf.
            node.kind = DecompositionNode::Kind::leaf;
            check_cardinality(node);
            return node;
        }
        node.ell = ell;
        node.class_bound = saturating_pow(base_, ell);
        node.representative_bound = saturating_pow(base_, j - ell);

        const std::size_t m = node.members.size();
        auto small = [&](std::size_t a, std::size_t b) {
            return window_index(node.anchors, dist(node.members[a], node.members[b])) < ell;
        };

        // Components of the "small distance" graph.
        std::vector<std::size_t> comp(m, m);
        std::vector<std::vector<std::size_t>> groups;
        for (std::size_t s = 0; s < m; ++s) {
            if (comp[s] != m) {
                continue;
            }
            const std::size_t id = groups.size();
            groups.emplace_back();
            std::queue<std::size_t> todo;
            todo.push(s);
            comp[s] = id;
            while (!todo.empty()) {
                const std::size_t a = todo.front();
                todo.pop();
                groups[id].push_back(a);
                for (std::size_t b = 0; b < m; ++b) {
                    if (comp[b] == m && small(a, b)) {
                        comp[b] = id;
                        todo.push(b);
                    }
                }
            }
        }

        // The relation must be an equivalence: every pair inside a component is small.
        for (const auto& g : groups) {
            for (std::size_t x = 0; x < g.size(); ++x) {
                for (std::size_t z = x + 1; z < g.size(); ++z) {
                    if (!small(g[x], g[z])) {
                        node.failure = transitivity_witness(node, g[x], g[z], small);
                        return node;
                    }
                }
            }
        }

        std::vector<std::size_t> reps;
        for (auto& g : groups) {
            std::vector<std::size_t> cls;
            for (std::size_t a : g) {
                cls.push_back(node.members[a]);
            }
            std::sort(cls.begin(), cls.end());
            reps.push_back(cls.front());
            node.classes.push_back(build(std::move(cls), ell));
        }
        // groups were seeded in member order, so classes are already ordered by
        // smallest member; keep that explicit for callers that reorder.
        std::sort(node.classes.begin(), node.classes.end(),
                  [](const DecompositionNode& a, const DecompositionNode& b) { return a.members.front() < b.members.front(); });
        std::sort(reps.begin(), reps.end());
        node.representatives = std::make_unique<DecompositionNode>(build(std::move(reps), j - ell));

        check_cardinality(node);
        return node;
    }

private:
    double dist(std::size_t a, std::size_t b) const { return distance(points_[a], points_[b]); }

    // Index of the greedy window holding v: the last anchor not above v.
    static int window_index(const std::vector<double>& anchors, double v) {
        const auto it = std::upper_bound(anchors.begin(), anchors.end(), v * (1.0 + kRelTol));
        return static_cast<int>(it - anchors.begin()) - 1;
    }

    template <typename Small>
    std::string transitivity_witness(const DecompositionNode& node, std::size_t x, std::size_t z,
                                     const Small& small) const {
        // BFS path x -> z over small edges; the first vertex on it not small to x
        // closes a violating triple with its predecessor.
        const std::size_t m = node.members.size();
        std::vector<std::size_t> parent(m, m);
        std::queue<std::size_t> todo;
        todo.push(x);
        parent[x] = x;
        while (!todo.empty() && parent[z] == m) {
            const std::size_t a = todo.front();
            todo.pop();
            for (std::size_t b = 0; b < m; ++b) {
                if (parent[b] == m && small(a, b)) {
                    parent[b] = a;
                    todo.push(b);
                }
            }
        }
        std::vector<std::size_t> path{z};
        while (path.back() != x) {
            path.push_back(parent[path.back()]);
        }
        std::reverse(path.begin(), path.end());
        std::size_t i = 2;
        while (i < path.size() && small(x, path[i])) {
            ++i;
        }
        const std::size_t a = node.members[x];
        const std::size_t b = node.members[path[i - 1]];
        const std::size_t c = node.members[path[i]];
        return "small-distance relation is not transitive: (" + std::to_string(a) + ", " + std::to_string(b) +
               ") and (" + std::to_string(b) + ", " + std::to_string(c) + ") are small but (" + std::to_string(a) +
               ", " + std::to_string(c) + ") is not";
    }

    static void check_cardinality(DecompositionNode& node) {
        if (static_cast<std::int64_t>(node.cardinality()) > node.bound && !node.failure) {
            node.failure = "cardinality " + std::to_string(node.cardinality()) + " exceeds bound " +
                           std::to_string(node.bound);
        }
    }

    const PointSet& points_;
    std::int64_t base_;
    double eps_;
    double threshold_;
};

void collect_failures(const DecompositionNode& node, std::vector<std::string>& out) {
    if (node.failure) {
        out.push_back(*node.failure);
    }
    for (const auto& c : node.classes) {
        collect_failures(c, out);
    }
    if (node.representatives) {
        collect_failures(*node.representatives, out);
    }
}

nlohmann::json node_json(const DecompositionNode& node) {
    nlohmann::json j;
    j["kind"] = node.kind == DecompositionNode::Kind::leaf ? "leaf" : "split";
    j["bound"] = node.bound;
    j["cardinality"] = node.cardinality();
    j["members"] = node.members;
    j["budget"] = node.budget;
    j["windows"] = node.windows;
    j["anchors"] = node.anchors;
    if (node.kind == DecompositionNode::Kind::split) {
        j["ell"] = node.ell;
        j["class_bound"] = node.class_bound;
        j["representative_bound"] = node.representative_bound;
        nlohmann::json cls = nlohmann::json::array();
        for (const auto& c : node.classes) {
            cls.push_back(node_json(c));
        }
        j["classes"] = cls;
        j["representatives"] = node.representatives ? node_json(*node.representatives) : nlohmann::json();
    }
    if (node.failure) {
        j["failure"] = *node.failure;
    }
    return j;
}

} // namespace

bool DecompositionTree::ok() const {
    return failures().empty();
}

std::vector<std::string> DecompositionTree::failures() const {
    std::vector<std::string> out;
    collect_failures(root, out);
    return out;
}

nlohmann::json DecompositionTree::to_json() const {
    return {{"d", d}, {"k", k}, {"eps", eps}, {"D", ratio_threshold}, {"ok", ok()}, {"root", node_json(root)}};
}

DecompositionTree certify_decomposition(const PointSet& points, int d, int k, double eps, double ratio_threshold) {
    if (d < 1 || k < 1) {
        throw InputError("certify_decomposition needs d >= 1 and k >= 1");
    }
    if (!(eps > 0.0) || eps > 1.0) {
        throw InputError("certify_decomposition needs 0 < eps <= 1");
    }
    if (!(ratio_threshold > 2.0)) {
        throw InputError("certify_decomposition needs D > 2");
    }
    if (points.empty()) {
        throw InputError("certify_decomposition needs a nonempty point set");
    }
    int windows = 0;
    if (points.size() >= 2) {
        windows = static_cast<int>(verify_weak_eps_k(points, eps).window_count);
        if (windows > k) {
            throw InputError("point set needs " + std::to_string(windows) + " windows, more than k = " +
                             std::to_string(k));
        }
    }
    std::vector<std::size_t> all(points.size());
    std::iota(all.begin(), all.end(), std::size_t{0});

    DecompositionTree tree;
    tree.d = d;
    tree.k = k;
    tree.eps = eps;
    tree.ratio_threshold = ratio_threshold;
    tree.root = Certifier(points, d, eps, ratio_threshold).build(std::move(all), windows);
    return tree;
}

// ---------------------------------------------------------------------------
// m_d table

MdEntry md_table(int d) {
    if (d < 1) {
        throw InputError("md_table needs d >= 1");
    }
    static constexpr int kValues[] = {3, 5, 6, 10, 16, 27, 29, 45};
    MdEntry out;
    out.lower = (d + 1) * d / 2;
    out.upper = (d + 2) * (d + 1) / 2;
    if (d <= 8) {
        out.value = kValues[d - 1];
    }
    return out;
}

} // namespace neardist
