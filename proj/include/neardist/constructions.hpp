#pragma once

#include "neardist/geometry.hpp"
#include "neardist/intervals.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace neardist {

/// Parameters of the product of binomial simplex sets and arithmetic
/// progressions living in R^(d-1):
///   d - 1 = e + f,  e = sum(e_parts),  ell = |e_parts|,
///   p_parts[i] <= (e_parts[i] + 1) / 2,  sum(p_parts) + q_total <= k,
///   q_parts balanced (each floor or ceil of q_total / f).
/// value = prod C(e_i + 1, p_i) * prod (q_j + 1).
struct MdkWitness {
    int d = 2;
    int k = 1;
    int e = 0;
    int f = 0;
    int ell = 0;
    std::vector<int> e_parts;
    std::vector<int> p_parts;
    int q_total = 0;
    std::vector<int> q_parts;
    std::int64_t value = 1;

    int p_total() const;
    /// Product formula recomputed from the parts.
    std::int64_t product() const;
    /// Throws InputError naming the first violated constraint.
    void validate() const;

    friend bool operator==(const MdkWitness&, const MdkWitness&) = default;
};

/// Successive factor scales base * ratio^slot.
struct ScaleCascade {
    double ratio = 1e4;
    double base = 1.0;

    void validate() const;
};

struct MdkResult {
    std::int64_t value = 0;
    MdkWitness witness;
};

std::int64_t binomial(int n, int r);

/// n split into m classes; the first n mod m classes get ceil(n/m).
std::vector<std::size_t> balanced_sizes(std::size_t n, std::size_t m);

PointSet regular_simplex(int d, double edge);

/// C(e+1, p) points of R^(e+1) with p coordinates lambda/sqrt(2), the rest 0,
/// re-embedded isometrically in R^e. Distances are lambda*sqrt(r), r = 1..p.
PointSet binomial_simplex_set(int e, int p, double lambda);

PointSet arithmetic_progression(int q, double mu);

PointSet product_set(const MdkWitness& witness, const ScaleCascade& cascade = {});

/// Exhaustive maximization of the product formula. Budget: d <= 12, k <= 12.
/// Ties go to the larger e, then smaller ell, then lexicographically smaller
/// e_parts, p_parts, q_parts.
MdkResult maximize_m(int d, int k);

/// Columns over a base set of R^(d-1): class i holds scale*x_i + j*e_d, j = 0..n_i-1.
PointSet stacked_set(const PointSet& base, std::size_t n, double scale);

/// Largest eps1 accepted by the simplex-sum generators (the bound at eps = 1).
inline constexpr double kMaxEps1 = 0.25;

/// Largest eps1 whose windows fit ratio 1 + eps: eps / (2 + 2 eps).
double eps1_limit(double eps);
/// min(0.01, eps / 4).
double default_eps1(double eps);
/// Window ratio guaranteed by eps1: 2 eps1 / (1 - 2 eps1).
double matched_eps(double eps1);

/// Edge lengths eps1^(p-1), p = 1..k.
std::vector<double> simplex_sum_edges(int k, double eps1);

/// All (d+1)^k sums v_{1,i_1} + ... + v_{k,i_k}, lexicographic in (i_1, ..., i_k).
PointSet simplex_sum_set(int d, int k, double eps1);

/// Anchors s_p - sum_{q>p} s_q, ascending.
std::vector<double> simplex_sum_anchors(int k, double eps1);

/// n points in (d+1)^k classes around the simplex-sum points; class c's
/// members sit at offsets (j * eps1^k / n) e_1.
PointSet clustered_turan_set(int d, int k, double eps1, std::size_t n);

/// Anchors s_p - sum_{q>p} s_q - eps1^k, ascending.
std::vector<double> clustered_turan_anchors(int k, double eps1);

/// Three columns at abscissas 0, t1, t1+t2 with unit vertical spacing.
PointSet columns_set(double t1, double t2, std::size_t n);

/// Whether t1, t2 >= n^2, the regime where cross-column distances stay in unit windows.
bool columns_parameters_ok(double t1, double t2, std::size_t n);

/// A maximum two-distance set of R^d for d = 1..4, minimum distance 1.
PointSet known_two_distance_set(int d);

/// A generator run packaged with its metadata sidecar.
struct Construction {
    std::string name;
    nlohmann::json parameters;
    PointSet points{1};
    std::size_t expected_cardinality = 0;
    std::vector<double> expected_window_anchors;
    WindowMode window_mode = WindowMode::additive;
    double window_width = 1.0;
    /// Pairs the construction places inside the windows (cross-class pairs).
    std::optional<std::int64_t> expected_pair_count;
    std::vector<std::string> warnings;

    IntervalFamily family() const;
    nlohmann::json metadata() const;
};

struct ConstructionRequest {
    std::string construction;
    int d = 2;
    int k = 1;
    std::size_t n = 0;
    double eps = 0.1;
    std::optional<double> eps1;
    std::optional<double> scale;
    double ratio = 1e4;
    double length = 1.0;
    std::optional<double> t1;
    std::optional<double> t2;
};

/// Names accepted by build_construction.
const std::vector<std::string>& construction_names();

Construction build_construction(const ConstructionRequest& request);

} // namespace neardist
