#include "neardist/constructions.hpp"

#include "neardist/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace neardist {

std::int64_t binomial(int n, int r) {
    if (r < 0 || r > n) {
        return 0;
    }
    r = std::min(r, n - r);
    std::int64_t out = 1;
    for (int i = 1; i <= r; ++i) {
        out = out * (n - r + i) / i;
    }
    return out;
}

std::vector<std::size_t> balanced_sizes(std::size_t n, std::size_t m) {
    if (m == 0) {
        throw InputError("cannot split into zero classes");
    }
    std::vector<std::size_t> sizes(m, n / m);
    for (std::size_t i = 0; i < n % m; ++i) {
        ++sizes[i];
    }
    return sizes;
}

// ---------------------------------------------------------------------------
// MdkWitness

int MdkWitness::p_total() const {
    return std::accumulate(p_parts.begin(), p_parts.end(), 0);
}

std::int64_t MdkWitness::product() const {
    std::int64_t out = 1;
    for (std::size_t i = 0; i < e_parts.size() && i < p_parts.size(); ++i) {
        out *= binomial(e_parts[i] + 1, p_parts[i]);
    }
    for (int q : q_parts) {
        out *= q + 1;
    }
    return out;
}

void MdkWitness::validate() const {
    auto fail = [](const std::string& what) { throw InputError("inconsistent witness: " + what); };
    if (d < 2) fail("d must be >= 2");
    if (k < 1) fail("k must be >= 1");
    if (e < 0 || f < 0 || e + f != d - 1) fail("e + f must equal d - 1");
    if (ell != static_cast<int>(e_parts.size()) || ell != static_cast<int>(p_parts.size())) {
        fail("ell must match the number of e_parts and p_parts");
    }
    if (e == 0 && ell != 0) fail("e = 0 requires ell = 0");
    if (e > 0 && ell < 1) fail("e > 0 requires at least one simplex factor");
    if (std::accumulate(e_parts.begin(), e_parts.end(), 0) != e) fail("e_parts must sum to e");
    for (std::size_t i = 0; i < e_parts.size(); ++i) {
        if (e_parts[i] < 1) fail("e_parts must be positive");
        if (p_parts[i] < 1 || 2 * p_parts[i] > e_parts[i] + 1) fail("p_i must satisfy 1 <= p_i <= (e_i+1)/2");
    }
    if (q_total < 0) fail("q_total must be non-negative");
    if (f == 0 && q_total != 0) fail("f = 0 requires q_total = 0");
    if (p_total() + q_total > k) fail("p + q must not exceed k");
    if (static_cast<int>(q_parts.size()) != f) fail("q_parts must have f entries");
    if (std::accumulate(q_parts.begin(), q_parts.end(), 0) != q_total) fail("q_parts must sum to q_total");
    if (f > 0) {
        const int lo = q_total / f;
        const int hi = (q_total + f - 1) / f;
        for (int q : q_parts) {
            if (q != lo && q != hi) fail("q_parts must be balanced");
        }
    }
    if (value != product()) fail("value does not match the product formula");
}

void ScaleCascade::validate() const {
    if (!(ratio > 1.0) || !std::isfinite(ratio)) {
        throw InputError("scale cascade ratio must exceed 1");
    }
    if (!(base >= 1.0) || !std::isfinite(base)) {
        throw InputError("scale cascade base must be >= 1");
    }
}

// ---------------------------------------------------------------------------
// Elementary sets

PointSet regular_simplex(int d, double edge) {
    if (d < 1) {
        throw InputError("regular_simplex needs d >= 1");
    }
    if (!(edge > 0.0) || !std::isfinite(edge)) {
        throw InputError("regular_simplex needs a positive edge");
    }
    // v_0 = 0; v_k = centroid(v_0..v_{k-1}) + h_k e_k.
    const auto dim = static_cast<std::size_t>(d);
    std::vector<Coords> verts{Coords(dim, 0.0)};
    Coords centroid(dim, 0.0);
    for (std::size_t k = 1; k <= dim; ++k) {
        Coords v = centroid;
        v[k - 1] = edge * std::sqrt(static_cast<double>(k + 1) / (2.0 * static_cast<double>(k)));
        verts.push_back(v);
        for (std::size_t r = 0; r < dim; ++r) {
            centroid[r] = (centroid[r] * static_cast<double>(k) + v[r]) / static_cast<double>(k + 1);
        }
    }
    return PointSet(dim, std::move(verts));
}

PointSet binomial_simplex_set(int e, int p, double lambda) {
    if (e < 1) {
        throw InputError("binomial_simplex_set needs e >= 1");
    }
    if (p < 1 || 2 * p > e + 1) {
        throw InputError("binomial_simplex_set needs 1 <= p <= (e+1)/2");
    }
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw InputError("binomial_simplex_set needs lambda > 0");
    }
    const auto m = static_cast<std::size_t>(e + 1);
    const double h = lambda / std::sqrt(2.0);

    PointSet lifted(m);
    // p-subsets of {0..e} in lexicographic order.
    std::vector<int> pick(static_cast<std::size_t>(p));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        Coords x(m, 0.0);
        for (int c : pick) {
            x[static_cast<std::size_t>(c)] = h;
        }
        lifted.push_back(std::move(x));
        int i = p - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == e + 1 - p + i) {
            --i;
        }
        if (i < 0) {
            break;
        }
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < p; ++j) {
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    const Coords normal(m, 1.0);
    return embed_hyperplane(lifted, normal);
}

PointSet arithmetic_progression(int q, double mu) {
    if (q < 0) {
        throw InputError("arithmetic_progression needs q >= 0");
    }
    if (!(mu > 0.0) || !std::isfinite(mu)) {
        throw InputError("arithmetic_progression needs mu > 0");
    }
    PointSet out(1);
    for (int i = 0; i <= q; ++i) {
        out.push_back({i * mu});
    }
    return out;
}

namespace {

PointSet cartesian_product(const std::vector<PointSet>& factors) {
    std::size_t dim = 0;
    for (const auto& f : factors) {
        dim += f.dim();
    }
    std::vector<Coords> acc{Coords{}};
    for (const auto& f : factors) {
        std::vector<Coords> next;
        next.reserve(acc.size() * f.size());
        for (const auto& prefix : acc) {
            for (const auto& p : f.points()) {
                Coords x = prefix;
                x.insert(x.end(), p.begin(), p.end());
                next.push_back(std::move(x));
            }
        }
        acc = std::move(next);
    }
    return PointSet(dim, std::move(acc));
}

double set_diameter(const PointSet& s) {
    double best = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            best = std::max(best, distance(s[i], s[j]));
        }
    }
    return best;
}

std::vector<PointSet> product_factors(const MdkWitness& w, const ScaleCascade& cascade) {
    const int slots = w.ell + w.f;
    auto scale_of = [&](int slot) { return cascade.base * std::pow(cascade.ratio, slots - 1 - slot); };
    std::vector<PointSet> factors;
    for (int i = 0; i < w.ell; ++i) {
        factors.push_back(binomial_simplex_set(w.e_parts[static_cast<std::size_t>(i)],
                                               w.p_parts[static_cast<std::size_t>(i)], scale_of(i)));
    }
    for (int j = 0; j < w.f; ++j) {
        factors.push_back(arithmetic_progression(w.q_parts[static_cast<std::size_t>(j)], scale_of(w.ell + j)));
    }
    return factors;
}

} // namespace

PointSet product_set(const MdkWitness& witness, const ScaleCascade& cascade) {
    witness.validate();
    cascade.validate();
    return cartesian_product(product_factors(witness, cascade));
}

// ---------------------------------------------------------------------------
// m(d, k)

namespace {

void compositions(int total, std::vector<int>& prefix, const std::function<void(const std::vector<int>&)>& visit) {
    if (total == 0) {
        visit(prefix);
        return;
    }
    for (int first = 1; first <= total; ++first) {
        prefix.push_back(first);
        compositions(total - first, prefix, visit);
        prefix.pop_back();
    }
}

void bounded_parts(const std::vector<int>& e_parts, std::size_t at, int budget, std::vector<int>& prefix,
                   const std::function<void(const std::vector<int>&)>& visit) {
    if (at == e_parts.size()) {
        visit(prefix);
        return;
    }
    const int cap = std::min((e_parts[at] + 1) / 2, budget - static_cast<int>(e_parts.size() - at - 1));
    for (int p = 1; p <= cap; ++p) {
        prefix.push_back(p);
        bounded_parts(e_parts, at + 1, budget - p, prefix, visit);
        prefix.pop_back();
    }
}

std::vector<int> balanced_q(int q_total, int f) {
    std::vector<int> out(static_cast<std::size_t>(f), f > 0 ? q_total / f : 0);
    const int extra = f > 0 ? q_total % f : 0;
    // Ceil parts last: the lexicographically smallest arrangement.
    for (int i = 0; i < extra; ++i) {
        ++out[static_cast<std::size_t>(f - 1 - i)];
    }
    return out;
}

} // namespace

MdkResult maximize_m(int d, int k) {
    if (d < 2 || k < 1) {
        throw InputError("maximize_m needs d >= 2 and k >= 1");
    }
    if (d > 12 || k > 12) {
        throw ResourceError("maximize_m enumeration budget is d <= 12, k <= 12");
    }
    MdkResult best;
    auto consider = [&](int e, const std::vector<int>& e_parts, const std::vector<int>& p_parts) {
        MdkWitness w;
        w.d = d;
        w.k = k;
        w.e = e;
        w.f = d - 1 - e;
        w.ell = static_cast<int>(e_parts.size());
        w.e_parts = e_parts;
        w.p_parts = p_parts;
        // More q never lowers the product, so only q = k - p is a candidate (q = 0 when f = 0).
        w.q_total = w.f > 0 ? k - w.p_total() : 0;
        w.q_parts = balanced_q(w.q_total, w.f);
        w.value = w.product();
        if (w.value > best.value) {
            best.value = w.value;
            best.witness = std::move(w);
        }
    };

    for (int e = d - 1; e >= 0; --e) {
        if (e == 0) {
            consider(0, {}, {});
            continue;
        }
        // Ascending ell, then lexicographic e_parts.
        for (int ell = 1; ell <= std::min(e, k); ++ell) {
            std::vector<int> prefix;
            compositions(e, prefix, [&](const std::vector<int>& e_parts) {
                if (static_cast<int>(e_parts.size()) != ell) {
                    return;
                }
                std::vector<int> p_prefix;
                bounded_parts(e_parts, 0, k, p_prefix,
                              [&](const std::vector<int>& p_parts) { consider(e, e_parts, p_parts); });
            });
        }
    }
    return best;
}

// ---------------------------------------------------------------------------
// Stacked sets and Turan-type constructions

PointSet stacked_set(const PointSet& base, std::size_t n, double scale) {
    if (base.empty()) {
        throw InputError("stacked_set needs a nonempty base");
    }
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw InputError("stacked_set needs scale > 0");
    }
    if (n < 1) {
        throw InputError("stacked_set needs n >= 1");
    }
    if (base.size() >= 2 && min_separation(base) <= 0.0) {
        throw InputError("stacked_set base contains duplicate points");
    }
    const std::size_t dim = base.dim() + 1;
    const auto sizes = balanced_sizes(n, base.size());
    PointSet out(dim);
    for (std::size_t i = 0; i < base.size(); ++i) {
        for (std::size_t j = 0; j < sizes[i]; ++j) {
            Coords x(dim);
            for (std::size_t r = 0; r < base.dim(); ++r) {
                x[r] = scale * base[i][r];
            }
            x[dim - 1] = static_cast<double>(j);
            out.push_back(std::move(x));
        }
    }
    return out;
}

double eps1_limit(double eps) {
    return eps / (2.0 + 2.0 * eps);
}

double default_eps1(double eps) {
    return std::min(0.01, eps / 4.0);
}

double matched_eps(double eps1) {
    return 2.0 * eps1 / (1.0 - 2.0 * eps1);
}

namespace {

void check_simplex_sum_args(int d, int k, double eps1) {
    if (d < 1 || k < 1) {
        throw InputError("simplex-sum sets need d >= 1 and k >= 1");
    }
    if (!(eps1 > 0.0) || !(eps1 < kMaxEps1)) {
        throw InputError("eps1 must lie in (0, 0.25)");
    }
}

std::size_t ipow(std::size_t base, int exp) {
    std::size_t out = 1;
    for (int i = 0; i < exp; ++i) {
        out *= base;
    }
    return out;
}

} // namespace

std::vector<double> simplex_sum_edges(int k, double eps1) {
    std::vector<double> edges;
    for (int p = 0; p < k; ++p) {
        edges.push_back(std::pow(eps1, p));
    }
    return edges;
}

PointSet simplex_sum_set(int d, int k, double eps1) {
    check_simplex_sum_args(d, k, eps1);
    if (ipow(static_cast<std::size_t>(d + 1), k) > 1'000'000) {
        throw ResourceError("simplex_sum_set would exceed 10^6 points");
    }
    const auto dim = static_cast<std::size_t>(d);
    std::vector<PointSet> simplices;
    for (double s : simplex_sum_edges(k, eps1)) {
        simplices.push_back(regular_simplex(d, s));
    }
    std::vector<Coords> acc{Coords(dim, 0.0)};
    for (const auto& simplex : simplices) {
        std::vector<Coords> next;
        next.reserve(acc.size() * simplex.size());
        for (const auto& prefix : acc) {
            for (const auto& v : simplex.points()) {
                Coords x = prefix;
                for (std::size_t r = 0; r < dim; ++r) {
                    x[r] += v[r];
                }
                next.push_back(std::move(x));
            }
        }
        acc = std::move(next);
    }
    return PointSet(dim, std::move(acc));
}

namespace {

std::vector<double> tail_anchors(int k, double eps1, double extra) {
    const auto edges = simplex_sum_edges(k, eps1);
    std::vector<double> anchors;
    for (int p = k - 1; p >= 0; --p) {
        double tail = extra;
        for (int q = p + 1; q < k; ++q) {
            tail += edges[static_cast<std::size_t>(q)];
        }
        anchors.push_back(edges[static_cast<std::size_t>(p)] - tail);
    }
    return anchors;
}

} // namespace

std::vector<double> simplex_sum_anchors(int k, double eps1) {
    check_simplex_sum_args(1, k, eps1);
    return tail_anchors(k, eps1, 0.0);
}

std::vector<double> clustered_turan_anchors(int k, double eps1) {
    check_simplex_sum_args(1, k, eps1);
    return tail_anchors(k, eps1, std::pow(eps1, k));
}

PointSet clustered_turan_set(int d, int k, double eps1, std::size_t n) {
    if (n < 1) {
        throw InputError("clustered_turan_set needs n >= 1");
    }
    const PointSet centers = simplex_sum_set(d, k, eps1);
    const auto sizes = balanced_sizes(n, centers.size());
    const double step = std::pow(eps1, k) / static_cast<double>(n);
    PointSet out(centers.dim());
    for (std::size_t c = 0; c < centers.size(); ++c) {
        for (std::size_t j = 0; j < sizes[c]; ++j) {
            Coords x = centers[c];
            x[0] += static_cast<double>(j) * step;
            out.push_back(std::move(x));
        }
    }
    return out;
}

bool columns_parameters_ok(double t1, double t2, std::size_t n) {
    const double n2 = static_cast<double>(n) * static_cast<double>(n);
    return t1 >= n2 && t2 >= n2;
}

PointSet columns_set(double t1, double t2, std::size_t n) {
    if (n < 3) {
        throw InputError("columns_set needs n >= 3");
    }
    if (!(t1 > 0.0) || !(t2 > 0.0) || !std::isfinite(t1) || !std::isfinite(t2)) {
        throw InputError("columns_set needs positive t1, t2");
    }
    const double xs[3] = {0.0, t1, t1 + t2};
    const auto sizes = balanced_sizes(n, 3);
    PointSet out(2);
    for (std::size_t c = 0; c < 3; ++c) {
        for (std::size_t i = 0; i < sizes[c]; ++i) {
            out.push_back({xs[c], static_cast<double>(i)});
        }
    }
    return out;
}

PointSet known_two_distance_set(int d) {
    switch (d) {
    case 1:
        return PointSet(1, {{0.0}, {1.0}, {2.0}});
    case 2: {
        const double pi = std::acos(-1.0);
        const double radius = 1.0 / (2.0 * std::sin(pi / 5.0));
        PointSet out(2);
        for (int i = 0; i < 5; ++i) {
            const double a = 2.0 * pi * i / 5.0;
            out.push_back({radius * std::cos(a), radius * std::sin(a)});
        }
        return out;
    }
    case 3:
        return binomial_simplex_set(3, 2, 1.0);
    case 4:
        return binomial_simplex_set(4, 2, 1.0);
    default:
        throw UnsupportedError("maximum two-distance sets are only built for d = 1..4");
    }
}

// ---------------------------------------------------------------------------
// Metadata

IntervalFamily Construction::family() const {
    IntervalFamily fam;
    fam.mode = window_mode;
    fam.anchors = expected_window_anchors;
    fam.width = window_width;
    return fam;
}

nlohmann::json Construction::metadata() const {
    nlohmann::json j;
    j["construction"] = name;
    j["parameters"] = parameters;
    j["expected_cardinality"] = expected_cardinality;
    j["expected_window_anchors"] = expected_window_anchors;
    j["window_mode"] = to_string(window_mode);
    j["window_width"] = window_width;
    j["expected_pair_count"] = expected_pair_count ? nlohmann::json(*expected_pair_count) : nlohmann::json();
    j["warnings"] = warnings;
    return j;
}

const std::vector<std::string>& construction_names() {
    static const std::vector<std::string> names{
        "simplex", "binomial", "progression", "two-distance", "product",
        "stacked", "simplex-sum", "clustered-turan", "columns"};
    return names;
}

namespace {

std::int64_t all_pairs(std::size_t n) {
    return static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n - (n > 0 ? 1 : 0)) / 2;
}

std::int64_t cross_pairs(const std::vector<std::size_t>& sizes) {
    std::int64_t total = 0;
    std::int64_t seen = 0;
    for (std::size_t s : sizes) {
        total += seen * static_cast<std::int64_t>(s);
        seen += static_cast<std::int64_t>(s);
    }
    return total;
}

std::vector<double> exact_distance_anchors(const PointSet& points) {
    if (points.size() < 2) {
        return {};
    }
    const auto dm = distance_multiset(points);
    return distinct_values(dm.values);
}

} // namespace

Construction build_construction(const ConstructionRequest& req) {
    Construction c;
    c.name = req.construction;
    nlohmann::json& par = c.parameters;
    const std::string& name = req.construction;

    if (name == "simplex" || name == "binomial" || name == "progression" || name == "two-distance") {
        const double scale = req.scale.value_or(1.0);
        if (name == "simplex") {
            c.points = regular_simplex(req.d, scale);
            par = {{"d", req.d}, {"edge", scale}};
        } else if (name == "binomial") {
            c.points = binomial_simplex_set(req.d, req.k, scale);
            par = {{"e", req.d}, {"p", req.k}, {"lambda", scale}};
        } else if (name == "progression") {
            if (req.n < 1) {
                throw InputError("progression needs --n >= 1");
            }
            c.points = arithmetic_progression(static_cast<int>(req.n) - 1, scale);
            par = {{"q", req.n - 1}, {"mu", scale}};
        } else {
            c.points = known_two_distance_set(req.d);
            par = {{"d", req.d}};
        }
        c.expected_cardinality = c.points.size();
        c.expected_window_anchors = exact_distance_anchors(c.points);
        c.window_mode = WindowMode::multiplicative;
        c.window_width = kRelTol;
        c.expected_pair_count = all_pairs(c.points.size());
        return c;
    }

    if (name == "product") {
        const MdkResult best = maximize_m(req.d, req.k);
        ScaleCascade cascade{req.ratio, req.scale.value_or(1.0)};
        c.points = product_set(best.witness, cascade);
        par = {{"d", req.d}, {"k", req.k}, {"ratio", cascade.ratio}, {"base", cascade.base},
               {"witness",
                {{"e", best.witness.e}, {"f", best.witness.f}, {"ell", best.witness.ell},
                 {"e_parts", best.witness.e_parts}, {"p_parts", best.witness.p_parts},
                 {"q_total", best.witness.q_total}, {"q_parts", best.witness.q_parts}}}};
        c.expected_cardinality = static_cast<std::size_t>(best.value);

        // Distances are never below the dominant factor's own distance; lower
        // factors stretch them by at most sqrt(1 + (B/a)^2).
        const auto factors = product_factors(best.witness, cascade);
        std::vector<double> anchors;
        double worst = 0.0;
        for (std::size_t s = 0; s < factors.size(); ++s) {
            if (factors[s].size() < 2) {
                continue;
            }
            const auto own = exact_distance_anchors(factors[s]);
            anchors.insert(anchors.end(), own.begin(), own.end());
            double lower_sq = 0.0;
            for (std::size_t t = s + 1; t < factors.size(); ++t) {
                const double diam = set_diameter(factors[t]);
                lower_sq += diam * diam;
            }
            worst = std::max(worst, std::sqrt(1.0 + lower_sq / (own.front() * own.front())) - 1.0);
        }
        std::sort(anchors.begin(), anchors.end());
        c.expected_window_anchors = anchors;
        c.window_mode = WindowMode::multiplicative;
        c.window_width = std::max(worst * (1.0 + 1e-6), kRelTol);
        c.expected_pair_count = all_pairs(c.points.size());
        return c;
    }

    if (name == "stacked") {
        if (req.d < 2) {
            throw InputError("stacked needs d >= 2");
        }
        if (req.n < 1) {
            throw InputError("stacked needs --n >= 1");
        }
        const PointSet base = known_two_distance_set(req.d - 1);
        const double nn = static_cast<double>(req.n);
        const double scale = req.scale.value_or(nn * nn);
        c.points = stacked_set(base, req.n, scale);
        par = {{"d", req.d}, {"n", req.n}, {"scale", scale}, {"base", "two-distance"}, {"length", req.length}};
        c.expected_cardinality = req.n;
        std::vector<double> anchors = exact_distance_anchors(base);
        for (double& a : anchors) {
            a *= scale;
        }
        c.expected_window_anchors = anchors;
        c.window_mode = WindowMode::additive;
        c.window_width = req.length;
        const auto sizes = balanced_sizes(req.n, base.size());
        c.expected_pair_count = cross_pairs(sizes);
        const double height = static_cast<double>(sizes.front()) - 1.0;
        const double lowest = anchors.front();
        if (std::hypot(lowest, height) - lowest > req.length) {
            c.warnings.push_back("scale too small: cross-column distances overflow the windows");
        }
        if (height >= lowest) {
            c.warnings.push_back("scale too small: within-column distances reach the windows");
        }
        return c;
    }

    if (name == "simplex-sum" || name == "clustered-turan") {
        const double eps1 = req.eps1.value_or(default_eps1(req.eps));
        par = {{"d", req.d}, {"k", req.k}, {"eps1", eps1}};
        c.window_mode = WindowMode::multiplicative;
        c.window_width = matched_eps(eps1);
        if (name == "simplex-sum") {
            c.points = simplex_sum_set(req.d, req.k, eps1);
            c.expected_cardinality = c.points.size();
            c.expected_window_anchors = simplex_sum_anchors(req.k, eps1);
            c.expected_pair_count = all_pairs(c.points.size());
        } else {
            if (req.n < 1) {
                throw InputError("clustered-turan needs --n >= 1");
            }
            c.points = clustered_turan_set(req.d, req.k, eps1, req.n);
            par["n"] = req.n;
            c.expected_cardinality = req.n;
            c.expected_window_anchors = clustered_turan_anchors(req.k, eps1);
            c.expected_pair_count = cross_pairs(balanced_sizes(req.n, ipow(static_cast<std::size_t>(req.d + 1), req.k)));
        }
        return c;
    }

    if (name == "columns") {
        const double nn = static_cast<double>(req.n);
        const double t1 = req.t1.value_or(nn * nn);
        const double t2 = req.t2.value_or(nn * nn);
        c.points = columns_set(t1, t2, req.n);
        par = {{"n", req.n}, {"t1", t1}, {"t2", t2}};
        c.expected_cardinality = req.n;
        std::vector<double> anchors{t1, t2, t1 + t2};
        std::sort(anchors.begin(), anchors.end());
        c.expected_window_anchors = distinct_values(anchors);
        c.window_mode = WindowMode::additive;
        c.window_width = 1.0;
        c.expected_pair_count = cross_pairs(balanced_sizes(req.n, 3));
        if (!columns_parameters_ok(t1, t2, req.n)) {
            c.warnings.push_back("t1 or t2 below n^2: cross-column distances may leave the unit windows");
        }
        return c;
    }

    throw InputError("unknown construction '" + name + "'");
}

} // namespace neardist
