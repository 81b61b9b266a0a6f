#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace neardist {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    /// One-line summary of what was compared.
    std::string detail;
};

/// Runs the full reproduction table. Randomized rows draw from `seed`.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 0);

CriterionResult check_stacked_sharpness();
CriterionResult check_simplex_sum_sizes();
CriterionResult check_clustered_turan();
CriterionResult check_decomposition_certificates();
CriterionResult check_mdk_oracle();
CriterionResult check_window_dp(std::uint64_t seed);
CriterionResult check_two_distance_table();
CriterionResult check_schuette_samples(std::uint64_t seed);
CriterionResult check_greedy_cover(std::uint64_t seed);

std::string acceptance_markdown(const std::vector<CriterionResult>& rows);

} // namespace neardist
