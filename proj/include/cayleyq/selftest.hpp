#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cayleyq/json_io.hpp"

namespace cayleyq {

/// Sample counts for the end-to-end property suite. The defaults are the
/// acceptance counts.
struct SuiteConfig {
    std::uint64_t seed = 1;
    std::size_t cayley_samples = 200;
    std::size_t prop3_samples = 50;
    std::size_t decomposition_samples = 100;
    std::size_t homomorphism_pairs = 100;
    std::size_t closure_pairs = 50;
    std::size_t archimedean_samples = 50;
    std::size_t field_samples = 500;
    /// Upper bound on sampled dimensions; must be at least 3.
    std::size_t max_dim = 6;

    /// Every count set to `trials` (the field layer gets 10x).
    static SuiteConfig scaled(std::size_t trials, std::uint64_t seed, std::size_t max_dim);
};

struct CriterionResult {
    int id = 0;
    std::string title;
    std::size_t checks = 0;
    std::size_t failures = 0;
    /// Description of the first failing check, empty on success.
    std::string first_failure;
    bool pass() const { return failures == 0 && checks > 0; }
};

CriterionResult check_cayley_round_trip(const SuiteConfig& cfg);
CriterionResult check_infinitesimal_rotation(const SuiteConfig& cfg);
CriterionResult check_neumann_identity(const SuiteConfig& cfg);
CriterionResult check_cartan_dieudonne(const SuiteConfig& cfg);
CriterionResult check_spinor_homomorphism(const SuiteConfig& cfg);
CriterionResult check_neg_identity_spinor(const SuiteConfig& cfg);
CriterionResult check_subgroup_n(const SuiteConfig& cfg);
CriterionResult check_archimedean_degeneration(const SuiteConfig& cfg);
CriterionResult check_field_oracle(const SuiteConfig& cfg);

/// All criteria in order.
std::vector<CriterionResult> run_suite(const SuiteConfig& cfg);

json to_json(const CriterionResult& r);

}  // namespace cayleyq
