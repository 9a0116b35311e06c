#pragma once

// Property suites over bounded enumerations. Each suite returns a report with
// the number of instances examined and any counterexamples found; the `check`
// command and the acceptance runner are thin wrappers around these.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mseg/oracle.hpp"

namespace mseg {

struct CheckOptions {
    // When unset, each suite uses its own default domain.
    std::optional<EnumerationBounds> bounds;
    std::uint64_t seed = 20240601;
    std::uint64_t samples = 100000;   // sampled triples in the combi suite
    std::uint64_t transfer_instances = 10000;
    int max_size = 8;                 // |mu| bound for multipartitions
    int max_level = 3;
    int charge_min = -2;
    int charge_max = 2;
    bool mutate_ell_sign = false;     // harness self-test
};

struct SuiteReport {
    std::string suite;
    std::uint64_t instances = 0;
    std::uint64_t failure_count = 0;
    std::vector<std::string> failures; // first few counterexamples
    std::vector<std::string> notes;
    std::string reproduce;
    double seconds = 0;

    bool passed() const { return failure_count == 0; }
    void fail(std::string what);
};

SuiteReport check_combi(const CheckOptions& opts);
SuiteReport check_rsk_wellformed(const CheckOptions& opts);
SuiteReport check_derivative_coherence(const CheckOptions& opts);
SuiteReport check_specht_dictionary(const CheckOptions& opts);
SuiteReport check_goldens(const CheckOptions& opts);
SuiteReport check_tableaux_layer(const CheckOptions& opts);
SuiteReport check_transfer(const CheckOptions& opts);
SuiteReport check_kv_choice(const CheckOptions& opts);

/// Suite names accepted by the `check` command: combi, rsk, specht, strings, all.
std::vector<SuiteReport> run_suite(const std::string& name, const CheckOptions& opts);

void to_json(nlohmann::json& j, const SuiteReport& r);

} // namespace mseg
