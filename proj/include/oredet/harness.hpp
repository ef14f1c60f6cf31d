#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oredet/generator.hpp"

namespace oredet {

struct HarnessConfig {
    std::size_t count = 100;
    std::uint64_t seed = 0;
    GeneratorConfig generator;  // seed and target are overridden per instance
    // nullopt cycles any / dd0 / dd1 by instance index.
    std::optional<Target> target;
    std::size_t threads = 0;  // 0 = hardware concurrency
};

struct InstanceResult {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    Target target = Target::any;
    std::optional<OreMatrix> matrix;  // empty when generation failed
    std::optional<std::int64_t> dd;
    bool theorem_checked = false;
    bool certified = false;  // dd = 1 reduction produced a valid certificate
    std::vector<std::string> failures;
    std::string generation_error;
};

struct HarnessSummary {
    std::vector<InstanceResult> instances;  // ordered by index
    std::size_t singular = 0;
    std::size_t generation_failures = 0;
    std::size_t theorem_checked = 0;
    std::size_t certified = 0;
    std::map<std::int64_t, std::size_t> dd_histogram;
    std::size_t failures = 0;  // instances with at least one failed check

    bool ok() const { return failures == 0; }
};

/// Runs every available check on one matrix: tord against brute force, the
/// characteristic-matrix theorem with the optimal and perturbed majorants,
/// det_1 in Q[x] for dd <= 1, and the certified reduction for dd = 1.
InstanceResult check_instance(const OreMatrix& m);

/// Instances are independent and run on a thread pool; the result order
/// depends only on the index. Instance i uses seed cfg.seed + i.
HarnessSummary run_harness(const HarnessConfig& cfg);

}  // namespace oredet
