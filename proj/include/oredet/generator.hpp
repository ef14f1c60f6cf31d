#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "oredet/errors.hpp"
#include "oredet/ore_matrix.hpp"

namespace oredet {

enum class Target { any, dd0, dd1 };

std::string to_string(Target t);
/// Throws InputError for anything but "any", "dd0", "dd1".
Target parse_target(const std::string& s);

struct GeneratorConfig {
    std::size_t n = 2;
    std::int64_t max_ord = 2;
    std::int64_t max_deg = 2;
    std::int64_t max_num = 5;  // |numerator| bound of rational coefficients
    std::int64_t max_den = 1;  // denominator bound; 1 = integer coefficients
    std::uint64_t seed = 0;
    Target target = Target::any;
    std::size_t max_attempts = 2000;

    /// Throws InputError on n = 0, negative bounds, max_num = 0 or max_den = 0.
    void validate() const;
};

struct GeneratedInstance {
    OreMatrix matrix;
    std::optional<std::int64_t> dd;  // nullopt when det = 0
    std::size_t attempts = 0;
};

class GenerationFailure : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// Random matrix over Q[x][d], a pure function of the config. For dd0/dd1
/// proposals are drawn until the degeneracy degree matches; dd1 proposals
/// are mostly built with a rank-deficient leading matrix and random padding.
/// Throws GenerationFailure when max_attempts proposals all miss.
GeneratedInstance random_matrix(const GeneratorConfig& cfg);

}  // namespace oredet
