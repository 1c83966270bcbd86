#pragma once

#include "opo/config.hpp"
#include "opo/oracle.hpp"

#include <vector>

namespace opo {

// Runs the built-in consistency suite at the given configuration:
// unitarity and commutator preservation, integrator and closed-form
// oracles, clamping and growth laws, threshold singularity, physicality,
// cross-block structure, and serialization. Returns one report per check.
std::vector<OracleReport> run_validation(const OpoConfig& cfg);

bool all_passed(const std::vector<OracleReport>& reports);

}  // namespace opo
