#pragma once

#include "opo/config.hpp"
#include "opo/covariance.hpp"
#include "opo/sweep.hpp"

#include <string>
#include <vector>

namespace opo {

// Matrix CSV, one row per line, 17 significant digits so that values
// survive a write/read cycle bit for bit.
std::string to_csv(const RealMatrix& m);
RealMatrix matrix_from_csv(const std::string& text);

// Physically meaningful entry names for the symmetric/antisymmetric
// blocks. Returns "" for entries without an established name. Blocks:
// "vs", "va", "csa".
std::string pattern_name(const std::string& block, int row, int col);

// Long-format sweep CSV: axis,value,block,row,col,name,entry. Failed grid
// points appear as a single row with block "error" and the message in the
// name column.
std::string sweep_to_csv(const std::vector<SweepPoint>& points, SweepAxis axis);
std::string sweep_to_json(const std::vector<SweepPoint>& points, SweepAxis axis);
std::string sweep_to_table(const std::vector<SweepPoint>& points, SweepAxis axis);

std::string covariance_json(const OpoConfig& cfg, const CovarianceMatrix& v,
                            const SABlocks& sa, const PhysicalityReport& report);

std::string covariance_table(const CovarianceMatrix& v, const SABlocks& sa,
                             const PhysicalityReport& report);

}  // namespace opo
