#pragma once

#include "fringelab/analysis.hpp"
#include "fringelab/profile.hpp"

#include <string>

namespace fringelab {

// Scan data: header "x_um,counts" or "x_um,counts,err" (an "intensity"
// column name is also accepted so simulated profiles can be fed back in as
// data). '#' lines and blank lines are skipped. Positions must be strictly
// increasing and counts nonnegative; violations name the offending line.
ScanDataset read_scan_csv(const std::string& text);

// Profile files: '#' header lines carrying the model tag, then
// "x_um,intensity" rows. Numbers are written with 12 significant digits,
// which makes write -> read -> write reproduce the text byte for byte.
std::string write_profile_csv(const IntensityProfile& p);

IntensityProfile read_profile_csv(const std::string& text);

} // namespace fringelab
