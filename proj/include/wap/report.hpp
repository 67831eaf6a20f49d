#pragma once

#include <string>
#include <string_view>

#include "wap/coeff_asymptotics.hpp"

namespace wap {

/// Shortest decimal form that reads back to the same double.
std::string format_double(double value);

/// k,j,rescaled_coeff,L_j,abs_error
std::string coefficients_csv(const ConvergenceReport& report);

/// k,root_re,root_im,nearest_attractor,distance
std::string roots_csv(const ConvergenceReport& report);

std::string report_json(const ConvergenceReport& report);

/// Limit polynomial, attractors and one summary line per k.
std::string report_text(const ConvergenceReport& report);

/// Writes to a sibling temporary file and renames it into place.
void write_file_atomic(const std::string& path, std::string_view content);

/// prefix + "_coefficients.csv", prefix + "_roots.csv", prefix + ".json".
/// All three are rendered before any file is touched.
void write_report_files(const ConvergenceReport& report, const std::string& prefix);

}  // namespace wap
