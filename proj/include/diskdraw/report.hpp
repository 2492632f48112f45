#pragma once

#include <string>

#include "diskdraw/curvature.hpp"
#include "diskdraw/obstruction.hpp"

namespace diskdraw {

/// One line: stage=<i> kind=<kind> verdict=<yes|no|boundary> clearance=<float>
std::string format_check_line(int stage, const std::string& kind, Verdict verdict,
                              double clearance);

/// Every check of the certificate, one per line.
std::string format_certificate(const DescentCertificate& cert);

/// kind=curvature per piece (clearance = unsigned curvature, verdict yes when
/// below 1) and a final kind=rolling line (clearance = smallest distance seen).
std::string format_curvature(const CurvatureReport& report);

}  // namespace diskdraw
