#include "diskdraw/report.hpp"

#include <cstdio>

namespace diskdraw {

std::string format_check_line(int stage, const std::string& kind, Verdict verdict,
                              double clearance) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "stage=%d kind=%s verdict=%s clearance=%.10g", stage, kind.c_str(),
                to_string(verdict), clearance);
  return buf;
}

std::string format_certificate(const DescentCertificate& cert) {
  std::string out;
  for (const auto& c : cert.checks)
    out += format_check_line(c.stage, c.kind, c.verdict, c.clearance) + "\n";
  return out;
}

std::string format_curvature(const CurvatureReport& report) {
  std::string out;
  for (const auto& [i, k] : report.per_piece)
    out += format_check_line(static_cast<int>(i), "curvature", k < 1.0 ? Verdict::Yes : Verdict::No,
                             k) +
           "\n";
  out += format_check_line(0, "rolling", report.rolling_disk_ok ? Verdict::Yes : Verdict::No,
                           report.min_clearance) +
         "\n";
  return out;
}

}  // namespace diskdraw
