#ifndef CDUNKL_REPORT_HPP
#define CDUNKL_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace cdunkl
{

enum class ReportStatus {
    pass,
    fail,
    // The identity does not apply for these parameters (e.g. ν_k = 0 in the index-lowering recurrence).
    degenerate,
    // Not run for this configuration (e.g. m = 2 reductions when m != 2).
    skipped,
    // A known, documented disagreement that is reported rather than failed.
    discrepancy,
};

struct VerificationReport {
    std::string identity;
    int m = 0;
    std::vector<double> nu;
    int truncation = 0;
    double max_residual = 0;
    double tolerance = 0;
    bool pass = false;
    ReportStatus status = ReportStatus::fail;
    std::string detail;
};

// Sets pass/status from max_residual <= tolerance.
VerificationReport make_report(std::string identity, int m, std::vector<double> nu, int truncation,
                               double max_residual, double tolerance, std::string detail = {});

const char *to_string(ReportStatus s) noexcept;

// Schema version 1, fields in this order:
// {identity, m, nu, truncation, max_residual, tolerance, pass, status, detail}
nlohmann::ordered_json to_json(const VerificationReport &r);

inline constexpr int report_schema_version = 1;

} // namespace cdunkl

#endif
