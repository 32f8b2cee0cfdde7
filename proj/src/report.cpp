#include <cdunkl/report.hpp>

namespace cdunkl
{

VerificationReport make_report(std::string identity, int m, std::vector<double> nu, int truncation,
                               double max_residual, double tolerance, std::string detail)
{
    VerificationReport r;
    r.identity = std::move(identity);
    r.m = m;
    r.nu = std::move(nu);
    r.truncation = truncation;
    r.max_residual = max_residual;
    r.tolerance = tolerance;
    // NaN residuals fail.
    r.pass = max_residual <= tolerance;
    r.status = r.pass ? ReportStatus::pass : ReportStatus::fail;
    r.detail = std::move(detail);
    return r;
}

const char *to_string(ReportStatus s) noexcept
{
    switch (s) {
        case ReportStatus::pass:
            return "pass";
        case ReportStatus::fail:
            return "fail";
        case ReportStatus::degenerate:
            return "degenerate";
        case ReportStatus::skipped:
            return "skipped";
        case ReportStatus::discrepancy:
            return "discrepancy";
    }
    return "fail";
}

nlohmann::ordered_json to_json(const VerificationReport &r)
{
    nlohmann::ordered_json j;
    j["identity"] = r.identity;
    j["m"] = r.m;
    j["nu"] = r.nu;
    j["truncation"] = r.truncation;
    j["max_residual"] = r.max_residual;
    j["tolerance"] = r.tolerance;
    j["pass"] = r.pass;
    j["status"] = to_string(r.status);
    j["detail"] = r.detail;
    return j;
}

} // namespace cdunkl
