#include <cdunkl/cli/run_config.hpp>

#include <charconv>
#include <cmath>
#include <string>

#include <cdunkl/errors.hpp>

namespace cdunkl::cli
{

namespace
{

double parse_double(std::string_view s, std::string_view whole)
{
    double v = 0;
    const auto *first = s.data();
    const auto *last = s.data() + s.size();
    if (first != last && *first == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last) {
        throw ParameterError("cannot parse number '" + std::string(whole) + "'");
    }
    return v;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

} // namespace

void validate(const RunConfig &cfg, bool needs_nu)
{
    if (cfg.m < 2) {
        throw ParameterError("--m must be >= 2");
    }
    if (cfg.truncation < 2 * cfg.m) {
        throw ParameterError("--truncation must be >= 2m = " + std::to_string(2 * cfg.m));
    }
    if (cfg.tolerance && !(*cfg.tolerance > 0)) {
        throw ParameterError("--tolerance must be > 0");
    }
    if (needs_nu && cfg.nu.size() != static_cast<std::size_t>(cfg.m - 1)) {
        throw ParameterError("--nu needs m-1 = " + std::to_string(cfg.m - 1) + " comma-separated values, got "
                             + std::to_string(cfg.nu.size()));
    }
    if (!std::isfinite(cfg.lambda.real()) || !std::isfinite(cfg.lambda.imag())) {
        throw ParameterError("--lambda must be finite");
    }
}

complex parse_complex(std::string_view text)
{
    const auto s = trim(text);
    if (s.empty()) {
        throw ParameterError("empty complex number");
    }
    if (s.back() != 'i') {
        return {parse_double(s, text), 0.0};
    }
    const auto body = s.substr(0, s.size() - 1);
    // Split at the last sign that is not part of an exponent or the leading sign.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    auto imag_of = [&](std::string_view part) {
        if (part.empty() || part == "+") {
            return 1.0;
        }
        if (part == "-") {
            return -1.0;
        }
        return parse_double(part, text);
    };
    if (split == std::string_view::npos) {
        return {0.0, imag_of(body)};
    }
    return {parse_double(body.substr(0, split), text), imag_of(body.substr(split))};
}

std::vector<double> parse_real_list(std::string_view text)
{
    std::vector<double> out;
    if (trim(text).empty()) {
        return out;
    }
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const auto item = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
        out.push_back(parse_double(item, text));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

std::vector<complex> parse_grid(std::string_view text)
{
    const auto c1 = text.find(':');
    const auto c2 = c1 == text.npos ? text.npos : text.find(':', c1 + 1);
    if (c1 == text.npos || c2 == text.npos || text.find(':', c2 + 1) != text.npos) {
        throw ParameterError("--grid must be start:stop:step, got '" + std::string(text) + "'");
    }
    const auto start = parse_complex(text.substr(0, c1));
    const auto stop = parse_complex(text.substr(c1 + 1, c2 - c1 - 1));
    const auto step = parse_complex(text.substr(c2 + 1));
    if (start == stop) {
        return {start};
    }
    if (step == complex(0)) {
        throw ParameterError("--grid step must be nonzero");
    }
    const auto ratio = (stop - start) / step;
    if (ratio.real() < 0 || std::abs(ratio.imag()) > 1e-9 * std::max(1.0, std::abs(ratio))) {
        throw ParameterError("--grid step does not point from start towards stop");
    }
    const auto count = static_cast<long>(std::floor(ratio.real() + 1e-9));
    if (count > 1000000) {
        throw ParameterError("--grid has too many points");
    }
    std::vector<complex> out;
    out.reserve(static_cast<std::size_t>(count) + 1);
    for (long i = 0; i <= count; ++i) {
        out.push_back(start + static_cast<double>(i) * step);
    }
    return out;
}

complex effective_mu(const RunConfig &cfg)
{
    return cfg.mu_direct ? cfg.lambda : GroupConfig(cfg.m).kappa() * cfg.lambda;
}

complex effective_lambda(const RunConfig &cfg)
{
    return cfg.mu_direct ? cfg.lambda / GroupConfig(cfg.m).kappa() : cfg.lambda;
}

} // namespace cdunkl::cli
