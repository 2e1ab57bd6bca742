#include "abcone/cli.hpp"
#include "abcone/errors.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace abcone::cli {

namespace {

constexpr std::size_t kMaxPoints = 10'000'000;

double parse_number(const std::string& token, const std::string& whole)
{
    const char* begin = token.c_str();
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(begin, &end);
    if (token.empty() || end != begin + token.size() || errno == ERANGE || !std::isfinite(v)) {
        throw DomainError("malformed range '" + whole + "': expected lo:hi:step or a number");
    }
    return v;
}

std::vector<std::string> split(const std::string& text)
{
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (!text.empty() && text.back() == ':') parts.emplace_back();
    return parts;
}

}  // namespace

std::vector<double> parse_range(const std::string& text)
{
    const auto parts = split(text);
    if (parts.size() == 1) return {parse_number(parts[0], text)};
    if (parts.size() != 3) {
        throw DomainError("malformed range '" + text + "': expected lo:hi:step");
    }
    const double lo = parse_number(parts[0], text);
    const double hi = parse_number(parts[1], text);
    const double step = parse_number(parts[2], text);
    if (!(step > 0.0)) {
        detail::throw_domain("range step must satisfy step > 0", step);
    }
    if (!(hi >= lo)) {
        detail::throw_domain("range must satisfy hi >= lo; hi", hi);
    }
    const double spans = (hi - lo) / step;
    const double whole = std::round(spans);
    const bool exact = std::fabs(spans - whole) <= 1e-9 * std::max(1.0, whole);
    const double count = exact ? whole + 1.0 : std::ceil(spans);
    if (count > static_cast<double>(kMaxPoints)) {
        detail::throw_domain("range has too many points; count must satisfy count <= 1e7", count);
    }
    std::vector<double> out;
    const auto n = static_cast<std::size_t>(count);
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(i + 1 == n && exact ? hi : lo + static_cast<double>(i) * step);
    }
    return out;
}

std::vector<long long> parse_int_range(const std::string& text)
{
    auto parts = split(text);
    std::string full = text;
    if (parts.size() == 2) full += ":1";
    std::vector<long long> out;
    for (double v : parse_range(full)) {
        if (v != std::floor(v) || std::fabs(v) > 1e15) {
            throw DomainError("integer range '" + text + "' produced a non-integer value " +
                              detail::format_value(v));
        }
        out.push_back(static_cast<long long>(v));
    }
    return out;
}

}  // namespace abcone::cli
