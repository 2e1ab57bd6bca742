#include "abcone/errors.hpp"

#include <cstdio>

namespace abcone::detail {

std::string format_value(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void throw_domain(const std::string& what, double value)
{
    throw DomainError(what + " (got " + format_value(value) + ")");
}

}  // namespace abcone::detail
