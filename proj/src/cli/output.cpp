#include "abcone/cli.hpp"
#include "abcone/errors.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>

namespace abcone::cli {

std::string format_number(double v)
{
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::map<std::string, std::string> read_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file '" + path + "'");
    std::map<std::string, std::string> out;
    std::string line;
    int lineno = 0;
    const auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) return std::string();
        const auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        const std::string key = eq == std::string::npos ? std::string() : trim(line.substr(0, eq));
        const std::string value = eq == std::string::npos ? std::string() : trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw DomainError(path + ":" + std::to_string(lineno) + ": expected 'key = value'");
        }
        out[key] = value;
    }
    if (in.bad()) throw IoError("error while reading config file '" + path + "'");
    return out;
}

unsigned thread_count()
{
    if (const char* env = std::getenv(kThreadsEnv)) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(std::min(v, 256L));
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<std::string> parallel_rows(std::size_t n, unsigned threads,
                                       const std::function<std::string(std::size_t)>& fn)
{
    std::vector<std::string> rows(n);
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) rows[i] = fn(i);
        return rows;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::size_t failure_index = n;
    std::mutex mu;
    const auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                rows[i] = fn(i);
            }
            catch (...) {
                // lowest failing index wins, as in a serial run
                std::lock_guard lock(mu);
                if (i < failure_index) {
                    failure_index = i;
                    failure = std::current_exception();
                }
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return rows;
}

}  // namespace abcone::cli
