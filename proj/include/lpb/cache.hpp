// Persistent cache of computed degrees: newline-delimited JSON records
//     {"d": 2, "degree": "1320", "engine_version": "lpb-1.0", "n": 3}
// Appends are single write(2) calls on an O_APPEND descriptor under an
// exclusive flock, so concurrent writers never interleave lines. Duplicate
// records are folded on load; two different degrees for one (n, d) are an
// integrity error.
#pragma once

#include "lpb/errors.hpp"
#include "lpb/exact.hpp"

#include <json.hpp>

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace lpb {

inline constexpr const char* kEngineVersion = "lpb-1.0";

struct CacheEntry {
    int n = 0;
    int d = 0;
    std::string degree;
    std::string engine_version = kEngineVersion;

    nlohmann::json to_json() const
    {
        return nlohmann::json{{"n", n}, {"d", d}, {"degree", degree}, {"engine_version", engine_version}};
    }

    static CacheEntry from_json(const nlohmann::json& j)
    {
        CacheEntry e;
        e.n = j.at("n").get<int>();
        e.d = j.at("d").get<int>();
        e.degree = j.at("degree").get<std::string>();
        e.engine_version = j.value("engine_version", std::string());
        BigInt value;
        if (e.degree.empty() || e.degree.find_first_not_of("0123456789") != std::string::npos ||
            value.set_str(e.degree, 10) != 0)
            throw std::invalid_argument("degree \"" + e.degree + "\" is not a non-negative integer");
        return e;
    }
};

class DegreeCache {
public:
    explicit DegreeCache(std::filesystem::path path) : path_(std::move(path)) { load(); }

    // $LPB_CACHE, or ./lpb-cache.jsonl.
    static std::filesystem::path default_path()
    {
        if (const char* env = std::getenv("LPB_CACHE"); env && *env)
            return env;
        return "lpb-cache.jsonl";
    }

    const std::filesystem::path& path() const { return path_; }

    std::size_t size() const
    {
        std::lock_guard lock(mu_);
        return entries_.size();
    }

    std::optional<BigInt> lookup(int n, int d) const
    {
        std::lock_guard lock(mu_);
        auto it = entries_.find({n, d});
        if (it == entries_.end())
            return std::nullopt;
        return BigInt(it->second);
    }

    void store(int n, int d, const BigInt& degree)
    {
        if (sgn(degree) < 0)
            throw std::invalid_argument("DegreeCache::store: negative degree");
        const std::string text = degree.get_str();
        std::lock_guard lock(mu_);
        if (auto it = entries_.find({n, d}); it != entries_.end()) {
            if (it->second != text)
                throw InconsistencyError(conflict_message(n, d, it->second, text));
            return;
        }
        append_line(CacheEntry{n, d, text}.to_json().dump() + "\n");
        entries_.emplace(std::make_pair(n, d), text);
    }

private:
    static std::string conflict_message(int n, int d, const std::string& a, const std::string& b)
    {
        return "degree cache conflict for (n=" + std::to_string(n) + ", d=" + std::to_string(d) + "): " + a +
               " vs " + b;
    }

    void load()
    {
        std::ifstream in(path_);
        if (!in)
            return;
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") == std::string::npos)
                continue;
            CacheEntry e;
            try {
                e = CacheEntry::from_json(nlohmann::json::parse(line));
            } catch (const std::exception& ex) {
                throw InconsistencyError(path_.string() + ":" + std::to_string(lineno) + ": bad cache record: " +
                                         ex.what());
            }
            auto [it, inserted] = entries_.emplace(std::make_pair(e.n, e.d), e.degree);
            if (!inserted && it->second != e.degree)
                throw InconsistencyError(conflict_message(e.n, e.d, it->second, e.degree));
        }
    }

    void append_line(const std::string& line)
    {
        const int fd = ::open(path_.c_str(), O_WRONLY | O_APPEND | O_CREAT | O_CLOEXEC, 0644);
        if (fd < 0)
            throw std::runtime_error("cannot open degree cache " + path_.string() + ": " + std::strerror(errno));
        ::flock(fd, LOCK_EX);
        const ssize_t written = ::write(fd, line.data(), line.size());
        const int err = errno;
        ::flock(fd, LOCK_UN);
        ::close(fd);
        if (written != static_cast<ssize_t>(line.size()))
            throw std::runtime_error("short write to degree cache " + path_.string() + ": " + std::strerror(err));
    }

    std::filesystem::path path_;
    mutable std::mutex mu_;
    std::map<std::pair<int, int>, std::string> entries_;
};

} // namespace lpb
