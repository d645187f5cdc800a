#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace turanlab::cli {

/// 64-bit FNV-1a, rendered as 16 lowercase hex digits.
std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t h);

/// Whole file, or stdin for "-". Throws std::runtime_error when unreadable.
std::string read_input(const std::string& path);
/// Writes `text` to path, or stdout for "-".
void write_output(const std::string& path, const std::string& text);

/// Record of one invocation: what ran, on what, and what it wrote.
class RunManifest {
public:
    RunManifest(std::string command, std::map<std::string, std::string> args);

    void add_seed(std::uint64_t seed) { seeds_.push_back(seed); }
    /// Reads and digests an input file. Returns its contents.
    std::string read(const std::string& path);
    void add_output(const std::string& path) { outputs_.push_back(path); }

    /// Writes <first output>.manifest.json. No-op when nothing went to a file.
    void finish();

    [[nodiscard]] nlohmann::ordered_json to_json() const;

private:
    std::string command_;
    std::map<std::string, std::string> args_;
    std::vector<std::uint64_t> seeds_;
    std::map<std::string, std::string> digests_;
    std::vector<std::string> outputs_;
    std::chrono::system_clock::time_point started_, finished_;
};

}  // namespace turanlab::cli
