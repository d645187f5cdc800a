#include "manifest.hpp"

#include <boost/version.hpp>
#include <ctime>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

namespace turanlab::cli {

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t h) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) s[i] = digits[h & 15];
    return s;
}

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw std::runtime_error("cannot write " + path);
}

namespace {

std::string iso8601(std::chrono::system_clock::time_point t) {
    const std::time_t tt = std::chrono::system_clock::to_time_t(t);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

RunManifest::RunManifest(std::string command, std::map<std::string, std::string> args)
    : command_(std::move(command)), args_(std::move(args)), started_(std::chrono::system_clock::now()) {}

std::string RunManifest::read(const std::string& path) {
    std::string text = read_input(path);
    digests_[path] = "fnv1a64:" + hex64(fnv1a64(text));
    return text;
}

nlohmann::ordered_json RunManifest::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command_;
    j["args"] = args_;
    j["seeds"] = seeds_;
    j["versions"] = {{"turanlab", "0.1.0"}, {"compiler", __VERSION__}, {"boost", BOOST_LIB_VERSION}};
    j["started"] = iso8601(started_);
    j["finished"] = iso8601(finished_);
    j["input_digests"] = digests_;
    j["outputs"] = outputs_;
    return j;
}

void RunManifest::finish() {
    finished_ = std::chrono::system_clock::now();
    if (outputs_.empty()) return;
    write_output(outputs_.front() + ".manifest.json", to_json().dump(2) + "\n");
}

}  // namespace turanlab::cli
