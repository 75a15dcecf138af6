#pragma once

#include <chrono>
#include <cstdint>
#include <string>

#include "qah/json_io.hpp"

namespace qah {

inline constexpr const char* tool_version = "qah 0.1.0";

/// FNV-1a 64-bit over a string; used for input digests and report digests.
inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

/// Reports are JSON first; the text rendering is a pure function of the
/// JSON. Timing is excluded from the digest so identical inputs and seeds
/// give identical digests.
inline json finalize_report(json report, double timing_ms) {
    report.erase("digest");
    report.erase("timing_ms");
    report["digest"] = "fnv1a:" + hex64(fnv1a64(report.dump()));
    report["timing_ms"] = timing_ms;
    return report;
}

inline std::string render_report_text(const json& report) {
    std::string out;
    out += std::string(report.value("tool", "qah")) + "\n";
    if (report.contains("suite"))
        out += "suite: " + report["suite"].get<std::string>() +
               "  seed: " + std::to_string(report.value("seed", 0ull)) +
               "  cases: " + std::to_string(report.value("cases", 0ull)) + "\n";
    if (report.contains("input_digest"))
        out += "input digest: " + report["input_digest"].get<std::string>() + "\n";
    if (report.contains("results"))
        for (const auto& r : report["results"]) out += "  " + r.dump() + "\n";
    if (report.contains("checks"))
        for (const auto& c : report["checks"])
            out += std::string(c.value("pass", false) ? "  [pass] " : "  [FAIL] ") +
                   c.value("name", std::string("?")) +
                   (c.value("detail", std::string()).empty() ? "" : "  (" + c["detail"].get<std::string>() + ")") +
                   "\n";
    if (report.contains("witness_file"))
        out += "witness written to: " + report["witness_file"].get<std::string>() + "\n";
    out += std::string("overall: ") + (report.value("pass", false) ? "pass" : "FAIL") + "\n";
    out += "digest: " + report.value("digest", std::string()) + "\n";
    return out;
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace qah
