#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "mpg/graph.hpp"

namespace mpg {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kReportSchemaVersion = 1;

enum class CheckStatus { Pass, Fail, Skip, Precondition };

std::string to_string(CheckStatus s);

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::Skip;
    std::string detail;
    nlohmann::json witnesses = nlohmann::json::array();
    bool truncated = false;
    double seconds = 0;
};

struct SuiteReport {
    std::string version = kToolVersion;
    Params params;
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<Check> checks;

    /// 1 when any check failed, else 0.
    int exit_code() const;
    nlohmann::json to_json() const;
};

struct SuiteOptions {
    Params params;
    std::uint64_t seed = 0;
    /// Replaces the star graph built from params (round-trip from an edge list).
    const PermGraph* input = nullptr;
    /// Witnesses kept per check.
    std::size_t witness_cap = 32;
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite and InstanceTooLarge when params exceed the vertex cap.
SuiteReport run_suite(const std::string& suite, const SuiteOptions& opts);

}  // namespace mpg
