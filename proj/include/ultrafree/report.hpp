#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace ultrafree {

inline constexpr const char* tool_version = "ultrafree 0.1.0";

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus s);

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    nlohmann::json value;
    nlohmann::json witness;
    std::string claim;
};

struct Report {
    std::string tool_version = ultrafree::tool_version;
    std::string input_digest;
    std::vector<Check> checks;

    /// Appends a pass/fail check decided by `ok`.
    Check& add(std::string name, bool ok, nlohmann::json value = nullptr, nlohmann::json witness = nullptr,
               std::string claim = {});
    Check& skip(std::string name, std::string reason, std::string claim = {});

    /// Appends the checks of `other`, prefixing their names.
    void merge(const Report& other, const std::string& prefix = {});

    bool all_pass() const;
    std::size_t count(CheckStatus s) const;

    nlohmann::json to_json() const;
};

/// 64-bit FNV-1a digest rendered as 16 hex digits.
std::string fnv1a_digest(const std::string& bytes);

}  // namespace ultrafree
