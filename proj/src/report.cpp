#include "ultrafree/report.hpp"

#include <cstdio>

namespace ultrafree {

std::string to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::pass:
        return "pass";
    case CheckStatus::fail:
        return "fail";
    case CheckStatus::skipped:
        return "skipped";
    }
    return "unknown";
}

Check& Report::add(std::string name, bool ok, nlohmann::json value, nlohmann::json witness, std::string claim)
{
    checks.push_back({std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(value),
                      std::move(witness), std::move(claim)});
    return checks.back();
}

Check& Report::skip(std::string name, std::string reason, std::string claim)
{
    checks.push_back({std::move(name), CheckStatus::skipped, nullptr, {{"reason", std::move(reason)}},
                      std::move(claim)});
    return checks.back();
}

void Report::merge(const Report& other, const std::string& prefix)
{
    for (auto c : other.checks) {
        c.name = prefix + c.name;
        checks.push_back(std::move(c));
    }
}

bool Report::all_pass() const
{
    return count(CheckStatus::fail) == 0;
}

std::size_t Report::count(CheckStatus s) const
{
    std::size_t n = 0;
    for (const auto& c : checks)
        n += c.status == s ? 1 : 0;
    return n;
}

nlohmann::json Report::to_json() const
{
    nlohmann::json checks_json = nlohmann::json::array();
    for (const auto& c : checks)
        checks_json.push_back({{"name", c.name},
                               {"status", to_string(c.status)},
                               {"value", c.value},
                               {"witness", c.witness},
                               {"claim", c.claim}});
    return {{"tool_version", tool_version},
            {"input_digest", input_digest},
            {"checks", checks_json},
            {"summary",
             {{"pass", count(CheckStatus::pass)},
              {"fail", count(CheckStatus::fail)},
              {"skipped", count(CheckStatus::skipped)}}}};
}

std::string fnv1a_digest(const std::string& bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace ultrafree
