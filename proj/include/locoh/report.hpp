#pragma once

/// @file report.hpp
/// Structured outcome of a named verification scenario. Serialization is
/// deterministic: key order is insertion order and element order follows the
/// group's BFS enumeration, so identical inputs give byte-identical reports.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace locoh {

struct CheckResult {
    std::string name;
    bool pass = false;
    /// Failure caused by a resource cap rather than a falsified property.
    bool resource_limited = false;
    nlohmann::ordered_json details = nlohmann::ordered_json::object();
};

struct VerificationReport {
    std::string scenario;
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    std::vector<CheckResult> checks;

    bool verdict() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    bool only_resource_failures() const {
        bool any = false;
        for (const auto& c : checks) {
            if (c.pass) continue;
            if (!c.resource_limited) return false;
            any = true;
        }
        return any;
    }

    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["scenario"] = scenario;
        j["parameters"] = parameters;
        auto arr = nlohmann::ordered_json::array();
        for (const auto& c : checks) {
            nlohmann::ordered_json cj;
            cj["name"] = c.name;
            cj["pass"] = c.pass;
            cj["resource_limited"] = c.resource_limited;
            cj["details"] = c.details;
            arr.push_back(std::move(cj));
        }
        j["checks"] = std::move(arr);
        j["verdict"] = verdict();
        return j;
    }

    std::string to_text(bool color = false) const {
        const char* green = color ? "\x1b[32m" : "";
        const char* red = color ? "\x1b[31m" : "";
        const char* reset = color ? "\x1b[0m" : "";
        std::string out = "scenario: " + scenario + "\n";
        out += "parameters: " + parameters.dump() + "\n";
        for (const auto& c : checks) {
            out += c.pass ? std::string(green) + "[PASS]" + reset : std::string(red) + "[FAIL]" + reset;
            out += " " + c.name;
            if (!c.details.empty()) out += " " + c.details.dump();
            out += "\n";
        }
        out += std::string("verdict: ") + (verdict() ? "PASS" : "FAIL") + "\n";
        return out;
    }
};

} // namespace locoh
