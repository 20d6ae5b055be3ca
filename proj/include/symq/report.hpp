// Structured pass/fail records emitted by every checker.
#pragma once

#include <optional>
#include <string>

#include <json.hpp>

namespace symq {

// {identity-name, samples evaluated, pass/fail, witness on failure};
// serializes to one line of JSON for the CLI's streaming output.
struct CheckReport {
    std::string check;
    bool pass = false;
    int samples = 0;
    std::optional<std::string> witness;

    static CheckReport passed(std::string name, int samples) {
        return CheckReport{std::move(name), true, samples, std::nullopt};
    }
    static CheckReport failed(std::string name, int samples, std::string witness) {
        return CheckReport{std::move(name), false, samples, std::move(witness)};
    }

    std::string json() const {
        nlohmann::ordered_json j;
        j["check"] = check;
        j["status"] = pass ? "pass" : "fail";
        j["samples"] = samples;
        if (witness)
            j["witness"] = *witness;
        else
            j["witness"] = nullptr;
        return j.dump();
    }

    std::string text() const {
        std::string line = (pass ? "PASS " : "FAIL ") + check + " (" + std::to_string(samples) + " samples)";
        if (witness) line += "\n  witness: " + *witness;
        return line;
    }
};

}  // namespace symq
