#pragma once

#include <string>

#include <json.hpp>

#include "knesertw/exactsolver.hpp"
#include "knesertw/verify.hpp"

namespace knesertw {

inline constexpr const char* kToolVersion = "knesertw 0.1.0";

// Batch-run report. All numbers are serialized as exact decimal integer or
// "num/den" strings; wall-clock timings live in their own section so the
// canonical form stays byte-stable across runs.
class RunReport {
public:
    explicit RunReport(const std::string& command);

    void set_param(const std::string& key, const std::string& value);
    void add_check(const ConditionReport& check);
    void set_solver_result(const SolveResult& result);
    void add_timing(const std::string& label, double seconds);

    // Full report including timings.
    std::string to_json() const;
    // Timing-free form used for hashing and determinism comparisons.
    std::string canonical_json() const;
    // FNV-1a 64-bit hex digest of the canonical form.
    std::string canonical_hash() const;

    const nlohmann::json& doc() const { return doc_; }

private:
    nlohmann::json doc_;
};

nlohmann::json condition_to_json(const ConditionReport& check);
std::string fnv1a_hex(const std::string& data);

}  // namespace knesertw
