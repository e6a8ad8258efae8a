#include "knesertw/report.hpp"

namespace knesertw {

using nlohmann::json;

RunReport::RunReport(const std::string& command) {
    doc_["version"] = kToolVersion;
    doc_["command"] = command;
    doc_["params"] = json::object();
    doc_["checks"] = json::array();
    doc_["solver"] = json::object();
    doc_["timings"] = json::object();
}

void RunReport::set_param(const std::string& key, const std::string& value) {
    doc_["params"][key] = value;
}

json condition_to_json(const ConditionReport& check) {
    json j;
    j["id"] = check.id;
    j["holds"] = check.holds;
    j["lhs"] = rat_str(check.lhs);
    j["rhs"] = rat_str(check.rhs);
    json params = json::object();
    for (const auto& [k, v] : check.params) params[k] = v;
    j["params"] = params;
    return j;
}

void RunReport::add_check(const ConditionReport& check) {
    doc_["checks"].push_back(condition_to_json(check));
}

void RunReport::set_solver_result(const SolveResult& result) {
    json j;
    j["exact"] = result.exact;
    j["lower"] = std::to_string(result.lower);
    j["upper"] = std::to_string(result.upper);
    if (result.exact) j["treewidth"] = std::to_string(result.treewidth);
    switch (result.method) {
        case SolveMethod::SubsetDP: j["method"] = "subset-dp"; break;
        case SolveMethod::BranchAndBound: j["method"] = "branch-and-bound"; break;
        case SolveMethod::Heuristic: j["method"] = "heuristic"; break;
    }
    j["nodes_explored"] = std::to_string(result.nodes_explored);
    doc_["solver"] = j;
}

void RunReport::add_timing(const std::string& label, double seconds) {
    doc_["timings"][label] = seconds;
}

std::string RunReport::to_json() const { return doc_.dump(2) + "\n"; }

std::string RunReport::canonical_json() const {
    json copy = doc_;
    copy.erase("timings");
    return copy.dump();
}

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string RunReport::canonical_hash() const { return fnv1a_hex(canonical_json()); }

}  // namespace knesertw
