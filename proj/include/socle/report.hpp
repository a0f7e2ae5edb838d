#pragma once

// Machine-readable run reports: one self-describing JSON document per run,
// with every number tagged by the operation that produced it and a provenance
// block (tool version, seed, config hash) that makes reruns reproducible.

#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "invariants.hpp"
#include "ringfile.hpp"

namespace socle {

constexpr const char* kToolVersion = "1.0.0";

namespace detail {

inline std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

} // namespace detail

class ReportDocument {
public:
    ReportDocument(const RingFile& rf, std::string command, nlohmann::ordered_json config,
                   std::uint64_t seed)
        : seed_(seed) {
        doc_["ring"] = {{"char", rf.characteristic},
                        {"vars", rf.vars},
                        {"relations", rf.relations}};
        doc_["command"] = std::move(command);
        doc_["config"] = std::move(config);
        doc_["values"] = nlohmann::ordered_json::array();
        doc_["ledger"] = nlohmann::ordered_json::array();
    }

    void add_value(const std::string& name, const std::string& operation,
                   nlohmann::ordered_json value) {
        doc_["values"].push_back(
            {{"name", name}, {"operation", operation}, {"value", std::move(value)}});
    }

    void add_ledger(const std::vector<LedgerEntry>& entries) {
        for (const auto& e : entries) {
            nlohmann::ordered_json j{{"statement", e.id},
                                     {"holds", e.holds},
                                     {"lhs", e.lhs},
                                     {"rhs", e.rhs}};
            if (!e.note.empty()) j["note"] = e.note;
            doc_["ledger"].push_back(std::move(j));
        }
    }

    nlohmann::ordered_json finish() {
        std::string cfg = doc_["command"].dump() + doc_["config"].dump() +
                          std::to_string(seed_);
        doc_["provenance"] = {{"tool_version", kToolVersion},
                              {"seed", seed_},
                              {"config_hash", detail::fnv1a_hex(cfg)}};
        return doc_;
    }

    void write(const std::string& path) {
        std::ofstream out(path);
        if (!out) throw input_error("cannot write report: " + path);
        out << finish().dump(2) << "\n";
    }

private:
    nlohmann::ordered_json doc_;
    std::uint64_t seed_;
};

} // namespace socle
