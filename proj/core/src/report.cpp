#include "canclab/report.hpp"

#include <ostream>

#include <json.hpp>

namespace canclab {

std::string fnv1a64_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    for (int i = 15; i >= 0; --i) {
        buf[i] = "0123456789abcdef"[h & 0xf];
        h >>= 4;
    }
    buf[16] = '\0';
    return buf;
}

void Report::render_kv(std::ostream& out) const {
    out << "tool: " << kToolName << " " << kToolVersion << "\n";
    out << "input: " << input_digest << "\n";
    if (has_seed) out << "seed: " << seed << "\n";
    for (const auto& c : checks) {
        out << c.name << ": " << c.verdict << "\n";
        for (const auto& w : c.witnesses) {
            out << c.name << ".witness: " << w << "\n";
        }
    }
}

void Report::render_json(std::ostream& out) const {
    nlohmann::json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["input"] = input_digest;
    if (has_seed) j["seed"] = seed;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json jc;
        jc["name"] = c.name;
        jc["verdict"] = c.verdict;
        jc["witnesses"] = c.witnesses;
        j["checks"].push_back(jc);
    }
    out << j.dump(2) << "\n";
}

}  // namespace canclab
