#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace canclab {

inline constexpr const char* kToolName = "cancellation-lab";
inline constexpr const char* kToolVersion = "0.1.0";

std::string fnv1a64_hex(std::string_view bytes);

/// Machine-parseable run report: ordered check results with witnesses.
/// Deterministic for identical inputs and seeds.
struct Report {
    std::string input_digest = "-";
    bool has_seed = false;
    std::uint64_t seed = 0;

    struct Check {
        std::string name;
        std::string verdict;
        std::vector<std::string> witnesses;
    };
    std::vector<Check> checks;

    void add(std::string name, std::string verdict, std::vector<std::string> witnesses = {}) {
        checks.push_back({std::move(name), std::move(verdict), std::move(witnesses)});
    }

    /// key: value lines.
    void render_kv(std::ostream& out) const;
    /// The same content as a JSON object.
    void render_json(std::ostream& out) const;
};

}  // namespace canclab
