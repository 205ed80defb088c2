#pragma once

// Golden vectors: payload + scripted answers + the interaction they must
// produce. Every runner of the payload format (this library, the browser
// runner) has to reproduce each vector exactly. Stored as JSON:
//
//   {
//     "format": "sqry-golden-vector/1",
//     "name": "listing-run-green",
//     "payload_hex": "11...",
//     "answers": ["RUN LED", "Green"],
//     "expect": {
//       "events": [{"prompt": "What led?", "options": ["RUN LED", "ERR LED"]},
//                  {"output": "Operating status of the switch"}, ...],
//       "final_status": "halted"
//     }
//   }
//
// A vector for a malformed payload has "expect": {"error": "<kind>"} instead.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqry/vm.hpp"

namespace sqry::golden {

inline constexpr std::string_view kFormatTag = "sqry-golden-vector/1";

struct GoldenVector {
    std::string name;
    std::string description;
    std::vector<std::uint8_t> payload;
    std::vector<std::string> answers;
    std::optional<std::string> expected_error;  // error kind from decode
    vm::Trace expected;                         // ignored when expected_error is set

    bool operator==(const GoldenVector&) const = default;
};

/// Throws std::runtime_error on malformed documents.
GoldenVector parse_vector(std::string_view json_text);
std::string serialize_vector(const GoldenVector& vector);

/// Decodes the payload, runs the answers and produces the vector this
/// implementation would write for them.
GoldenVector record_vector(std::string name, std::string description, std::vector<std::uint8_t> payload,
                           std::vector<std::string> answers);

struct CheckResult {
    bool pass = false;
    std::string detail;  // first mismatch, empty on pass
};

CheckResult check_vector(const GoldenVector& vector);

/// All *.json files in `dir`, sorted by file name.
std::vector<std::filesystem::path> list_vectors(const std::filesystem::path& dir);

}  // namespace sqry::golden
