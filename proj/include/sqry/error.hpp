#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace sqry {

/// Broad failure class. The CLI maps each category onto its exit status.
enum class ErrorCategory {
    Parse,     // source or textual IR could not be read
    Validate,  // well-formed but violates a structural rule
    Codec,     // binary payload could not be encoded or decoded
    Capacity,  // payload does not fit a QR symbol
    Runtime,   // VM misuse or step budget exhaustion
};

/// Base for every error the library throws on bad input.
///
/// `kind()` is a stable identifier (e.g. "UnterminatedString", "BadDialect")
/// that tests and tools match on; `what()` is the human-readable message.
class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, std::string kind, std::string message,
          std::optional<int> line = std::nullopt)
        : std::runtime_error(compose(kind, message, line)),
          category_(category),
          kind_(std::move(kind)),
          line_(line) {}

    ErrorCategory category() const noexcept { return category_; }
    const std::string& kind() const noexcept { return kind_; }
    std::optional<int> line() const noexcept { return line_; }

private:
    static std::string compose(const std::string& kind, const std::string& message,
                               std::optional<int> line) {
        std::string out = kind;
        if (line) out += " (line " + std::to_string(*line) + ")";
        if (!message.empty()) out += ": " + message;
        return out;
    }

    ErrorCategory category_;
    std::string kind_;
    std::optional<int> line_;
};

}  // namespace sqry
