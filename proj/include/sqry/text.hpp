#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sqry::text {

/// Strips leading and trailing ASCII whitespace (space, \t, \r, \n, \f, \v).
std::string_view trim(std::string_view s);

bool is_valid_utf8(std::string_view s);

/// True when the string may appear in an instruction: valid UTF-8 without
/// CR or LF, since both the source and textual IR are line oriented.
bool is_line_safe(std::string_view s);

/// Lowercase hex, two digits per byte, no separators.
std::string to_hex(std::span<const std::uint8_t> bytes);

/// Parses hex text; whitespace between digit pairs is ignored. Returns
/// nullopt on odd digit count or a non-hex character.
std::optional<std::vector<std::uint8_t>> from_hex(std::string_view hex);

}  // namespace sqry::text
