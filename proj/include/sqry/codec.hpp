#pragma once

// Binary payload format (MSB first within each byte):
//
//   header       dialect(4) = 1 | version(4) = 1 | N(12)
//   instruction  opcode(3), then its fields in order:
//                  string  length(12, UTF-8 bytes) | bytes
//                  target  W bits, W = max(1, ceil(log2(N + 1)))
//   padding      zero bits up to the next byte boundary
//
// Opcodes: INPUT=0 IF=1 GOTO=2 PRINT=3 PRINTEX=4 EXIT=5 NOP=6, 7 reserved.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sqry/error.hpp"
#include "sqry/ir.hpp"

namespace sqry::codec {

inline constexpr unsigned kDialectQrTree = 1;
inline constexpr unsigned kFormatVersion = 1;
inline constexpr std::size_t kMaxInstructions = 4095;
inline constexpr std::size_t kMaxStringBytes = 4095;
inline constexpr std::size_t kHeaderBits = 20;

/// The bytes stored in a QR symbol. `bit_length` counts meaningful bits and
/// excludes the final zero padding, so bit_length <= 8*bytes < bit_length+8.
struct Payload {
    std::vector<std::uint8_t> bytes;
    std::size_t bit_length = 0;

    bool operator==(const Payload&) const = default;
};

/// `kind()` is one of ProgramTooLarge, StringTooLong, ReservedOpcode,
/// BadDialect, BadVersion, TruncatedPayload, NonZeroPadding, TrailingData,
/// BadString, TargetOutOfRange.
class CodecError : public Error {
public:
    CodecError(std::string kind, std::string message)
        : Error(ErrorCategory::Codec, std::move(kind), std::move(message)) {}
};

/// Width in bits of every jump target in a program of n instructions.
int address_width(std::size_t n);

Payload encode_ir(const ir::Program& program);

/// Exact inverse of encode_ir. Rejects anything a conforming encoder could
/// not have produced, including non-zero padding and whole trailing bytes.
ir::Program decode_payload(std::span<const std::uint8_t> bytes);
inline ir::Program decode_payload(const Payload& payload) { return decode_payload(payload.bytes); }

/// Wraps bytes read from a QR symbol. bit_length is the decoded length when
/// the bytes parse as a program and 8*size otherwise; format errors are left
/// for decode_payload to report.
Payload extract_payload(std::span<const std::uint8_t> bytes);

/// 100 * bit_length / (8 * capacity_bytes), rounded to one decimal place.
double occupancy(std::size_t bit_length, std::size_t capacity_bytes);

/// occupancy() rendered as e.g. "11.5%".
std::string format_occupancy(std::size_t bit_length, std::size_t capacity_bytes);

}  // namespace sqry::codec
