#include "sqry/codec.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "sqry/bitstream.hpp"
#include "sqry/text.hpp"

namespace sqry::codec {

namespace {

constexpr int kOpcodeBits = 3;
constexpr int kLengthBits = 12;
constexpr int kCountBits = 12;
constexpr unsigned kReservedOpcode = 7;

struct Decoded {
    ir::Program program;
    std::size_t bit_length;
};

std::uint32_t read_field(BitReader& in, int width) {
    try {
        return in.read(width);
    } catch (const std::out_of_range&) {
        throw CodecError("TruncatedPayload", "payload ends in the middle of a field");
    }
}

Decoded decode_impl(std::span<const std::uint8_t> bytes) {
    BitReader in(bytes);
    if (auto dialect = read_field(in, 4); dialect != kDialectQrTree)
        throw CodecError("BadDialect", "dialect " + std::to_string(dialect) + " is not QRtree (1)");
    if (auto version = read_field(in, 4); version != kFormatVersion)
        throw CodecError("BadVersion", "format version " + std::to_string(version) + " is not supported");
    const std::size_t n = read_field(in, kCountBits);
    const int width = address_width(n);

    ir::Program program;
    program.instructions.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto code = read_field(in, kOpcodeBits);
        if (code == kReservedOpcode)
            throw CodecError("ReservedOpcode", "reserved opcode at instruction " + std::to_string(i));
        ir::Instruction ins{static_cast<ir::Opcode>(code), {}, 0};
        if (ir::has_text(ins.opcode)) {
            auto len = read_field(in, kLengthBits);
            ins.text.reserve(len);
            for (std::uint32_t k = 0; k < len; ++k) ins.text += static_cast<char>(read_field(in, 8));
            if (!text::is_line_safe(ins.text))
                throw CodecError("BadString", "instruction " + std::to_string(i) + " text is not line-safe UTF-8");
        }
        if (ir::has_target(ins.opcode)) {
            ins.target = read_field(in, width);
            if (ins.target > n)
                throw CodecError("TargetOutOfRange", "instruction " + std::to_string(i) + " jumps to " +
                                                         std::to_string(ins.target));
        }
        program.instructions.push_back(std::move(ins));
    }

    const std::size_t used = in.position();
    if (in.remaining() >= 8) throw CodecError("TrailingData", "bytes follow the last instruction");
    if (in.remaining() > 0 && read_field(in, static_cast<int>(in.remaining())) != 0)
        throw CodecError("NonZeroPadding", "padding bits must be zero");
    return {std::move(program), used};
}

}  // namespace

int address_width(std::size_t n) {
    // ceil(log2(n + 1)) == bit width of n
    return std::max(1, static_cast<int>(std::bit_width(n)));
}

Payload encode_ir(const ir::Program& program) {
    const std::size_t n = program.size();
    if (n > kMaxInstructions)
        throw CodecError("ProgramTooLarge", std::to_string(n) + " instructions, at most 4095 fit");
    for (const auto& ins : program.instructions)
        if (static_cast<unsigned>(ins.opcode) >= kReservedOpcode)
            throw CodecError("ReservedOpcode", "opcode value " + std::to_string(static_cast<unsigned>(ins.opcode)));
    ir::validate(program);

    BitWriter out;
    out.write(kDialectQrTree, 4);
    out.write(kFormatVersion, 4);
    out.write(static_cast<std::uint32_t>(n), kCountBits);
    const int width = address_width(n);
    for (const auto& ins : program.instructions) {
        out.write(static_cast<std::uint32_t>(ins.opcode), kOpcodeBits);
        if (ir::has_text(ins.opcode)) {
            if (ins.text.size() > kMaxStringBytes)
                throw CodecError("StringTooLong", std::to_string(ins.text.size()) + " bytes, at most 4095 fit");
            out.write(static_cast<std::uint32_t>(ins.text.size()), kLengthBits);
            for (char c : ins.text) out.write(static_cast<std::uint8_t>(c), 8);
        }
        if (ir::has_target(ins.opcode)) out.write(ins.target, width);
    }
    const std::size_t bits = out.bit_count();
    return {std::move(out).take(), bits};
}

ir::Program decode_payload(std::span<const std::uint8_t> bytes) { return decode_impl(bytes).program; }

Payload extract_payload(std::span<const std::uint8_t> bytes) {
    Payload p{{bytes.begin(), bytes.end()}, bytes.size() * 8};
    try {
        p.bit_length = decode_impl(bytes).bit_length;
    } catch (const CodecError&) {
    }
    return p;
}

double occupancy(std::size_t bit_length, std::size_t capacity_bytes) {
    if (capacity_bytes == 0) throw std::invalid_argument("capacity must be positive");
    double pct = 100.0 * static_cast<double>(bit_length) / (8.0 * static_cast<double>(capacity_bytes));
    return std::round(pct * 10.0) / 10.0;
}

std::string format_occupancy(std::size_t bit_length, std::size_t capacity_bytes) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f%%", occupancy(bit_length, capacity_bytes));
    return buf;
}

}  // namespace sqry::codec
