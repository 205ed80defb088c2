#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sqry/codec.hpp"
#include "sqry/compiler.hpp"
#include "sqry/qr.hpp"

namespace sqry::codec {
namespace {

using ir::Instruction;
using Bytes = std::vector<std::uint8_t>;

std::string decode_error(const Bytes& bytes) {
    try {
        decode_payload(bytes);
    } catch (const CodecError& e) {
        return e.kind();
    }
    return "none";
}

std::string encode_error(const ir::Program& p) {
    try {
        encode_ir(p);
    } catch (const Error& e) {
        return e.kind();
    }
    return "none";
}

TEST(Codec, AddressWidth) {
    EXPECT_EQ(address_width(0), 1);
    EXPECT_EQ(address_width(1), 1);
    EXPECT_EQ(address_width(2), 2);
    EXPECT_EQ(address_width(3), 2);
    EXPECT_EQ(address_width(4), 3);
    EXPECT_EQ(address_width(31), 5);
    EXPECT_EQ(address_width(32), 6);
    EXPECT_EQ(address_width(4095), 12);
}

TEST(Codec, ExitOnly) {
    auto p = encode_ir({{Instruction::exit()}});
    EXPECT_EQ(p.bytes, (Bytes{0x11, 0x00, 0x1A}));
    EXPECT_EQ(p.bit_length, 23u);
}

TEST(Codec, EmptyProgram) {
    auto p = encode_ir({});
    EXPECT_EQ(p.bytes, (Bytes{0x11, 0x00, 0x00}));
    EXPECT_EQ(p.bit_length, 20u);
    EXPECT_EQ(decode_payload(p).size(), 0u);
}

TEST(Codec, HandAssembledIf) {
    // header 0001 0001 000000000010, IF 001, len 000000000001, 'A' 01000001,
    // target 10 (W = 2), GOTO 010, target 10, pad 00000
    auto p = encode_ir({{Instruction::if_("A", 2), Instruction::goto_(2)}});
    EXPECT_EQ(p.bit_length, 20u + 3 + 12 + 8 + 2 + 3 + 2);
    EXPECT_EQ(p.bytes, testing::pack_bits("00010001000000000010"
                                          "001000000000001010000011"
                                          "0"
                                          "01010"));
}

TEST(Codec, MatchesReferenceBitWriter) {
    std::mt19937 rng(777);
    for (int i = 0; i < 1000; ++i) {
        auto program = testing::random_program(rng);
        auto bits = testing::reference_payload_bits(program);
        auto p = encode_ir(program);
        ASSERT_EQ(p.bit_length, bits.size());
        ASSERT_EQ(p.bytes, testing::pack_bits(bits));
    }
}

TEST(Codec, RandomRoundTrip) {
    std::mt19937 rng(2024);
    for (int i = 0; i < 1000; ++i) {
        auto program = testing::random_program(rng);
        auto p = encode_ir(program);
        ASSERT_EQ(decode_payload(p), program) << ir::format_ir(program);
        ASSERT_EQ(extract_payload(p.bytes), p);
        ASSERT_LE(p.bit_length, p.bytes.size() * 8);
        ASSERT_LT(p.bytes.size() * 8, p.bit_length + 8);
    }
}

TEST(Codec, LongerTextNeverShrinksPayload) {
    std::mt19937 rng(3);
    for (int i = 0; i < 200; ++i) {
        auto program = testing::random_program(rng);
        auto before = encode_ir(program).bit_length;
        for (auto& ins : program.instructions)
            if (ir::has_text(ins.opcode)) {
                ins.text += "x";
                break;
            }
        auto after = encode_ir(program).bit_length;
        ASSERT_GE(after, before);
    }
}

TEST(Codec, ReferenceListingRoundTrip) {
    auto program = ir::parse_ir(testing::read_fixture("fixtures/led_listing.qri"));
    EXPECT_EQ(decode_payload(encode_ir(program)), program);
}

TEST(Codec, DemoFitsWithinEnvelope) {
    auto program = compile(source::parse_program(testing::read_fixture("fixtures/led_demo.qrt")));
    auto p = encode_ir(program);
    EXPECT_LE(p.bytes.size(), 2953u);
    EXPECT_LT(occupancy(p.bit_length, qr::byte_capacity(40, qr::EcLevel::L)), 15.0);
}

TEST(Codec, DecodeErrors) {
    EXPECT_EQ(decode_error({}), "TruncatedPayload");
    EXPECT_EQ(decode_error({0x11}), "TruncatedPayload");
    EXPECT_EQ(decode_error({0x21, 0x00, 0x00}), "BadDialect");
    EXPECT_EQ(decode_error({0x12, 0x00, 0x00}), "BadVersion");
    EXPECT_EQ(decode_error({0x11, 0x00, 0x1B}), "NonZeroPadding");
    EXPECT_EQ(decode_error({0x11, 0x00, 0x1A, 0x00}), "TrailingData");
    EXPECT_EQ(decode_error({0x11, 0x00, 0x1E}), "ReservedOpcode");
    // N = 1, GOTO with target 1 is fine, N = 1 with an IF whose text is cut short is not
    EXPECT_EQ(decode_error({0x11, 0x00, 0x15}), "none");
    EXPECT_EQ(decode_error({0x11, 0x00, 0x12, 0x00}), "TruncatedPayload");
    // N = 1, PRINT of one byte 0x0A (a newline)
    EXPECT_EQ(decode_error(testing::pack_bits("00010001000000000001" "011" "000000000001" "00001010")),
              "BadString");
    // N = 2, GOTO (3)
    EXPECT_EQ(decode_error(testing::pack_bits("00010001000000000010" "010" "11" "101")), "TargetOutOfRange");
}

TEST(Codec, EncodeErrors) {
    ir::Program big;
    big.instructions.assign(4096, Instruction::nop());
    EXPECT_EQ(encode_error(big), "ProgramTooLarge");
    EXPECT_EQ(encode_error({{Instruction::print(std::string(4096, 'x'))}}), "StringTooLong");
    EXPECT_EQ(encode_error({{Instruction::print(std::string(4095, 'x'))}}), "none");
    EXPECT_EQ(encode_error({{Instruction{static_cast<ir::Opcode>(7), {}, 0}}}), "ReservedOpcode");
    EXPECT_EQ(encode_error({{Instruction::goto_(5)}}), "TargetOutOfRange");
}

TEST(Codec, ExtractPayloadOfGarbageKeepsBytes) {
    Bytes junk = {0x21, 0x00};
    auto p = extract_payload(junk);
    EXPECT_EQ(p.bytes, junk);
    EXPECT_EQ(p.bit_length, 16u);
}

TEST(Codec, Occupancy) {
    EXPECT_DOUBLE_EQ(occupancy(2720, 2953), 11.5);
    EXPECT_EQ(format_occupancy(2720, 2953), "11.5%");
    EXPECT_DOUBLE_EQ(occupancy(0, 2953), 0.0);
    EXPECT_DOUBLE_EQ(occupancy(23624, 2953), 100.0);
    EXPECT_EQ(format_occupancy(0, 2953), "0.0%");
}

}  // namespace
}  // namespace sqry::codec
