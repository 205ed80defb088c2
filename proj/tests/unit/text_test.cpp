#include <gtest/gtest.h>

#include "sqry/text.hpp"

namespace sqry::text {
namespace {

TEST(Text, Trim) {
    EXPECT_EQ(trim("  RUN LED \t\r\n"), "RUN LED");
    EXPECT_EQ(trim("a  b"), "a  b");
    EXPECT_EQ(trim(" \t "), "");
    EXPECT_EQ(trim(""), "");
    // non-breaking space is not ASCII whitespace
    EXPECT_EQ(trim("\xC2\xA0x"), "\xC2\xA0x");
}

TEST(Text, Utf8) {
    EXPECT_TRUE(is_valid_utf8("plain"));
    EXPECT_TRUE(is_valid_utf8("Ω → 日本 \xF0\x9F\x98\x80"));
    EXPECT_FALSE(is_valid_utf8("\xFF"));
    EXPECT_FALSE(is_valid_utf8("\xC3"));              // truncated
    EXPECT_FALSE(is_valid_utf8("\xC0\xAF"));          // overlong
    EXPECT_FALSE(is_valid_utf8("\xED\xA0\x80"));      // surrogate
    EXPECT_FALSE(is_valid_utf8("\xF4\x90\x80\x80"));  // above U+10FFFF
    EXPECT_FALSE(is_valid_utf8("\xE2\x82"));
}

TEST(Text, LineSafe) {
    EXPECT_TRUE(is_line_safe("tab\tok"));
    EXPECT_FALSE(is_line_safe("a\nb"));
    EXPECT_FALSE(is_line_safe("a\rb"));
    EXPECT_FALSE(is_line_safe("\x80"));
}

TEST(Text, Hex) {
    std::vector<std::uint8_t> bytes = {0x11, 0x00, 0x1A, 0xFF};
    EXPECT_EQ(to_hex(bytes), "11001aff");
    EXPECT_EQ(from_hex("11001aff"), bytes);
    EXPECT_EQ(from_hex("11 00\n1A FF\n"), bytes);
    EXPECT_EQ(from_hex(""), std::vector<std::uint8_t>{});
    EXPECT_FALSE(from_hex("123"));
    EXPECT_FALSE(from_hex("zz"));
    EXPECT_FALSE(from_hex("1 1"));
}

}  // namespace
}  // namespace sqry::text
