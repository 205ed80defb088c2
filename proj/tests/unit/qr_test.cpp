#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "sqry/compiler.hpp"
#include "sqry/qr.hpp"

namespace sqry::qr {
namespace {

constexpr EcLevel kLevels[] = {EcLevel::L, EcLevel::M, EcLevel::Q, EcLevel::H};

TEST(QrCapacity, MatchesTableFixture) {
    std::ifstream in(testing::source_dir() / "data/qr_byte_capacity.csv");
    ASSERT_TRUE(in);
    std::string line;
    int rows = 0;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (header) {
            EXPECT_EQ(line, "version,L,M,Q,H");
            header = false;
            continue;
        }
        std::istringstream row(line);
        std::string cell;
        std::getline(row, cell, ',');
        int version = std::stoi(cell);
        EXPECT_EQ(version, rows + 1);
        for (auto level : kLevels) {
            std::getline(row, cell, ',');
            EXPECT_EQ(byte_capacity(version, level), std::stoul(cell)) << "v" << version << " " << to_string(level);
        }
        ++rows;
    }
    EXPECT_EQ(rows, 40);
}

TEST(QrCapacity, KnownEntries) {
    EXPECT_EQ(byte_capacity(1, EcLevel::L), 17u);
    EXPECT_EQ(byte_capacity(1, EcLevel::H), 7u);
    EXPECT_EQ(byte_capacity(40, EcLevel::L), 2953u);
    EXPECT_EQ(byte_capacity(40, EcLevel::H), 1273u);
    EXPECT_THROW(byte_capacity(0, EcLevel::L), std::out_of_range);
    EXPECT_THROW(byte_capacity(41, EcLevel::L), std::out_of_range);
}

TEST(QrCapacity, Monotone) {
    for (auto level : kLevels)
        for (int v = 2; v <= 40; ++v) EXPECT_GT(byte_capacity(v, level), byte_capacity(v - 1, level));
    for (int v = 1; v <= 40; ++v)
        for (int l = 1; l < 4; ++l) EXPECT_LT(byte_capacity(v, kLevels[l]), byte_capacity(v, kLevels[l - 1]));
}

TEST(QrCapacity, MinVersion) {
    EXPECT_EQ(min_version_for(1, EcLevel::L), 1);
    EXPECT_EQ(min_version_for(17, EcLevel::L), 1);
    EXPECT_EQ(min_version_for(18, EcLevel::L), 2);
    EXPECT_EQ(min_version_for(340, EcLevel::L), 12);
    EXPECT_EQ(min_version_for(2953, EcLevel::L), 40);
    EXPECT_THROW(min_version_for(2954, EcLevel::L), CapacityError);
    EXPECT_THROW(min_version_for(2953, EcLevel::H), CapacityError);
    try {
        min_version_for(2954, EcLevel::L);
    } catch (const CapacityError& e) {
        EXPECT_EQ(e.kind(), "PayloadExceedsCapacity");
        EXPECT_EQ(e.category(), ErrorCategory::Capacity);
    }
}

TEST(QrCapacity, EcLevelNames) {
    for (auto level : kLevels) EXPECT_EQ(parse_ec_level(to_string(level)), level);
    EXPECT_EQ(parse_ec_level("q"), EcLevel::Q);
    EXPECT_FALSE(parse_ec_level("X"));
}

codec::Payload demo_payload() {
    return codec::encode_ir(compile(source::parse_program(testing::read_fixture("fixtures/led_demo.qrt"))));
}

TEST(QrEmbed, SymbolGeometry) {
    auto payload = demo_payload();
    auto symbol = embed_qr(payload);
    EXPECT_EQ(symbol.version, min_version_for(payload.bytes.size(), EcLevel::L));
    EXPECT_EQ(symbol.size, 17 + 4 * symbol.version);
    // finder pattern corner is dark, its separator light
    EXPECT_TRUE(symbol.dark(0, 0));
    EXPECT_TRUE(symbol.dark(6, 6));
    EXPECT_FALSE(symbol.dark(7, 0));
    EXPECT_FALSE(symbol.dark(1, 1));
    EXPECT_TRUE(symbol.dark(symbol.size - 1, 0));
}

TEST(QrEmbed, SmallPayloadUsesVersionOne) {
    auto symbol = embed_qr(codec::encode_ir({{ir::Instruction::exit()}}));
    EXPECT_EQ(symbol.version, 1);
    EXPECT_EQ(symbol.size, 21);
}

TEST(QrEmbed, PngRoundTrip) {
    auto payload = demo_payload();
    for (auto level : kLevels) {
        auto png = encode_png(rasterize(embed_qr(payload, level)));
        auto image = decode_png(png);
        auto bytes = scan(image);
        ASSERT_TRUE(bytes) << to_string(level);
        EXPECT_EQ(*bytes, payload.bytes);
    }
}

TEST(QrEmbed, FullCapacityPayload) {
    codec::Payload p;
    for (int i = 0; i < 2953; ++i) p.bytes.push_back(static_cast<std::uint8_t>(i * 7));
    auto symbol = embed_qr(p);
    EXPECT_EQ(symbol.version, 40);
    auto bytes = scan(rasterize(symbol, 4));
    ASSERT_TRUE(bytes);
    EXPECT_EQ(*bytes, p.bytes);

    p.bytes.push_back(0);
    EXPECT_THROW(embed_qr(p), CapacityError);
}

TEST(QrEmbed, BlankImageHasNoSymbol) {
    Raster blank{64, 64, std::vector<std::uint8_t>(64 * 64, 255)};
    EXPECT_FALSE(scan(blank));
    EXPECT_FALSE(scan(decode_png(encode_png(blank))));
}

TEST(QrEmbed, RasterLayout) {
    auto symbol = embed_qr(codec::encode_ir({}));
    auto img = rasterize(symbol, 2, 4);
    EXPECT_EQ(img.width, (21 + 8) * 2);
    EXPECT_EQ(img.pixels[0], 255);
    EXPECT_EQ(img.pixels[static_cast<std::size_t>(8 * img.width + 8)], 0);
}

TEST(QrEmbed, BadPngThrows) {
    std::vector<std::uint8_t> junk = {1, 2, 3, 4};
    EXPECT_THROW(decode_png(junk), std::runtime_error);
}

TEST(QrEmbed, Svg) {
    auto symbol = embed_qr(codec::encode_ir({{ir::Instruction::exit()}}));
    auto svg = render_svg(symbol);
    EXPECT_NE(svg.find("<svg"), std::string::npos);
    EXPECT_NE(svg.find("viewBox=\"0 0 29 29\""), std::string::npos);
    EXPECT_NE(svg.find("M4,4h7"), std::string::npos);  // top finder row
    EXPECT_TRUE(svg.ends_with("</svg>\n"));
}

}  // namespace
}  // namespace sqry::qr
