#include <gtest/gtest.h>

#include <fstream>
#include <iterator>

#include "oracles.hpp"
#include "sqry/codec.hpp"
#include "sqry/golden.hpp"

namespace sqry::golden {
namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

TEST(Golden, CommittedVectorsPass) {
    auto files = list_vectors(testing::source_dir() / "vectors");
    ASSERT_GE(files.size(), 30u);
    for (const auto& f : files) {
        auto v = parse_vector(slurp(f));
        EXPECT_EQ(v.name + ".json", f.filename().string());
        auto r = check_vector(v);
        EXPECT_TRUE(r.pass) << f.filename() << ": " << r.detail;
    }
}

TEST(Golden, CommittedVectorsAreCanonical) {
    for (const auto& f : list_vectors(testing::source_dir() / "vectors")) {
        auto text = slurp(f);
        EXPECT_EQ(serialize_vector(parse_vector(text)), text) << f.filename();
    }
}

TEST(Golden, ClickThroughVectorPresent) {
    auto v = parse_vector(slurp(testing::source_dir() / "vectors/listing-run-flashing-green-500.json"));
    EXPECT_EQ(v.answers, (std::vector<std::string>{"RUN LED", "Flashing Green", "500 ms interval"}));
    ASSERT_FALSE(v.expected.events.empty());
    EXPECT_EQ(v.expected.events.back().text, "Reset button pressed");
    EXPECT_EQ(v.expected.final_status, vm::Status::Halted);
}

TEST(Golden, SerializeParseRoundTrip) {
    auto program = ir::parse_ir(testing::read_fixture("fixtures/led_listing.qri"));
    auto v = record_vector("t", "desc", codec::encode_ir(program).bytes, {"ERR LED"});
    EXPECT_EQ(parse_vector(serialize_vector(v)), v);
    EXPECT_TRUE(check_vector(v).pass);

    auto bad = record_vector("b", "", {0x21, 0x00, 0x00}, {});
    EXPECT_EQ(bad.expected_error, "BadDialect");
    EXPECT_EQ(parse_vector(serialize_vector(bad)), bad);
}

TEST(Golden, DetectsMismatch) {
    auto program = ir::parse_ir(testing::read_fixture("fixtures/led_listing.qri"));
    auto v = record_vector("t", "", codec::encode_ir(program).bytes, {"RUN LED", "Green"});
    v.expected.events.back().text = "Abnormal operation";
    auto r = check_vector(v);
    EXPECT_FALSE(r.pass);
    EXPECT_NE(r.detail.find("Abnormal operation"), std::string::npos);

    v = record_vector("t", "", {0x11, 0x00, 0x1A}, {});
    v.expected_error = "BadVersion";
    EXPECT_FALSE(check_vector(v).pass);
}

TEST(Golden, RejectsMalformedDocuments) {
    EXPECT_THROW(parse_vector("{"), std::runtime_error);
    EXPECT_THROW(parse_vector(R"({"format":"other/1"})"), std::runtime_error);
    EXPECT_THROW(parse_vector(R"({"format":"sqry-golden-vector/1","name":"x","payload_hex":"1","answers":[],)"
                              R"("expect":{"error":"BadDialect"}})"),
                 std::runtime_error);
}

}  // namespace
}  // namespace sqry::golden
