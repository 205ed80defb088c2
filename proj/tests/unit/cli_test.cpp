#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>
#include <sys/wait.h>

#include "oracles.hpp"
#include "sqry/cli.hpp"
#include "sqry/text.hpp"

namespace sqry::cli {
namespace {

namespace fs = std::filesystem;

CommandConfig cmd(Command c, fs::path input) {
    CommandConfig cfg;
    cfg.command = c;
    cfg.input = std::move(input);
    return cfg;
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("sqry_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path write(const std::string& name, std::string_view data) {
        auto p = dir_ / name;
        std::ofstream(p, std::ios::binary) << data;
        return p;
    }

    static std::string slurp(const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        return {std::istreambuf_iterator<char>(in), {}};
    }

    struct Result {
        int code;
        std::string out;
        std::string err;
    };

    Result run(CommandConfig cfg, const std::string& stdin_text = "") {
        std::istringstream in(stdin_text);
        std::ostringstream out, err;
        int code = run_command(cfg, in, out, err);
        return {code, out.str(), err.str()};
    }

    fs::path demo() { return write("demo.qrt", testing::read_fixture("fixtures/led_demo.qrt")); }
    fs::path listing() { return write("listing.qri", testing::read_fixture("fixtures/led_listing.qri")); }

    fs::path dir_;
};

TEST_F(CliTest, CompilePrintsListing) {
    auto r = run(cmd(Command::Compile, demo()));
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.starts_with("(0) input \"What led?\"\n(1) if \"RUN LED\" (4)\n"));
    EXPECT_TRUE(r.out.ends_with("(30) goto (31)\n"));
}

TEST_F(CliTest, CompileReportsDiagnostics) {
    auto bad = write("bad.qrt", "if \"a\":\n    exit\n");
    auto r = run(cmd(Command::Compile, bad));
    EXPECT_EQ(r.code, exit_code::kParse);
    EXPECT_NE(r.err.find("bad.qrt:1: ChainWithoutInput"), std::string::npos);

    auto broken = write("broken.qrt", "print \"open\n");
    r = run(cmd(Command::Compile, broken));
    EXPECT_EQ(r.code, exit_code::kParse);
    EXPECT_NE(r.err.find("UnterminatedString (line 1)"), std::string::npos);
}

TEST_F(CliTest, RunSession) {
    auto r = run(cmd(Command::Run, listing()), "RUN LED\nGreen\n");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "What led?\n  [1] RUN LED\n  [2] ERR LED\n> "
              "Operating status of the switch\n"
              "What color?\n  [1] Green\n  [2] Flashing Green\n  [3] Flashing Red\n  [4] Off\n> "
              "Normal operation\n");
}

TEST_F(CliTest, RunAcceptsOptionNumbersAndFreeText) {
    auto r = run(cmd(Command::Run, demo()), "1\n2\n 500 ms interval \n");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.ends_with("Reset button pressed\n"));
    r = run(cmd(Command::Run, demo()), "2\nOff Red\n");
    EXPECT_TRUE(r.out.ends_with("No error\n"));
    r = run(cmd(Command::Run, demo()), "9\n");
    EXPECT_EQ(r.out, "What led?\n  [1] RUN LED\n  [2] ERR LED\n> ");
}

TEST_F(CliTest, RunEndOfInput) {
    auto r = run(cmd(Command::Run, listing()), "RUN LED\n");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.err.find("input closed"), std::string::npos);
}

TEST_F(CliTest, RunStepBudget) {
    auto loop = write("loop.qri", "(0) goto (0)\n");
    auto r = run(cmd(Command::Run, loop));
    EXPECT_EQ(r.code, exit_code::kRuntime);
    EXPECT_NE(r.err.find("StepBudgetExhausted"), std::string::npos);
}

TEST_F(CliTest, EncodeDecodeBinaryAndHex) {
    auto src = listing();
    CommandConfig enc = cmd(Command::Encode, src);
    EXPECT_EQ(run(enc).code, 0);
    auto bin = dir_ / "listing.sqry";
    ASSERT_TRUE(fs::exists(bin));

    auto dec = run(cmd(Command::Decode, bin));
    EXPECT_EQ(dec.code, 0);
    EXPECT_EQ(dec.out, slurp(src));

    enc.hex = true;
    auto hex = run(enc);
    EXPECT_EQ(hex.code, 0);
    auto bytes = text::from_hex(hex.out);
    ASSERT_TRUE(bytes);
    EXPECT_EQ(std::string(bytes->begin(), bytes->end()), slurp(bin));

    CommandConfig dech = cmd(Command::Disasm, write("listing.hex", hex.out));
    dech.hex = true;
    EXPECT_EQ(run(dech).out, slurp(src));
}

TEST_F(CliTest, DecodeErrors) {
    CommandConfig cfg = cmd(Command::Decode, write("bad.hex", "21 00 00\n"));
    cfg.hex = true;
    auto r = run(cfg);
    EXPECT_EQ(r.code, exit_code::kCodec);
    EXPECT_NE(r.err.find("BadDialect"), std::string::npos);

    cfg.input = write("odd.hex", "123");
    r = run(cfg);
    EXPECT_EQ(r.code, exit_code::kCodec);
    EXPECT_NE(r.err.find("BadHex"), std::string::npos);

    r = run(cmd(Command::Decode, dir_ / "missing.sqry"));
    EXPECT_EQ(r.code, exit_code::kUsage);
}

TEST_F(CliTest, AsmNormalizes) {
    auto r = run(cmd(Command::Asm, write("x.qri", "(0)   print \"a\"\r\n(1) exit")));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "(0) print \"a\"\n(1) exit\n");
    EXPECT_EQ(run(cmd(Command::Asm, write("y.qri", "(0) goto (5)"))).code, exit_code::kParse);
}

TEST_F(CliTest, Info) {
    auto r = run(cmd(Command::Info, write("exit.hex", "11001a")));
    EXPECT_EQ(r.code, exit_code::kCodec);  // read as raw bytes without --hex

    CommandConfig cfg = cmd(Command::Info, write("exit2.hex", "11001a"));
    cfg.hex = true;
    r = run(cfg);
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "instructions: 1\nbit_length: 23\nbytes: 3\n"
              "occupancy: 0.1% of 2953 bytes (EC L)\nmin_version: 1 (EC L)\n");

    cfg.ec_level = qr::EcLevel::H;
    EXPECT_NE(run(cfg).out.find("of 1273 bytes (EC H)"), std::string::npos);
}

TEST_F(CliTest, QrPngRoundTrip) {
    auto src = demo();
    auto qr = run(cmd(Command::Qr, src));
    EXPECT_EQ(qr.code, 0) << qr.err;
    auto png = dir_ / "demo.png";
    ASSERT_TRUE(fs::exists(png));

    auto compiled = run(cmd(Command::Compile, src));
    auto back = run(cmd(Command::Disasm, png));
    EXPECT_EQ(back.code, 0) << back.err;
    EXPECT_EQ(back.out, compiled.out);

    auto r = run(cmd(Command::Run, png), "RUN LED\nGreen\n");
    EXPECT_TRUE(r.out.ends_with("Normal operation\n"));
}

TEST_F(CliTest, QrSvgAndCapacity) {
    CommandConfig cfg = cmd(Command::Qr, listing());
    cfg.image_format = ImageFormat::Svg;
    cfg.output = dir_ / "out.svg";
    EXPECT_EQ(run(cfg).code, 0);
    EXPECT_NE(slurp(*cfg.output).find("<svg"), std::string::npos);

    std::string big = "(0) print \"" + std::string(3000, 'x') + "\"\n";
    auto r = run(cmd(Command::Qr, write("big.qri", big)));
    EXPECT_EQ(r.code, exit_code::kCapacity);
    EXPECT_NE(r.err.find("PayloadExceedsCapacity"), std::string::npos);
}

TEST_F(CliTest, PngWithoutSymbol) {
    auto r = run(cmd(Command::Decode, write("junk.png", "not a png")));
    EXPECT_EQ(r.code, exit_code::kUsage);
}

// Process level: the installed binary and its argument handling.

struct Proc {
    int code;
    std::string out;
};

Proc sh(const std::string& cmd) {
    Proc p{-1, {}};
    FILE* f = popen((cmd + " 2>&1").c_str(), "r");
    if (!f) return p;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) p.out.append(buf.data(), n);
    int status = pclose(f);
    p.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return p;
}

TEST_F(CliTest, BinaryRunAndExitCodes) {
    const std::string bin = SQRY_CLI_PATH;
    auto src = demo();
    auto r = sh("printf 'RUN LED\\nGreen\\n' | " + bin + " run " + src.string());
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("Operating status of the switch\n"), std::string::npos);
    EXPECT_NE(r.out.find("Normal operation\n"), std::string::npos);

    auto bad = write("bad.hex", "210000");
    r = sh(bin + " decode --hex " + bad.string());
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.out.find("BadDialect"), std::string::npos);

    EXPECT_EQ(sh(bin + " frobnicate").code, 1);
    EXPECT_EQ(sh(bin + " run " + (dir_ / "nope.qrt").string()).code, 1);
    EXPECT_EQ(sh(bin + " qr --ec Z " + src.string()).code, 1);
    EXPECT_EQ(sh(bin + " --help").code, 0);
}

TEST_F(CliTest, BinaryFullChain) {
    const std::string bin = SQRY_CLI_PATH;
    auto src = demo();
    auto qri = dir_ / "demo.qri";
    auto png = dir_ / "demo.png";
    auto back = dir_ / "back.qri";
    ASSERT_EQ(sh(bin + " compile " + src.string() + " -o " + qri.string()).code, 0);
    ASSERT_EQ(sh(bin + " qr --ec M " + qri.string() + " -o " + png.string()).code, 0);
    ASSERT_EQ(sh(bin + " disasm " + png.string() + " -o " + back.string()).code, 0);
    EXPECT_EQ(slurp(back), slurp(qri));
    auto info = sh(bin + " info --ec M " + png.string());
    EXPECT_EQ(info.code, 0);
    EXPECT_NE(info.out.find("(EC M)"), std::string::npos);
}

}  // namespace
}  // namespace sqry::cli
