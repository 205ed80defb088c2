// Regenerates the golden vectors under vectors/ from the fixtures.
//
//   sqry_vectors <fixtures-dir> <vectors-dir>
//
// Review the diff before committing: vectors are the conformance contract
// for every other runner of the payload format.

#include <fstream>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "sqry/codec.hpp"
#include "sqry/compiler.hpp"
#include "sqry/golden.hpp"
#include "sqry/ir.hpp"
#include "sqry/source.hpp"

namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + p.string());
    return {std::istreambuf_iterator<char>(in), {}};
}

struct Script {
    const char* suffix;
    const char* description;
    std::vector<std::string> answers;
};

const std::vector<Script> kPaths = {
    {"run-green", "RUN LED, Green", {"RUN LED", "Green"}},
    {"run-flashing-green-500", "Click-through: RUN LED, Flashing Green, 500 ms interval",
     {"RUN LED", "Flashing Green", "500 ms interval"}},
    {"run-flashing-green-250", "RUN LED, Flashing Green, 250 ms interval",
     {"RUN LED", "Flashing Green", "250 ms interval"}},
    {"run-flashing-green-unmatched", "Unmatched flashing speed", {"RUN LED", "Flashing Green", "1 s interval"}},
    {"run-flashing-red", "RUN LED, Flashing Red", {"RUN LED", "Flashing Red"}},
    {"run-off", "RUN LED, Off", {"RUN LED", "Off"}},
    {"run-unmatched-color", "Unmatched color", {"RUN LED", "Blue"}},
    {"err-on-red", "ERR LED, On Red", {"ERR LED", "On Red"}},
    {"err-off-red-free-text", "ERR LED then free text Off Red (not an enumerated option)", {"ERR LED", "Off Red"}},
    {"unmatched-led", "Unmatched top-level answer halts silently", {"SYNC LED"}},
    {"padded-answer", "Answers are trimmed before matching", {"  RUN LED ", "\tGreen  "}},
    {"case-sensitive", "Matching is case sensitive", {"run led"}},
    {"partial", "Script ends while the program waits", {"RUN LED"}},
};

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: sqry_vectors <fixtures-dir> <vectors-dir>\n";
        return 1;
    }
    const fs::path fixtures = argv[1];
    const fs::path out_dir = argv[2];
    fs::create_directories(out_dir);

    std::vector<sqry::golden::GoldenVector> vectors;
    auto add_program = [&](const std::string& prefix, const std::string& what, const sqry::ir::Program& program) {
        auto bytes = sqry::codec::encode_ir(program).bytes;
        for (const auto& s : kPaths)
            vectors.push_back(sqry::golden::record_vector(prefix + "-" + s.suffix, what + ": " + s.description,
                                                          bytes, s.answers));
    };

    add_program("listing", "Verbatim reference listing", sqry::ir::parse_ir(slurp(fixtures / "led_listing.qri")));
    add_program("demo", "Compiled LED demo source",
                sqry::compile(sqry::source::parse_program(slurp(fixtures / "led_demo.qrt"))));

    using Bytes = std::vector<std::uint8_t>;
    auto add_raw = [&](std::string name, std::string what, Bytes bytes, std::vector<std::string> answers = {}) {
        vectors.push_back(sqry::golden::record_vector(std::move(name), std::move(what), std::move(bytes),
                                                      std::move(answers)));
    };
    add_raw("exit-only", "Single EXIT instruction", {0x11, 0x00, 0x1A});
    add_raw("empty-program", "Header only, zero instructions", {0x11, 0x00, 0x00});
    add_raw("printex-only", "Single PRINTEX",
            sqry::codec::encode_ir({{sqry::ir::Instruction::printex("Hello")}}).bytes);
    add_raw("bad-dialect", "Dialect 2 is rejected", {0x21, 0x00, 0x00});
    add_raw("bad-version", "Format version 2 is rejected", {0x12, 0x00, 0x00});
    add_raw("truncated", "Header cut short", {0x11});
    add_raw("empty-bytes", "No bytes at all", {});
    add_raw("nonzero-padding", "EXIT with a set padding bit", {0x11, 0x00, 0x1B});
    add_raw("trailing-data", "Whole byte after the last instruction", {0x11, 0x00, 0x1A, 0x00});
    add_raw("reserved-opcode", "Opcode 111 is reserved", {0x11, 0x00, 0x1E});

    for (const auto& v : vectors) {
        std::ofstream out(out_dir / (v.name + ".json"), std::ios::binary | std::ios::trunc);
        out << sqry::golden::serialize_vector(v);
    }
    std::cout << "wrote " << vectors.size() << " vectors to " << out_dir.string() << "\n";
    return 0;
}
