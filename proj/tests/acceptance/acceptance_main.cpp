// Acceptance gate. One PASS/FAIL line per criterion; exit status is the
// number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sqry/codec.hpp"
#include "sqry/compiler.hpp"
#include "sqry/ir.hpp"
#include "sqry/qr.hpp"
#include "sqry/source.hpp"
#include "sqry/text.hpp"
#include "sqry/vm.hpp"

namespace {

using namespace sqry;
namespace t = sqry::testing;

struct Outcome {
    bool pass;
    std::string detail;
};

std::vector<std::string> outputs(const vm::Trace& trace) {
    std::vector<std::string> out;
    for (const auto& e : trace.events)
        if (e.kind == vm::Event::Kind::Output) out.push_back(e.text);
    return out;
}

Outcome fixture_execution() {
    auto program = ir::parse_ir(t::read_fixture("fixtures/led_listing.qri"));
    if (program.size() != 31) return {false, "listing has " + std::to_string(program.size()) + " instructions"};

    struct Case {
        std::vector<std::string> answers;
        const char* last;  // nullptr: no output at all
    };
    const std::vector<Case> cases = {
        {{"RUN LED", "Green"}, "Normal operation"},
        {{"RUN LED", "Flashing Green", "500 ms interval"}, "Reset button pressed"},
        {{"RUN LED", "Flashing Green", "250 ms interval"}, "Normally operating with USB drive connected"},
        {{"RUN LED", "Flashing Red"}, "Initializing"},
        {{"RUN LED", "Off"}, "Power-off"},
        {{"ERR LED", "On Red"}, "Initial error occurred/USB flash drive failed"},
        {{"ERR LED", "Off Red"}, "No error"},
        {{"SYNC LED"}, nullptr},
        {{"run led"}, nullptr},
        {{""}, nullptr},
    };

    auto start = std::chrono::steady_clock::now();
    for (const auto& c : cases) {
        auto trace = vm::run_script(program, c.answers);
        auto out = outputs(trace);
        if (trace.final_status != vm::Status::Halted) return {false, "'" + c.answers[0] + "' did not halt"};
        if (c.last == nullptr) {
            if (!out.empty()) return {false, "unmatched '" + c.answers[0] + "' printed " + out[0]};
        } else if (out.empty() || out.back() != c.last) {
            return {false, "path ending '" + c.answers.back() + "' printed " + (out.empty() ? "nothing" : out.back())};
        }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 1.0) return {false, "took " + std::to_string(secs) + " s"};
    std::ostringstream d;
    d << cases.size() << " scripts, " << secs * 1000 << " ms";
    return {true, d.str()};
}

Outcome occupancy_arithmetic() {
    auto s = codec::format_occupancy(2720, 2953);
    return {s == "11.5%" && codec::occupancy(2720, 2953) == 11.5, "occupancy(2720 bits, 2953 bytes) = " + s};
}

Outcome capacity_ceiling() {
    int v = qr::min_version_for(2953, qr::EcLevel::L);
    if (v != 40) return {false, "min_version_for(2953, L) = " + std::to_string(v)};
    try {
        qr::min_version_for(2954, qr::EcLevel::L);
        return {false, "2954 bytes did not raise"};
    } catch (const qr::CapacityError& e) {
        return {e.kind() == "PayloadExceedsCapacity", "2953 -> v40, 2954 -> " + e.kind()};
    }
}

void collect_match_texts(const std::vector<source::Stmt>& stmts, std::set<std::string>& out) {
    for (const auto& s : stmts)
        if (auto* chain = std::get_if<source::IfChain>(&s.node))
            for (const auto& alt : chain->alternatives) {
                out.insert(alt.match_text);
                collect_match_texts(alt.body, out);
            }
}

// Checks one tree: every path through the tested answers, then for each
// input reached on those paths, 10 scripts that answer it with text no
// chain tests and continue with random choices to a halt.
bool equivalent(const source::Ast& ast, std::mt19937& rng, std::size_t& scripts, std::string& why) {
    const auto program = compile(ast);
    std::set<std::string> tested;
    collect_match_texts(ast.statements, tested);

    auto unmatched = [&] {
        for (;;) {
            std::string u = t::random_text(rng);
            if (std::bernoulli_distribution(0.3)(rng)) u = " " + u + "\t";
            if (!tested.count(std::string(text::trim(u)))) return u;
        }
    };

    auto check = [&](const std::vector<std::string>& answers) {
        ++scripts;
        auto want = t::interpret(ast, answers).trace;
        auto got = vm::run_script(program, answers);
        if (want == got) return true;
        why = source::unparse(ast);
        return false;
    };

    // "\x01" stands in for an unmatched answer during enumeration
    auto paths = t::enumerate_answer_paths(ast, "\x01");
    std::set<std::vector<std::string>> prefixes;
    for (const auto& p : paths) {
        if (!check(p)) return false;
        for (std::size_t k = 0; k <= p.size(); ++k) {
            prefixes.insert({p.begin(), p.begin() + static_cast<long>(k)});
            if (k < p.size() && p[k] == "\x01") break;
        }
    }

    for (const auto& prefix : prefixes) {
        if (t::interpret(ast, prefix).trace.final_status != vm::Status::AwaitingInput) continue;
        for (int k = 0; k < 10; ++k) {
            auto script = prefix;
            script.push_back(unmatched());
            for (int guard = 0; guard < 64; ++guard) {
                auto r = t::interpret(ast, script);
                if (r.trace.final_status == vm::Status::Halted) break;
                r.candidates.push_back(unmatched());
                script.push_back(r.candidates[std::uniform_int_distribution<std::size_t>(
                    0, r.candidates.size() - 1)(rng)]);
            }
            if (!check(script)) return false;
        }
    }
    return true;
}

Outcome compiler_equivalence() {
    std::mt19937 rng(0x5eed);
    std::size_t scripts = 0;
    std::string why;
    auto demo = source::parse_program(t::read_fixture("fixtures/led_demo.qrt"));
    if (!equivalent(demo, rng, scripts, why)) return {false, "demo diverges"};
    const std::size_t demo_scripts = scripts;
    for (int i = 0; i < 1000; ++i)
        if (!equivalent(t::random_ast(rng), rng, scripts, why)) return {false, "diverges on\n" + why};
    return {true, "demo (" + std::to_string(demo_scripts) + " scripts) + 1000 random trees, " +
                      std::to_string(scripts) + " scripts"};
}

Outcome codec_round_trip() {
    std::mt19937 rng(0xC0DEC);
    for (int i = 0; i < 1000; ++i) {
        auto program = t::random_program(rng);
        auto payload = codec::encode_ir(program);
        if (codec::decode_payload(payload) != program) return {false, "round trip " + std::to_string(i)};
        if (payload.bytes != t::pack_bits(t::reference_payload_bits(program)))
            return {false, "reference bit writer disagrees on " + std::to_string(i)};
    }
    auto demo = codec::encode_ir(compile(source::parse_program(t::read_fixture("fixtures/led_demo.qrt"))));
    auto cap = qr::byte_capacity(40, qr::EcLevel::L);
    double occ = codec::occupancy(demo.bit_length, cap);
    std::string d = "1000 programs; demo " + std::to_string(demo.bit_length) + " bits, " +
                    std::to_string(demo.bytes.size()) + " bytes, " +
                    codec::format_occupancy(demo.bit_length, cap) + " at EC L";
    return {demo.bytes.size() <= cap && occ < 15.0, d};
}

Outcome full_chain() {
    auto ast = source::parse_program(t::read_fixture("fixtures/led_demo.qrt"));
    auto listing = ir::format_ir(compile(ast));
    auto payload = codec::encode_ir(ir::parse_ir(listing));
    auto symbol = qr::embed_qr(payload, qr::EcLevel::L);
    auto png = qr::encode_png(qr::rasterize(symbol));
    auto scanned = qr::scan(qr::decode_png(png));
    if (!scanned) return {false, "reader found no symbol"};
    auto back = ir::format_ir(codec::decode_payload(*scanned));
    if (back != listing) return {false, "disassembly differs from compiled listing"};
    return {true, "v" + std::to_string(symbol.version) + " symbol, " + std::to_string(png.size()) +
                      "-byte PNG, " + std::to_string(listing.size()) + " chars of IR identical"};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"AC1 fixture execution", fixture_execution},
        {"AC2 occupancy arithmetic", occupancy_arithmetic},
        {"AC3 capacity ceiling", capacity_ceiling},
        {"AC4 compiler oracle equivalence", compiler_equivalence},
        {"AC5 codec round trip", codec_round_trip},
        {"AC6 full-chain round trip", full_chain},
    };
    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        if (!o.pass) ++failures;
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
    }
    return failures;
}
