#include "sqry/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

#include "sqry/codec.hpp"
#include "sqry/compiler.hpp"
#include "sqry/ir.hpp"
#include "sqry/qr.hpp"
#include "sqry/source.hpp"
#include "sqry/text.hpp"
#include "sqry/vm.hpp"

namespace sqry::cli {

namespace {

namespace fs = std::filesystem;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const fs::path& path, std::string_view data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !out.write(data.data(), static_cast<std::streamsize>(data.size())))
        throw IoError("cannot write " + path.string());
}

std::vector<std::uint8_t> as_bytes(std::string_view s) { return {s.begin(), s.end()}; }

std::string ir_file_text(const ir::Program& program) {
    std::string text = ir::format_ir(program);
    if (!text.empty()) text += '\n';
    return text;
}

bool has_ext(const fs::path& p, std::string_view ext) { return p.extension() == ext; }

std::vector<std::uint8_t> load_payload_bytes(const CommandConfig& cfg) {
    std::string raw = read_file(cfg.input);
    if (has_ext(cfg.input, ".png")) {
        auto bytes = qr::scan(qr::decode_png(as_bytes(raw)));
        if (!bytes) throw codec::CodecError("NoSymbolFound", "no QR symbol found in " + cfg.input.string());
        return *bytes;
    }
    if (cfg.hex) {
        auto bytes = text::from_hex(raw);
        if (!bytes) throw codec::CodecError("BadHex", cfg.input.string() + " is not hex text");
        return *bytes;
    }
    return as_bytes(raw);
}

/// .qrt compiles, .qri assembles, anything else is a payload.
ir::Program load_program(const CommandConfig& cfg) {
    if (has_ext(cfg.input, ".qrt")) return compile(source::parse_program(read_file(cfg.input)));
    if (has_ext(cfg.input, ".qri")) return ir::parse_ir(read_file(cfg.input));
    return codec::decode_payload(load_payload_bytes(cfg));
}

codec::Payload load_payload(const CommandConfig& cfg) {
    if (has_ext(cfg.input, ".qrt") || has_ext(cfg.input, ".qri")) return codec::encode_ir(load_program(cfg));
    return codec::extract_payload(load_payload_bytes(cfg));
}

void emit_text(const CommandConfig& cfg, std::string_view text, std::ostream& out) {
    if (cfg.output)
        write_file(*cfg.output, text);
    else
        out << text;
}

fs::path default_output(const CommandConfig& cfg, std::string_view ext) {
    return cfg.output ? *cfg.output : fs::path(cfg.input).replace_extension(ext);
}

std::string resolve_answer(const std::string& line, const vm::InteractionRequest& req) {
    std::string_view typed = text::trim(line);
    for (const auto& opt : req.options)
        if (typed == opt) return opt;
    std::size_t index = 0;
    auto [ptr, ec] = std::from_chars(typed.data(), typed.data() + typed.size(), index);
    if (ec == std::errc{} && ptr == typed.data() + typed.size() && index >= 1 && index <= req.options.size())
        return req.options[index - 1];
    return std::string(typed);
}

int run_session(const ir::Program& program, std::istream& in, std::ostream& out, std::ostream& err) {
    vm::VmState state = vm::load_program(program);
    std::size_t printed = 0;
    while (state.status != vm::Status::Halted) {
        if (state.status == vm::Status::Running) {
            state = vm::advance(std::move(state));
            for (; printed < state.outputs.size(); ++printed) out << state.outputs[printed] << '\n';
            continue;
        }
        auto req = vm::enumerate_options(state);
        out << req.prompt << '\n';
        for (std::size_t i = 0; i < req.options.size(); ++i) out << "  [" << i + 1 << "] " << req.options[i] << '\n';
        out << "> " << std::flush;
        std::string line;
        if (!std::getline(in, line)) {
            out << '\n';
            err << "input closed before the program finished\n";
            return exit_code::kOk;
        }
        state = vm::provide_answer(std::move(state), resolve_answer(line, req));
    }
    return exit_code::kOk;
}

int info(const CommandConfig& cfg, std::ostream& out) {
    codec::Payload payload = load_payload(cfg);
    ir::Program program = codec::decode_payload(payload);
    const auto capacity = qr::byte_capacity(qr::kMaxVersion, cfg.ec_level);
    const auto ec = qr::to_string(cfg.ec_level);
    out << "instructions: " << program.size() << '\n';
    out << "bit_length: " << payload.bit_length << '\n';
    out << "bytes: " << payload.bytes.size() << '\n';
    out << "occupancy: " << codec::format_occupancy(payload.bit_length, capacity) << " of " << capacity
        << " bytes (EC " << ec << ")\n";
    out << "min_version: " << qr::min_version_for(payload.bytes.size(), cfg.ec_level) << " (EC " << ec << ")\n";
    return exit_code::kOk;
}

int dispatch(const CommandConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    switch (cfg.command) {
        case Command::Compile:
            emit_text(cfg, ir_file_text(compile(source::parse_program(read_file(cfg.input)))), out);
            return exit_code::kOk;
        case Command::Asm:
            emit_text(cfg, ir_file_text(ir::parse_ir(read_file(cfg.input))), out);
            return exit_code::kOk;
        case Command::Disasm:
        case Command::Decode:
            emit_text(cfg, ir_file_text(load_program(cfg)), out);
            return exit_code::kOk;
        case Command::Encode: {
            auto payload = codec::encode_ir(load_program(cfg));
            if (cfg.hex)
                emit_text(cfg, text::to_hex(payload.bytes) + "\n", out);
            else
                write_file(default_output(cfg, ".sqry"), {reinterpret_cast<const char*>(payload.bytes.data()),
                                                          payload.bytes.size()});
            return exit_code::kOk;
        }
        case Command::Run:
            return run_session(load_program(cfg), in, out, err);
        case Command::Qr: {
            auto symbol = qr::embed_qr(load_payload(cfg), cfg.ec_level);
            if (cfg.image_format == ImageFormat::Svg) {
                write_file(default_output(cfg, ".svg"), qr::render_svg(symbol));
            } else {
                auto png = qr::encode_png(qr::rasterize(symbol));
                write_file(default_output(cfg, ".png"), {reinterpret_cast<const char*>(png.data()), png.size()});
            }
            return exit_code::kOk;
        }
        case Command::Info:
            return info(cfg, out);
    }
    return exit_code::kUsage;
}

int code_for(ErrorCategory category) {
    switch (category) {
        case ErrorCategory::Parse:
        case ErrorCategory::Validate: return exit_code::kParse;
        case ErrorCategory::Codec: return exit_code::kCodec;
        case ErrorCategory::Capacity: return exit_code::kCapacity;
        case ErrorCategory::Runtime: return exit_code::kRuntime;
    }
    return exit_code::kUsage;
}

}  // namespace

int run_command(const CommandConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(config, in, out, err);
    } catch (const CompileError& e) {
        for (const auto& d : e.diagnostics())
            err << config.input.string() << ":" << d.line << ": " << d.rule << ": " << d.message << '\n';
        return exit_code::kParse;
    } catch (const Error& e) {
        err << config.input.string() << ": " << e.what() << '\n';
        return code_for(e.category());
    } catch (const IoError& e) {
        err << e.what() << '\n';
        return exit_code::kUsage;
    } catch (const std::exception& e) {
        // unreadable images and writer failures
        err << config.input.string() << ": " << e.what() << '\n';
        return exit_code::kUsage;
    }
}

}  // namespace sqry::cli
