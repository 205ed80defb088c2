#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "sqry/qr.hpp"

namespace sqry::cli {

enum class Command { Compile, Disasm, Asm, Encode, Decode, Run, Qr, Info };

enum class ImageFormat { Png, Svg };

struct CommandConfig {
    Command command = Command::Info;
    std::filesystem::path input;
    std::optional<std::filesystem::path> output;
    qr::EcLevel ec_level = qr::EcLevel::L;
    bool hex = false;  // payloads read/written as lowercase hex text
    ImageFormat image_format = ImageFormat::Png;
};

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;  // also unreadable input files
inline constexpr int kParse = 2;  // parse or validation errors
inline constexpr int kCodec = 3;
inline constexpr int kCapacity = 4;
inline constexpr int kRuntime = 5;  // VM step budget
}  // namespace exit_code

/// Executes one command. Text results without --out go to `out`;
/// diagnostics go to `err`; `run` reads answers from `in`, one per line.
int run_command(const CommandConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sqry::cli
