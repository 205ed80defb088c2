// sqry: command-line front end for the QRtree generation and execution chains.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "sqry/cli.hpp"

int main(int argc, char** argv) {
    using sqry::cli::Command;
    using sqry::cli::CommandConfig;
    using sqry::cli::ImageFormat;

    CLI::App app{"sqry - compile, encode, embed and run QRtree programs"};
    app.require_subcommand(1);

    CommandConfig cfg;
    std::string ec = "L";
    std::string format = "png";

    struct Spec {
        Command command;
        const char* name;
        const char* help;
    };
    const Spec specs[] = {
        {Command::Compile, "compile", "Compile a .qrt source file to textual IR (.qri)"},
        {Command::Asm, "asm", "Parse and re-emit a .qri file in canonical form"},
        {Command::Disasm, "disasm", "Print any program (.sqry, .png, .qri, .qrt) as textual IR"},
        {Command::Encode, "encode", "Encode a program to a binary payload (.sqry)"},
        {Command::Decode, "decode", "Decode a payload (.sqry, hex with --hex, or a QR .png) to textual IR"},
        {Command::Run, "run", "Run a program interactively, answers read one per line from stdin"},
        {Command::Qr, "qr", "Generate the QR symbol image for a program or payload"},
        {Command::Info, "info", "Show payload size, occupancy and minimum QR version"},
    };

    std::map<CLI::App*, Command> by_app;
    for (const auto& spec : specs) {
        CLI::App* sub = app.add_subcommand(spec.name, spec.help);
        by_app[sub] = spec.command;
        sub->add_option("input", cfg.input, "Input file")->required()->check(CLI::ExistingFile);
        sub->add_option("-o,--out", cfg.output, "Output path");
        sub->add_flag("--hex", cfg.hex, "Payloads are lowercase hex text");
        sub->add_option("--ec", ec, "QR error correction level")
            ->check(CLI::IsMember({"L", "M", "Q", "H"}, CLI::ignore_case));
        sub->add_option("--format", format, "Image format for qr")->check(CLI::IsMember({"png", "svg"}));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return sqry::cli::exit_code::kUsage;
    }

    for (auto* sub : app.get_subcommands()) cfg.command = by_app.at(sub);
    cfg.ec_level = *sqry::qr::parse_ec_level(ec);
    cfg.image_format = format == "svg" ? ImageFormat::Svg : ImageFormat::Png;

    return sqry::cli::run_command(cfg, std::cin, std::cout, std::cerr);
}
