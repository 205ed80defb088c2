#pragma once

// Test-only oracles. Nothing here calls into the compiler, the codec or the
// VM; each one re-derives the expected behaviour by a separate route.

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "sqry/ir.hpp"
#include "sqry/source.hpp"
#include "sqry/vm.hpp"

namespace sqry::testing {

std::filesystem::path source_dir();
std::string read_fixture(const std::string& relative);

/// Executes the tree directly. Prompts list the alternatives of the chain
/// right after the input, mirroring what a user would see in a menu.
struct InterpreterResult {
    vm::Trace trace;
    /// When the script ran out at an input: every answer some chain after
    /// that input tests. Empty otherwise.
    std::vector<std::string> candidates;
};

InterpreterResult interpret(const source::Ast& ast, const std::vector<std::string>& answers);

/// Every answer script that walks the tree to a halt, choosing at each input
/// one of the tested answers or `unmatched`.
std::vector<std::vector<std::string>> enumerate_answer_paths(const source::Ast& ast, const std::string& unmatched);

/// Bit string ("0101...") encoder for the payload format, written against
/// the format description only.
std::string reference_payload_bits(const ir::Program& program);
std::vector<std::uint8_t> pack_bits(const std::string& bits);

/// Random generators, deterministic for a given engine state.
std::string random_text(std::mt19937& rng);
source::Ast random_ast(std::mt19937& rng);
ir::Program random_program(std::mt19937& rng, std::size_t max_size = 40);

/// Addresses reachable from 0 following every CFG edge.
std::vector<bool> reachable(const ir::Program& program);

}  // namespace sqry::testing
