#pragma once

#include <vector>

#include "sqry/error.hpp"
#include "sqry/ir.hpp"
#include "sqry/source.hpp"

namespace sqry {

/// Raised by compile() when validate_ast() reports problems.
class CompileError : public Error {
public:
    explicit CompileError(std::vector<source::Diagnostic> diagnostics);

    const std::vector<source::Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

private:
    std::vector<source::Diagnostic> diagnostics_;
};

/// Lowers a validated tree to IR.
///
/// An if chain becomes one IF per alternative, a GOTO to the continuation,
/// then the bodies in order. A body that can fall off its end gets a
/// trailing GOTO to the continuation, so an unmatched answer in a nested
/// chain resumes after the enclosing chain. `print` directly followed by
/// `exit` is fused into PRINTEX. All jump targets are resolved in a second
/// pass; the end of the program resolves to N.
ir::Program compile(const source::Ast& ast);

}  // namespace sqry
