#pragma once

// Ring definition files:
//
//   # comment
//   p=2 vars=x,y,z,w
//   x^2
//   xz-yw
//   @g = x + y
//
// The header comes first; then one relation per line; then optional
// `@name = polynomial` bindings. Blank lines and `#` comments are ignored.
// The full grammar is in docs/grammar.md.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "extclosure/algebra.hpp"
#include "extclosure/errors.hpp"

namespace extclosure {

/// Parse failure located in a ring file (1-based line and column).
class RingFileError : public Error {
public:
    RingFileError(const std::string& source, std::size_t line, std::size_t column, const std::string& message);
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

struct RingDefinition {
    std::uint32_t p = 0;
    std::vector<std::string> variables;
    std::vector<std::string> relations;
    std::vector<std::pair<std::string, std::string>> bindings;
    std::vector<std::size_t> relation_lines;
    std::vector<std::size_t> binding_lines;
};

/// Syntax only: header, relation lines, binding lines.
RingDefinition parse_ring_definition(std::string_view text, const std::string& source = "<input>");

struct LoadedRing {
    std::string source;
    PresentedAlgebra presentation;
    /// Bindings plus one entry per variable.
    std::map<std::string, RingElement> elements;

    const AlgebraPtr& algebra() const noexcept { return presentation.algebra; }
    /// A bound name, a variable, or any polynomial in the variables.
    RingElement element(std::string_view expression) const;
};

/// Parses and builds the algebra. `p_override` replaces the header's prime.
LoadedRing load_ring_text(std::string_view text, const std::string& source = "<input>",
                          std::optional<std::uint32_t> p_override = std::nullopt);
LoadedRing load_ring(const std::filesystem::path& path, std::optional<std::uint32_t> p_override = std::nullopt);

}  // namespace extclosure
