#include "extclosure/ring_file.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace extclosure {

RingFileError::RingFileError(const std::string& source, std::size_t line, std::size_t column,
                             const std::string& message)
    : Error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

bool is_identifier(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

/// Offset of the first non-space character at or after `from`, or npos.
std::size_t skip_space(std::string_view s, std::size_t from) {
    while (from < s.size() && std::isspace(static_cast<unsigned char>(s[from]))) ++from;
    return from < s.size() ? from : std::string_view::npos;
}

std::string_view trim_right(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

void parse_header(std::string_view line, std::size_t lineno, const std::string& source, RingDefinition& def) {
    bool have_p = false, have_vars = false;
    std::size_t pos = 0;
    while ((pos = skip_space(line, pos)) != std::string_view::npos) {
        std::size_t end = pos;
        while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
        const std::string_view token = line.substr(pos, end - pos);
        const std::size_t column = pos + 1;
        if (token.rfind("p=", 0) == 0) {
            const std::string digits(token.substr(2));
            if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 9)
                throw RingFileError(source, lineno, column, "invalid characteristic '" + digits + "'");
            const unsigned long p = std::stoul(digits);
            if (p > kMaxModulus || !is_prime(static_cast<std::uint32_t>(p)))
                throw RingFileError(source, lineno, column, "characteristic " + digits + " is not a prime below 65536");
            def.p = static_cast<std::uint32_t>(p);
            have_p = true;
        } else if (token.rfind("vars=", 0) == 0) {
            std::string_view list = token.substr(5);
            std::size_t start = 0;
            while (start <= list.size()) {
                const std::size_t comma = std::min(list.find(',', start), list.size());
                const std::string_view name = list.substr(start, comma - start);
                if (!is_identifier(name))
                    throw RingFileError(source, lineno, column + 5 + start, "invalid variable name '" + std::string(name) + "'");
                for (const auto& v : def.variables)
                    if (v == name)
                        throw RingFileError(source, lineno, column + 5 + start, "duplicate variable '" + v + "'");
                def.variables.emplace_back(name);
                start = comma + 1;
            }
            have_vars = true;
        } else {
            throw RingFileError(source, lineno, column, "unexpected header field '" + std::string(token) + "'");
        }
        pos = end;
    }
    if (!have_p) throw RingFileError(source, lineno, 1, "header lacks p=<prime>");
    if (!have_vars) throw RingFileError(source, lineno, 1, "header lacks vars=<names>");
}

}  // namespace

RingDefinition parse_ring_definition(std::string_view text, const std::string& source) {
    RingDefinition def;
    bool header = false;
    std::size_t lineno = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t nl = std::min(text.find('\n', start), text.size());
        std::string_view line = text.substr(start, nl - start);
        start = nl + 1;
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim_right(line);
        const std::size_t first = skip_space(line, 0);
        if (first == std::string_view::npos) continue;

        if (!header) {
            parse_header(line, lineno, source, def);
            header = true;
        } else if (line[first] == '@') {
            const std::size_t eq = line.find('=', first);
            if (eq == std::string_view::npos) throw RingFileError(source, lineno, first + 1, "binding lacks '='");
            std::string_view name = trim_right(line.substr(first + 1, eq - first - 1));
            if (!is_identifier(name)) throw RingFileError(source, lineno, first + 2, "invalid binding name");
            const std::size_t body = skip_space(line, eq + 1);
            if (body == std::string_view::npos) throw RingFileError(source, lineno, eq + 2, "binding lacks a polynomial");
            def.bindings.emplace_back(std::string(name), std::string(line.substr(body)));
            def.binding_lines.push_back(lineno);
        } else {
            if (!def.bindings.empty())
                throw RingFileError(source, lineno, first + 1, "relations must precede element bindings");
            def.relations.emplace_back(line.substr(first));
            def.relation_lines.push_back(lineno);
        }
        if (nl == text.size()) break;
    }
    if (!header) throw RingFileError(source, lineno == 0 ? 1 : lineno, 1, "missing header line 'p=<prime> vars=<names>'");
    return def;
}

RingElement LoadedRing::element(std::string_view expression) const {
    if (const auto it = elements.find(std::string(expression)); it != elements.end()) return it->second;
    return presentation.element(parse_polynomial(expression, presentation.ring));
}

LoadedRing load_ring_text(std::string_view text, const std::string& source, std::optional<std::uint32_t> p_override) {
    RingDefinition def = parse_ring_definition(text, source);
    if (p_override) {
        require_prime_modulus(*p_override);
        def.p = *p_override;
    }
    const PolynomialRing ring{def.p, def.variables};

    // Locate polynomial syntax errors by line and column. Relation and binding
    // lines were stored without leading whitespace, so the column is recomputed.
    auto column_of = [&](std::size_t lineno, const std::string& fragment, std::size_t offset) {
        std::size_t s = 0;
        for (std::size_t l = 1; l < lineno; ++l) s = text.find('\n', s) + 1;
        const std::size_t at = text.find(fragment, s);
        return (at == std::string_view::npos ? 0 : at - s) + offset + 1;
    };

    std::vector<Polynomial> relations;
    for (std::size_t i = 0; i < def.relations.size(); ++i) {
        try {
            relations.push_back(parse_polynomial(def.relations[i], ring));
        } catch (const ParseError& e) {
            throw RingFileError(source, def.relation_lines[i], column_of(def.relation_lines[i], def.relations[i], e.position()),
                                e.what());
        }
    }

    LoadedRing out{source, from_presentation(ring, relations), {}};
    for (std::size_t v = 0; v < def.variables.size(); ++v) out.elements[def.variables[v]] = out.presentation.variable(v);
    for (std::size_t i = 0; i < def.bindings.size(); ++i) {
        const auto& [name, body] = def.bindings[i];
        try {
            out.elements[name] = out.presentation.element(parse_polynomial(body, ring));
        } catch (const ParseError& e) {
            throw RingFileError(source, def.binding_lines[i], column_of(def.binding_lines[i], body, e.position()), e.what());
        }
    }
    return out;
}

LoadedRing load_ring(const std::filesystem::path& path, std::optional<std::uint32_t> p_override) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read ring file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_ring_text(buffer.str(), path.string(), p_override);
}

}  // namespace extclosure
