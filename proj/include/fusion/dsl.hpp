#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fusion/rings/table.hpp"

namespace fusion {

enum class Severity { Warning, Error };

struct Diagnostic {
    int line = 0;  // 0 = whole-table check, no single source line
    Severity severity = Severity::Error;
    std::string message;

    bool operator==(const Diagnostic&) const = default;
};

struct Diagnostics {
    std::vector<Diagnostic> items;

    bool has_errors() const {
        for (const auto& d : items) {
            if (d.severity == Severity::Error) return true;
        }
        return false;
    }
    void error(int line, std::string message) {
        items.push_back({line, Severity::Error, std::move(message)});
    }
    void warning(int line, std::string message) {
        items.push_back({line, Severity::Warning, std::move(message)});
    }
};

struct ParseResult {
    std::optional<FiniteRingTable> table;  // engaged iff no parse errors
    Diagnostics diagnostics;
};

/// Parses the line-oriented .ring format:
///   ring <name>
///   unit <label>
///   simple <label> <dim>
///   fuse <a> <b> = [k1] <c1> + [k2] <c2> + ...
/// '#' starts a comment; blank lines are skipped; labels match
/// [A-Za-z0-9_]+. Unit-law products are filled in automatically and a
/// one-sided fuse pair defaults to its mirror with a warning.
ParseResult parse_ring_spec(const std::string& source);

/// Exhaustive semantic validation of a parsed table: completeness, unit
/// law, full associativity, exact dimension multiplicativity. Reports
/// one diagnostic per violation with a witness pair/triple; never throws.
Diagnostics validate_table(const FiniteRingTable& table);

/// Canonical text form; re-parsing yields an identical table.
std::string serialize_ring_spec(const FiniteRingTable& table);

}  // namespace fusion
