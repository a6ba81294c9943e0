#include "fusion/dsl.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace fusion {

namespace {

bool valid_token(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                        (c >= '0' && c <= '9') || c == '_';
        if (!ok) return false;
    }
    return true;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

using FuseRow = std::vector<std::pair<std::size_t, std::int64_t>>;

std::string row_to_text(const FuseRow& row, const std::vector<std::string>& labels) {
    std::string out;
    for (std::size_t t = 0; t < row.size(); ++t) {
        if (t) out += " + ";
        if (row[t].second != 1) out += std::to_string(row[t].second) + " ";
        out += labels[row[t].first];
    }
    if (out.empty()) out = "0";
    return out;
}

}  // namespace

ParseResult parse_ring_spec(const std::string& source) {
    ParseResult result;
    Diagnostics& diag = result.diagnostics;

    std::string name;
    bool saw_ring_line = false;
    std::optional<std::pair<std::string, int>> unit_token;  // token, line
    std::vector<std::string> labels;
    std::vector<std::int64_t> dims;
    std::map<std::string, std::size_t> index;

    struct RawFuse {
        int line;
        std::string a, b;
        std::map<std::string, std::int64_t> terms;
    };
    std::vector<RawFuse> raw_fuses;
    std::map<std::pair<std::string, std::string>, int> fuse_lines_seen;

    std::istringstream in(source);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        const std::vector<std::string> tok = split_ws(raw);
        if (tok.empty()) continue;

        if (!saw_ring_line) {
            if (tok[0] != "ring" || tok.size() != 2) {
                diag.error(lineno, "first statement must be 'ring <name>'");
                return result;
            }
            if (!valid_token(tok[1])) {
                diag.error(lineno, "invalid ring name '" + tok[1] + "'");
                return result;
            }
            name = tok[1];
            saw_ring_line = true;
            continue;
        }

        if (tok[0] == "ring") {
            diag.error(lineno, "duplicate 'ring' line");
        } else if (tok[0] == "unit") {
            if (tok.size() != 2 || !valid_token(tok[1])) {
                diag.error(lineno, "expected 'unit <label>'");
            } else if (unit_token) {
                diag.error(lineno, "duplicate 'unit' line");
            } else {
                unit_token = {tok[1], lineno};
            }
        } else if (tok[0] == "simple") {
            if (tok.size() != 3 || !valid_token(tok[1])) {
                diag.error(lineno, "expected 'simple <label> <dim>'");
                continue;
            }
            if (index.count(tok[1])) {
                diag.error(lineno, "duplicate label '" + tok[1] + "'");
                continue;
            }
            std::int64_t dim = 0;
            try {
                std::size_t used = 0;
                dim = std::stoll(tok[2], &used);
                if (used != tok[2].size()) throw std::invalid_argument(tok[2]);
            } catch (const std::exception&) {
                diag.error(lineno, "bad dimension '" + tok[2] + "'");
                continue;
            }
            if (dim <= 0) {
                diag.error(lineno, "dimension must be positive");
                continue;
            }
            index[tok[1]] = labels.size();
            labels.push_back(tok[1]);
            dims.push_back(dim);
        } else if (tok[0] == "fuse") {
            // fuse <a> <b> = [k1] <c1> + [k2] <c2> + ...
            if (tok.size() < 5 || tok[3] != "=") {
                diag.error(lineno, "expected 'fuse <a> <b> = <terms>'");
                continue;
            }
            RawFuse rf{lineno, tok[1], tok[2], {}};
            bool ok = true;
            std::vector<std::vector<std::string>> term_groups{{}};
            for (std::size_t i = 4; i < tok.size(); ++i) {
                if (tok[i] == "+") {
                    term_groups.emplace_back();
                } else {
                    term_groups.back().push_back(tok[i]);
                }
            }
            for (const auto& group : term_groups) {
                std::int64_t coeff = 1;
                std::string label;
                if (group.size() == 1) {
                    label = group[0];
                } else if (group.size() == 2) {
                    try {
                        std::size_t used = 0;
                        coeff = std::stoll(group[0], &used);
                        if (used != group[0].size() || coeff <= 0) {
                            throw std::invalid_argument(group[0]);
                        }
                    } catch (const std::exception&) {
                        diag.error(lineno, "bad coefficient '" + (group.empty() ? "" : group[0]) +
                                               "' in fuse line");
                        ok = false;
                        break;
                    }
                    label = group[1];
                } else {
                    diag.error(lineno, "malformed term in fuse line");
                    ok = false;
                    break;
                }
                rf.terms[label] += coeff;
            }
            if (!ok) continue;
            const auto key = std::make_pair(rf.a, rf.b);
            if (auto it = fuse_lines_seen.find(key); it != fuse_lines_seen.end()) {
                diag.error(lineno, "duplicate fuse line for (" + rf.a + "," + rf.b +
                                       "), first given at line " + std::to_string(it->second));
                continue;
            }
            fuse_lines_seen[key] = lineno;
            raw_fuses.push_back(std::move(rf));
        } else {
            diag.error(lineno, "unknown statement '" + tok[0] + "'");
        }
    }

    if (!saw_ring_line) {
        diag.error(0, "empty input: missing 'ring <name>' line");
        return result;
    }
    if (!unit_token) {
        diag.error(0, "missing 'unit <label>' line");
    } else if (!index.count(unit_token->first)) {
        diag.error(unit_token->second, "unit label '" + unit_token->first + "' is not declared");
    }
    if (labels.empty()) {
        diag.error(0, "no 'simple' declarations");
    }

    // resolve fuse lines against the label set
    const std::size_t m = labels.size();
    std::vector<std::vector<FuseRow>> fuse_table(m, std::vector<FuseRow>(m));
    std::vector<std::vector<char>> defined(m, std::vector<char>(m, 0));
    std::vector<std::vector<int>> source_line(m, std::vector<int>(m, 0));
    for (const RawFuse& rf : raw_fuses) {
        bool ok = true;
        for (const std::string& t : {rf.a, rf.b}) {
            if (!index.count(t)) {
                diag.error(rf.line, "unknown label '" + t + "' in fuse line");
                ok = false;
            }
        }
        for (const auto& [t, coeff] : rf.terms) {
            if (!index.count(t)) {
                diag.error(rf.line, "unknown label '" + t + "' in fuse line");
                ok = false;
            }
        }
        if (!ok) continue;
        const std::size_t i = index[rf.a], j = index[rf.b];
        FuseRow row;
        for (const auto& [t, coeff] : rf.terms) row.emplace_back(index[t], coeff);
        std::sort(row.begin(), row.end());
        fuse_table[i][j] = std::move(row);
        defined[i][j] = 1;
        source_line[i][j] = rf.line;
    }

    if (diag.has_errors()) return result;

    const std::size_t unit = index[unit_token->first];

    // auto-fill unit-law products; explicit lines must agree
    for (std::size_t i = 0; i < m; ++i) {
        const FuseRow expected{{i, 1}};
        for (const auto& [a, b] : {std::make_pair(unit, i), std::make_pair(i, unit)}) {
            if (defined[a][b]) {
                if (fuse_table[a][b] != expected) {
                    diag.error(source_line[a][b],
                               "fuse (" + labels[a] + "," + labels[b] +
                                   ") contradicts the unit law; must equal " + labels[i]);
                }
            } else {
                fuse_table[a][b] = expected;
                defined[a][b] = 1;
            }
        }
    }

    // one-sided pairs default to their mirror, with a warning
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (defined[i][j] && !defined[j][i]) {
                diag.warning(source_line[i][j],
                             "fuse (" + labels[j] + "," + labels[i] +
                                 ") not given; defaulting to fuse (" + labels[i] + "," +
                                 labels[j] + ")");
                fuse_table[j][i] = fuse_table[i][j];
                defined[j][i] = 1;
                source_line[j][i] = source_line[i][j];
            }
        }
    }

    if (diag.has_errors()) return result;

    FiniteRingTable table;
    table.name = name;
    table.labels = labels;
    table.dims = dims;
    table.unit_index = unit;
    table.fuse_table = std::move(fuse_table);
    table.defined = std::move(defined);
    result.table = std::move(table);
    return result;
}

Diagnostics validate_table(const FiniteRingTable& t) {
    Diagnostics diag;
    const std::size_t m = t.size();
    const auto& L = t.labels;

    if (t.unit_index >= m) {
        diag.error(0, "unit index outside the label table");
        return diag;
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (t.dims[i] <= 0) {
            diag.error(0, "dimension of '" + L[i] + "' must be positive");
        }
    }

    auto defined = [&](std::size_t i, std::size_t j) {
        return i < t.defined.size() && j < t.defined[i].size() && t.defined[i][j];
    };

    // completeness
    bool all_defined = true;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (!defined(i, j)) {
                diag.error(0, "fusion product undefined for (" + L[i] + "," + L[j] + ")");
                all_defined = false;
            }
        }
    }
    if (!all_defined) return diag;

    // unit law
    const std::size_t e = t.unit_index;
    for (std::size_t i = 0; i < m; ++i) {
        const FuseRow expected{{i, 1}};
        if (t.fuse_table[e][i] != expected) {
            diag.error(0, "unit law fails at (" + L[e] + "," + L[i] + ")");
        }
        if (t.fuse_table[i][e] != expected) {
            diag.error(0, "unit law fails at (" + L[i] + "," + L[e] + ")");
        }
    }

    // exact dimension multiplicativity, every ordered pair
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            std::int64_t total = 0;
            for (const auto& [k, mult] : t.fuse_table[i][j]) {
                total += mult * t.dims[k];
            }
            const std::int64_t want = t.dims[i] * t.dims[j];
            if (total != want) {
                diag.error(0, "dimension multiplicativity fails at (" + L[i] + "," + L[j] +
                                  "): " + std::to_string(t.dims[i]) + "*" +
                                  std::to_string(t.dims[j]) + " != " + std::to_string(total));
            }
        }
    }

    // full associativity over all ordered triples
    auto fuse_into = [&](std::size_t i, std::size_t j, std::int64_t coeff,
                         std::vector<std::int64_t>& acc) {
        for (const auto& [k, mult] : t.fuse_table[i][j]) acc[k] += coeff * mult;
    };
    std::vector<std::int64_t> lhs(m), rhs(m);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            for (std::size_t c = 0; c < m; ++c) {
                std::fill(lhs.begin(), lhs.end(), 0);
                std::fill(rhs.begin(), rhs.end(), 0);
                for (const auto& [k, mult] : t.fuse_table[a][b]) fuse_into(k, c, mult, lhs);
                for (const auto& [k, mult] : t.fuse_table[b][c]) fuse_into(a, k, mult, rhs);
                if (lhs != rhs) {
                    diag.error(0, "associativity fails at (" + L[a] + "," + L[b] + "," + L[c] +
                                      "): (" + L[a] + "*" + L[b] + ")*" + L[c] +
                                      " differs from " + L[a] + "*(" + L[b] + "*" + L[c] + ")");
                }
            }
        }
    }
    return diag;
}

std::string serialize_ring_spec(const FiniteRingTable& t) {
    std::ostringstream out;
    out << "ring " << t.name << "\n";
    out << "unit " << t.labels[t.unit_index] << "\n";
    for (std::size_t i = 0; i < t.size(); ++i) {
        out << "simple " << t.labels[i] << " " << t.dims[i] << "\n";
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t j = 0; j < t.size(); ++j) {
            if (i == t.unit_index || j == t.unit_index) continue;
            if (i < t.defined.size() && j < t.defined[i].size() && !t.defined[i][j]) continue;
            out << "fuse " << t.labels[i] << " " << t.labels[j] << " = "
                << row_to_text(t.fuse_table[i][j], t.labels) << "\n";
        }
    }
    return out.str();
}

}  // namespace fusion
