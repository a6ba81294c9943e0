#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fusion/catalog.hpp"
#include "fusion/dsl.hpp"
#include "fusion/errors.hpp"
#include "fusion/gk.hpp"
#include "fusion/growth.hpp"
#include "fusion/iso.hpp"
#include "fusion/ops.hpp"
#include "fusion/seriesio.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;  // also I/O
constexpr int kExitRingError = 2;
constexpr int kExitInconclusive = 3;

// Splits on ';' and ',' at parenthesis depth 0.
std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if ((c == ';' || c == ',') && depth == 0) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

fusion::SupportSet parse_generators(const fusion::Ring& ring, const std::string& text) {
    std::vector<fusion::Label> labels;
    for (const std::string& tok : split_list(text)) {
        labels.push_back(ring.parse_label(tok));
    }
    if (labels.empty()) throw fusion::ConfigError("empty generator list");
    return fusion::SupportSet::of(&ring, std::move(labels));
}

fusion::Element parse_element(const fusion::Ring& ring, const std::string& text) {
    fusion::Element out(&ring);
    for (const std::string& tok : split_list(text)) {
        std::int64_t mult = 1;
        std::string label_text = tok;
        if (auto colon = tok.rfind(':'); colon != std::string::npos) {
            label_text = tok.substr(0, colon);
            try {
                mult = std::stoll(tok.substr(colon + 1));
            } catch (const std::exception&) {
                throw fusion::ConfigError("bad multiplicity in element term '" + tok + "'");
            }
            if (mult <= 0) throw fusion::ConfigError("multiplicity must be positive in '" + tok + "'");
        }
        out.add(ring.parse_label(label_text), mult);
    }
    if (out.empty()) throw fusion::ConfigError("empty element");
    return out;
}

int resolve_threads(int flag_value) {
    if (const char* env = std::getenv("FUSION_THREADS")) {
        try {
            const int v = std::stoi(env);
            if (v >= 1) return v;
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring unparsable FUSION_THREADS='" << env << "'\n";
    }
    return flag_value;
}

int write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return kExitOk;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file '" << path << "'\n";
        return kExitUsage;
    }
    out << content;
    return out ? kExitOk : kExitUsage;
}

std::string format_element(const fusion::Ring& ring, const fusion::Element& e) {
    std::string out;
    for (const auto& [label, mult] : e.terms()) {
        if (!out.empty()) out += " + ";
        if (mult != 1) out += mult.str() + " ";
        out += ring.format_label(label);
    }
    return out;
}

struct SeriesArgs {
    std::string ring_id;
    std::string gens;
    int steps = 16;
    std::string format = "csv";
    std::string out = "-";
    int threads = 1;
    bool strict_unit = false;
};

int run_series(const SeriesArgs& args) {
    auto ring = fusion::make_ring(args.ring_id);
    const fusion::SupportSet gens = parse_generators(*ring, args.gens);
    fusion::GrowthOptions opts;
    opts.threads = resolve_threads(args.threads);
    opts.strict_unit = args.strict_unit;
    const fusion::GrowthSeries series = fusion::growth_series(*ring, gens, args.steps, opts);
    if (series.unit_adjoined) {
        std::cerr << "warning: unit adjoined to the generator set\n";
    }
    const std::string text = args.format == "json" ? fusion::series_to_json(*ring, series)
                                                   : fusion::series_to_csv(series);
    return write_output(args.out, text);
}

int run_gkdim(const SeriesArgs& args) {
    auto ring = fusion::make_ring(args.ring_id);
    const fusion::SupportSet gens = parse_generators(*ring, args.gens);
    fusion::GrowthOptions opts;
    opts.threads = resolve_threads(args.threads);
    opts.strict_unit = args.strict_unit;
    const fusion::GrowthSeries series = fusion::growth_series(*ring, gens, args.steps, opts);
    if (series.unit_adjoined) {
        std::cerr << "warning: unit adjoined to the generator set\n";
    }
    const fusion::GKEstimate est = fusion::estimate_gkdim(series);

    nlohmann::ordered_json doc;
    doc["classification"] = fusion::to_string(est.classification);
    if (est.classification == fusion::GrowthClass::Polynomial) doc["degree"] = est.degree;
    if (est.classification == fusion::GrowthClass::Exponential) doc["rate"] = est.rate;
    doc["doubling_exponents"] = est.doubling_exponents;
    doc["n_max"] = args.steps;
    const int code = write_output(args.out, doc.dump(2) + "\n");
    if (code != kExitOk) return code;
    return est.classification == fusion::GrowthClass::Inconclusive ? kExitInconclusive : kExitOk;
}

int run_validate(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return kExitUsage;
    }
    std::string source((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) {
        std::cerr << "error: failed reading '" << path << "'\n";
        return kExitUsage;
    }

    fusion::ParseResult parsed = fusion::parse_ring_spec(source);
    fusion::Diagnostics all = parsed.diagnostics;
    if (parsed.table) {
        fusion::Diagnostics semantic = fusion::validate_table(*parsed.table);
        all.items.insert(all.items.end(), semantic.items.begin(), semantic.items.end());
    }
    for (const fusion::Diagnostic& d : all.items) {
        std::cout << (d.severity == fusion::Severity::Error ? "error" : "warning");
        if (d.line > 0) std::cout << ": line " << d.line;
        std::cout << ": " << d.message << "\n";
    }
    if (all.has_errors()) return kExitRingError;
    std::cout << "ok: ring '" << parsed.table->name << "' with " << parsed.table->size()
              << " simple(s) validates\n";
    return kExitOk;
}

struct WitnessArgs {
    std::string ring_a;
    std::string ring_b;
    std::string map_text;
    std::string x_text;
    int depth = 8;
    std::string out = "-";
};

int run_witness(const WitnessArgs& args) {
    auto ring_a = fusion::make_ring(args.ring_a);
    auto ring_b = fusion::make_ring(args.ring_b);

    fusion::IsoMap gen_map;
    for (const std::string& entry : split_list(args.map_text)) {
        int depth = 0;
        std::size_t eq = std::string::npos;
        for (std::size_t i = 0; i < entry.size(); ++i) {
            if (entry[i] == '(') ++depth;
            if (entry[i] == ')') --depth;
            if (entry[i] == '=' && depth == 0) {
                eq = i;
                break;
            }
        }
        if (eq == std::string::npos) {
            throw fusion::ConfigError("map entry '" + entry + "' must look like <a>=<b>");
        }
        gen_map.forward[ring_a->parse_label(entry.substr(0, eq))] =
            ring_b->parse_label(entry.substr(eq + 1));
    }
    if (gen_map.forward.empty()) throw fusion::ConfigError("empty generator map");

    std::optional<fusion::WitnessCertificate> cert;
    if (!args.x_text.empty()) {
        const fusion::Element x = parse_element(*ring_a, args.x_text);
        cert = fusion::infinite_growth_witness(*ring_a, *ring_b, gen_map, x, args.depth);
    } else {
        cert = fusion::scan_growth_witness(*ring_a, *ring_b, gen_map, args.depth);
    }

    if (!cert) return write_output(args.out, "none\n");
    nlohmann::ordered_json doc;
    doc["witness"] = format_element(*ring_a, cert->witness);
    doc["dim_x"] = cert->dim_x.str();
    doc["dim_fx"] = cert->dim_fx.str();
    doc["ratio"] = cert->ratio;
    doc["bound"] = cert->bound;
    return write_output(args.out, doc.dump(2) + "\n");
}

int run_rings() {
    for (const auto& entry : fusion::catalog_entries()) {
        std::cout << entry.pattern << "\n    " << entry.summary << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tensor-power growth in fusion rings with integer dimension functions"};
    app.require_subcommand(1);

    SeriesArgs series_args;
    CLI::App* series = app.add_subcommand(
        "series", "Print the growth series (n, |F_n|, dim V^n) for a generator set");
    series->add_option("--ring", series_args.ring_id, "ring id (see 'rings')")->required();
    series->add_option("--gens", series_args.gens,
                       "generator labels, ';'-separated (',' also splits outside parens)")
        ->required();
    series->add_option("--steps", series_args.steps, "number of tensor powers")
        ->required()
        ->check(CLI::PositiveNumber);
    series->add_option("--format", series_args.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    series->add_option("--out", series_args.out, "output path ('-' = stdout)");
    series->add_option("--threads", series_args.threads,
                       "worker threads (FUSION_THREADS overrides)")
        ->check(CLI::PositiveNumber);
    series->add_flag("--strict-unit", series_args.strict_unit,
                     "error out instead of adjoining a missing unit generator");

    SeriesArgs gkdim_args;
    CLI::App* gkdim = app.add_subcommand(
        "gkdim", "Estimate the growth class and degree/rate from N = 2^k tensor powers");
    gkdim->add_option("--ring", gkdim_args.ring_id, "ring id (see 'rings')")->required();
    gkdim->add_option("--gens", gkdim_args.gens, "generator labels, ';'-separated")->required();
    gkdim->add_option("--steps", gkdim_args.steps, "number of tensor powers (power of two >= 16)")
        ->required()
        ->check(CLI::PositiveNumber);
    gkdim->add_option("--out", gkdim_args.out, "output path ('-' = stdout)");
    gkdim->add_option("--threads", gkdim_args.threads,
                      "worker threads (FUSION_THREADS overrides)")
        ->check(CLI::PositiveNumber);
    gkdim->add_flag("--strict-unit", gkdim_args.strict_unit,
                    "error out instead of adjoining a missing unit generator");

    std::string validate_path;
    CLI::App* validate = app.add_subcommand("validate", "Validate a .ring fusion-table file");
    validate->add_option("path", validate_path, "path to the .ring file")->required();

    WitnessArgs witness_args;
    CLI::App* witness = app.add_subcommand(
        "witness", "Search for an infinite-growth witness between two rings");
    witness->add_option("--a", witness_args.ring_a, "source ring id")->required();
    witness->add_option("--b", witness_args.ring_b, "target ring id")->required();
    witness->add_option("--map", witness_args.map_text,
                        "generator map '<a>=<b>;...' in the rings' label syntax")
        ->required();
    witness->add_option("--x", witness_args.x_text,
                        "class to test, 'label[:mult];...' (default: scan mapped labels)");
    witness->add_option("--depth", witness_args.depth, "fusion-step extension depth")
        ->check(CLI::PositiveNumber);
    witness->add_option("--out", witness_args.out, "output path ('-' = stdout)");

    CLI::App* rings = app.add_subcommand("rings", "List catalog ring identifiers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (series->parsed()) return run_series(series_args);
        if (gkdim->parsed()) {
            const int n = gkdim_args.steps;
            if (n < 16 || (n & (n - 1)) != 0) {
                std::cerr << "error: gkdim needs --steps a power of two >= 16\n";
                return kExitUsage;
            }
            return run_gkdim(gkdim_args);
        }
        if (validate->parsed()) return run_validate(validate_path);
        if (witness->parsed()) return run_witness(witness_args);
        if (rings->parsed()) return run_rings();
    } catch (const fusion::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRingError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRingError;
    }
    return kExitUsage;
}
