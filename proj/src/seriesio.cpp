#include "fusion/seriesio.hpp"

#include <array>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "fusion/errors.hpp"

namespace fusion {

std::string format_log2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string series_to_csv(const GrowthSeries& s) {
    std::string out = "n,support_size,dim_vn,log2_dim_vn\n";
    for (const GrowthRecord& r : s.records) {
        out += std::to_string(r.n);
        out += ',';
        out += r.support_size.str();
        out += ',';
        out += r.dim.str();
        out += ',';
        out += format_log2(r.log2_dim);
        out += '\n';
    }
    return out;
}

std::string series_to_json(const Ring& ring, const GrowthSeries& s) {
    nlohmann::ordered_json doc;
    doc["ring"] = s.ring_id;
    auto gens = nlohmann::ordered_json::array();
    for (const Label& l : s.generators) gens.push_back(ring.format_label(l));
    doc["generators"] = std::move(gens);
    doc["unit_adjoined"] = s.unit_adjoined;
    auto records = nlohmann::ordered_json::array();
    for (const GrowthRecord& r : s.records) {
        nlohmann::ordered_json rec;
        rec["n"] = r.n;
        rec["support_size"] = r.support_size.str();
        rec["dim_vn"] = r.dim.str();
        rec["log2_dim_vn"] = format_log2(r.log2_dim);
        records.push_back(std::move(rec));
    }
    doc["records"] = std::move(records);
    return doc.dump(2) + "\n";
}

namespace {

GrowthRecord record_from_fields(int n, const std::string& support, const std::string& dim) {
    GrowthRecord rec;
    rec.n = n;
    try {
        rec.support_size = BigInt(support);
        rec.dim = BigInt(dim);
    } catch (const std::exception&) {
        throw Error("growth record " + std::to_string(n) + " has non-integer fields");
    }
    rec.log2_dim = log2_of(rec.dim);
    return rec;
}

}  // namespace

GrowthSeries series_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "n,support_size,dim_vn,log2_dim_vn") {
        throw Error("bad growth CSV header");
    }
    GrowthSeries s;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::array<std::string, 4> field;
        std::size_t start = 0, idx = 0;
        for (std::size_t i = 0; i <= line.size(); ++i) {
            if (i == line.size() || line[i] == ',') {
                if (idx >= field.size()) throw Error("bad growth CSV row: " + line);
                field[idx++] = line.substr(start, i - start);
                start = i + 1;
            }
        }
        if (idx != 4) throw Error("bad growth CSV row: " + line);
        int n = 0;
        try {
            n = std::stoi(field[0]);
        } catch (const std::exception&) {
            throw Error("bad growth CSV row: " + line);
        }
        s.records.push_back(record_from_fields(n, field[1], field[2]));
    }
    return s;
}

GrowthSeries series_from_json(const Ring& ring, const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw Error(std::string("bad growth JSON: ") + e.what());
    }
    GrowthSeries s;
    try {
        s.ring_id = doc.at("ring").get<std::string>();
        s.unit_adjoined = doc.at("unit_adjoined").get<bool>();
        std::vector<Label> gens;
        for (const auto& g : doc.at("generators")) {
            gens.push_back(ring.parse_label(g.get<std::string>()));
        }
        s.generators = SupportSet::of(&ring, std::move(gens));
        for (const auto& rec : doc.at("records")) {
            s.records.push_back(record_from_fields(rec.at("n").get<int>(),
                                                   rec.at("support_size").get<std::string>(),
                                                   rec.at("dim_vn").get<std::string>()));
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("bad growth JSON: ") + e.what());
    }
    return s;
}

}  // namespace fusion
