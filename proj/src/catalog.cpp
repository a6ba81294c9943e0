#include "fusion/catalog.hpp"

#include <fstream>
#include <sstream>

#include "fusion/dsl.hpp"
#include "fusion/errors.hpp"
#include "fusion/rings/deformed.hpp"
#include "fusion/rings/gl2.hpp"
#include "fusion/rings/product.hpp"
#include "fusion/rings/sl2.hpp"
#include "fusion/rings/sln.hpp"
#include "fusion/rings/table.hpp"
#include "fusion/rings/torus.hpp"

namespace fusion {

namespace {

std::int64_t parse_param(const std::string& id, const std::string& text) {
    try {
        std::size_t used = 0;
        const std::int64_t v = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("bad numeric parameter in ring id '" + id + "'");
    }
}

// Splits "a,b" at the top-level comma; component ids may themselves be
// product:..., so commas inside a nested product are skipped by
// tracking the "product:" prefix depth.
std::pair<std::string, std::string> split_product_ids(const std::string& id,
                                                      const std::string& rest) {
    int pending = 0;
    for (std::size_t i = 0; i < rest.size(); ++i) {
        if (rest.compare(i, 8, "product:") == 0) ++pending;
        if (rest[i] == ',') {
            if (pending == 0) return {rest.substr(0, i), rest.substr(i + 1)};
            --pending;
        }
    }
    throw ConfigError("product ring id '" + id + "' needs two comma-separated component ids");
}

}  // namespace

std::shared_ptr<const Ring> make_ring(const std::string& id) {
    if (id == "sl2") return std::make_shared<SL2Ring>();
    if (id == "gl2") return std::make_shared<GL2Ring>();
    if (id.rfind("torus:", 0) == 0) {
        const std::int64_t r = parse_param(id, id.substr(6));
        if (r < 1 || r > 64) throw ConfigError("torus rank must be in 1..64");
        return std::make_shared<TorusRing>(static_cast<int>(r));
    }
    if (id.rfind("sln:", 0) == 0) {
        const std::int64_t n = parse_param(id, id.substr(4));
        if (n < 2 || n > 64) throw ConfigError("sln rank parameter must be in 2..64");
        return std::make_shared<SLnRing>(static_cast<int>(n));
    }
    if (id.rfind("be:", 0) == 0) {
        return std::make_shared<DeformedSL2Ring>(parse_param(id, id.substr(3)));
    }
    if (id.rfind("gef:", 0) == 0) {
        return std::make_shared<DeformedGL2Ring>(parse_param(id, id.substr(4)));
    }
    if (id.rfind("product:", 0) == 0) {
        auto [left_id, right_id] = split_product_ids(id, id.substr(8));
        return std::make_shared<ProductRing>(make_ring(left_id), make_ring(right_id));
    }
    if (id.rfind("dsl:", 0) == 0) {
        const std::string path = id.substr(4);
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot open ring file '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        ParseResult parsed = parse_ring_spec(buf.str());
        if (!parsed.table) {
            throw ConfigError("ring file '" + path + "' has parse errors; run 'validate' for details");
        }
        if (validate_table(*parsed.table).has_errors()) {
            throw ConfigError("ring file '" + path +
                              "' fails validation; run 'validate' for details");
        }
        return std::make_shared<TableRing>(std::move(*parsed.table));
    }
    throw ConfigError("unknown ring id '" + id + "'");
}

std::vector<CatalogEntry> catalog_entries() {
    return {
        {"torus:<r>", "rank-r torus character ring (integer vectors, dim 1)"},
        {"sl2", "SL(2) spins with the Clebsch-Gordan rule, dim k+1"},
        {"gl2", "GL(2) labels (spin, det power), dim spin+1"},
        {"sln:<n>", "SL(n) partitions, Littlewood-Richardson rule, Weyl dims"},
        {"be:<d>", "SL(2) fusion with quantum-integer dims, fundamental dim d >= 2"},
        {"gef:<d>", "GL(2) fusion with quantum-integer dims, fundamental dim d >= 2"},
        {"product:<id>,<id>", "componentwise product of two catalog rings"},
        {"dsl:<path>", "finite fusion ring loaded from a .ring file"},
    };
}

}  // namespace fusion
