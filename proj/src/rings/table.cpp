#include "fusion/rings/table.hpp"

#include "fusion/errors.hpp"

namespace fusion {

TableRing::TableRing(FiniteRingTable table)
    : Ring("dsl:" + table.name, 1), table_(std::move(table)) {
    if (!table_.complete()) {
        throw ConfigError("fusion table '" + table_.name + "' has undefined products");
    }
    for (std::size_t i = 0; i < table_.labels.size(); ++i) index_[table_.labels[i]] = i;
}

std::string TableRing::description() const {
    return "finite fusion ring '" + table_.name + "' with " + std::to_string(table_.size()) +
           " simple(s)";
}

void TableRing::check_label(const Label& l) const {
    require_width(l);
    if (l[0] < 0 || static_cast<std::size_t>(l[0]) >= table_.size()) {
        bad_label(l, "index outside the label table");
    }
}

Element TableRing::fuse(const Label& a, const Label& b) const {
    check_label(a);
    check_label(b);
    Element out(this);
    const auto& row = table_.fuse_table[static_cast<std::size_t>(a[0])]
                                       [static_cast<std::size_t>(b[0])];
    for (const auto& [target, mult] : row) {
        out.add(Label{static_cast<std::int64_t>(target)}, mult);
    }
    return out;
}

BigInt TableRing::dim(const Label& l) const {
    check_label(l);
    return table_.dims[static_cast<std::size_t>(l[0])];
}

Label TableRing::random_label(std::mt19937_64& rng, int) const {
    std::uniform_int_distribution<std::int64_t> idx(0, static_cast<std::int64_t>(table_.size()) - 1);
    return Label{idx(rng)};
}

std::string TableRing::format_label(const Label& l) const {
    if (l.width() != 1 || l[0] < 0 || static_cast<std::size_t>(l[0]) >= table_.size()) {
        return default_label_text(l);
    }
    return table_.labels[static_cast<std::size_t>(l[0])];
}

Label TableRing::parse_label_parts(const std::vector<std::string>& parts,
                                   std::size_t& pos) const {
    if (pos >= parts.size()) {
        throw InvalidLabelError("missing label token for ring " + id());
    }
    const std::string& tok = parts[pos];
    auto it = index_.find(tok);
    if (it == index_.end()) {
        throw InvalidLabelError("unknown label '" + tok + "' in ring " + id());
    }
    ++pos;
    return Label{static_cast<std::int64_t>(it->second)};
}

}  // namespace fusion
