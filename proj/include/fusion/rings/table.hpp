#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fusion/ring.hpp"

namespace fusion {

/// Fully tabulated finite fusion ring, produced by the .ring parser.
/// Labels are indices into `labels`; `fuse_table[i][j]` lists
/// (target index, multiplicity) pairs sorted by target.
struct FiniteRingTable {
    std::string name;
    std::vector<std::string> labels;
    std::vector<std::int64_t> dims;
    std::size_t unit_index = 0;
    std::vector<std::vector<std::vector<std::pair<std::size_t, std::int64_t>>>> fuse_table;
    std::vector<std::vector<char>> defined;  // parallel to fuse_table

    std::size_t size() const { return labels.size(); }
    bool complete() const {
        for (const auto& row : defined) {
            for (char d : row) {
                if (!d) return false;
            }
        }
        return true;
    }
    bool operator==(const FiniteRingTable&) const = default;
};

class TableRing : public Ring {
public:
    explicit TableRing(FiniteRingTable table);

    const FiniteRingTable& table() const { return table_; }

    std::string description() const override;
    Label unit() const override { return Label{static_cast<std::int64_t>(table_.unit_index)}; }
    void check_label(const Label& l) const override;
    Element fuse(const Label& a, const Label& b) const override;
    BigInt dim(const Label& l) const override;
    Label random_label(std::mt19937_64& rng, int magnitude) const override;

    std::string format_label(const Label& l) const override;
    Label parse_label_parts(const std::vector<std::string>& parts,
                            std::size_t& pos) const override;

private:
    FiniteRingTable table_;
    std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace fusion
