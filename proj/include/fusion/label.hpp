#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace fusion {

/// Canonical encoding of a simple object of a fusion ring. The meaning of
/// the entries is ring-specific (a spin, a partition, an exponent vector,
/// an index into a finite table); equality and ordering are plain
/// lexicographic comparison of the encodings. All labels of one ring
/// instance share the same encoding width.
class Label {
public:
    Label() = default;
    explicit Label(std::vector<std::int64_t> enc) : enc_(std::move(enc)) {}
    Label(std::initializer_list<std::int64_t> enc) : enc_(enc) {}

    const std::vector<std::int64_t>& enc() const { return enc_; }
    std::size_t width() const { return enc_.size(); }
    std::int64_t operator[](std::size_t i) const { return enc_[i]; }

    auto operator<=>(const Label&) const = default;

private:
    std::vector<std::int64_t> enc_;
};

struct LabelHash {
    std::size_t operator()(const Label& l) const {
        // FNV-1a over the encoding words
        std::uint64_t h = 1469598103934665603ull;
        for (std::int64_t v : l.enc()) {
            h ^= static_cast<std::uint64_t>(v);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

/// "(a,b,c)" for multi-word encodings, "a" for single-word ones.
std::string default_label_text(const Label& l);

}  // namespace fusion
