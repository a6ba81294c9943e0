#pragma once

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "fusion/bigint.hpp"
#include "fusion/element.hpp"
#include "fusion/label.hpp"
#include "fusion/support.hpp"

namespace fusion {

/// Exact per-step growth counts, for rings that can produce them without
/// enumerating supports. Index i holds the values for n = i+1.
struct GrowthCounts {
    std::vector<BigInt> support_sizes;
    std::vector<BigInt> dims;
};

/// A measured Grothendieck semiring: a basis fusion oracle together with
/// an integer dimension function and a unit label.
///
/// Contract (sample-tested by the axiom suite):
///   dim(unit) == 1, fuse(unit,a) == fuse(a,unit) == {a:1},
///   sum_c mult_c(fuse(a,b)) * dim(c) == dim(a) * dim(b),
///   fuse associative as extended bilinearly to elements.
/// Fusion is never assumed commutative; callers preserve operand order.
class Ring {
public:
    Ring(std::string id, int label_width)
        : id_(std::move(id)), label_width_(label_width) {}
    virtual ~Ring() = default;

    Ring(const Ring&) = delete;
    Ring& operator=(const Ring&) = delete;

    const std::string& id() const { return id_; }
    int label_width() const { return label_width_; }
    virtual std::string description() const { return id_; }

    virtual Label unit() const = 0;

    /// Throws InvalidLabelError unless l is a canonical label of this ring.
    virtual void check_label(const Label& l) const = 0;

    virtual Element fuse(const Label& a, const Label& b) const = 0;

    /// Support of fuse(a,b), without materializing multiplicities.
    virtual std::vector<Label> fuse_support(const Label& a, const Label& b) const;

    virtual BigInt dim(const Label& l) const = 0;

    /// Exact growth counts when the ring can compute them directly;
    /// std::nullopt routes callers to the generic support enumeration.
    virtual std::optional<GrowthCounts> try_count_growth(const SupportSet& generators,
                                                         int steps) const {
        (void)generators;
        (void)steps;
        return std::nullopt;
    }

    /// Uniform-ish random canonical label with encoding entries bounded by
    /// `magnitude`; used by the randomized axiom suites.
    virtual Label random_label(std::mt19937_64& rng, int magnitude) const = 0;

    // -- label text I/O ------------------------------------------------
    // Width-1 labels read/print as a bare token; wider ones as a
    // parenthesized comma-separated tuple. Product rings concatenate the
    // component syntaxes into one flat tuple.

    virtual std::string format_label(const Label& l) const;

    virtual Label parse_label(std::string_view text) const;

    /// Consumes label_width() tokens from parts[pos...] and advances pos.
    virtual Label parse_label_parts(const std::vector<std::string>& parts,
                                    std::size_t& pos) const;

    /// Splits "(a,b,...)" (or "a,b,...") into trimmed tokens, honoring
    /// nested parentheses.
    static std::vector<std::string> split_tuple(std::string_view text);

protected:
    void require_width(const Label& l) const;
    [[noreturn]] void bad_label(const Label& l, const std::string& why) const;

private:
    std::string id_;
    int label_width_;
};

}  // namespace fusion
