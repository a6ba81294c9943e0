#pragma once

#include <memory>

#include "fusion/ring.hpp"

namespace fusion {

/// Componentwise product of two measured semirings: labels are pairs
/// (encoded as the concatenation of the component encodings), fusion is
/// componentwise, dimensions multiply.
class ProductRing : public Ring {
public:
    ProductRing(std::shared_ptr<const Ring> left, std::shared_ptr<const Ring> right);

    const Ring& left() const { return *left_; }
    const Ring& right() const { return *right_; }

    std::string description() const override;
    Label unit() const override;
    void check_label(const Label& l) const override;
    Element fuse(const Label& a, const Label& b) const override;
    std::vector<Label> fuse_support(const Label& a, const Label& b) const override;
    BigInt dim(const Label& l) const override;
    Label random_label(std::mt19937_64& rng, int magnitude) const override;

    std::string format_label(const Label& l) const override;
    Label parse_label_parts(const std::vector<std::string>& parts,
                            std::size_t& pos) const override;

    Label combine(const Label& a, const Label& b) const;
    std::pair<Label, Label> split(const Label& l) const;

private:
    std::shared_ptr<const Ring> left_;
    std::shared_ptr<const Ring> right_;
};

}  // namespace fusion
