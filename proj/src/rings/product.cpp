#include "fusion/rings/product.hpp"

#include "fusion/errors.hpp"

namespace fusion {

ProductRing::ProductRing(std::shared_ptr<const Ring> left, std::shared_ptr<const Ring> right)
    : Ring("product:" + left->id() + "," + right->id(),
           left->label_width() + right->label_width()),
      left_(std::move(left)),
      right_(std::move(right)) {}

std::string ProductRing::description() const {
    return "product ring of [" + left_->id() + "] and [" + right_->id() + "]";
}

Label ProductRing::combine(const Label& a, const Label& b) const {
    std::vector<std::int64_t> enc;
    enc.reserve(a.width() + b.width());
    enc.insert(enc.end(), a.enc().begin(), a.enc().end());
    enc.insert(enc.end(), b.enc().begin(), b.enc().end());
    return Label(std::move(enc));
}

std::pair<Label, Label> ProductRing::split(const Label& l) const {
    const auto lw = static_cast<std::size_t>(left_->label_width());
    std::vector<std::int64_t> a(l.enc().begin(), l.enc().begin() + static_cast<std::ptrdiff_t>(lw));
    std::vector<std::int64_t> b(l.enc().begin() + static_cast<std::ptrdiff_t>(lw), l.enc().end());
    return {Label(std::move(a)), Label(std::move(b))};
}

Label ProductRing::unit() const { return combine(left_->unit(), right_->unit()); }

void ProductRing::check_label(const Label& l) const {
    require_width(l);
    auto [a, b] = split(l);
    left_->check_label(a);
    right_->check_label(b);
}

Element ProductRing::fuse(const Label& x, const Label& y) const {
    check_label(x);
    check_label(y);
    auto [xa, xb] = split(x);
    auto [ya, yb] = split(y);
    const Element ea = left_->fuse(xa, ya);
    const Element eb = right_->fuse(xb, yb);
    Element out(this);
    for (const auto& [la, ma] : ea.terms()) {
        for (const auto& [lb, mb] : eb.terms()) {
            out.add(combine(la, lb), ma * mb);
        }
    }
    return out;
}

std::vector<Label> ProductRing::fuse_support(const Label& x, const Label& y) const {
    check_label(x);
    check_label(y);
    auto [xa, xb] = split(x);
    auto [ya, yb] = split(y);
    const std::vector<Label> sa = left_->fuse_support(xa, ya);
    const std::vector<Label> sb = right_->fuse_support(xb, yb);
    std::vector<Label> out;
    out.reserve(sa.size() * sb.size());
    for (const Label& la : sa) {
        for (const Label& lb : sb) out.push_back(combine(la, lb));
    }
    return out;
}

BigInt ProductRing::dim(const Label& l) const {
    check_label(l);
    auto [a, b] = split(l);
    return left_->dim(a) * right_->dim(b);
}

Label ProductRing::random_label(std::mt19937_64& rng, int magnitude) const {
    return combine(left_->random_label(rng, magnitude), right_->random_label(rng, magnitude));
}

std::string ProductRing::format_label(const Label& l) const {
    auto [a, b] = split(l);
    return "(" + left_->format_label(a) + "," + right_->format_label(b) + ")";
}

namespace {

// Accepts either flat tokens ("1,0,2") or a nested parenthesized tuple
// ("(1,0)") for one component.
Label consume_component(const Ring& ring, const std::vector<std::string>& parts,
                        std::size_t& pos) {
    if (pos < parts.size() && !parts[pos].empty() && parts[pos].front() == '(') {
        Label l = ring.parse_label(parts[pos]);
        ++pos;
        return l;
    }
    return ring.parse_label_parts(parts, pos);
}

}  // namespace

Label ProductRing::parse_label_parts(const std::vector<std::string>& parts,
                                     std::size_t& pos) const {
    const Label a = consume_component(*left_, parts, pos);
    const Label b = consume_component(*right_, parts, pos);
    return combine(a, b);
}

}  // namespace fusion
