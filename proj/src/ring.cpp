#include "fusion/ring.hpp"

#include <sstream>

#include "fusion/errors.hpp"

namespace fusion {

std::vector<Label> Ring::fuse_support(const Label& a, const Label& b) const {
    return fuse(a, b).support();
}

std::string Ring::format_label(const Label& l) const {
    return default_label_text(l);
}

// Splits on commas at parenthesis depth 0, stripping one outer layer of
// parentheses if the whole text is wrapped in one.
std::vector<std::string> Ring::split_tuple(std::string_view text) {
    std::string s(text);
    // trim
    auto is_space = [](char c) { return c == ' ' || c == '\t'; };
    std::size_t b = 0, e = s.size();
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    s = s.substr(b, e - b);

    if (!s.empty() && s.front() == '(' && s.back() == ')') {
        int depth = 0;
        bool wraps = true;
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
            if (s[i] == '(') ++depth;
            if (s[i] == ')') --depth;
            if (depth == 0) {
                wraps = false;
                break;
            }
        }
        if (wraps) s = s.substr(1, s.size() - 2);
    }

    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    for (auto& p : parts) {
        std::size_t pb = 0, pe = p.size();
        while (pb < pe && is_space(p[pb])) ++pb;
        while (pe > pb && is_space(p[pe - 1])) --pe;
        p = p.substr(pb, pe - pb);
    }
    return parts;
}

Label Ring::parse_label(std::string_view text) const {
    std::vector<std::string> parts = split_tuple(text);
    std::size_t pos = 0;
    Label l = parse_label_parts(parts, pos);
    if (pos != parts.size()) {
        throw InvalidLabelError("trailing tokens in label '" + std::string(text) +
                                "' for ring " + id_);
    }
    return l;
}

Label Ring::parse_label_parts(const std::vector<std::string>& parts, std::size_t& pos) const {
    const std::size_t width = static_cast<std::size_t>(label_width_);
    if (parts.size() - pos < width) {
        throw InvalidLabelError("label for ring " + id_ + " needs " + std::to_string(width) +
                                " component(s)");
    }
    std::vector<std::int64_t> enc;
    enc.reserve(width);
    for (std::size_t i = 0; i < width; ++i) {
        const std::string& tok = parts[pos++];
        try {
            std::size_t used = 0;
            enc.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw InvalidLabelError("bad integer '" + tok + "' in label for ring " + id_);
        }
    }
    Label l(std::move(enc));
    check_label(l);
    return l;
}

void Ring::require_width(const Label& l) const {
    if (l.width() != static_cast<std::size_t>(label_width_)) {
        throw InvalidLabelError("label " + default_label_text(l) + " has width " +
                                std::to_string(l.width()) + ", ring " + id_ + " expects " +
                                std::to_string(label_width_));
    }
}

void Ring::bad_label(const Label& l, const std::string& why) const {
    throw InvalidLabelError("label " + default_label_text(l) + " invalid for ring " + id_ +
                            ": " + why);
}

}  // namespace fusion
