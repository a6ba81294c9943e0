#include "fusion/iso.hpp"

#include <algorithm>
#include <set>

#include "fusion/errors.hpp"
#include "fusion/ops.hpp"

namespace fusion {

namespace {

std::string pair_text(const Ring& a, const Label& x, const Label& y) {
    return "(" + a.format_label(x) + "," + a.format_label(y) + ")";
}

// Shared breadth-first extension. Every fused pair of mapped labels must
// decompose identically on both sides under the map; unmapped summands
// are matched by multiplicity (and dimension, when required) and become
// new map entries.
IsoCheckResult extend(const Ring& a, const Ring& b, const IsoMap& gen_map, int depth,
                      bool require_dims) {
    IsoCheckResult res;
    res.map = gen_map;
    auto& fwd = res.map.forward;

    auto fail = [&](std::string detail) {
        res.status = IsoStatus::Violation;
        res.detail = std::move(detail);
        return res;
    };

    // seed with unit -> unit
    const Label unit_a = a.unit();
    const Label unit_b = b.unit();
    if (auto it = fwd.find(unit_a); it != fwd.end() && it->second != unit_b) {
        return fail("map sends the unit of " + a.id() + " to a non-unit label");
    }
    fwd[unit_a] = unit_b;

    std::set<Label> used_targets;
    for (const auto& [x, y] : fwd) {
        a.check_label(x);
        b.check_label(y);
        if (!used_targets.insert(y).second) {
            return fail("map is not injective at target " + b.format_label(y));
        }
        if (require_dims && a.dim(x) != b.dim(y)) {
            return fail("dimension mismatch at " + a.format_label(x) + ": " +
                        a.dim(x).str() + " vs " + b.dim(y).str());
        }
        res.discovery_order.push_back(x);
    }

    std::vector<Label> domain;
    for (const auto& [x, y] : fwd) domain.push_back(x);
    std::set<std::pair<Label, Label>> processed;

    for (int step = 1; step <= depth; ++step) {
        std::vector<Label> discovered;
        for (const Label& x : domain) {
            for (const Label& y : domain) {
                if (!processed.insert({x, y}).second) continue;
                const Element ea = a.fuse(x, y);
                const Element eb = b.fuse(fwd.at(x), fwd.at(y));
                if (ea.size() != eb.size()) {
                    return fail("fusion supports differ in size at " + pair_text(a, x, y));
                }

                // mapped terms must line up exactly
                std::vector<Element::Term> leftover_b(eb.terms().begin(), eb.terms().end());
                std::vector<Element::Term> unmatched_a;
                for (const auto& [c, mult] : ea.terms()) {
                    auto it = fwd.find(c);
                    if (it == fwd.end()) {
                        unmatched_a.emplace_back(c, mult);
                        continue;
                    }
                    const Label& target = it->second;
                    auto jt = std::find_if(leftover_b.begin(), leftover_b.end(),
                                           [&](const Element::Term& t) {
                                               return t.first == target;
                                           });
                    if (jt == leftover_b.end() || jt->second != mult) {
                        return fail("fusion images differ at " + pair_text(a, x, y) +
                                    " on term " + a.format_label(c));
                    }
                    leftover_b.erase(jt);
                }

                // match the new summands
                for (const auto& [c, mult] : unmatched_a) {
                    std::vector<std::size_t> candidates;
                    for (std::size_t i = 0; i < leftover_b.size(); ++i) {
                        if (leftover_b[i].second != mult) continue;
                        if (used_targets.count(leftover_b[i].first)) continue;
                        if (require_dims && a.dim(c) != b.dim(leftover_b[i].first)) continue;
                        candidates.push_back(i);
                    }
                    if (candidates.empty()) {
                        return fail("no matching summand for " + a.format_label(c) +
                                    " in fusion at " + pair_text(a, x, y));
                    }
                    if (candidates.size() > 1) {
                        res.status = IsoStatus::Ambiguous;
                        res.detail = "ambiguous extension at " + pair_text(a, x, y) +
                                     ": summand " + a.format_label(c) + " has " +
                                     std::to_string(candidates.size()) +
                                     " indistinguishable targets";
                        return res;
                    }
                    const Label target = leftover_b[candidates.front()].first;
                    leftover_b.erase(leftover_b.begin() +
                                     static_cast<std::ptrdiff_t>(candidates.front()));
                    fwd[c] = target;
                    used_targets.insert(target);
                    discovered.push_back(c);
                    res.discovery_order.push_back(c);
                }
            }
        }
        res.depth_reached = step;
        if (discovered.empty()) break;
        for (Label& l : discovered) domain.push_back(std::move(l));
        std::sort(domain.begin(), domain.end());
    }
    return res;
}

std::string bound_text(const BigInt& p, const BigInt& q) {
    const BigInt g = boost::multiprecision::gcd(p, q);
    const BigInt num = p / g, den = q / g;
    if (den == 1) return "dim S_n >= " + num.str() + "^n";
    return "dim S_n >= (" + num.str() + "/" + den.str() + ")^n";
}

WitnessCertificate make_certificate(Element x, BigInt dim_x, BigInt dim_fx) {
    WitnessCertificate cert;
    cert.ratio = std::exp2(log2_of(dim_x) - log2_of(dim_fx));
    cert.bound = bound_text(dim_x, dim_fx);
    cert.witness = std::move(x);
    cert.dim_x = std::move(dim_x);
    cert.dim_fx = std::move(dim_fx);
    return cert;
}

}  // namespace

IsoCheckResult check_measured_iso(const Ring& a, const Ring& b, const IsoMap& gen_map,
                                  int depth) {
    return extend(a, b, gen_map, depth, /*require_dims=*/true);
}

IsoCheckResult extend_semiring_map(const Ring& a, const Ring& b, const IsoMap& gen_map,
                                   int depth) {
    return extend(a, b, gen_map, depth, /*require_dims=*/false);
}

std::optional<WitnessCertificate> infinite_growth_witness(const Ring& a, const Ring& b,
                                                          const IsoMap& gen_map,
                                                          const Element& x, int depth) {
    if (x.ring() != &a) {
        throw RingMismatchError("infinite_growth_witness: class X must live in ring " + a.id());
    }
    if (x.empty()) throw ConfigError("infinite_growth_witness: X is zero");

    IsoCheckResult ext = extend_semiring_map(a, b, gen_map, depth);
    if (ext.status != IsoStatus::Verified) {
        throw Error("infinite_growth_witness: map extension failed: " + ext.detail);
    }
    BigInt dim_x = 0, dim_fx = 0;
    for (const auto& [label, mult] : x.terms()) {
        auto it = ext.map.forward.find(label);
        if (it == ext.map.forward.end()) {
            throw Error("infinite_growth_witness: " + a.format_label(label) +
                        " is not in the mapped region (depth " + std::to_string(depth) + ")");
        }
        dim_x += mult * a.dim(label);
        dim_fx += mult * b.dim(it->second);
    }
    if (dim_x <= dim_fx) return std::nullopt;
    return make_certificate(x, std::move(dim_x), std::move(dim_fx));
}

std::optional<WitnessCertificate> scan_growth_witness(const Ring& a, const Ring& b,
                                                      const IsoMap& gen_map, int depth) {
    IsoCheckResult ext = extend_semiring_map(a, b, gen_map, depth);
    if (ext.status != IsoStatus::Verified) {
        throw Error("scan_growth_witness: map extension failed: " + ext.detail);
    }
    for (const Label& x : ext.discovery_order) {
        BigInt dx = a.dim(x);
        BigInt dy = b.dim(ext.map.forward.at(x));
        if (dx > dy) {
            return make_certificate(basis_element(a, x), std::move(dx), std::move(dy));
        }
    }
    return std::nullopt;
}

}  // namespace fusion
