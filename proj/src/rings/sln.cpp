#include "fusion/rings/sln.hpp"

#include <algorithm>
#include <map>

#include "fusion/errors.hpp"

namespace fusion {

BigInt weyl_dim(const Partition& p, int n) {
    std::vector<std::int64_t> parts(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < p.size() && i < parts.size(); ++i) parts[i] = p[i];
    BigInt num = 1, den = 1;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            num *= parts[static_cast<std::size_t>(i)] - parts[static_cast<std::size_t>(j)] + j - i;
            den *= j - i;
        }
    }
    return num / den;
}

namespace {

// Distributes the boxes of one mu-row (all carrying the same label) as a
// horizontal strip over `shape`, tracking the ballot condition against
// the previous label's row-prefix counts, then recurses into the next
// mu-row. `prefix_prev[r]` = boxes of the previous label in rows 0..r.
struct LrEnumerator {
    int n;
    const Partition& mu;
    std::map<Partition, std::int64_t>& out;

    void run(std::vector<std::int64_t>& shape) {
        std::vector<std::int64_t> prefix_prev(static_cast<std::size_t>(n), 0);
        next_label(shape, prefix_prev, 0);
    }

    void next_label(std::vector<std::int64_t>& shape, std::vector<std::int64_t>& prefix_prev,
                    std::size_t label) {
        while (label < mu.size() && mu[label] == 0) ++label;
        if (label >= mu.size()) {
            out[shape] += 1;
            return;
        }
        std::vector<std::int64_t> base = shape;
        std::vector<std::int64_t> prefix_cur(static_cast<std::size_t>(n), 0);
        place(shape, base, prefix_prev, prefix_cur, label, 0, mu[label]);
    }

    void place(std::vector<std::int64_t>& shape, const std::vector<std::int64_t>& base,
               std::vector<std::int64_t>& prefix_prev, std::vector<std::int64_t>& prefix_cur,
               std::size_t label, int row, std::int64_t remaining) {
        if (row == n) {
            if (remaining == 0) next_label(shape, prefix_cur, label + 1);
            return;
        }
        const std::size_t r = static_cast<std::size_t>(row);
        const std::int64_t placed = row > 0 ? prefix_cur[r - 1] : 0;
        // horizontal strip: boxes in row r stay within the previous row's
        // old length
        std::int64_t cap = row == 0 ? remaining
                                    : std::min(remaining, base[r - 1] - base[r]);
        if (label > 0) {
            // ballot: prefix counts of this label never exceed the
            // previous label's counts one row higher
            const std::int64_t dominator = row > 0 ? prefix_prev[r - 1] : 0;
            cap = std::min(cap, dominator - placed);
        }
        for (std::int64_t a = 0; a <= cap; ++a) {
            shape[r] = base[r] + a;
            prefix_cur[r] = placed + a;
            place(shape, base, prefix_prev, prefix_cur, label, row + 1, remaining - a);
        }
        shape[r] = base[r];
        prefix_cur[r] = placed;
    }
};

}  // namespace

std::vector<std::pair<Partition, std::int64_t>> lr_expand(const Partition& lambda,
                                                          const Partition& mu, int n) {
    std::vector<std::int64_t> shape(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < lambda.size() && i < shape.size(); ++i) shape[i] = lambda[i];
    std::map<Partition, std::int64_t> acc;
    LrEnumerator{n, mu, acc}.run(shape);
    return {acc.begin(), acc.end()};
}

std::vector<Partition> pieri_column_expand(const Partition& lambda, int k, int n) {
    std::vector<std::int64_t> base(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < lambda.size() && i < base.size(); ++i) base[i] = lambda[i];
    std::vector<Partition> out;
    std::vector<std::int64_t> shape = base;

    // choose rows top-down; adding to row r needs shape[r] < shape[r-1]
    // after any addition to row r-1
    auto rec = [&](auto&& self, int row, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(shape);
            return;
        }
        if (row >= n || n - row < remaining) return;
        const std::size_t r = static_cast<std::size_t>(row);
        // skip this row
        self(self, row + 1, remaining);
        // or add one box
        if (row == 0 || shape[r] + 1 <= shape[r - 1]) {
            shape[r] += 1;
            self(self, row + 1, remaining - 1);
            shape[r] -= 1;
        }
    };
    rec(rec, 0, k);
    std::sort(out.begin(), out.end());
    return out;
}

SLnRing::SLnRing(int n) : Ring("sln:" + std::to_string(n), n - 1), n_(n) {
    if (n < 2) throw ConfigError("sln rank parameter must be >= 2");
}

std::string SLnRing::description() const {
    return "SL(" + std::to_string(n_) +
           ") fusion ring: partitions with < n parts, Littlewood-Richardson rule, Weyl dims";
}

Label SLnRing::unit() const {
    return Label(std::vector<std::int64_t>(static_cast<std::size_t>(n_ - 1), 0));
}

void SLnRing::check_label(const Label& l) const {
    require_width(l);
    for (std::size_t i = 0; i < l.width(); ++i) {
        if (l[i] < 0) bad_label(l, "partition parts must be non-negative");
        if (i > 0 && l[i] > l[i - 1]) bad_label(l, "partition parts must be non-increasing");
    }
}

namespace {

Label reduce_full_columns(const Partition& nu, int n) {
    // subtract nu_n from every part, keep the first n-1
    const std::int64_t last = nu[static_cast<std::size_t>(n - 1)];
    std::vector<std::int64_t> enc(static_cast<std::size_t>(n - 1));
    for (int i = 0; i < n - 1; ++i) enc[static_cast<std::size_t>(i)] =
        nu[static_cast<std::size_t>(i)] - last;
    return Label(std::move(enc));
}

bool is_single_column(const Label& l) {
    bool any = false;
    for (std::size_t i = 0; i < l.width(); ++i) {
        if (l[i] > 1) return false;
        if (l[i] == 1) any = true;
    }
    return any;
}

}  // namespace

Element SLnRing::fuse(const Label& a, const Label& b) const {
    check_label(a);
    check_label(b);
    Element out(this);
    if (is_single_column(b)) {
        int k = 0;
        for (std::size_t i = 0; i < b.width(); ++i) k += b[i] == 1 ? 1 : 0;
        for (const Partition& nu : pieri_column_expand(a.enc(), k, n_)) {
            out.add(reduce_full_columns(nu, n_), 1);
        }
        return out;
    }
    for (const auto& [nu, coeff] : lr_expand(a.enc(), b.enc(), n_)) {
        out.add(reduce_full_columns(nu, n_), coeff);
    }
    return out;
}

BigInt SLnRing::dim(const Label& l) const {
    check_label(l);
    return weyl_dim(l.enc(), n_);
}

Label SLnRing::random_label(std::mt19937_64& rng, int magnitude) const {
    std::uniform_int_distribution<std::int64_t> part(0, magnitude);
    std::vector<std::int64_t> enc(static_cast<std::size_t>(n_ - 1));
    for (auto& v : enc) v = part(rng);
    std::sort(enc.begin(), enc.end(), std::greater<>());
    return Label(std::move(enc));
}

Label SLnRing::parse_label(std::string_view text) const {
    std::vector<std::string> parts = split_tuple(text);
    const std::size_t width = static_cast<std::size_t>(label_width());
    if (parts.size() > width) {
        throw InvalidLabelError("partition for " + id() + " has more than " +
                                std::to_string(width) + " parts");
    }
    std::vector<std::int64_t> enc(width, 0);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        try {
            std::size_t used = 0;
            enc[i] = std::stoll(parts[i], &used);
            if (used != parts[i].size()) throw std::invalid_argument(parts[i]);
        } catch (const std::exception&) {
            throw InvalidLabelError("bad partition part '" + parts[i] + "' for ring " + id());
        }
    }
    Label l(std::move(enc));
    check_label(l);
    return l;
}

}  // namespace fusion
