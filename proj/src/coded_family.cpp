#include "hyperfrac/coded_family.hpp"

#include <stdexcept>

namespace hyperfrac {

namespace {

const Rational kShiftBound(3, 2);

std::string address_string(int level, std::size_t ordinal) {
    return "level " + std::to_string(level) + ", ordinal " + std::to_string(ordinal);
}

}  // namespace

std::size_t NodeAddress::ordinal() const {
    std::size_t o = 0;
    for (Child c : path) o = o * 2 + (c == Child::right ? 1 : 0);
    return o;
}

std::size_t NodeAddress::flat_index() const {
    if (path.empty()) throw std::invalid_argument("NodeAddress: empty path");
    return (std::size_t{1} << level()) - 1 + ordinal();
}

std::size_t Code::full_length(int depth) {
    if (depth < 0) throw std::invalid_argument("Code: negative depth");
    return (std::size_t{1} << (depth + 1)) - 2;
}

Code::Code(std::vector<Rational> entries, int depth) : depth_(depth) {
    if (depth < 1) throw std::invalid_argument("Code: depth must be >= 1");
    if (entries.size() > full_length(depth))
        throw std::invalid_argument("Code: " + std::to_string(entries.size()) +
                                    " entries exceed depth-" + std::to_string(depth) +
                                    " capacity " + std::to_string(full_length(depth)));
    for (const auto& e : entries) {
        if (e < -kShiftBound || e > kShiftBound)
            throw std::invalid_argument("Code: entry " + e.to_string() +
                                        " outside [-3/2, 3/2]");
    }
    while (!entries.empty() && entries.back().is_zero()) entries.pop_back();
    entries_ = std::move(entries);
}

const Rational& Code::entry(std::size_t flat_index) const {
    static const Rational zero(0);
    if (flat_index == 0) throw std::invalid_argument("Code: flat indices are 1-based");
    if (flat_index > full_length(depth_))
        throw std::invalid_argument("Code: index " + std::to_string(flat_index) +
                                    " beyond depth-" + std::to_string(depth_) + " code");
    if (flat_index > entries_.size()) return zero;
    return entries_[flat_index - 1];
}

Code Code::repadded(int depth) const {
    if (depth < depth_)
        throw std::invalid_argument("Code: repadded may only extend the depth");
    return Code(entries_, depth);
}

std::pair<std::size_t, std::size_t> level_index_range(int n) {
    if (n < 1) throw std::invalid_argument("level_index_range: level must be >= 1");
    std::size_t first = (std::size_t{1} << n) - 1;
    std::size_t last = (std::size_t{1} << (n + 1)) - 2;
    return {first, last};
}

ClosedInterval node_interval(const Code& code, const NodeAddress& addr) {
    if (addr.path.empty()) throw std::invalid_argument("node_interval: empty address");
    if (static_cast<int>(addr.level()) > code.depth())
        throw std::invalid_argument("node_interval: address at level " +
                                    std::to_string(addr.level()) +
                                    " deeper than code depth " +
                                    std::to_string(code.depth()));
    Rational left(0);
    std::size_t ordinal = 0;
    for (std::size_t i = 0; i < addr.path.size(); ++i) {
        const int level = static_cast<int>(i) + 1;
        const bool right = addr.path[i] == Child::right;
        ordinal = ordinal * 2 + (right ? 1 : 0);
        const std::size_t flat = ((std::size_t{1} << level) - 1) + ordinal;
        const Rational scale = Rational::pow10(-level);
        left += (Rational(right ? 7 : 2) + code.entry(flat)) * scale;
    }
    return {left, left + Rational::pow10(-static_cast<int>(addr.level()))};
}

CompactSet1D expand(const Code& code, int depth) {
    if (depth < 1) throw std::invalid_argument("expand: depth must be >= 1");
    if (depth > code.depth())
        throw std::invalid_argument("expand: depth " + std::to_string(depth) +
                                    " exceeds code depth " + std::to_string(code.depth()));
    std::vector<ClosedInterval> out;
    out.reserve(std::size_t{1} << depth);
    // iterative DFS keeping the exact left endpoint per level
    struct Frame { Rational left; std::size_t ordinal; int level; };
    std::vector<Frame> stack;
    stack.push_back({Rational(0), 0, 0});
    const Rational len = Rational::pow10(-depth);
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        if (f.level == depth) {
            out.push_back({f.left, f.left + len});
            continue;
        }
        const int level = f.level + 1;
        const Rational scale = Rational::pow10(-level);
        for (int right = 1; right >= 0; --right) {
            std::size_t ordinal = f.ordinal * 2 + static_cast<std::size_t>(right);
            std::size_t flat = ((std::size_t{1} << level) - 1) + ordinal;
            Rational left = f.left + (Rational(right ? 7 : 2) + code.entry(flat)) * scale;
            stack.push_back({std::move(left), ordinal, level});
        }
    }
    return CompactSet1D::from_intervals(std::move(out));
}

SeparationCertificate verify_separation(const Code& code, int depth) {
    if (depth < 1 || depth > code.depth())
        throw std::invalid_argument("verify_separation: bad depth");
    SeparationCertificate cert;
    cert.depth = depth;
    cert.ok = true;

    // parents at level n-1 (the root is [0,1]) with their left endpoints
    std::vector<Rational> parents{Rational(0)};
    for (int level = 1; level <= depth; ++level) {
        const Rational scale = Rational::pow10(-level);
        const Rational parent_len = Rational::pow10(-(level - 1));
        // containment boxes from the construction's extreme shifts
        const Rational left_box_lo = parent_len / Rational(20);          // 1/20 of parent
        const Rational left_box_hi = parent_len * Rational(9, 20);
        const Rational right_box_lo = parent_len * Rational(11, 20);
        const Rational right_box_hi = parent_len * Rational(19, 20);
        const Rational min_gap = Rational::pow10(-(level + 1));

        std::vector<Rational> next;
        next.reserve(parents.size() * 2);
        std::optional<Rational> level_min_gap;
        for (std::size_t po = 0; po < parents.size(); ++po) {
            const Rational& pl = parents[po];
            const std::size_t first = (std::size_t{1} << level) - 1;
            const std::size_t flat_l = first + po * 2;
            const std::size_t flat_r = first + po * 2 + 1;
            Rational ll = pl + (Rational(2) + code.entry(flat_l)) * scale;
            Rational rl = pl + (Rational(7) + code.entry(flat_r)) * scale;

            if (ll < pl + left_box_lo || ll + scale > pl + left_box_hi) {
                cert.ok = false;
                cert.failure = "left child outside containment box at " +
                               address_string(level, po * 2);
                return cert;
            }
            if (rl < pl + right_box_lo || rl + scale > pl + right_box_hi) {
                cert.ok = false;
                cert.failure = "right child outside containment box at " +
                               address_string(level, po * 2 + 1);
                return cert;
            }
            Rational gap = rl - (ll + scale);
            if (gap < min_gap) {
                cert.ok = false;
                cert.failure = "sibling gap " + gap.to_string() + " below " +
                               min_gap.to_string() + " at " + address_string(level, po * 2);
                return cert;
            }
            if (!level_min_gap || gap < *level_min_gap) level_min_gap = gap;
            next.push_back(std::move(ll));
            next.push_back(std::move(rl));
        }
        cert.min_gap_per_level.push_back(*level_min_gap);
        parents = std::move(next);
    }
    return cert;
}

std::pair<int, Rational> epsilon_for_k(std::int64_t k) {
    if (k < 1) throw std::invalid_argument("epsilon_for_k: k must be >= 1");
    // sum_{i=1}^{p} 2^i = 2^{p+1} - 2; find n with 2^{n-1} - 2 < k <= 2^n - 2
    int n = 2;
    while (!((std::int64_t{1} << (n - 1)) - 2 < k && k <= (std::int64_t{1} << n) - 2)) {
        ++n;
        if (n > 62) throw std::invalid_argument("epsilon_for_k: k too large");
    }
    return {n, Rational(1) / (Rational(2) * Rational::pow10(n))};
}

Code midpoint_code(const std::vector<std::pair<Rational, Rational>>& open_intervals,
                   int total_depth) {
    std::vector<Rational> entries;
    entries.reserve(open_intervals.size());
    for (const auto& [lo, hi] : open_intervals) {
        if (!(lo < hi))
            throw std::invalid_argument("midpoint_code: degenerate interval (" +
                                        lo.to_string() + ", " + hi.to_string() + ")");
        if (lo < -kShiftBound || hi > kShiftBound)
            throw std::invalid_argument("midpoint_code: interval not inside [-3/2, 3/2]");
        entries.push_back((lo + hi) / Rational(2));
    }
    return Code(std::move(entries), total_depth);
}

}  // namespace hyperfrac
