#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperfrac/compact_set.hpp"

namespace hyperfrac {

/// Addressing of the binary tree of nested intervals. Left children are the
/// images of the f_1-type map (lands at 2/10 of the parent), right children
/// of the f_2-type map (7/10). Flat indices are 1-based: the node at level n
/// with within-level ordinal o (left to right) has flat index 2^n - 1 + o.
enum class Child : std::uint8_t { left, right };

struct NodeAddress {
    std::vector<Child> path;  // outermost choice first; level = path.size()

    std::size_t level() const { return path.size(); }
    std::size_t ordinal() const;    // 0-based position within its level
    std::size_t flat_index() const; // 1-based position in the global listing
};

/// Finite prefix of a shift sequence in [-3/2, 3/2]^N, stored to a complete
/// depth m (length 2^{m+1} - 2, zero-padded; trailing zeros are trimmed in
/// storage). Entry i shifts node i's interval by entry * 10^{-level}.
class Code {
public:
    Code(std::vector<Rational> entries, int depth);

    int depth() const { return depth_; }
    static std::size_t full_length(int depth);  // 2^{depth+1} - 2

    /// 1-based flat index; zero beyond the stored prefix.
    const Rational& entry(std::size_t flat_index) const;

    /// Stored entries with trailing zeros trimmed.
    const std::vector<Rational>& entries() const { return entries_; }

    /// Same entries, new depth (depth may only grow; entries are shared).
    Code repadded(int depth) const;

    bool operator==(const Code& o) const {
        return depth_ == o.depth_ && entries_ == o.entries_;
    }

private:
    std::vector<Rational> entries_;
    int depth_ = 0;
};

/// Flat-index span of level n: (2^n - 1, 2^{n+1} - 2).
std::pair<std::size_t, std::size_t> level_index_range(int n);

/// The closed interval of length 10^{-level} addressed by addr, exactly:
/// L(child) = L(parent) + (2 or 7) * 10^{-n} + entry * 10^{-n}.
ClosedInterval node_interval(const Code& code, const NodeAddress& addr);

/// Union of the 2^depth level-`depth` intervals, sorted and disjoint.
CompactSet1D expand(const Code& code, int depth);

struct SeparationCertificate {
    int depth = 0;
    bool ok = false;
    std::vector<Rational> min_gap_per_level;  // indexed by level-1
    std::optional<std::string> failure;       // address of the first violation
};

/// Exact per-node checks down to `depth`: each child interval inside its
/// parent's stated containment box, and each sibling gap >= 10^{-(n+1)}.
SeparationCertificate verify_separation(const Code& code, int depth);

/// The level n with sum_{i=1}^{n-2} 2^i < k <= sum_{i=1}^{n-1} 2^i, and
/// epsilon = 1/(2*10^n).
std::pair<int, Rational> epsilon_for_k(std::int64_t k);

/// Code whose first k entries are the midpoints of the given nonempty open
/// subintervals of [-3/2, 3/2], zeros afterwards.
Code midpoint_code(const std::vector<std::pair<Rational, Rational>>& open_intervals,
                   int total_depth);

}  // namespace hyperfrac
