#pragma once

// Test-only oracles. Each one takes the definitional route so it stays
// independent of the library path it cross-checks: the Hausdorff oracle
// searches candidate radii through dilate/subset instead of the endpoint
// sweep, the porosity oracle scans gaps directly, and the Cantor oracle is
// the plain interval recursion.

#include <algorithm>
#include <vector>

#include "hyperfrac/compact_set.hpp"
#include "hyperfrac/hausdorff.hpp"
#include "hyperfrac/maps.hpp"
#include "hyperfrac/rng.hpp"

namespace oracles {

using hyperfrac::ClosedInterval;
using hyperfrac::CompactSet1D;
using hyperfrac::Rational;

/// min{r >= 0 : A in dilate(B, r) and B in dilate(A, r)} over the finite
/// candidate set of endpoint distances and their halves (which contains the
/// attained value for interval unions; for point sets the distances alone
/// suffice).
inline Rational hausdorff_definitional(const CompactSet1D& a, const CompactSet1D& b) {
    std::vector<Rational> ends;
    for (const auto& iv : a.interval_view()) {
        ends.push_back(iv.lo);
        ends.push_back(iv.hi);
    }
    for (const auto& iv : b.interval_view()) {
        ends.push_back(iv.lo);
        ends.push_back(iv.hi);
    }
    std::vector<Rational> candidates{Rational(0)};
    for (std::size_t i = 0; i < ends.size(); ++i)
        for (std::size_t j = i + 1; j < ends.size(); ++j) {
            Rational d = (ends[i] - ends[j]).abs();
            candidates.push_back(d / Rational(2));
            candidates.push_back(std::move(d));
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
        if (hyperfrac::subset_of(a, hyperfrac::dilate(b, r)) &&
            hyperfrac::subset_of(b, hyperfrac::dilate(a, r)))
            return r;
    }
    throw std::logic_error("hausdorff_definitional: no candidate radius worked");
}

/// Largest admissible gap-ball radius inside the relative ball B(x,R) minus
/// the union, scanned gap by gap from the sorted components.
inline Rational porosity_gap_scan(const std::vector<ClosedInterval>& sorted_union,
                                  const Rational& x, const Rational& R) {
    const Rational zero(0), one(1);
    Rational blo = x - R, bhi = x + R;
    const bool clip_lo = blo < zero, clip_hi = bhi > one;
    if (clip_lo) blo = zero;
    if (clip_hi) bhi = one;

    struct Edge { Rational lo, hi; };
    std::vector<Edge> inside;
    for (const auto& iv : sorted_union) {
        if (iv.hi < blo || iv.lo > bhi) continue;
        inside.push_back({hyperfrac::max(iv.lo, blo), hyperfrac::min(iv.hi, bhi)});
    }
    Rational best(0);
    auto consider = [&](const Rational& r) {
        Rational capped = hyperfrac::min(r, R);
        if (capped > best) best = capped;
    };
    if (inside.empty()) {
        consider(R);
        return best;
    }
    if (blo < inside.front().lo)
        consider(clip_lo ? inside.front().lo - blo
                         : (inside.front().lo - blo) / Rational(2));
    for (std::size_t i = 0; i + 1 < inside.size(); ++i)
        consider((inside[i + 1].lo - inside[i].hi) / Rational(2));
    if (inside.back().hi < bhi)
        consider(clip_hi ? bhi - inside.back().hi
                         : (bhi - inside.back().hi) / Rational(2));
    return best;
}

/// Depth-n middle-thirds Cantor intervals, the direct recursion. Endpoints
/// stay integer multiples of 3^{-n}, so the recursion runs on integer
/// numerators: [a, a+1]/3^k splits into [3a, 3a+1] and [3a+2, 3a+3]/3^{k+1}.
inline std::vector<ClosedInterval> cantor_depth(int n) {
    std::vector<std::int64_t> lows{0};
    for (int step = 0; step < n; ++step) {
        std::vector<std::int64_t> next;
        next.reserve(lows.size() * 2);
        for (std::int64_t a : lows) {
            next.push_back(3 * a);
            next.push_back(3 * a + 2);
        }
        lows = std::move(next);
    }
    std::int64_t den = 1;
    for (int i = 0; i < n; ++i) den *= 3;
    std::vector<ClosedInterval> out;
    out.reserve(lows.size());
    for (std::int64_t a : lows)
        out.push_back({Rational(a, den), Rational(a + 1, den)});
    return out;
}

/// Random point set in [0,1] with small rational coordinates.
inline CompactSet1D random_point_set(hyperfrac::SplitMix64& rng, std::size_t max_size) {
    std::size_t n = 1 + rng.next_below(max_size);
    std::vector<Rational> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t q = 1 + static_cast<std::int64_t>(rng.next_below(997));
        std::int64_t p = static_cast<std::int64_t>(rng.next_below(
            static_cast<std::uint64_t>(q) + 1));
        pts.push_back(Rational(p, q));
    }
    return CompactSet1D::from_points(std::move(pts));
}

}  // namespace oracles
