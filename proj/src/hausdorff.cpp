#include "hyperfrac/hausdorff.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperfrac {

namespace {

Rational dist_to(const std::vector<ClosedInterval>& v, const Rational& x) {
    auto it = std::upper_bound(v.begin(), v.end(), x,
                               [](const Rational& val, const ClosedInterval& iv) {
                                   return val < iv.lo;
                               });
    Rational best;
    bool have = false;
    if (it != v.begin()) {
        const auto& prev = *std::prev(it);
        if (prev.contains(x)) return Rational(0);
        best = x - prev.hi;
        have = true;
    }
    if (it != v.end()) {
        Rational d = it->lo - x;
        if (!have || d < best) best = std::move(d);
    }
    return best;
}

Rational squared_distance(const CompactSetD::Point& p, const CompactSetD::Point& q) {
    Rational s(0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        Rational d = p[i] - q[i];
        s += d * d;
    }
    return s;
}

Rational directed_squared(const CompactSetD& a, const CompactSetD& b) {
    Rational worst(0);
    for (const auto& p : a.points()) {
        bool have = false;
        Rational best;
        for (const auto& q : b.points()) {
            Rational d = squared_distance(p, q);
            if (!have || d < best) { best = std::move(d); have = true; }
        }
        if (best > worst) worst = std::move(best);
    }
    return worst;
}

}  // namespace

namespace {

const std::vector<ClosedInterval>& view_of(const CompactSet1D& s,
                                           std::vector<ClosedInterval>& storage) {
    if (!s.is_points()) return s.intervals();
    storage = s.interval_view();
    return storage;
}

// sup of the piecewise-linear map x -> dist(x, b) over a union of closed
// intervals: attained at an interval endpoint of a or at a gap midpoint of
// b lying inside a component of a.
Rational directed_views(const std::vector<ClosedInterval>& av,
                        const std::vector<ClosedInterval>& bv) {
    std::vector<Rational> gap_mids;
    gap_mids.reserve(bv.size());
    for (std::size_t i = 0; i + 1 < bv.size(); ++i) {
        Rational mid = (bv[i].hi + bv[i + 1].lo) / Rational(2);
        gap_mids.push_back(std::move(mid));
    }

    Rational worst(0);
    auto consider = [&](const Rational& x) {
        Rational d = dist_to(bv, x);
        if (d > worst) worst = std::move(d);
    };
    for (const auto& iv : av) {
        consider(iv.lo);
        consider(iv.hi);
        auto first = std::upper_bound(gap_mids.begin(), gap_mids.end(), iv.lo);
        for (auto it = first; it != gap_mids.end() && *it < iv.hi; ++it) consider(*it);
    }
    return worst;
}

}  // namespace

Rational directed_hausdorff(const CompactSet1D& a, const CompactSet1D& b) {
    std::vector<ClosedInterval> sa, sb;
    return directed_views(view_of(a, sa), view_of(b, sb));
}

Rational hausdorff_distance(const CompactSet1D& a, const CompactSet1D& b) {
    std::vector<ClosedInterval> sa, sb;
    const auto& av = view_of(a, sa);
    const auto& bv = view_of(b, sb);
    Rational ab = directed_views(av, bv);
    Rational ba = directed_views(bv, av);
    return ab >= ba ? ab : ba;
}

Rational hausdorff_distance_squared(const CompactSetD& a, const CompactSetD& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("hausdorff_distance_squared: dimension mismatch");
    Rational ab = directed_squared(a, b);
    Rational ba = directed_squared(b, a);
    return ab >= ba ? ab : ba;
}

Rational hausdorff_distance(const CompactSetD& a, const CompactSetD& b) {
    Rational sq = hausdorff_distance_squared(a, b);
    auto root = Rational::exact_sqrt(sq);
    if (!root)
        throw std::runtime_error(
            "hausdorff_distance: exact value is irrational (squared distance " +
            sq.to_string() + "); use hausdorff_distance_squared");
    return *root;
}

PorosityRatioReport porosity_ratio_line(const CompactSet1D& a, const Rational& x,
                                        const Rational& R) {
    if (R.sign() <= 0) throw std::invalid_argument("porosity_ratio_line: R must be > 0");
    if (x < Rational(0) || x > Rational(1))
        throw std::invalid_argument("porosity_ratio_line: center outside [0,1]");

    const Rational blo_raw = x - R, bhi_raw = x + R;
    const bool closed_left = blo_raw < Rational(0);   // ball clipped at 0
    const bool closed_right = bhi_raw > Rational(1);  // ball clipped at 1
    const Rational blo = closed_left ? Rational(0) : blo_raw;
    const Rational bhi = closed_right ? Rational(1) : bhi_raw;

    // obstacles: A clamped to the ball's closure
    std::vector<ClosedInterval> obstacles;
    for (const auto& iv : a.interval_view()) {
        if (iv.hi < blo || iv.lo > bhi) continue;
        obstacles.push_back({max(iv.lo, blo), min(iv.hi, bhi)});
    }

    PorosityRatioReport rep;
    rep.center = x;
    rep.radius = R;

    if (obstacles.empty()) {
        // open ball disjoint from A: the ball itself is the witness
        rep.best_gap_radius = R;
        rep.best_gap_center = x;
        rep.ratio = Rational(1);
        return rep;
    }

    struct Gap {
        Rational lo, hi;
        bool lo_ambient, hi_ambient;  // endpoint included because of clipping at 0/1
    };
    std::vector<Gap> gaps;
    gaps.push_back({blo, obstacles.front().lo, closed_left, false});
    for (std::size_t i = 0; i + 1 < obstacles.size(); ++i)
        gaps.push_back({obstacles[i].hi, obstacles[i + 1].lo, false, false});
    gaps.push_back({obstacles.back().hi, bhi, false, closed_right});

    rep.best_gap_radius = Rational(0);
    rep.best_gap_center = x;
    for (const auto& g : gaps) {
        if (!(g.lo < g.hi)) continue;
        Rational r;
        Rational y;
        if (g.lo_ambient) {
            r = g.hi - g.lo;  // ball centered at 0 is clipped, so the whole gap fits
            y = g.lo;
        } else if (g.hi_ambient) {
            r = g.hi - g.lo;
            y = g.hi;
        } else {
            r = (g.hi - g.lo) / Rational(2);
            y = (g.lo + g.hi) / Rational(2);
        }
        if (r > R) r = R;  // keeps ratio in [0,1]; the larger ball still fits
        if (r > rep.best_gap_radius) {
            rep.best_gap_radius = std::move(r);
            rep.best_gap_center = std::move(y);
        }
    }
    rep.ratio = rep.best_gap_radius / R;
    return rep;
}

}  // namespace hyperfrac
