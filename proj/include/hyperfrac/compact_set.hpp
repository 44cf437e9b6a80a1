#pragma once

#include <cstddef>
#include <vector>

#include "hyperfrac/rational.hpp"

namespace hyperfrac {

struct ClosedInterval {
    Rational lo;
    Rational hi;  // lo <= hi; degenerate intervals allowed

    Rational length() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool operator==(const ClosedInterval& o) const { return lo == o.lo && hi == o.hi; }
};

/// Sort + merge overlapping/touching intervals into the canonical disjoint
/// form (u_i < l_{i+1}). No range restriction; used both for subsets of
/// [0,1] and for shift-space subsets of [-3/2, 3/2].
std::vector<ClosedInterval> normalize_intervals(std::vector<ClosedInterval> v);

/// Nonempty compact subset of [0,1]: either a finite point set or a finite
/// union of disjoint closed intervals. Canonical on construction; immutable
/// afterwards. Conversions between the representations are explicit.
class CompactSet1D {
public:
    enum class Kind { points, intervals };

    static CompactSet1D from_points(std::vector<Rational> pts);
    static CompactSet1D from_intervals(std::vector<ClosedInterval> iv);

    Kind kind() const { return kind_; }
    bool is_points() const { return kind_ == Kind::points; }

    const std::vector<Rational>& points() const;
    const std::vector<ClosedInterval>& intervals() const;

    /// Both representations as interval unions (points become degenerate
    /// intervals). This is the explicit points->intervals conversion.
    std::vector<ClosedInterval> interval_view() const;

    std::size_t component_count() const;
    bool contains(const Rational& x) const;
    const Rational& min() const;
    const Rational& max() const;

    /// Equality as subsets of [0,1] (representation-independent).
    bool operator==(const CompactSet1D& o) const;
    bool operator!=(const CompactSet1D& o) const { return !(*this == o); }

private:
    CompactSet1D() = default;
    Kind kind_ = Kind::points;
    std::vector<Rational> points_;
    std::vector<ClosedInterval> intervals_;
};

/// Closed r-neighborhood of c intersected with [0,1], as a canonical
/// interval union.
CompactSet1D dilate(const CompactSet1D& c, const Rational& r);

/// Exact distance from a point to the set.
Rational point_distance(const CompactSet1D& s, const Rational& x);

/// a subseteq b, exactly.
bool subset_of(const CompactSet1D& a, const CompactSet1D& b);

/// Nonempty finite subset of [0,1]^d given by its points (lexicographically
/// sorted, no duplicates).
class CompactSetD {
public:
    using Point = std::vector<Rational>;

    static CompactSetD from_points(std::size_t dim, std::vector<Point> pts);

    std::size_t dim() const { return dim_; }
    const std::vector<Point>& points() const { return points_; }
    bool contains(const Point& p) const;

    bool operator==(const CompactSetD& o) const {
        return dim_ == o.dim_ && points_ == o.points_;
    }

private:
    CompactSetD() = default;
    std::size_t dim_ = 0;
    std::vector<Point> points_;
};

/// x + r*a, exactly. Both r*a and x + r*a must stay inside [0,1]^d; a
/// violation is reported with the offending point and coordinate.
CompactSetD scale_translate(const CompactSetD& a, const Rational& r,
                            const CompactSetD::Point& x);

/// A x {0}^{d-1} for a finite point set.
CompactSetD embed(const CompactSet1D& a, std::size_t d);

/// Interval-union input needs an explicit sampling resolution: each
/// component is sampled on a grid of the given step (endpoints included).
CompactSetD embed_sampled(const CompactSet1D& a, std::size_t d, const Rational& step);

}  // namespace hyperfrac
