#include "hyperfrac/compact_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperfrac {

namespace {

const Rational kZero(0);
const Rational kOne(1);

void check_unit_range(const Rational& x, const char* what) {
    if (x < kZero || x > kOne)
        throw std::invalid_argument(std::string(what) + " " + x.to_string() +
                                    " outside [0,1]");
}

}  // namespace

std::vector<ClosedInterval> normalize_intervals(std::vector<ClosedInterval> v) {
    for (const auto& iv : v) {
        if (iv.lo > iv.hi)
            throw std::invalid_argument("interval with lo " + iv.lo.to_string() +
                                        " > hi " + iv.hi.to_string());
    }
    auto less = [](const ClosedInterval& a, const ClosedInterval& b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    };
    if (!std::is_sorted(v.begin(), v.end(), less)) std::sort(v.begin(), v.end(), less);
    std::vector<ClosedInterval> out;
    out.reserve(v.size());
    for (auto& iv : v) {
        if (!out.empty() && iv.lo <= out.back().hi) {
            if (iv.hi > out.back().hi) out.back().hi = iv.hi;
        } else {
            out.push_back(std::move(iv));
        }
    }
    return out;
}

CompactSet1D CompactSet1D::from_points(std::vector<Rational> pts) {
    if (pts.empty()) throw std::invalid_argument("CompactSet1D: empty point set");
    for (const auto& p : pts) check_unit_range(p, "point");
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    CompactSet1D s;
    s.kind_ = Kind::points;
    s.points_ = std::move(pts);
    return s;
}

CompactSet1D CompactSet1D::from_intervals(std::vector<ClosedInterval> iv) {
    if (iv.empty()) throw std::invalid_argument("CompactSet1D: empty interval union");
    for (const auto& i : iv) {
        check_unit_range(i.lo, "interval endpoint");
        check_unit_range(i.hi, "interval endpoint");
    }
    CompactSet1D s;
    s.kind_ = Kind::intervals;
    s.intervals_ = normalize_intervals(std::move(iv));
    return s;
}

const std::vector<Rational>& CompactSet1D::points() const {
    if (kind_ != Kind::points)
        throw std::logic_error("CompactSet1D: not a point set");
    return points_;
}

const std::vector<ClosedInterval>& CompactSet1D::intervals() const {
    if (kind_ != Kind::intervals)
        throw std::logic_error("CompactSet1D: not an interval union");
    return intervals_;
}

std::vector<ClosedInterval> CompactSet1D::interval_view() const {
    if (kind_ == Kind::intervals) return intervals_;
    std::vector<ClosedInterval> v;
    v.reserve(points_.size());
    for (const auto& p : points_) v.push_back({p, p});
    return v;
}

std::size_t CompactSet1D::component_count() const {
    return kind_ == Kind::points ? points_.size() : intervals_.size();
}

bool CompactSet1D::contains(const Rational& x) const {
    if (kind_ == Kind::points)
        return std::binary_search(points_.begin(), points_.end(), x);
    auto it = std::upper_bound(intervals_.begin(), intervals_.end(), x,
                               [](const Rational& v, const ClosedInterval& iv) {
                                   return v < iv.lo;
                               });
    if (it == intervals_.begin()) return false;
    return std::prev(it)->contains(x);
}

const Rational& CompactSet1D::min() const {
    return kind_ == Kind::points ? points_.front() : intervals_.front().lo;
}

const Rational& CompactSet1D::max() const {
    return kind_ == Kind::points ? points_.back() : intervals_.back().hi;
}

bool CompactSet1D::operator==(const CompactSet1D& o) const {
    return interval_view() == o.interval_view();
}

CompactSet1D dilate(const CompactSet1D& c, const Rational& r) {
    if (r.sign() < 0) throw std::invalid_argument("dilate: negative radius");
    std::vector<ClosedInterval> out;
    for (const auto& iv : c.interval_view()) {
        Rational lo = iv.lo - r, hi = iv.hi + r;
        if (lo < Rational(0)) lo = Rational(0);
        if (hi > Rational(1)) hi = Rational(1);
        out.push_back({std::move(lo), std::move(hi)});
    }
    return CompactSet1D::from_intervals(std::move(out));
}

Rational point_distance(const CompactSet1D& s, const Rational& x) {
    const auto view = s.interval_view();
    auto it = std::upper_bound(view.begin(), view.end(), x,
                               [](const Rational& v, const ClosedInterval& iv) {
                                   return v < iv.lo;
                               });
    Rational best;
    bool have = false;
    if (it != view.begin()) {
        const auto& prev = *std::prev(it);
        if (prev.contains(x)) return Rational(0);
        best = x - prev.hi;
        have = true;
    }
    if (it != view.end()) {
        Rational d = it->lo - x;
        if (!have || d < best) best = std::move(d);
        have = true;
    }
    if (!have) throw std::logic_error("point_distance: empty set");
    return best;
}

namespace {

bool interval_inside(const std::vector<ClosedInterval>& bv, const ClosedInterval& iv) {
    auto it = std::upper_bound(bv.begin(), bv.end(), iv.lo,
                               [](const Rational& v, const ClosedInterval& biv) {
                                   return v < biv.lo;
                               });
    if (it == bv.begin()) return false;
    const auto& host = *std::prev(it);
    return iv.lo >= host.lo && iv.hi <= host.hi;
}

}  // namespace

bool subset_of(const CompactSet1D& a, const CompactSet1D& b) {
    std::vector<ClosedInterval> storage_b;
    const auto& bv = b.is_points() ? (storage_b = b.interval_view()) : b.intervals();
    if (a.is_points()) {
        for (const auto& p : a.points())
            if (!interval_inside(bv, {p, p})) return false;
        return true;
    }
    for (const auto& iv : a.intervals())
        if (!interval_inside(bv, iv)) return false;
    return true;
}

CompactSetD CompactSetD::from_points(std::size_t dim, std::vector<Point> pts) {
    if (dim == 0) throw std::invalid_argument("CompactSetD: dimension must be >= 1");
    if (pts.empty()) throw std::invalid_argument("CompactSetD: empty point set");
    for (const auto& p : pts) {
        if (p.size() != dim)
            throw std::invalid_argument("CompactSetD: point arity mismatch");
        for (const auto& c : p) check_unit_range(c, "coordinate");
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    CompactSetD s;
    s.dim_ = dim;
    s.points_ = std::move(pts);
    return s;
}

bool CompactSetD::contains(const Point& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

CompactSetD scale_translate(const CompactSetD& a, const Rational& r,
                            const CompactSetD::Point& x) {
    if (x.size() != a.dim())
        throw std::invalid_argument("scale_translate: translation arity mismatch");
    std::vector<CompactSetD::Point> out;
    out.reserve(a.points().size());
    for (std::size_t pi = 0; pi < a.points().size(); ++pi) {
        const auto& p = a.points()[pi];
        CompactSetD::Point q(a.dim());
        for (std::size_t c = 0; c < a.dim(); ++c) {
            Rational scaled = r * p[c];
            if (scaled < Rational(0) || scaled > Rational(1))
                throw std::invalid_argument(
                    "scale_translate: r*A leaves [0,1]^d at point " +
                    std::to_string(pi) + ", coordinate " + std::to_string(c) +
                    " (value " + scaled.to_string() + ")");
            q[c] = x[c] + scaled;
            if (q[c] < Rational(0) || q[c] > Rational(1))
                throw std::invalid_argument(
                    "scale_translate: x+r*A leaves [0,1]^d at point " +
                    std::to_string(pi) + ", coordinate " + std::to_string(c) +
                    " (value " + q[c].to_string() + ")");
        }
        out.push_back(std::move(q));
    }
    return CompactSetD::from_points(a.dim(), std::move(out));
}

CompactSetD embed(const CompactSet1D& a, std::size_t d) {
    if (d == 0) throw std::invalid_argument("embed: dimension must be >= 1");
    if (!a.is_points())
        throw std::invalid_argument(
            "embed: interval union needs an explicit sampling resolution");
    std::vector<CompactSetD::Point> pts;
    pts.reserve(a.points().size());
    for (const auto& v : a.points()) {
        CompactSetD::Point p(d, Rational(0));
        p[0] = v;
        pts.push_back(std::move(p));
    }
    return CompactSetD::from_points(d, std::move(pts));
}

CompactSetD embed_sampled(const CompactSet1D& a, std::size_t d, const Rational& step) {
    if (a.is_points()) return embed(a, d);
    if (step.sign() <= 0) throw std::invalid_argument("embed_sampled: step must be > 0");
    std::vector<Rational> sample;
    for (const auto& iv : a.intervals()) {
        Rational v = iv.lo;
        while (v < iv.hi) {
            sample.push_back(v);
            v += step;
        }
        sample.push_back(iv.hi);
    }
    return embed(CompactSet1D::from_points(std::move(sample)), d);
}

}  // namespace hyperfrac
