#include "hyperfrac/maps.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperfrac {

namespace {

void check_unit(const Rational& v, const char* what) {
    if (v < Rational(0) || v > Rational(1))
        throw std::invalid_argument(std::string(what) + " " + v.to_string() +
                                    " outside [0,1]");
}

}  // namespace

ContractionMap ContractionMap::affine(Rational a, Rational b) {
    // image of [0,1] is the segment between b and a+b
    check_unit(b, "affine: f(0) =");
    check_unit(a + b, "affine: f(1) =");
    ContractionMap m;
    m.kind_ = MapKind::affine;
    m.lip_ = a.abs();
    m.a_ = std::move(a);
    m.b_ = std::move(b);
    m.weak_only_ = false;  // |a| == 1 pairs map isometrically, not strictly closer
    return m;
}

ContractionMap ContractionMap::quadratic_logistic() {
    ContractionMap m;
    m.kind_ = MapKind::quadratic_logistic;
    m.lip_ = Rational(1);  // sup |1 - 2x| on [0,1]
    m.weak_only_ = true;   // |f(x)-f(y)| = |x-y|*|1-(x+y)| < |x-y| for distinct pairs
    return m;
}

ContractionMap ContractionMap::constant(Rational c) {
    check_unit(c, "constant: value");
    ContractionMap m;
    m.kind_ = MapKind::constant;
    m.a_ = std::move(c);
    m.lip_ = Rational(0);
    return m;
}

ContractionMap ContractionMap::piecewise_linear(std::vector<Breakpoint> pts) {
    if (pts.empty()) throw std::invalid_argument("piecewise_linear: no breakpoints");
    for (const auto& p : pts) {
        check_unit(p.x, "piecewise_linear: breakpoint x");
        check_unit(p.y, "piecewise_linear: breakpoint y");
    }
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (!(pts[i].x < pts[i + 1].x))
            throw std::invalid_argument("piecewise_linear: breakpoint x values must be strictly increasing");
    }
    ContractionMap m;
    m.kind_ = MapKind::piecewise_linear;
    Rational lip(0);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        Rational slope = (pts[i + 1].y - pts[i].y) / (pts[i + 1].x - pts[i].x);
        Rational mag = slope.abs();
        if (mag > lip) lip = std::move(mag);
    }
    m.lip_ = std::move(lip);
    m.pts_ = std::move(pts);
    // a slope of magnitude >= 1 fails strict decrease on that segment
    m.weak_only_ = false;
    return m;
}

Rational ContractionMap::apply(const Rational& x) const {
    if (x < Rational(0) || x > Rational(1))
        throw std::invalid_argument("apply: argument " + x.to_string() + " outside [0,1]");
    switch (kind_) {
        case MapKind::affine:
            return a_ * x + b_;
        case MapKind::quadratic_logistic:
            return x - x * x;
        case MapKind::constant:
            return a_;
        case MapKind::piecewise_linear: {
            if (x <= pts_.front().x) return pts_.front().y;
            if (x >= pts_.back().x) return pts_.back().y;
            auto it = std::upper_bound(pts_.begin(), pts_.end(), x,
                                       [](const Rational& v, const Breakpoint& b) {
                                           return v < b.x;
                                       });
            const Breakpoint& hi = *it;
            const Breakpoint& lo = *std::prev(it);
            return lo.y + (x - lo.x) * (hi.y - lo.y) / (hi.x - lo.x);
        }
    }
    throw std::logic_error("apply: bad map kind");
}

WeakCheck is_weak_contraction_on(const ContractionMap& f, const std::vector<Rational>& s) {
    if (s.size() < 2)
        throw std::invalid_argument("is_weak_contraction_on: need at least two points");
    std::vector<Rational> img;
    img.reserve(s.size());
    for (const auto& x : s) img.push_back(f.apply(x));
    WeakCheck wc;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t jj = i + 1; jj < s.size(); ++jj) {
            if (s[i] == s[jj]) continue;
            Rational lhs = (img[i] - img[jj]).abs();
            Rational rhs = (s[i] - s[jj]).abs();
            if (!(lhs < rhs)) {
                wc.ok = false;
                wc.counterexample = std::make_pair(s[i], s[jj]);
                return wc;
            }
        }
    }
    wc.ok = true;
    return wc;
}

ContractionMap build_interpolant(std::vector<Breakpoint> pts, InterpolantTail /*tail*/) {
    if (pts.size() < 2)
        throw std::invalid_argument("build_interpolant: need at least two points");
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (!(pts[i].x < pts[i + 1].x))
            throw std::invalid_argument(
                "build_interpolant: x values not strictly increasing at index " +
                std::to_string(i + 1));
    }
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        Rational slope = (pts[i + 1].y - pts[i].y) / (pts[i + 1].x - pts[i].x);
        if (!(slope.abs() < Rational(1)))
            throw std::invalid_argument(
                "build_interpolant: segment " + std::to_string(i) + " from x=" +
                pts[i].x.to_string() + " to x=" + pts[i + 1].x.to_string() +
                " has slope " + slope.to_string() + " with |slope| >= 1");
    }
    return ContractionMap::piecewise_linear(std::move(pts));
}

bool IFS::strict() const {
    if (maps.empty()) throw std::invalid_argument("IFS: no maps");
    for (const auto& m : maps)
        if (!(m.lip() < Rational(1))) return false;
    return true;
}

Rational IFS::max_lip() const {
    if (maps.empty()) throw std::invalid_argument("IFS: no maps");
    Rational l = maps.front().lip();
    for (const auto& m : maps)
        if (m.lip() > l) l = m.lip();
    return l;
}

}  // namespace hyperfrac
