#include "hyperfrac/hutchinson.hpp"

#include <stdexcept>

#include "hyperfrac/hausdorff.hpp"

namespace hyperfrac {

CompactSet1D hutchinson_apply(const IFS& ifs, const CompactSet1D& a) {
    if (ifs.maps.empty()) throw std::invalid_argument("hutchinson_apply: no maps");
    if (a.is_points()) {
        std::vector<Rational> out;
        out.reserve(a.points().size() * ifs.maps.size());
        for (const auto& m : ifs.maps)
            for (const auto& x : a.points()) out.push_back(m.apply(x));
        return CompactSet1D::from_points(std::move(out));
    }
    std::vector<ClosedInterval> out;
    out.reserve(a.intervals().size() * ifs.maps.size());
    for (const auto& m : ifs.maps) {
        switch (m.kind()) {
            case MapKind::affine:
                for (const auto& iv : a.intervals()) {
                    Rational p = m.apply(iv.lo), q = m.apply(iv.hi);
                    if (p <= q) out.push_back({std::move(p), std::move(q)});
                    else out.push_back({std::move(q), std::move(p)});
                }
                break;
            case MapKind::constant:
                out.push_back({m.constant_value(), m.constant_value()});
                break;
            default:
                throw std::invalid_argument(
                    "hutchinson_apply: interval-union input needs affine or constant "
                    "maps; iterate a finite point set instead");
        }
    }
    return CompactSet1D::from_intervals(std::move(out));
}

AttractorResult solve_attractor(const IFS& ifs, const Rational& tol, const CompactSet1D& a0) {
    if (!ifs.strict())
        throw std::invalid_argument("solve_attractor: IFS is not strict; use iterate_weak");
    if (tol.sign() <= 0) throw std::invalid_argument("solve_attractor: tol must be > 0");

    const Rational l = ifs.max_lip();
    const Rational rate = l / (Rational(1) - l);

    CompactSet1D cur = a0;
    for (int iter = 1;; ++iter) {
        CompactSet1D next = hutchinson_apply(ifs, cur);
        Rational step = hausdorff_distance(cur, next);
        Rational bound = rate * step;
        cur = std::move(next);
        if (bound <= tol)
            return AttractorResult{std::move(cur), iter, std::move(bound), true, false};
        if (iter >= 1000000)
            throw std::runtime_error("solve_attractor: iteration guard tripped");
    }
}

AttractorResult iterate_weak(const IFS& ifs, const CompactSet1D& a0, const Rational& tol,
                             int max_iter) {
    if (max_iter < 1) throw std::invalid_argument("iterate_weak: max_iter must be >= 1");
    if (tol.sign() < 0) throw std::invalid_argument("iterate_weak: tol must be >= 0");

    std::vector<Rational> sample;
    if (a0.is_points()) {
        sample = a0.points();
    } else {
        for (const auto& iv : a0.intervals()) {
            sample.push_back(iv.lo);
            sample.push_back(iv.hi);
        }
    }
    if (sample.size() >= 2) {
        for (std::size_t i = 0; i < ifs.maps.size(); ++i) {
            WeakCheck wc = is_weak_contraction_on(ifs.maps[i], sample);
            if (!wc.ok)
                throw std::invalid_argument(
                    "iterate_weak: map " + std::to_string(i) +
                    " fails the pairwise decrease check on a0 at (" +
                    wc.counterexample->first.to_string() + ", " +
                    wc.counterexample->second.to_string() + ")");
        }
    }

    CompactSet1D cur = a0;
    Rational last_step;
    for (int iter = 1; iter <= max_iter; ++iter) {
        CompactSet1D next = hutchinson_apply(ifs, cur);
        last_step = hausdorff_distance(cur, next);
        cur = std::move(next);
        if (last_step <= tol)
            return AttractorResult{std::move(cur), iter, std::move(last_step), true, false};
    }
    return AttractorResult{std::move(cur), max_iter, std::move(last_step), false, true};
}

}  // namespace hyperfrac
