#pragma once

#include "hyperfrac/compact_set.hpp"

namespace hyperfrac {

/// One-sided Hausdorff distance sup_{x in a} dist(x, b), exact.
Rational directed_hausdorff(const CompactSet1D& a, const CompactSet1D& b);

/// Exact Hausdorff distance between nonempty compact subsets of [0,1].
/// Point sets and interval unions may be mixed; the sweep works on the
/// interval-union view of either.
Rational hausdorff_distance(const CompactSet1D& a, const CompactSet1D& b);

/// Squared Hausdorff distance in [0,1]^d (Euclidean). Always an exact
/// rational; the preferred quantity for d-dimensional property checks.
Rational hausdorff_distance_squared(const CompactSetD& a, const CompactSetD& b);

/// Exact d-dimensional Hausdorff distance. Defined only when the squared
/// distance is a perfect rational square (always true for d = 1 and for
/// axis-aligned constructions); otherwise throws.
Rational hausdorff_distance(const CompactSetD& a, const CompactSetD& b);

/// Largest open ball inside B(x,R) \ A, over the finitely many gaps.
/// Balls are taken relative to the space [0,1]; gap radii are capped at R
/// so that ratio = r*/R stays in [0,1].
struct PorosityRatioReport {
    Rational center;           // x
    Rational radius;           // R
    Rational best_gap_radius;  // r*
    Rational best_gap_center;  // y*
    Rational ratio;            // r*/R
};

PorosityRatioReport porosity_ratio_line(const CompactSet1D& a, const Rational& x,
                                        const Rational& R);

}  // namespace hyperfrac
