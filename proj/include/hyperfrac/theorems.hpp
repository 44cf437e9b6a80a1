#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperfrac/coded_family.hpp"
#include "hyperfrac/compact_set.hpp"
#include "hyperfrac/maps.hpp"

namespace hyperfrac {

/// One exactly-evaluated inequality or identity inside a certificate.
struct ConditionTrace {
    std::string name;
    bool ok = false;
    std::string detail;
};

// ---------------------------------------------------------------------------
// Density of weak-only attractors: the annulus construction
// ---------------------------------------------------------------------------

/// The nested intervals I_n = [0, t_n] driven by f(x) = x - x^2, a strictly
/// decreasing point sequence with strictly decreasing gaps stratified so that
/// annulus n = I_n \ I_{n+1} holds exactly counts[n-1] points, and the two
/// weak maps g (successor interpolant) and h (constant x_1) that reproduce
/// the truncated set: g[X] u h[X] = X with X = {x_1, ..., x_K}.
struct AnnulusConstruction {
    int annuli = 0;
    Rational requested_ratio;
    std::vector<Rational> interval_tops;    // t_1 .. t_{N+1}
    std::vector<Rational> points;           // x_1 > x_2 > ... > x_K
    std::vector<std::int64_t> counts;       // k_1 .. k_N (recounted from points)
    ContractionMap g;
    ContractionMap h;
    std::vector<ConditionTrace> conditions; // (a) .. (e), exact
    bool ok = false;
};

/// Builds the construction with k_n the smallest count allowed by condition
/// (e), bumping counts and flattening the per-annulus gap ratio when the
/// cross-annulus gap ordering cannot be met, then verifies everything
/// exactly. gap_ratio seeds the per-annulus geometric gap decay.
AnnulusConstruction build_prop32_set(int annuli, const Rational& gap_ratio);

/// The cardinality chain that pins the contradiction:
/// n > k*|F|, then k*(|F| + sum k_i) < n + n*sum k_i < k_n.
struct CountingCheck {
    bool ok = false;
    std::vector<ConditionTrace> steps;
};
CountingCheck counting_check(std::int64_t f_size, std::int64_t k,
                             const std::vector<std::int64_t>& counts, std::int64_t n);

/// F u (w + delta * (X x {0}^{d-1})) for the truncated annulus set X
/// (with its limit point 0). Requires 2*delta below the least pairwise
/// distance of F; the result is within delta of F.
CompactSetD build_prop32_embedded(const CompactSetD& f, const Rational& delta,
                                  const AnnulusConstruction& xs,
                                  const CompactSetD::Point& w);

// ---------------------------------------------------------------------------
// Strong porosity of the finite families
// ---------------------------------------------------------------------------

/// For x in F off the corner set D: antipodal displacements y_n = x - r_n e,
/// z_n = x + r_n e along an interior axis, radii halving, with the |F|+1
/// open balls of radius r_n pairwise disjoint and d_H(G_n, F) = r_n exactly
/// (so the porosity ratio r_n / d_H(G_n, F) is exactly 1).
struct StrongPorosityWitness {
    CompactSetD base;                         // F
    CompactSetD::Point removed;               // x
    std::size_t axis = 0;
    std::vector<Rational> radii;              // r_1, r_1/2, ...
    std::vector<CompactSetD::Point> y_points;
    std::vector<CompactSetD::Point> z_points;
    std::vector<CompactSetD> witness_sets;    // G_n = (F \ {x}) u {y_n, z_n}
    std::vector<ConditionTrace> checks;
    bool ok = false;
};
StrongPorosityWitness prop33_witness(const CompactSetD& f, const CompactSetD::Point& x,
                                     int count);

// ---------------------------------------------------------------------------
// The anti-porosity witness search for coded attractors
// ---------------------------------------------------------------------------

/// Everything needed to re-check one run of the witness search: the inputs
/// (E's code, k, Y, truncation depth m), the derived bracket data, the
/// admissible shift sets per level-(j+2) interval, the selected bands and
/// values, the output code H, and the final exactly-verified distance bound
/// d_H(Y, expand(H, m)) <= (99/100) delta + 10^{-m}.
struct Thm41Certificate {
    Code e_code;
    std::int64_t k = 0;
    int n = 0;
    Rational epsilon;
    CompactSet1D y;
    int m = 0;
    Rational delta;
    bool trivial = false;  // delta == 0: H = E
    int j = 0;
    Rational band;                                   // 10^j * delta
    std::vector<ClosedInterval> level_intervals;     // J_1 .. J_{2^{j+2}}
    std::vector<std::vector<ClosedInterval>> u_sets; // admissible shifts per J_i
    std::vector<std::vector<ClosedInterval>> v_sets; // band-avoiding selections
    std::vector<Rational> chosen;                    // v_i (midpoint of widest piece)
    Code h_code;
    Rational final_distance;
    Rational slack;   // 10^{-m}
    Rational bound;   // (99/100) delta + slack
    std::vector<ConditionTrace> lemmas;
    bool ok = false;
    std::string failure;  // set when some U_i / V_i came out empty
};

/// Runs the constructive search. Preconditions: E's code is zero beyond flat
/// position k, and m >= j + 4 once the bracket level j of delta is known.
/// delta >= epsilon is outside the theorem's hypothesis and is rejected.
Thm41Certificate thm41_witness_search(const Code& e_code, std::int64_t k,
                                      const CompactSet1D& y, int m);

/// Re-checks a certificate from its recorded inputs: recomputes delta, the
/// bracket, the admissible sets, the inclusion expand(H, j+2) inside the
/// dilated Y, and the final distance, comparing bit-exactly against the
/// recorded values.
struct ReplayResult {
    bool ok = false;
    std::string first_mismatch;
};
ReplayResult verify_thm41(const Thm41Certificate& cert);

/// Re-checks a stored annulus construction: the interval recurrence,
/// conditions (a)-(e), the per-annulus recount, and the two map identities.
ReplayResult verify_prop32(const AnnulusConstruction& c);

/// Re-checks a stored strong-porosity witness: displacement geometry, ball
/// disjointness, and d_H(G_n, F) = r_n, all exactly.
ReplayResult verify_prop33(const StrongPorosityWitness& w);

/// One seeded end-to-end trial: samples Y around E, then runs the witness
/// search with the truncation depth re-aligned to j + 6 once the bracket
/// level is known (one extra pass; the sample's scale placement keeps j
/// stable across depths).
Thm41Certificate thm41_trial(const Code& e_code, std::int64_t k, std::uint64_t seed,
                             std::uint64_t trial_index);

/// Deterministic perturbed sample of expand(E, m): both endpoints of every
/// depth-m interval, each moved by less than the trial's perturbation scale,
/// plus one outlier pinned exactly scale left of the set, so that
/// d_H(Y, expand(E, m)) lands strictly inside (0, epsilon). Seed 0 returns
/// the unperturbed expansion itself (delta == 0).
CompactSet1D sample_Y(const Code& e_code, const Rational& epsilon, int m,
                      std::uint64_t seed);

}  // namespace hyperfrac
