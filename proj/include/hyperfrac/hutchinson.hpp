#pragma once

#include "hyperfrac/compact_set.hpp"
#include "hyperfrac/maps.hpp"

namespace hyperfrac {

struct AttractorResult {
    CompactSet1D attractor;
    int iterations = 0;
    /// Strict solver: L/(1-L) * d_H(A_{n-1}, A_n), a certified bound on the
    /// distance to the true attractor. Weak iterator: the last step size
    /// (no rate certificate exists).
    Rational a_posteriori_bound;
    bool converged = false;
    bool stalled = false;  // weak iterator hit max_iter before tol
};

/// S(A) = union of the map images, canonicalized. Interval unions require
/// every map to be affine or constant (affine images of intervals are
/// intervals); use a point set for other map kinds.
CompactSet1D hutchinson_apply(const IFS& ifs, const CompactSet1D& a);

/// Banach iteration for a strict IFS: stops when the a-posteriori bound
/// L/(1-L) * d_H(A_{n-1}, A_n) drops to tol, which certifies
/// d_H(A_n, A*) <= tol and d_H(S(A_n), A_n) <= 2*tol.
AttractorResult solve_attractor(const IFS& ifs, const Rational& tol, const CompactSet1D& a0);

/// Best-effort iteration for weak systems: stops on step size <= tol or
/// after max_iter steps (stalled flag). Every map must pass the strict
/// pairwise decrease check over a0's endpoint sample.
///
/// Exactness has a cost for the quadratic map: each application squares the
/// reduced denominators, so bit sizes double per step. Keep max_iter small
/// (~15) for systems containing it; the piecewise-linear and affine kinds
/// grow slowly and iterate fine.
AttractorResult iterate_weak(const IFS& ifs, const CompactSet1D& a0, const Rational& tol,
                             int max_iter);

}  // namespace hyperfrac
