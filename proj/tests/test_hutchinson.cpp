#include <doctest.h>

#include "hyperfrac/hausdorff.hpp"
#include "hyperfrac/hutchinson.hpp"
#include "oracles.hpp"

using namespace hyperfrac;

namespace {

IFS cantor_ifs() {
    return IFS{{ContractionMap::affine(Rational(1, 3), Rational(0)),
                ContractionMap::affine(Rational(1, 3), Rational(2, 3))}};
}

IFS tenth_pair() {  // the two zero-code maps
    return IFS{{ContractionMap::affine(Rational(1, 10), Rational(2, 10)),
                ContractionMap::affine(Rational(1, 10), Rational(7, 10))}};
}

CompactSet1D unit() {
    return CompactSet1D::from_intervals({{Rational(0), Rational(1)}});
}

}  // namespace

TEST_CASE("hutchinson_apply: pinned images") {
    CompactSet1D step = hutchinson_apply(cantor_ifs(), unit());
    CHECK(step == CompactSet1D::from_intervals(
                      {{Rational(0), Rational(1, 3)}, {Rational(2, 3), Rational(1)}}));

    CompactSet1D tenth = hutchinson_apply(tenth_pair(), unit());
    CHECK(tenth == CompactSet1D::from_intervals({{Rational(1, 5), Rational(3, 10)},
                                                 {Rational(7, 10), Rational(4, 5)}}));

    IFS single_const{{ContractionMap::constant(Rational(2, 7))}};
    CHECK(hutchinson_apply(single_const, unit()) ==
          CompactSet1D::from_points({Rational(2, 7)}));

    IFS with_ql{{ContractionMap::quadratic_logistic()}};
    CHECK_THROWS(hutchinson_apply(with_ql, unit()));  // nonlinear on intervals
    CHECK(hutchinson_apply(with_ql, CompactSet1D::from_points({Rational(1, 2)})) ==
          CompactSet1D::from_points({Rational(1, 4)}));
}

TEST_CASE("solver matches the Cantor interval recursion exactly, step by step") {
    const Rational tol = Rational(1) / Rational(BigInt::pow(BigInt(3), 10), BigInt(1));
    AttractorResult res = solve_attractor(cantor_ifs(), tol, unit());
    CHECK(res.converged);
    CHECK(res.a_posteriori_bound <= tol);

    CompactSet1D cur = unit();
    for (int step = 1; step <= res.iterations; ++step) {
        cur = hutchinson_apply(cantor_ifs(), cur);
        REQUIRE(cur == CompactSet1D::from_intervals(oracles::cantor_depth(step)));
        REQUIRE(subset_of(cur, step == 1 ? unit()
                                         : CompactSet1D::from_intervals(
                                               oracles::cantor_depth(step - 1))));
    }
    CHECK(res.attractor == cur);

    // fixed-point residual certified by the stopping rule
    Rational residual = hausdorff_distance(hutchinson_apply(cantor_ifs(), res.attractor),
                                           res.attractor);
    CHECK(residual <= Rational(2) * tol);

    // step sizes decay like (1/3)^n of the first step
    CompactSet1D a = unit();
    CompactSet1D b = hutchinson_apply(cantor_ifs(), a);
    Rational first = hausdorff_distance(a, b);
    CHECK(first == Rational(1, 6));
    Rational expect = first;
    for (int step = 1; step < 6; ++step) {
        CompactSet1D c = hutchinson_apply(cantor_ifs(), b);
        expect = expect / Rational(3);
        REQUIRE(hausdorff_distance(b, c) == expect);
        a = std::move(b);
        b = std::move(c);
    }
}

TEST_CASE("single affine map: attractor is its fixed point") {
    IFS ifs{{ContractionMap::affine(Rational(1, 2), Rational(1, 4))}};
    Rational tol(1, 1 << 20);
    AttractorResult res = solve_attractor(ifs, tol, unit());
    CHECK(res.converged);
    // the unique fixed point 1/2 sits inside every iterate
    CHECK(res.attractor.contains(Rational(1, 2)));
    CHECK(hausdorff_distance(res.attractor,
                             CompactSet1D::from_points({Rational(1, 2)})) <= tol);
}

TEST_CASE("zero-code pair: the two map fixed points lie in the attractor") {
    // a x + b = x  =>  x = b/(1-a): 2/9 and 7/9
    Rational tol(1, 1000000);
    AttractorResult res = solve_attractor(tenth_pair(), tol, unit());
    CHECK(res.attractor.contains(Rational(2, 9)));
    CHECK(res.attractor.contains(Rational(7, 9)));
}

TEST_CASE("operator contraction and a-priori bound") {
    SplitMix64 rng(909);
    IFS ifs = cantor_ifs();
    const Rational l = ifs.max_lip();
    for (int iter = 0; iter < 200; ++iter) {
        CompactSet1D a = oracles::random_point_set(rng, 6);
        CompactSet1D b = oracles::random_point_set(rng, 6);
        REQUIRE(hausdorff_distance(hutchinson_apply(ifs, a), hutchinson_apply(ifs, b)) <=
                l * hausdorff_distance(a, b));
    }

    // a-priori estimate d(A_n, A*) <= L^n/(1-L) d(A_0, A_1), proxied by 2n steps
    CompactSet1D a0 = unit();
    CompactSet1D a1 = hutchinson_apply(ifs, a0);
    Rational d01 = hausdorff_distance(a0, a1);
    const int n = 5;
    CompactSet1D an = a0;
    for (int i = 0; i < n; ++i) an = hutchinson_apply(ifs, an);
    CompactSet1D a2n = an;
    for (int i = 0; i < n; ++i) a2n = hutchinson_apply(ifs, a2n);
    Rational ln = Rational(1);
    for (int i = 0; i < n; ++i) ln = ln * l;
    CHECK(hausdorff_distance(an, a2n) <= ln / (Rational(1) - l) * d01);
}

TEST_CASE("iterate_weak: exact self-map identity gives a zero step") {
    // successor system on {1/2, 1/3, 1/4}: g maps each point one down and is
    // flat below the covered range, h pins the top point
    ContractionMap g = build_interpolant(
        {{Rational(1, 3), Rational(1, 4)}, {Rational(1, 2), Rational(1, 3)}},
        InterpolantTail::constant);
    IFS sys{{g, ContractionMap::constant(Rational(1, 2))}};
    CompactSet1D x = CompactSet1D::from_points(
        {Rational(1, 2), Rational(1, 3), Rational(1, 4)});
    CHECK(hutchinson_apply(sys, x) == x);

    AttractorResult res = iterate_weak(sys, x, Rational(0), 5);
    CHECK(res.converged);
    CHECK(res.iterations == 1);
    CHECK(res.a_posteriori_bound == Rational(0));
    CHECK(res.attractor == x);
}

TEST_CASE("iterate_weak agrees with the strict solver on strict systems") {
    Rational tol(1, 100000);
    AttractorResult strict = solve_attractor(cantor_ifs(), tol, unit());
    AttractorResult weak = iterate_weak(cantor_ifs(), unit(), tol, 100);
    CHECK(weak.converged);
    CHECK(hausdorff_distance(strict.attractor, weak.attractor) <= Rational(2) * tol);
}

TEST_CASE("iterate_weak: max_iter cap sets the stalled flag") {
    AttractorResult res = iterate_weak(cantor_ifs(), unit(), Rational(0), 1);
    CHECK(res.stalled);
    CHECK_FALSE(res.converged);
    CHECK(res.iterations == 1);
    CHECK(res.attractor == hutchinson_apply(cantor_ifs(), unit()));

    // already stationary: one iteration converges
    CompactSet1D fp = CompactSet1D::from_points({Rational(1, 2)});
    IFS constant_half{{ContractionMap::constant(Rational(1, 2))}};
    AttractorResult done = iterate_weak(constant_half, fp, Rational(0), 1);
    CHECK(done.converged);
    CHECK_FALSE(done.stalled);
}

TEST_CASE("solver rejections") {
    IFS weak{{ContractionMap::quadratic_logistic()}};
    CHECK_THROWS(solve_attractor(weak, Rational(1, 100), unit()));
    CHECK_THROWS(solve_attractor(cantor_ifs(), Rational(0), unit()));
    CHECK_THROWS(iterate_weak(cantor_ifs(), unit(), Rational(1, 10), 0));
}
