#include <doctest.h>

#include <stdexcept>

#include "hyperfrac/hausdorff.hpp"
#include "hyperfrac/hutchinson.hpp"
#include "hyperfrac/theorems.hpp"
#include "oracles.hpp"

using namespace hyperfrac;

TEST_CASE("annulus construction: interval recurrence and minimal counts") {
    AnnulusConstruction c = build_prop32_set(3, Rational(1, 2));
    CHECK(c.ok);
    CHECK(c.interval_tops[0] == Rational(1, 2));
    CHECK(c.interval_tops[1] == Rational(1, 4));
    CHECK(c.interval_tops[2] == Rational(3, 16));

    // condition (e) floor: k_1 >= 2, k_2 >= 2 + 2 k_1 + 1
    CHECK(c.counts[0] >= 2);
    CHECK(c.counts[1] >= 2 + 2 * c.counts[0] + 1);

    for (const auto& t : c.conditions) CHECK(t.ok);
    CHECK(verify_prop32(c).ok);
}

TEST_CASE("annulus construction: successor and constant maps reproduce the truncation") {
    AnnulusConstruction c = build_prop32_set(3, Rational(1, 2));
    for (std::size_t i = 0; i + 1 < c.points.size(); ++i)
        REQUIRE(c.g.apply(c.points[i]) == c.points[i + 1]);
    CHECK(c.h.apply(Rational(0)) == c.points.front());
    CHECK(c.h.apply(Rational(17, 23)) == c.points.front());
    CHECK(c.g.lip() < Rational(1));

    // X = g[X] u h[X] exactly on the truncation, so one weak step is stationary
    CompactSet1D x = CompactSet1D::from_points(c.points);
    IFS sys{{c.g, c.h}};
    CHECK(hutchinson_apply(sys, x) == x);
    AttractorResult res = iterate_weak(sys, x, Rational(0), 3);
    CHECK(res.converged);
    CHECK(res.iterations == 1);
    CHECK(res.a_posteriori_bound == Rational(0));
}

TEST_CASE("annulus construction rejects bad parameters") {
    CHECK_THROWS(build_prop32_set(1, Rational(1, 2)));
    CHECK_THROWS(build_prop32_set(3, Rational(1)));
    CHECK_THROWS(build_prop32_set(3, Rational(0)));
}

TEST_CASE("counting check: the proof's chain") {
    CountingCheck good = counting_check(1, 1, {2, 7}, 2);
    CHECK(good.ok);  // 2 > 1, 1*(1+2) = 3 < 2 + 2*2 = 6 < 7

    std::vector<std::int64_t> six(6, 1000000);
    CountingCheck boundary = counting_check(2, 3, six, 6);
    CHECK_FALSE(boundary.ok);  // item (i): 6 > 6 fails
    CHECK_FALSE(boundary.steps[0].ok);

    AnnulusConstruction c = build_prop32_set(3, Rational(1, 2));
    // any n > k|F| with the built counts passes the whole chain
    CountingCheck built = counting_check(1, 1, c.counts, 2);
    CHECK(built.ok);
    CountingCheck built3 = counting_check(1, 2, c.counts, 3);
    CHECK(built3.ok);
}

TEST_CASE("embedded annulus set stays within delta of F") {
    AnnulusConstruction c = build_prop32_set(2, Rational(1, 2));
    CompactSetD f = CompactSetD::from_points(
        2, {{Rational(0), Rational(0)}, {Rational(1), Rational(1)}});
    CompactSetD y = build_prop32_embedded(f, Rational(1, 4), c, {Rational(0), Rational(0)});
    CHECK(y.dim() == 2);
    CHECK(y.contains({Rational(0), Rational(0)}));
    CHECK(y.contains({Rational(1), Rational(1)}));
    // first transported point: w + delta * x_1 = (1/8, 0)
    CHECK(y.contains({Rational(1, 8), Rational(0)}));
    CHECK(hausdorff_distance_squared(y, f) <= Rational(1, 16));
    CHECK(y.points().size() == f.points().size() + c.points.size() + 1 - 1);

    CHECK_THROWS(build_prop32_embedded(f, Rational(3, 4), c, {Rational(0), Rational(0)}));
    CHECK_THROWS(build_prop32_embedded(f, Rational(1, 4), c, {Rational(1, 2), Rational(0)}));
}

TEST_CASE("strong porosity witness: the pinned singleton example") {
    CompactSetD f = CompactSetD::from_points(1, {{Rational(1, 2)}});
    StrongPorosityWitness w = prop33_witness(f, {Rational(1, 2)}, 3);
    CHECK(w.ok);
    CHECK(w.radii[0] == Rational(1, 8));
    CHECK(w.y_points[0] == CompactSetD::Point{Rational(3, 8)});
    CHECK(w.z_points[0] == CompactSetD::Point{Rational(5, 8)});
    CHECK(w.witness_sets[0] ==
          CompactSetD::from_points(1, {{Rational(3, 8)}, {Rational(5, 8)}}));
    // open balls (1/4, 1/2) and (1/2, 3/4) are disjoint; exact equality of
    // d_H with r_n is part of the stored checks
    CHECK(verify_prop33(w).ok);
    for (std::size_t i = 0; i < w.radii.size(); ++i) {
        REQUIRE(hausdorff_distance_squared(w.witness_sets[i], f) ==
                w.radii[i] * w.radii[i]);
    }
}

TEST_CASE("strong porosity witness: d = 2, no |F|-point set comes closer than r_n") {
    CompactSetD f = CompactSetD::from_points(2, {{Rational(1, 10), Rational(1, 10)},
                                                 {Rational(1, 2), Rational(1, 2)},
                                                 {Rational(9, 10), Rational(1, 10)}});
    StrongPorosityWitness w = prop33_witness(f, {Rational(1, 2), Rational(1, 2)}, 4);
    CHECK(w.ok);
    CHECK(verify_prop33(w).ok);

    SplitMix64 rng(1234);
    const std::size_t fsize = f.points().size();
    for (int iter = 0; iter < 1000; ++iter) {
        std::size_t step = rng.next_below(w.radii.size());
        std::vector<CompactSetD::Point> pts;
        for (std::size_t i = 0; i < fsize; ++i)
            pts.push_back({Rational(static_cast<std::int64_t>(rng.next_below(1001)), 1000),
                           Rational(static_cast<std::int64_t>(rng.next_below(1001)), 1000)});
        CompactSetD h = CompactSetD::from_points(2, std::move(pts));
        // |H| = |F| forces d_H(H, G_n) >= r_n
        REQUIRE(hausdorff_distance_squared(h, w.witness_sets[step]) >=
                w.radii[step] * w.radii[step]);
    }

    // the adversarial collapse H = F sits exactly at distance r_n
    for (std::size_t i = 0; i < w.radii.size(); ++i)
        REQUIRE(hausdorff_distance_squared(f, w.witness_sets[i]) ==
                w.radii[i] * w.radii[i]);
}

TEST_CASE("strong porosity witness rejections") {
    CompactSetD corner = CompactSetD::from_points(2, {{Rational(0), Rational(1)}});
    CHECK_THROWS_WITH_AS(prop33_witness(corner, {Rational(0), Rational(1)}, 2),
                         doctest::Contains("corner"), std::invalid_argument);
    CompactSetD f = CompactSetD::from_points(1, {{Rational(1, 2)}});
    CHECK_THROWS(prop33_witness(f, {Rational(1, 4)}, 2));  // x not in F
}

TEST_CASE("thm41: trivial case, bracket arithmetic, hypothesis rejection") {
    Code e = midpoint_code({{Rational(1, 4), Rational(3, 4)},
                            {Rational(-1), Rational(0)}},
                           8);
    // Y equal to the depth-m truncation: delta = 0, H = E
    CompactSet1D y0 = expand(e, 8);
    Thm41Certificate trivial = thm41_witness_search(e, 2, y0, 8);
    CHECK(trivial.trivial);
    CHECK(trivial.ok);
    CHECK(trivial.delta == Rational(0));
    CHECK(expand(trivial.h_code, 8) == y0);
    CHECK(verify_thm41(trivial).ok);

    // delta = 3/1000 lands in [1/2000, 1/200): j = 2 and 16 level-4 intervals
    CompactSet1D shifted = dilate(y0, Rational(3, 1000));
    Thm41Certificate cert = thm41_witness_search(e, 2, shifted, 8);
    CHECK(cert.delta == Rational(3, 1000));
    CHECK(cert.j == 2);
    CHECK(cert.level_intervals.size() == 16);
    CHECK(cert.ok);
    CHECK(verify_thm41(cert).ok);

    // outside the hypothesis: delta >= epsilon
    CompactSet1D far = dilate(y0, Rational(1, 100));
    CHECK_THROWS_WITH_AS(thm41_witness_search(e, 2, far, 8),
                         doctest::Contains("hypothesis"), std::invalid_argument);

    // nonzero tail beyond k is rejected
    std::vector<Rational> bad_entries{Rational(0), Rational(0), Rational(1, 2)};
    CHECK_THROWS(thm41_witness_search(Code(bad_entries, 8), 2, y0, 8));
}

TEST_CASE("thm41: seeded trials meet the 0.99 delta bound with slack") {
    Code e = midpoint_code({{Rational(1, 4), Rational(3, 4)},
                            {Rational(-1), Rational(0)}},
                           4);
    for (std::uint64_t t = 0; t < 20; ++t) {
        Thm41Certificate cert = thm41_trial(e, 2, 42, t);
        REQUIRE(cert.ok);
        REQUIRE(cert.m == cert.j + 6);
        REQUIRE(cert.delta > Rational(0));
        REQUIRE(cert.delta < cert.epsilon);
        REQUIRE(cert.final_distance <=
                cert.delta * Rational(99, 100) + Rational::pow10(-cert.m));
        REQUIRE(expand(cert.h_code, cert.j + 2).component_count() ==
                cert.level_intervals.size());
        for (const auto& v : cert.chosen) REQUIRE(v.abs() > cert.band);
        REQUIRE(verify_thm41(cert).ok);
    }
}

TEST_CASE("sample_Y: determinism, bounds, seed-0 identity") {
    Code e = Code({}, 9);
    auto [n, epsilon] = epsilon_for_k(2);
    CHECK(n == 2);

    CompactSet1D a = sample_Y(e, epsilon, 9, 7);
    CompactSet1D b = sample_Y(e, epsilon, 9, 7);
    CHECK(a == b);
    CompactSet1D c = sample_Y(e, epsilon, 9, 8);
    CHECK(a != c);

    CompactSet1D em = expand(e, 9);
    Rational delta = hausdorff_distance(a, em);
    CHECK(delta > Rational(0));
    CHECK(delta < epsilon);

    CHECK(sample_Y(e, epsilon, 9, 0) == em);

    // single-point perturbation: delta bounded by the shift
    std::vector<Rational> pts;
    for (const auto& iv : em.intervals()) {
        pts.push_back(iv.lo);
        pts.push_back(iv.hi);
    }
    Rational eta(1, 4096);
    pts[0] -= eta;
    Rational d = hausdorff_distance(CompactSet1D::from_points(pts), em);
    CHECK(d <= eta);
}
