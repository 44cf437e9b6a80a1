// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criterion 8 drives the CLI binary (path via --cli) and compares
// certificate bytes across reruns.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hyperfrac/hausdorff.hpp"
#include "hyperfrac/hutchinson.hpp"
#include "hyperfrac/json_io.hpp"
#include "hyperfrac/rng.hpp"
#include "hyperfrac/theorems.hpp"
#include "oracles.hpp"

using namespace hyperfrac;
namespace fs = std::filesystem;

namespace {

struct Criterion {
    int index;
    std::string name;
    long long budget_ms;
    std::function<void()> body;  // throws on failure
};

std::string g_cli_path;
fs::path g_workdir = "acceptance_tmp";

void expect(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error(what);
}

// --- criterion 1: metric suite ---------------------------------------------

void metric_suite() {
    SplitMix64 rng(20240501);
    for (int iter = 0; iter < 10000; ++iter) {
        CompactSet1D a = oracles::random_point_set(rng, 6);
        CompactSet1D b = oracles::random_point_set(rng, 6);
        CompactSet1D c = oracles::random_point_set(rng, 6);
        Rational ab = hausdorff_distance(a, b);
        Rational bc = hausdorff_distance(b, c);
        Rational ac = hausdorff_distance(a, c);
        expect(ab == hausdorff_distance(b, a), "symmetry");
        expect((ab == Rational(0)) == (a == b), "identity of indiscernibles");
        expect(hausdorff_distance(a, a) == Rational(0), "d(A,A) = 0");
        expect(ac <= ab + bc, "triangle inequality");
    }
    // translation invariance + scaling homogeneity, exact via squared values
    for (int iter = 0; iter < 10000; ++iter) {
        std::size_t dim = 1 + rng.next_below(3);
        auto make = [&](std::size_t count) {
            std::vector<CompactSetD::Point> p;
            for (std::size_t i = 0; i < count; ++i) {
                CompactSetD::Point q;
                for (std::size_t cyc = 0; cyc < dim; ++cyc)
                    q.push_back(Rational(
                        static_cast<std::int64_t>(rng.next_below(101)), 202));
                p.push_back(std::move(q));
            }
            return CompactSetD::from_points(dim, std::move(p));
        };
        CompactSetD a = make(1 + rng.next_below(4));
        CompactSetD b = make(1 + rng.next_below(4));
        Rational r(1 + static_cast<std::int64_t>(rng.next_below(4)), 4);
        CompactSetD::Point x(dim, Rational(1, 4));
        expect(hausdorff_distance_squared(scale_translate(a, r, x),
                                          scale_translate(b, r, x)) ==
                   r * r * hausdorff_distance_squared(a, b),
               "translation/scaling of d_H");
    }
    // embed isometry
    for (int iter = 0; iter < 10000; ++iter) {
        CompactSet1D p = oracles::random_point_set(rng, 6);
        CompactSet1D q = oracles::random_point_set(rng, 6);
        expect(hausdorff_distance(embed(p, 3), embed(q, 3)) == hausdorff_distance(p, q),
               "embed isometry");
    }
}

// --- criterion 2: Hutchinson certificate ------------------------------------

void hutchinson_certificate() {
    IFS cantor{{ContractionMap::affine(Rational(1, 3), Rational(0)),
                ContractionMap::affine(Rational(1, 3), Rational(2, 3))}};
    const Rational tol = Rational(1) / Rational(BigInt::pow(BigInt(3), 10), BigInt(1));
    CompactSet1D unit = CompactSet1D::from_intervals({{Rational(0), Rational(1)}});

    AttractorResult res = solve_attractor(cantor, tol, unit);
    expect(res.converged, "solver converged");
    expect(res.a_posteriori_bound <= tol, "bound at tol");

    const Rational rate = Rational(1, 3) / (Rational(1) - Rational(1, 3));
    CompactSet1D prev = unit;
    for (int step = 1; step <= res.iterations; ++step) {
        CompactSet1D cur = hutchinson_apply(cantor, prev);
        expect(cur == CompactSet1D::from_intervals(oracles::cantor_depth(step)),
               "solver step " + std::to_string(step) + " matches the recursion oracle");
        if (step == res.iterations) {
            expect(cur == res.attractor, "final iterate");
            expect(rate * hausdorff_distance(prev, cur) == res.a_posteriori_bound,
                   "reported bound");
        }
        prev = std::move(cur);
    }
    // bound dominates the distance to the 2n-step iterate; the iterates are
    // nested, so d_H reduces to the one directed sup
    CompactSet1D deep =
        CompactSet1D::from_intervals(oracles::cantor_depth(2 * res.iterations));
    expect(subset_of(deep, res.attractor), "iterates are nested");
    expect(res.a_posteriori_bound >= directed_hausdorff(res.attractor, deep),
           "a-posteriori bound dominates the 2n-step distance");
}

// --- criterion 3: coded-family geometry -------------------------------------

void coded_geometry() {
    SplitMix64 rng(77);
    for (int iter = 0; iter < 1000; ++iter) {
        std::vector<Rational> entries(Code::full_length(6));
        for (auto& e : entries)
            e = Rational(static_cast<std::int64_t>(rng.next_below(193)) - 96, 64);
        Code c(std::move(entries), 6);
        SeparationCertificate cert = verify_separation(c, 6);
        expect(cert.ok, "separation certificate");
        for (int level = 1; level <= 6; ++level)
            expect(cert.min_gap_per_level[static_cast<std::size_t>(level) - 1] >=
                       Rational::pow10(-(level + 1)),
                   "sibling gap floor at level " + std::to_string(level));
        CompactSet1D prev = expand(c, 1);
        expect(prev.intervals()[0].lo >= Rational(1, 20) &&
                   prev.intervals()[0].hi <= Rational(9, 20),
               "level-1 left containment box");
        expect(prev.intervals()[1].lo >= Rational(11, 20) &&
                   prev.intervals()[1].hi <= Rational(19, 20),
               "level-1 right containment box");
        for (int d = 2; d <= 6; ++d) {
            CompactSet1D cur = expand(c, d);
            expect(subset_of(cur, prev), "nesting depth " + std::to_string(d));
            prev = std::move(cur);
        }
    }
    Code extreme({Rational(3, 2), Rational(-3, 2)}, 1);
    expect(verify_separation(extreme, 1).min_gap_per_level[0] == Rational(1, 10),
           "extreme level-1 gap is exactly 1/10");
}

// --- criterion 4: theorem 4.1 Monte Carlo ------------------------------------

Code acceptance_code_k2() {
    return midpoint_code({{Rational(1, 4), Rational(3, 4)}, {Rational(-1), Rational(0)}},
                         2);
}

Code acceptance_code_k6() {
    return midpoint_code({{Rational(0), Rational(1)},
                          {Rational(-1), Rational(0)},
                          {Rational(-3, 2), Rational(-1, 2)},
                          {Rational(1, 2), Rational(3, 2)},
                          {Rational(-1, 4), Rational(1, 4)},
                          {Rational(3, 4), Rational(5, 4)}},
                         3);
}

void thm41_monte_carlo(const Code& e, std::int64_t k, int trials) {
    for (int t = 0; t < trials; ++t) {
        Thm41Certificate cert = thm41_trial(e, k, 1, static_cast<std::uint64_t>(t));
        expect(cert.ok, "trial " + std::to_string(t) + " search failed: " + cert.failure);
        expect(cert.delta > Rational(0) && cert.delta < cert.epsilon,
               "trial delta inside (0, epsilon)");
        expect(cert.m == cert.j + 6, "m pinned to j + 6");
        expect(cert.final_distance <=
                   cert.delta * Rational(99, 100) + Rational::pow10(-cert.m),
               "0.99 delta + slack bound");
        // internal inequalities replay bit-exactly
        ReplayResult replay = verify_thm41(cert);
        expect(replay.ok, "trial " + std::to_string(t) + " replay: " +
                              replay.first_mismatch);
    }
}

// --- criterion 5: annulus construction ---------------------------------------

void prop32_construction() {
    AnnulusConstruction c = build_prop32_set(4, Rational(1, 2));
    expect(c.ok, "construction verified");
    expect(c.interval_tops[0] == Rational(1, 2) &&
               c.interval_tops[1] == Rational(1, 4) &&
               c.interval_tops[2] == Rational(3, 16),
           "t recurrence 1/2, 1/4, 3/16");
    for (const auto& trace : c.conditions)
        expect(trace.ok, "condition " + trace.name);

    // weak-contraction pair checks over every truncated point, both maps
    expect(is_weak_contraction_on(c.g, c.points).ok, "g pair checks");
    expect(is_weak_contraction_on(c.h, c.points).ok, "h pair checks");
    for (std::size_t i = 0; i + 1 < c.points.size(); ++i)
        expect(c.g.apply(c.points[i]) == c.points[i + 1], "g successor identity");
    expect(c.h.apply(Rational(1, 3)) == c.points.front(), "h constant identity");

    // the proof's counting chain with the built counts, n > k|F|
    expect(counting_check(1, 1, c.counts, 2).ok, "counting chain (|F|=1, k=1, n=2)");
    expect(counting_check(1, 3, c.counts, 4).ok, "counting chain (|F|=1, k=3, n=4)");
    expect(verify_prop32(c).ok, "replay");
}

// --- criterion 6: strong porosity witness ------------------------------------

void prop33_witness_suite() {
    auto falsify = [](const CompactSetD& f, const StrongPorosityWitness& w,
                      std::uint64_t seed, std::size_t dim) {
        SplitMix64 rng(seed);
        const std::size_t fsize = f.points().size();
        for (int iter = 0; iter < 10000; ++iter) {
            std::size_t step = rng.next_below(w.radii.size());
            std::vector<CompactSetD::Point> pts;
            for (std::size_t i = 0; i < fsize; ++i) {
                CompactSetD::Point p;
                for (std::size_t c = 0; c < dim; ++c)
                    p.push_back(Rational(
                        static_cast<std::int64_t>(rng.next_below(1001)), 1000));
                pts.push_back(std::move(p));
            }
            CompactSetD h = CompactSetD::from_points(dim, std::move(pts));
            expect(hausdorff_distance_squared(h, w.witness_sets[step]) >=
                       w.radii[step] * w.radii[step],
                   "3-point set slipped inside open distance r_n");
        }
    };

    CompactSetD f1 = CompactSetD::from_points(
        1, {{Rational(1, 10)}, {Rational(1, 2)}, {Rational(9, 10)}});
    StrongPorosityWitness w1 = prop33_witness(f1, {Rational(1, 2)}, 6);
    expect(w1.ok, "d=1 witness checks");
    for (std::size_t i = 0; i < w1.radii.size(); ++i)
        expect(hausdorff_distance_squared(w1.witness_sets[i], f1) ==
                   w1.radii[i] * w1.radii[i],
               "d=1 ratio r_n/d_H = 1 exactly");
    falsify(f1, w1, 555, 1);

    CompactSetD f2 = CompactSetD::from_points(2, {{Rational(1, 10), Rational(1, 10)},
                                                  {Rational(1, 2), Rational(1, 2)},
                                                  {Rational(9, 10), Rational(1, 10)}});
    StrongPorosityWitness w2 = prop33_witness(f2, {Rational(1, 2), Rational(1, 2)}, 6);
    expect(w2.ok, "d=2 witness checks");
    for (std::size_t i = 0; i < w2.radii.size(); ++i)
        expect(hausdorff_distance_squared(w2.witness_sets[i], f2) ==
                   w2.radii[i] * w2.radii[i],
               "d=2 ratio r_n/d_H = 1 exactly");
    falsify(f2, w2, 556, 2);

    expect(verify_prop33(w1).ok && verify_prop33(w2).ok, "replay");
}

// --- criterion 7: porosity-ratio sanity --------------------------------------

void porosity_sanity() {
    CompactSet1D a = CompactSet1D::from_intervals({{Rational(2, 5), Rational(3, 5)}});
    expect(porosity_ratio_line(a, Rational(7, 10), Rational(1, 20)).ratio == Rational(1),
           "ratio 1 when the ball misses A");
    expect(porosity_ratio_line(a, Rational(1, 2), Rational(1, 20)).ratio == Rational(0),
           "ratio 0 when the ball sits inside A");

    const int m = 5;
    CompactSet1D cantor = CompactSet1D::from_intervals(oracles::cantor_depth(m));
    Rational radius = Rational(1) / Rational(BigInt::pow(BigInt(3), m - 1), BigInt(1));
    PorosityRatioReport rep = porosity_ratio_line(cantor, Rational(0), radius);
    Rational oracle = oracles::porosity_gap_scan(cantor.intervals(), Rational(0), radius);
    expect(rep.best_gap_radius == oracle, "gap oracle agreement");
    expect(rep.ratio >= Rational(1, 6), "Cantor-at-0 ratio >= 1/6");
    expect(rep.ratio <= Rational(1, 2), "closure-point ratio cap 1/2");
}

// --- criterion 8: determinism / replay through the CLI ------------------------

int run_cli(const std::string& args, const std::string& log_name) {
    fs::path log = g_workdir / log_name;
    std::string cmd = "\"" + g_cli_path + "\" " + args + " > \"" + log.string() +
                      "\" 2>&1";
    int rc = std::system(cmd.c_str());
    if (rc == -1) throw std::runtime_error("system() failed for: " + cmd);
#ifdef WEXITSTATUS
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
#else
    return rc;
#endif
}

std::map<std::string, std::string> slurp_dir(const fs::path& dir) {
    std::map<std::string, std::string> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        std::ifstream in(entry.path(), std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        files[entry.path().filename().string()] = ss.str();
    }
    return files;
}

void determinism_replay() {
    expect(!g_cli_path.empty(), "CLI path not supplied (--cli)");
    fs::create_directories(g_workdir);
    const fs::path code2 = g_workdir / "code_k2.json";
    const fs::path code6 = g_workdir / "code_k6.json";
    io::save_json(code2.string(), io::code_to_json(acceptance_code_k2()));
    io::save_json(code6.string(), io::code_to_json(acceptance_code_k6()));

    struct Run { const fs::path* code; std::int64_t k; int trials; const char* dir; };
    const fs::path out_a2 = g_workdir / "certs_k2_a", out_b2 = g_workdir / "certs_k2_b";
    const fs::path out_a6 = g_workdir / "certs_k6_a", out_b6 = g_workdir / "certs_k6_b";
    for (const auto& p : {out_a2, out_b2, out_a6, out_b6}) fs::remove_all(p);

    auto thm41_args = [&](const fs::path& code, std::int64_t k, int trials,
                          const fs::path& out) {
        std::ostringstream ss;
        ss << "thm41 \"" << code.string() << "\" --k " << k << " --seed 1 --trials "
           << trials << " --out \"" << out.string() << "\"";
        return ss.str();
    };
    expect(run_cli(thm41_args(code2, 2, 200, out_a2), "thm41_k2_a.log") == 0,
           "CLI thm41 k=2 run A");
    expect(run_cli(thm41_args(code2, 2, 200, out_b2), "thm41_k2_b.log") == 0,
           "CLI thm41 k=2 run B");
    expect(run_cli(thm41_args(code6, 6, 50, out_a6), "thm41_k6_a.log") == 0,
           "CLI thm41 k=6 run A");
    expect(run_cli(thm41_args(code6, 6, 50, out_b6), "thm41_k6_b.log") == 0,
           "CLI thm41 k=6 run B");

    expect(slurp_dir(out_a2) == slurp_dir(out_b2), "k=2 reruns byte-identical");
    expect(slurp_dir(out_a6) == slurp_dir(out_b6), "k=6 reruns byte-identical");
    expect(slurp_dir(out_a2).size() == 201, "200 certificates + summary");

    expect(run_cli("verify \"" + out_a2.string() + "\" \"" + out_a6.string() + "\"",
                   "verify.log") == 0,
           "cmd_verify replays every certificate from disk");
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; i += 2) {
        std::string flag = argv[i];
        if (flag == "--cli") g_cli_path = argv[i + 1];
        else if (flag == "--workdir") g_workdir = argv[i + 1];
    }
    fs::create_directories(g_workdir);

    std::vector<Criterion> criteria{
        {1, "metric suite (10^4 exact triples + transforms + embed)", 10000,
         metric_suite},
        {2, "Hutchinson certificate vs interval recursion oracle", 1000,
         hutchinson_certificate},
        {3, "coded-family geometry (1000 random depth-6 codes)", 10000, coded_geometry},
        {4, "theorem 4.1 Monte Carlo k=2 (200 trials)", 60000,
         [] { thm41_monte_carlo(acceptance_code_k2(), 2, 200); }},
        {4, "theorem 4.1 Monte Carlo k=6 (50 trials)", 120000,
         [] { thm41_monte_carlo(acceptance_code_k6(), 6, 50); }},
        {5, "annulus construction N=4 (conditions a-e, maps, counting)", 5000,
         prop32_construction},
        {6, "strong porosity witnesses d=1,2 (10^4 falsification attempts)", 30000,
         prop33_witness_suite},
        {7, "porosity-ratio sanity", 1000, porosity_sanity},
        {8, "determinism and certificate replay via the CLI", 60000, determinism_replay},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            c.body();
        } catch (const std::exception& ex) {
            error = ex.what();
        }
        long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        bool ok = error.empty() && ms < c.budget_ms;
        if (!ok) ++failures;
        std::printf("[%s] criterion %d: %s (%lld ms, budget %lld ms)%s%s\n",
                    ok ? "PASS" : "FAIL", c.index, c.name.c_str(), ms, c.budget_ms,
                    error.empty() ? "" : " -- ", error.c_str());
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all acceptance criteria passed\n");
    return failures == 0 ? 0 : 1;
}
