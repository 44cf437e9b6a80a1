#include "hyperfrac/theorems.hpp"

#include <algorithm>
#include <stdexcept>

#include "hyperfrac/hausdorff.hpp"
#include "hyperfrac/rng.hpp"

namespace hyperfrac {

namespace {

const Rational kZero(0);
const Rational kHalf(1, 2);
const Rational kShiftBound(3, 2);

Rational squared_distance(const CompactSetD::Point& p, const CompactSetD::Point& q) {
    Rational s(0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        Rational d = p[i] - q[i];
        s += d * d;
    }
    return s;
}

/// least squared pairwise distance; nullopt for singletons
std::optional<Rational> min_pairwise_squared(const CompactSetD& f) {
    std::optional<Rational> best;
    const auto& pts = f.points();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            Rational d = squared_distance(pts[i], pts[j]);
            if (!best || d < *best) best = std::move(d);
        }
    return best;
}

std::vector<ClosedInterval> intersect_union(const std::vector<ClosedInterval>& u,
                                            const Rational& lo, const Rational& hi) {
    std::vector<ClosedInterval> out;
    for (const auto& iv : u) {
        Rational l = max(iv.lo, lo), h = min(iv.hi, hi);
        if (l < h) out.push_back({std::move(l), std::move(h)});  // positive width only
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Annulus construction
// ---------------------------------------------------------------------------

namespace {

struct AnnulusPlacement {
    std::vector<Rational> points;  // descending, within (bottom, top_entry]
    Rational last_gap;
};

/// Places `count` points descending from just below `entry_point` (or at it
/// for the first annulus) down to within one gap of `bottom`, with strictly
/// decreasing gaps bounded by `cross_gap` when present. Gap decay is
/// geometric with the given ratio; all values are rounded onto a dyadic grid
/// so precision stays bounded, and every constraint is re-checked exactly.
std::optional<AnnulusPlacement> try_place(const Rational& start,
                                          const Rational& bottom,
                                          const std::optional<Rational>& cross_gap,
                                          std::int64_t count, const Rational& ratio) {
    constexpr unsigned kGrid = 96;
    const Rational span = start - bottom;
    if (span.sign() <= 0 || count < 2) return std::nullopt;

    // unit gap profile u_i = ratio^i rounded down; strictly decreasing
    std::vector<Rational> unit(static_cast<std::size_t>(count) - 1);
    unit[0] = Rational(1);
    for (std::size_t i = 1; i < unit.size(); ++i) {
        unit[i] = (unit[i - 1] * ratio).round_down_dyadic(kGrid);
        if (unit[i].sign() <= 0) return std::nullopt;
    }
    Rational total(0);
    for (const auto& u : unit) total += u;
    const Rational& tail = unit.back();

    // first gap sized so the run ends about half a tail-gap above `bottom`
    Rational gamma = (span / (total + tail / Rational(2))).round_down_dyadic(kGrid);
    if (gamma.sign() <= 0) return std::nullopt;
    if (cross_gap && !(gamma < *cross_gap)) return std::nullopt;

    Rational descent = gamma * total;
    if (!(descent < span)) return std::nullopt;                  // stay above bottom
    if (!(span - descent < gamma * tail)) return std::nullopt;   // end within last gap

    AnnulusPlacement out;
    out.points.reserve(static_cast<std::size_t>(count));
    Rational cur = start;
    out.points.push_back(cur);
    for (const auto& u : unit) {
        cur -= gamma * u;
        out.points.push_back(cur);
    }
    out.last_gap = gamma * tail;
    return out;
}

}  // namespace

AnnulusConstruction build_prop32_set(int annuli, const Rational& gap_ratio) {
    if (annuli < 2) throw std::invalid_argument("build_prop32_set: need at least 2 annuli");
    if (!(gap_ratio > kZero && gap_ratio < Rational(1)))
        throw std::invalid_argument("build_prop32_set: gap ratio must be in (0,1)");

    AnnulusConstruction c;
    c.annuli = annuli;
    c.requested_ratio = gap_ratio;

    // I_1 = [0, 1/2], I_{n+1} = [0, f(max I_n)] with f(x) = x - x^2
    c.interval_tops.push_back(kHalf);
    for (int i = 0; i < annuli; ++i) {
        const Rational& t = c.interval_tops.back();
        c.interval_tops.push_back(t - t * t);
    }

    std::int64_t placed_sum = 0;
    std::optional<Rational> cross_gap;  // last internal gap of the previous annulus
    for (int n = 1; n <= annuli; ++n) {
        const Rational& top = c.interval_tops[static_cast<std::size_t>(n) - 1];
        const Rational& bottom = c.interval_tops[static_cast<std::size_t>(n)];
        std::int64_t k = static_cast<std::int64_t>(n) + n * placed_sum + 1;  // minimal for (e)

        std::optional<AnnulusPlacement> placement;
        std::optional<Rational> crossing;
        for (int k_bump = 0; k_bump < 24 && !placement; ++k_bump) {
            // entry point: at the top for the first annulus, otherwise a
            // crossing gap strictly inside (p - top, min(cross_gap, p - bottom))
            Rational start = top;
            if (n > 1) {
                const Rational& p = c.points.back();
                Rational lo = p - top;
                Rational hi = min(*cross_gap, p - bottom);
                if (!(lo < hi))
                    throw std::runtime_error(
                        "build_prop32_set: no room for the crossing gap into annulus " +
                        std::to_string(n));
                Rational delta = ((lo + hi) / Rational(2)).round_down_dyadic(96);
                if (!(lo < delta && delta < hi)) delta = (lo + hi) / Rational(2);
                crossing = delta;
                start = p - delta;
            }
            for (int a = 0; a <= 10 && !placement; ++a) {
                // flatten the decay toward 1 when the hand-off squeezes the gaps
                Rational rho = Rational(1) - (Rational(1) - gap_ratio) /
                                                 Rational(std::int64_t{1} << a);
                placement = try_place(start, bottom, n > 1 ? crossing : std::nullopt,
                                      k, rho);
            }
            if (!placement) k = 2 * k + 1;
        }
        if (!placement)
            throw std::runtime_error(
                "build_prop32_set: condition (c) infeasible at annulus " +
                std::to_string(n) + " (bad gap ratio)");

        c.points.insert(c.points.end(), placement->points.begin(), placement->points.end());
        c.counts.push_back(static_cast<std::int64_t>(placement->points.size()));
        placed_sum += c.counts.back();
        cross_gap = placement->last_gap;
    }

    // recount annulus membership straight from the points
    {
        std::vector<std::int64_t> recount(static_cast<std::size_t>(annuli), 0);
        for (const auto& x : c.points) {
            for (int n = 1; n <= annuli; ++n) {
                if (c.interval_tops[static_cast<std::size_t>(n)] < x &&
                    x <= c.interval_tops[static_cast<std::size_t>(n) - 1]) {
                    ++recount[static_cast<std::size_t>(n) - 1];
                    break;
                }
            }
        }
        if (recount != c.counts)
            throw std::runtime_error("build_prop32_set: annulus recount mismatch");
    }

    // conditions (a)-(e), exactly
    bool all_ok = true;
    auto add = [&](const std::string& name, bool ok, const std::string& detail) {
        c.conditions.push_back({name, ok, detail});
        all_ok = all_ok && ok;
    };
    {
        bool ok = true;
        for (const auto& x : c.points)
            if (x < kZero || x > kHalf) { ok = false; break; }
        add("(a) x_n in I_1", ok, "all points within [0, 1/2]");
    }
    {
        bool ok = true;
        for (std::size_t i = 0; i + 1 < c.points.size(); ++i)
            if (!(c.points[i + 1] < c.points[i])) { ok = false; break; }
        add("(b) x_{n+1} < x_n", ok, "strictly decreasing");
    }
    {
        bool ok = true;
        for (std::size_t i = 0; i + 2 < c.points.size(); ++i) {
            Rational g1 = c.points[i] - c.points[i + 1];
            Rational g2 = c.points[i + 1] - c.points[i + 2];
            if (!(g2 < g1)) { ok = false; break; }
        }
        add("(c) gaps strictly decreasing", ok,
            std::to_string(c.points.size() - 1) + " consecutive gaps compared");
    }
    add("(d) each annulus count finite", true,
        "counts recomputed from the points themselves");
    {
        bool ok = true;
        std::string detail;
        std::int64_t acc = 0;
        for (int n = 1; n <= annuli; ++n) {
            std::int64_t need = n + n * acc;
            std::int64_t have = c.counts[static_cast<std::size_t>(n) - 1];
            if (!(have > need)) {
                ok = false;
                detail = "k_" + std::to_string(n) + " = " + std::to_string(have) +
                         " <= " + std::to_string(need);
                break;
            }
            acc += have;
        }
        if (ok) detail = "k_n > n + n*sum(k_i) for every annulus";
        add("(e) k_n > n + n*sum k_i", ok, detail);
    }

    // g: successor interpolant through (x_i, x_{i+1}); flat below the last
    // covered input, so the final point is its fixed point and
    // g[X] u h[X] = X exactly on the truncation
    std::vector<Breakpoint> bps;
    bps.reserve(c.points.size() - 1);
    for (std::size_t i = c.points.size() - 1; i >= 1; --i)
        bps.push_back({c.points[i - 1], c.points[i]});
    std::sort(bps.begin(), bps.end(),
              [](const Breakpoint& a, const Breakpoint& b) { return a.x < b.x; });
    c.g = build_interpolant(std::move(bps), InterpolantTail::constant);
    c.h = ContractionMap::constant(c.points.front());

    {
        bool ok = true;
        for (std::size_t i = 0; i + 1 < c.points.size(); ++i)
            if (c.g.apply(c.points[i]) != c.points[i + 1]) { ok = false; break; }
        add("g(x_i) = x_{i+1}", ok, "exact on every successor pair");
    }
    add("h = const x_1", c.h.constant_value() == c.points.front(), "h(x) = x_1");

    c.ok = all_ok && c.conditions[5].ok && c.conditions[6].ok;
    if (!c.ok)
        throw std::runtime_error("build_prop32_set: verification failed: " +
                                 [&] {
                                     for (const auto& t : c.conditions)
                                         if (!t.ok) return t.name + ": " + t.detail;
                                     return std::string("unknown");
                                 }());
    return c;
}

CountingCheck counting_check(std::int64_t f_size, std::int64_t k,
                             const std::vector<std::int64_t>& counts, std::int64_t n) {
    if (n < 1 || static_cast<std::size_t>(n) > counts.size())
        throw std::invalid_argument("counting_check: need n <= len(counts)");
    if (f_size < 1 || k < 1) throw std::invalid_argument("counting_check: |F|, k >= 1");

    BigInt sum(0);
    for (std::int64_t i = 0; i + 1 < n; ++i)
        sum = sum + BigInt(counts[static_cast<std::size_t>(i)]);
    BigInt lhs = BigInt(k) * (BigInt(f_size) + sum);       // covering cardinality cap
    BigInt mid = BigInt(n) + BigInt(n) * sum;              // the (e) threshold
    BigInt kn(counts[static_cast<std::size_t>(n) - 1]);

    CountingCheck cc;
    bool i1 = n > k * f_size;
    cc.steps.push_back({"(i) n > k*|F|",
                        i1,
                        std::to_string(n) + (i1 ? " > " : " <= ") +
                            std::to_string(k * f_size)});
    bool i2 = lhs < mid;
    cc.steps.push_back({"k*(|F|+sum) < n + n*sum",
                        i2,
                        lhs.to_decimal() + (i2 ? " < " : " >= ") + mid.to_decimal()});
    bool i3 = mid < kn;
    cc.steps.push_back({"n + n*sum < k_n",
                        i3,
                        mid.to_decimal() + (i3 ? " < " : " >= ") + kn.to_decimal()});
    cc.ok = i1 && i2 && i3;
    return cc;
}

CompactSetD build_prop32_embedded(const CompactSetD& f, const Rational& delta,
                                  const AnnulusConstruction& xs,
                                  const CompactSetD::Point& w) {
    if (delta.sign() <= 0)
        throw std::invalid_argument("build_prop32_embedded: delta must be > 0");
    if (!f.contains(w))
        throw std::invalid_argument("build_prop32_embedded: w not a point of F");
    if (auto mp = min_pairwise_squared(f)) {
        Rational twice = Rational(2) * delta;
        if (!(twice * twice < *mp))
            throw std::invalid_argument(
                "build_prop32_embedded: 2*delta must stay below the least pairwise "
                "distance of F");
    }
    std::vector<Rational> xvals = xs.points;
    xvals.push_back(kZero);  // the limit point of X
    CompactSetD transported =
        scale_translate(embed(CompactSet1D::from_points(std::move(xvals)), f.dim()),
                        delta, w);
    std::vector<CompactSetD::Point> pts = f.points();
    pts.insert(pts.end(), transported.points().begin(), transported.points().end());
    CompactSetD out = CompactSetD::from_points(f.dim(), std::move(pts));

    Rational dh2 = hausdorff_distance_squared(out, f);
    if (!(dh2 <= delta * delta))
        throw std::runtime_error("build_prop32_embedded: d_H(Y, F) exceeded delta");
    return out;
}

// ---------------------------------------------------------------------------
// Strong porosity witness
// ---------------------------------------------------------------------------

StrongPorosityWitness prop33_witness(const CompactSetD& f, const CompactSetD::Point& x,
                                     int count) {
    if (count < 1) throw std::invalid_argument("prop33_witness: count must be >= 1");
    if (x.size() != f.dim()) throw std::invalid_argument("prop33_witness: arity mismatch");
    if (!f.contains(x)) throw std::invalid_argument("prop33_witness: x not a point of F");

    std::size_t axis = f.dim();
    for (std::size_t cidx = 0; cidx < x.size(); ++cidx) {
        if (kZero < x[cidx] && x[cidx] < Rational(1)) { axis = cidx; break; }
    }
    if (axis == f.dim())
        throw std::invalid_argument(
            "prop33_witness: every coordinate of x is 0 or 1 (x lies in the corner "
            "set D)");

    auto mp2 = min_pairwise_squared(f);
    Rational r = min(x[axis], Rational(1) - x[axis]) / Rational(4);
    if (mp2) {
        while (!(Rational(4) * r * (Rational(4) * r) < *mp2)) r = r / Rational(2);
    }

    std::vector<Rational> radii;
    std::vector<CompactSetD::Point> y_points, z_points;
    std::vector<CompactSetD> witness_sets;
    std::vector<ConditionTrace> checks;

    bool all_ok = true;
    auto add = [&](const std::string& name, bool ok, const std::string& detail) {
        checks.push_back({name, ok, detail});
        all_ok = all_ok && ok;
    };

    for (int nstep = 0; nstep < count; ++nstep) {
        CompactSetD::Point y = x, z = x;
        y[axis] = x[axis] - r;
        z[axis] = x[axis] + r;

        std::vector<CompactSetD::Point> gpts;
        for (const auto& p : f.points())
            if (p != x) gpts.push_back(p);
        gpts.push_back(y);
        gpts.push_back(z);
        CompactSetD g = CompactSetD::from_points(f.dim(), std::move(gpts));

        // centers of the |F|+1 balls must be pairwise >= 2r apart
        std::vector<CompactSetD::Point> centers;
        centers.push_back(y);
        centers.push_back(z);
        for (const auto& p : f.points())
            if (p != x) centers.push_back(p);
        bool disjoint = true;
        Rational four_r2 = Rational(4) * r * r;
        for (std::size_t a = 0; a < centers.size() && disjoint; ++a)
            for (std::size_t b = a + 1; b < centers.size(); ++b)
                if (squared_distance(centers[a], centers[b]) < four_r2) {
                    disjoint = false;
                    break;
                }
        add("balls disjoint (n=" + std::to_string(nstep + 1) + ")", disjoint,
            std::to_string(centers.size()) + " open balls of radius " + r.to_string());

        Rational dh2 = hausdorff_distance_squared(g, f);
        bool exact = dh2 == r * r;
        add("d_H(G_n, F) = r_n (n=" + std::to_string(nstep + 1) + ")", exact,
            "squared distance " + dh2.to_string() + " vs r^2 = " + (r * r).to_string());

        radii.push_back(r);
        y_points.push_back(std::move(y));
        z_points.push_back(std::move(z));
        witness_sets.push_back(std::move(g));
        r = r / Rational(2);
    }
    add("r_n -> 0", true, "radii halve each step");
    if (!all_ok) throw std::runtime_error("prop33_witness: exact checks failed");
    return StrongPorosityWitness{f,
                                 x,
                                 axis,
                                 std::move(radii),
                                 std::move(y_points),
                                 std::move(z_points),
                                 std::move(witness_sets),
                                 std::move(checks),
                                 true};
}

// ---------------------------------------------------------------------------
// Theorem 4.1 witness search
// ---------------------------------------------------------------------------

namespace {

void require_zero_tail(const Code& e, std::int64_t k) {
    if (static_cast<std::int64_t>(e.entries().size()) > k)
        throw std::invalid_argument(
            "thm41: E's code must be zero beyond position " + std::to_string(k) +
            " (found " + std::to_string(e.entries().size()) + " stored entries)");
}

int bracket_level(const Rational& delta, int n) {
    int j = n;
    while (delta < Rational(1) / (Rational(2) * Rational::pow10(j + 1))) {
        ++j;
        if (j > 60) throw std::invalid_argument("thm41: delta too small to bracket");
    }
    return j;
}

}  // namespace

Thm41Certificate thm41_witness_search(const Code& e_code, std::int64_t k,
                                      const CompactSet1D& y, int m) {
    require_zero_tail(e_code, k);
    auto [n, epsilon] = epsilon_for_k(k);
    if (m < n)
        throw std::invalid_argument("thm41: m must be at least the bracket level " +
                                    std::to_string(n));

    const Code e_work = e_code.repadded(std::max(e_code.depth(), m));
    const CompactSet1D e_m = expand(e_work, m);
    Rational delta = hausdorff_distance(y, e_m);

    Thm41Certificate cert{e_code,
                          k,
                          n,
                          epsilon,
                          y,
                          m,
                          delta,
                          false,
                          0,
                          Rational(0),
                          {},
                          {},
                          {},
                          {},
                          Code(e_code.entries(), std::max(e_code.depth(), m)),
                          Rational(0),
                          Rational::pow10(-m),
                          Rational(0),
                          {},
                          false,
                          ""};

    if (delta.is_zero()) {
        cert.trivial = true;
        cert.final_distance = Rational(0);
        cert.bound = cert.slack;
        cert.lemmas.push_back({"delta = 0", true, "Y is the depth-m truncation of E"});
        cert.ok = true;
        return cert;
    }
    if (!(delta < epsilon))
        throw std::invalid_argument("thm41: d_H(Y, E) = " + delta.to_string() +
                                    " >= epsilon = " + epsilon.to_string() +
                                    " -- outside the theorem's hypothesis");

    const int j = bracket_level(delta, n);
    cert.j = j;
    if (m < j + 4)
        throw std::invalid_argument("thm41: m = " + std::to_string(m) +
                                    " too shallow; need m >= j + 4 = " +
                                    std::to_string(j + 4));
    cert.band = Rational::pow10(j) * delta;

    bool lemmas_ok = true;
    auto lemma = [&](const std::string& name, bool ok, const std::string& detail) {
        cert.lemmas.push_back({name, ok, detail});
        lemmas_ok = lemmas_ok && ok;
    };

    const Rational half_pow_j1 = Rational(1) / (Rational(2) * Rational::pow10(j + 1));
    const Rational half_pow_j = Rational(1) / (Rational(2) * Rational::pow10(j));
    lemma("delta bracket", half_pow_j1 <= delta && delta < half_pow_j,
          delta.to_string() + " in [" + half_pow_j1.to_string() + ", " +
              half_pow_j.to_string() + ")");

    const Rational half_pow_j2 = Rational(1) / (Rational(2) * Rational::pow10(j + 2));
    lemma("delta/100 < 1/(2*10^{j+2})", delta / Rational(100) < half_pow_j2,
          (delta / Rational(100)).to_string() + " < " + half_pow_j2.to_string());

    const Rational j2_len = Rational::pow10(-(j + 2));
    const Rational max_shift = Rational(3, 2) * j2_len;
    lemma("max shift exceeds |J_i| + delta/100",
          max_shift > j2_len + delta / Rational(100),
          max_shift.to_string() + " > " + (j2_len + delta / Rational(100)).to_string());

    const Rational radius = delta * Rational(99, 100);
    const CompactSet1D w = dilate(y, radius);
    {
        bool ok = true;
        for (const auto& comp : w.intervals()) {
            if (comp.lo == kZero || comp.hi == Rational(1)) continue;  // clipped
            if (comp.length() < Rational(2) * radius) { ok = false; break; }
        }
        lemma("dilation components span 2*(99/100)delta", ok,
              std::to_string(w.intervals().size()) + " components");
        lemma("2*(99/100)delta > |J_i|", Rational(2) * radius > j2_len,
              (Rational(2) * radius).to_string() + " > " + j2_len.to_string());
    }

    cert.level_intervals = expand(e_work, j + 2).intervals();
    const std::size_t count = cert.level_intervals.size();
    const Rational v_scale = Rational::pow10(j + 2);

    for (std::size_t i = 0; i < count; ++i) {
        const ClosedInterval& ji = cert.level_intervals[i];
        std::vector<ClosedInterval> u;
        for (const auto& comp : w.intervals()) {
            Rational vlo = (comp.lo - ji.lo) * v_scale;
            Rational vhi = (comp.hi - ji.hi) * v_scale;
            if (!(vlo <= vhi)) continue;
            Rational lo = max(vlo, -kShiftBound), hi = min(vhi, kShiftBound);
            if (lo <= hi) u.push_back({std::move(lo), std::move(hi)});
        }
        u = normalize_intervals(std::move(u));
        if (u.empty()) {
            cert.failure = "U_" + std::to_string(i + 1) +
                           " is empty (insufficient depth m or violated hypothesis)";
            cert.u_sets.push_back(std::move(u));
            return cert;
        }
        cert.u_sets.push_back(u);

        std::vector<ClosedInterval> neg = intersect_union(u, -kShiftBound, -cert.band);
        std::vector<ClosedInterval> pos = intersect_union(u, cert.band, kShiftBound);
        std::vector<ClosedInterval> v;
        const bool odd = (i % 2) == 0;  // J_1 is odd: nearest sibling to the right
        if (odd && !neg.empty()) {
            v = std::move(neg);
        } else if (!odd && !pos.empty()) {
            v = std::move(pos);
        } else {
            v = std::move(neg);
            v.insert(v.end(), pos.begin(), pos.end());
            v = normalize_intervals(std::move(v));
        }
        if (v.empty()) {
            cert.failure = "V_" + std::to_string(i + 1) +
                           " is empty (band could not be avoided)";
            cert.v_sets.push_back(std::move(v));
            return cert;
        }

        const ClosedInterval* widest = &v.front();
        for (const auto& piece : v)
            if (piece.length() > widest->length()) widest = &piece;
        cert.chosen.push_back((widest->lo + widest->hi) / Rational(2));
        cert.v_sets.push_back(std::move(v));
    }

    {
        bool ok = true;
        for (const auto& vi : cert.chosen)
            if (!(vi.abs() > cert.band)) { ok = false; break; }
        lemma("band avoidance |v_i| > 10^j * delta", ok,
              "band " + cert.band.to_string());
    }

    // assemble H: E through level j+1, the chosen shifts at level j+2, zeros below
    {
        std::vector<Rational> entries;
        const std::size_t upto = (std::size_t{1} << (j + 3)) - 2;
        entries.reserve(upto);
        const std::size_t level_first = (std::size_t{1} << (j + 2)) - 1;
        for (std::size_t flat = 1; flat <= upto; ++flat) {
            if (flat < level_first)
                entries.push_back(e_work.entry(flat));
            else if (flat < level_first + count)
                entries.push_back(cert.chosen[flat - level_first]);
            else
                entries.push_back(kZero);
        }
        cert.h_code = Code(std::move(entries), m);
    }

    lemma("expand(H, j+2) inside the dilation",
          subset_of(expand(cert.h_code, j + 2), w), "exact interval-union inclusion");

    cert.final_distance = hausdorff_distance(y, expand(cert.h_code, m));
    cert.bound = radius + cert.slack;
    lemma("d_H(Y, expand(H, m)) <= (99/100)delta + 10^{-m}",
          cert.final_distance <= cert.bound,
          cert.final_distance.to_string() + " <= " + cert.bound.to_string());

    cert.ok = lemmas_ok;
    return cert;
}

ReplayResult verify_thm41(const Thm41Certificate& cert) {
    Thm41Certificate fresh{cert.e_code, 0, 0, Rational(0), cert.y, 0, Rational(0),
                           false, 0, Rational(0), {}, {}, {}, {},
                           Code({}, 1), Rational(0), Rational(0), Rational(0),
                           {}, false, ""};
    try {
        fresh = thm41_witness_search(cert.e_code, cert.k, cert.y, cert.m);
    } catch (const std::exception& ex) {
        return {false, std::string("recomputation rejected the inputs: ") + ex.what()};
    }
    auto fail = [](const std::string& f) { return ReplayResult{false, f}; };
    if (fresh.n != cert.n) return fail("n");
    if (fresh.epsilon != cert.epsilon) return fail("epsilon");
    if (fresh.delta != cert.delta) return fail("delta");
    if (fresh.trivial != cert.trivial) return fail("trivial");
    if (fresh.j != cert.j) return fail("j");
    if (fresh.band != cert.band) return fail("band");
    if (fresh.level_intervals != cert.level_intervals) return fail("level_intervals");
    if (fresh.u_sets != cert.u_sets) return fail("u_sets");
    if (fresh.v_sets != cert.v_sets) return fail("v_sets");
    if (fresh.chosen != cert.chosen) return fail("chosen");
    if (!(fresh.h_code == cert.h_code)) return fail("h_code");
    if (fresh.final_distance != cert.final_distance) return fail("final_distance");
    if (fresh.slack != cert.slack) return fail("slack");
    if (fresh.bound != cert.bound) return fail("bound");
    if (fresh.ok != cert.ok) return fail("ok");
    if (!fresh.ok) return fail("certificate records a failed search");
    return {true, ""};
}

ReplayResult verify_prop32(const AnnulusConstruction& c) {
    auto fail = [](const std::string& f) { return ReplayResult{false, f}; };
    if (c.annuli < 2 || c.interval_tops.size() != static_cast<std::size_t>(c.annuli) + 1)
        return fail("interval_tops arity");
    if (c.interval_tops.front() != kHalf) return fail("t_1 != 1/2");
    for (std::size_t i = 0; i + 1 < c.interval_tops.size(); ++i) {
        const Rational& t = c.interval_tops[i];
        if (c.interval_tops[i + 1] != t - t * t)
            return fail("interval recurrence at t_" + std::to_string(i + 2));
    }
    for (const auto& x : c.points)
        if (x < kZero || x > kHalf) return fail("(a) point outside I_1");
    for (std::size_t i = 0; i + 1 < c.points.size(); ++i)
        if (!(c.points[i + 1] < c.points[i])) return fail("(b) not strictly decreasing");
    for (std::size_t i = 0; i + 2 < c.points.size(); ++i)
        if (!(c.points[i + 1] - c.points[i + 2] < c.points[i] - c.points[i + 1]))
            return fail("(c) gap ordering at index " + std::to_string(i));
    if (c.counts.size() != static_cast<std::size_t>(c.annuli)) return fail("counts arity");
    std::vector<std::int64_t> recount(c.counts.size(), 0);
    for (const auto& x : c.points) {
        bool housed = false;
        for (int nn = 1; nn <= c.annuli; ++nn) {
            if (c.interval_tops[static_cast<std::size_t>(nn)] < x &&
                x <= c.interval_tops[static_cast<std::size_t>(nn) - 1]) {
                ++recount[static_cast<std::size_t>(nn) - 1];
                housed = true;
                break;
            }
        }
        if (!housed) return fail("point " + x.to_string() + " outside every annulus");
    }
    if (recount != c.counts) return fail("annulus recount");
    std::int64_t acc = 0;
    for (int nn = 1; nn <= c.annuli; ++nn) {
        if (!(c.counts[static_cast<std::size_t>(nn) - 1] > nn + nn * acc))
            return fail("(e) at annulus " + std::to_string(nn));
        acc += c.counts[static_cast<std::size_t>(nn) - 1];
    }
    for (std::size_t i = 0; i + 1 < c.points.size(); ++i)
        if (c.g.apply(c.points[i]) != c.points[i + 1])
            return fail("g(x_" + std::to_string(i + 1) + ") != x_" + std::to_string(i + 2));
    if (!(c.g.lip() < Rational(1))) return fail("g has lip >= 1");
    if (c.h.kind() != MapKind::constant || c.h.constant_value() != c.points.front())
        return fail("h is not the constant x_1");
    return {true, ""};
}

ReplayResult verify_prop33(const StrongPorosityWitness& w) {
    auto fail = [](const std::string& f) { return ReplayResult{false, f}; };
    const std::size_t steps = w.radii.size();
    if (steps == 0 || w.y_points.size() != steps || w.z_points.size() != steps ||
        w.witness_sets.size() != steps)
        return fail("sequence arity");
    if (w.axis >= w.base.dim()) return fail("axis out of range");
    if (!w.base.contains(w.removed)) return fail("x not in F");
    for (std::size_t i = 0; i < steps; ++i) {
        const Rational& r = w.radii[i];
        if (r.sign() <= 0) return fail("r_" + std::to_string(i + 1) + " <= 0");
        if (i > 0 && w.radii[i] != w.radii[i - 1] / Rational(2))
            return fail("radii do not halve at step " + std::to_string(i + 1));
        CompactSetD::Point y = w.removed, z = w.removed;
        y[w.axis] = w.removed[w.axis] - r;
        z[w.axis] = w.removed[w.axis] + r;
        if (y != w.y_points[i] || z != w.z_points[i])
            return fail("displacement mismatch at step " + std::to_string(i + 1));
        std::vector<CompactSetD::Point> gpts;
        for (const auto& p : w.base.points())
            if (p != w.removed) gpts.push_back(p);
        gpts.push_back(y);
        gpts.push_back(z);
        if (!(CompactSetD::from_points(w.base.dim(), std::move(gpts)) == w.witness_sets[i]))
            return fail("G_" + std::to_string(i + 1) + " mismatch");
        std::vector<CompactSetD::Point> centers{y, z};
        for (const auto& p : w.base.points())
            if (p != w.removed) centers.push_back(p);
        Rational four_r2 = Rational(4) * r * r;
        for (std::size_t a = 0; a < centers.size(); ++a)
            for (std::size_t b = a + 1; b < centers.size(); ++b)
                if (squared_distance(centers[a], centers[b]) < four_r2)
                    return fail("balls intersect at step " + std::to_string(i + 1));
        if (hausdorff_distance_squared(w.witness_sets[i], w.base) != r * r)
            return fail("d_H(G_n, F) != r_n at step " + std::to_string(i + 1));
    }
    return {true, ""};
}

Thm41Certificate thm41_trial(const Code& e_code, std::int64_t k, std::uint64_t seed,
                             std::uint64_t trial_index) {
    auto [n, epsilon] = epsilon_for_k(k);
    const std::uint64_t stream_seed = SplitMix64::stream(seed, trial_index).next();
    const CompactSet1D y =
        sample_Y(e_code, epsilon, n + 7, stream_seed == 0 ? 1 : stream_seed);
    int m = n + 6;
    for (int round = 0; round < 4; ++round) {
        Thm41Certificate cert = thm41_witness_search(e_code, k, y, m);
        if (cert.trivial || cert.m == cert.j + 6) return cert;
        m = cert.j + 6;
    }
    throw std::runtime_error("thm41_trial: bracket level failed to stabilize");
}

CompactSet1D sample_Y(const Code& e_code, const Rational& epsilon, int m,
                      std::uint64_t seed) {
    if (epsilon.sign() <= 0) throw std::invalid_argument("sample_Y: epsilon must be > 0");
    const Code e_work = e_code.repadded(std::max(e_code.depth(), m));
    const CompactSet1D e_m = expand(e_work, m);
    if (seed == 0) return e_m;  // unperturbed: delta == 0

    // scale = epsilon * t/100 with t in [2,48] \ {10}: strictly inside the
    // bracket whose boundaries sit at t = 1, 10, 100, so the level j is
    // stable under the <= 10^{-m} truncation slack
    SplitMix64 rng(seed);
    rng.next();
    std::int64_t t = 2 + static_cast<std::int64_t>(rng.next_below(46));
    if (t >= 10) ++t;
    const Rational scale = epsilon * Rational(t, 100);
    if (!(Rational(2) * Rational::pow10(-m) <= scale))
        throw std::invalid_argument("sample_Y: m too shallow for the perturbation scale");
    const Rational eta = scale * Rational(3, 4);

    std::vector<Rational> pts;
    pts.reserve(e_m.intervals().size() * 2 + 1);
    for (const auto& iv : e_m.intervals()) {
        pts.push_back(iv.lo + eta * uniform_symmetric(rng));
        pts.push_back(iv.hi + eta * uniform_symmetric(rng));
    }
    Rational outlier = e_m.min() - scale;
    if (outlier < kZero)
        throw std::logic_error("sample_Y: outlier left [0,1]");
    pts.push_back(std::move(outlier));
    return CompactSet1D::from_points(std::move(pts));
}

}  // namespace hyperfrac
