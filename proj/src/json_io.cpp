#include "hyperfrac/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace hyperfrac::io {

std::string scalar_string(const Rational& x) { return x.to_string(); }

Rational parse_scalar(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    throw std::invalid_argument("scalar must be a fraction string, got " + j.dump());
}

namespace {

json interval_to_json(const ClosedInterval& iv) {
    return json::array({scalar_string(iv.lo), scalar_string(iv.hi)});
}

ClosedInterval interval_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("interval must be a [lo, hi] pair");
    return {parse_scalar(j[0]), parse_scalar(j[1])};
}

json interval_list_to_json(const std::vector<ClosedInterval>& v) {
    json out = json::array();
    for (const auto& iv : v) out.push_back(interval_to_json(iv));
    return out;
}

std::vector<ClosedInterval> interval_list_from_json(const json& j) {
    std::vector<ClosedInterval> out;
    for (const auto& e : j) out.push_back(interval_from_json(e));
    return out;
}

json point_to_json(const CompactSetD::Point& p) {
    json out = json::array();
    for (const auto& c : p) out.push_back(scalar_string(c));
    return out;
}

CompactSetD::Point point_from_json(const json& j) {
    CompactSetD::Point p;
    for (const auto& c : j) p.push_back(parse_scalar(c));
    return p;
}

json trace_to_json(const std::vector<ConditionTrace>& ts) {
    json out = json::array();
    for (const auto& t : ts)
        out.push_back(json{{"name", t.name}, {"ok", t.ok}, {"detail", t.detail}});
    return out;
}

std::vector<ConditionTrace> trace_from_json(const json& j) {
    std::vector<ConditionTrace> out;
    for (const auto& e : j)
        out.push_back({e.at("name").get<std::string>(), e.at("ok").get<bool>(),
                       e.at("detail").get<std::string>()});
    return out;
}

}  // namespace

json set_to_json(const CompactSet1D& s) {
    json j;
    j["kind"] = s.is_points() ? "points" : "intervals";
    j["dim"] = 1;
    json data = json::array();
    if (s.is_points()) {
        for (const auto& p : s.points()) data.push_back(scalar_string(p));
    } else {
        data = interval_list_to_json(s.intervals());
    }
    j["data"] = std::move(data);
    return j;
}

json set_to_json(const CompactSetD& s) {
    json j;
    j["kind"] = "points";
    j["dim"] = s.dim();
    json data = json::array();
    for (const auto& p : s.points()) data.push_back(point_to_json(p));
    j["data"] = std::move(data);
    return j;
}

int set_file_dim(const json& j) { return j.at("dim").get<int>(); }

CompactSet1D set_1d_from_json(const json& j) {
    if (set_file_dim(j) != 1)
        throw std::invalid_argument("expected a 1-dimensional set file");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "points") {
        std::vector<Rational> pts;
        for (const auto& e : j.at("data")) pts.push_back(parse_scalar(e));
        return CompactSet1D::from_points(std::move(pts));
    }
    if (kind == "intervals")
        return CompactSet1D::from_intervals(interval_list_from_json(j.at("data")));
    throw std::invalid_argument("unknown set kind '" + kind + "'");
}

CompactSetD set_d_from_json(const json& j) {
    const int dim = set_file_dim(j);
    if (j.at("kind").get<std::string>() != "points")
        throw std::invalid_argument("d-dimensional sets are finite point sets only");
    std::vector<CompactSetD::Point> pts;
    for (const auto& e : j.at("data")) {
        if (e.is_string())  // 1-d files store flat scalars
            pts.push_back({parse_scalar(e)});
        else
            pts.push_back(point_from_json(e));
    }
    return CompactSetD::from_points(static_cast<std::size_t>(dim), std::move(pts));
}

json map_to_json(const ContractionMap& m) {
    json j;
    switch (m.kind()) {
        case MapKind::affine:
            j["kind"] = "affine";
            j["a"] = scalar_string(m.affine_a());
            j["b"] = scalar_string(m.affine_b());
            break;
        case MapKind::quadratic_logistic:
            j["kind"] = "quadratic_logistic";
            break;
        case MapKind::constant:
            j["kind"] = "constant";
            j["c"] = scalar_string(m.constant_value());
            break;
        case MapKind::piecewise_linear: {
            j["kind"] = "piecewise_linear";
            json pts = json::array();
            for (const auto& bp : m.breakpoints())
                pts.push_back(json::array({scalar_string(bp.x), scalar_string(bp.y)}));
            j["points"] = std::move(pts);
            break;
        }
    }
    return j;
}

ContractionMap map_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "affine")
        return ContractionMap::affine(parse_scalar(j.at("a")), parse_scalar(j.at("b")));
    if (kind == "quadratic_logistic") return ContractionMap::quadratic_logistic();
    if (kind == "constant") return ContractionMap::constant(parse_scalar(j.at("c")));
    if (kind == "piecewise_linear") {
        std::vector<Breakpoint> pts;
        for (const auto& e : j.at("points"))
            pts.push_back({parse_scalar(e[0]), parse_scalar(e[1])});
        return ContractionMap::piecewise_linear(std::move(pts));
    }
    throw std::invalid_argument("unknown map kind '" + kind + "'");
}

json ifs_to_json(const IFS& ifs) {
    json maps = json::array();
    for (const auto& m : ifs.maps) maps.push_back(map_to_json(m));
    return json{{"maps", std::move(maps)}};
}

IFS ifs_from_json(const json& j) {
    IFS ifs;
    for (const auto& e : j.at("maps")) ifs.maps.push_back(map_from_json(e));
    if (ifs.maps.empty()) throw std::invalid_argument("IFS file has no maps");
    return ifs;
}

json code_to_json(const Code& c) {
    json entries = json::array();
    for (const auto& e : c.entries()) entries.push_back(scalar_string(e));
    return json{{"entries", std::move(entries)}, {"depth", c.depth()}};
}

Code code_from_json(const json& j) {
    std::vector<Rational> entries;
    for (const auto& e : j.at("entries")) entries.push_back(parse_scalar(e));
    return Code(std::move(entries), j.at("depth").get<int>());
}

json attractor_report_to_json(const AttractorResult& r) {
    json j;
    j["iterations"] = r.iterations;
    j["bound"] = scalar_string(r.a_posteriori_bound);
    j["converged"] = r.converged;
    j["stalled"] = r.stalled;
    j["attractor"] = set_to_json(r.attractor);
    return j;
}

json thm41_to_json(const Thm41Certificate& c) {
    json j;
    j["type"] = "thm41";
    j["k"] = c.k;
    j["n"] = c.n;
    j["epsilon"] = scalar_string(c.epsilon);
    j["m"] = c.m;
    j["delta"] = scalar_string(c.delta);
    j["trivial"] = c.trivial;
    j["j"] = c.j;
    j["band"] = scalar_string(c.band);
    j["e_code"] = code_to_json(c.e_code);
    j["y"] = set_to_json(c.y);
    j["level_intervals"] = interval_list_to_json(c.level_intervals);
    json us = json::array(), vs = json::array();
    for (const auto& u : c.u_sets) us.push_back(interval_list_to_json(u));
    for (const auto& v : c.v_sets) vs.push_back(interval_list_to_json(v));
    j["u_sets"] = std::move(us);
    j["v_sets"] = std::move(vs);
    json ch = json::array();
    for (const auto& v : c.chosen) ch.push_back(scalar_string(v));
    j["chosen"] = std::move(ch);
    j["h_code"] = code_to_json(c.h_code);
    j["final_distance"] = scalar_string(c.final_distance);
    j["slack"] = scalar_string(c.slack);
    j["bound"] = scalar_string(c.bound);
    j["lemmas"] = trace_to_json(c.lemmas);
    j["ok"] = c.ok;
    j["failure"] = c.failure;
    return j;
}

Thm41Certificate thm41_from_json(const json& j) {
    if (j.at("type") != "thm41") throw std::invalid_argument("not a thm41 certificate");
    std::vector<std::vector<ClosedInterval>> us, vs;
    for (const auto& e : j.at("u_sets")) us.push_back(interval_list_from_json(e));
    for (const auto& e : j.at("v_sets")) vs.push_back(interval_list_from_json(e));
    std::vector<Rational> chosen;
    for (const auto& e : j.at("chosen")) chosen.push_back(parse_scalar(e));
    return Thm41Certificate{code_from_json(j.at("e_code")),
                            j.at("k").get<std::int64_t>(),
                            j.at("n").get<int>(),
                            parse_scalar(j.at("epsilon")),
                            set_1d_from_json(j.at("y")),
                            j.at("m").get<int>(),
                            parse_scalar(j.at("delta")),
                            j.at("trivial").get<bool>(),
                            j.at("j").get<int>(),
                            parse_scalar(j.at("band")),
                            interval_list_from_json(j.at("level_intervals")),
                            std::move(us),
                            std::move(vs),
                            std::move(chosen),
                            code_from_json(j.at("h_code")),
                            parse_scalar(j.at("final_distance")),
                            parse_scalar(j.at("slack")),
                            parse_scalar(j.at("bound")),
                            trace_from_json(j.at("lemmas")),
                            j.at("ok").get<bool>(),
                            j.at("failure").get<std::string>()};
}

json prop32_to_json(const AnnulusConstruction& c) {
    json j;
    j["type"] = "prop32";
    j["annuli"] = c.annuli;
    j["requested_ratio"] = scalar_string(c.requested_ratio);
    json tops = json::array(), pts = json::array(), counts = json::array();
    for (const auto& t : c.interval_tops) tops.push_back(scalar_string(t));
    for (const auto& p : c.points) pts.push_back(scalar_string(p));
    for (const auto& k : c.counts) counts.push_back(k);
    j["interval_tops"] = std::move(tops);
    j["points"] = std::move(pts);
    j["counts"] = std::move(counts);
    j["g"] = map_to_json(c.g);
    j["h"] = map_to_json(c.h);
    j["conditions"] = trace_to_json(c.conditions);
    j["ok"] = c.ok;
    return j;
}

AnnulusConstruction prop32_from_json(const json& j) {
    if (j.at("type") != "prop32") throw std::invalid_argument("not a prop32 certificate");
    AnnulusConstruction c;
    c.annuli = j.at("annuli").get<int>();
    c.requested_ratio = parse_scalar(j.at("requested_ratio"));
    for (const auto& e : j.at("interval_tops")) c.interval_tops.push_back(parse_scalar(e));
    for (const auto& e : j.at("points")) c.points.push_back(parse_scalar(e));
    for (const auto& e : j.at("counts")) c.counts.push_back(e.get<std::int64_t>());
    c.g = map_from_json(j.at("g"));
    c.h = map_from_json(j.at("h"));
    c.conditions = trace_from_json(j.at("conditions"));
    c.ok = j.at("ok").get<bool>();
    return c;
}

json prop33_to_json(const StrongPorosityWitness& w) {
    json j;
    j["type"] = "prop33";
    j["f"] = set_to_json(w.base);
    j["x"] = point_to_json(w.removed);
    j["axis"] = w.axis;
    json radii = json::array(), ys = json::array(), zs = json::array(), gs = json::array();
    for (const auto& r : w.radii) radii.push_back(scalar_string(r));
    for (const auto& p : w.y_points) ys.push_back(point_to_json(p));
    for (const auto& p : w.z_points) zs.push_back(point_to_json(p));
    for (const auto& g : w.witness_sets) gs.push_back(set_to_json(g));
    j["radii"] = std::move(radii);
    j["y_points"] = std::move(ys);
    j["z_points"] = std::move(zs);
    j["witness_sets"] = std::move(gs);
    j["checks"] = trace_to_json(w.checks);
    j["ok"] = w.ok;
    return j;
}

StrongPorosityWitness prop33_from_json(const json& j) {
    if (j.at("type") != "prop33") throw std::invalid_argument("not a prop33 certificate");
    std::vector<Rational> radii;
    std::vector<CompactSetD::Point> ys, zs;
    std::vector<CompactSetD> gs;
    for (const auto& e : j.at("radii")) radii.push_back(parse_scalar(e));
    for (const auto& e : j.at("y_points")) ys.push_back(point_from_json(e));
    for (const auto& e : j.at("z_points")) zs.push_back(point_from_json(e));
    for (const auto& e : j.at("witness_sets")) gs.push_back(set_d_from_json(e));
    return StrongPorosityWitness{set_d_from_json(j.at("f")),
                                 point_from_json(j.at("x")),
                                 j.at("axis").get<std::size_t>(),
                                 std::move(radii),
                                 std::move(ys),
                                 std::move(zs),
                                 std::move(gs),
                                 trace_from_json(j.at("checks")),
                                 j.at("ok").get<bool>()};
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    json j;
    in >> j;
    return j;
}

void save_json(const std::string& path, const json& j) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << j.dump(1) << '\n';
}

}  // namespace hyperfrac::io
