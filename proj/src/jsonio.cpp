#include "jsonio.hpp"

#include <algorithm>

namespace excseq {

using nlohmann::json;

ordered_json quiver_to_json(const Quiver& q) {
    ordered_json j;
    j["n"] = q.n;
    ordered_json eps = ordered_json::array();
    for (Sign s : q.eps) eps.push_back(std::string(1, sign_char(s)));
    j["epsilon"] = eps;
    return j;
}

Quiver quiver_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("epsilon"))
        throw std::invalid_argument("quiver JSON needs fields \"n\" and \"epsilon\"");
    int n = j.at("n").get<int>();
    std::string signs;
    for (const auto& e : j.at("epsilon")) {
        std::string s = e.get<std::string>();
        if (s.size() != 1) throw std::invalid_argument("epsilon entries must be \"+\" or \"-\"");
        signs += s;
    }
    return make_quiver(n, signs);
}

ordered_json module_to_json(const StringModule& m) {
    Triple t = to_triple(m);
    ordered_json j;
    j["i"] = t.i;
    j["j"] = t.j;
    j["l"] = t.l;
    j["lift"] = {m.lift_lo(), m.lift_hi()};
    j["class"] = class_name(classify(m));
    return j;
}

StringModule module_from_json(const Quiver& q, const json& j) {
    if (!j.is_object() || !j.contains("i") || !j.contains("j"))
        throw std::invalid_argument("module JSON needs fields \"i\", \"j\", \"l\"");
    int i = j.at("i").get<int>();
    int jj = j.at("j").get<int>();
    pos_t l = j.contains("l") ? j.at("l").get<pos_t>() : 0;
    StringModule m = from_triple(q, i, jj, l);
    if (j.contains("lift")) {
        auto lift = j.at("lift");
        if (!lift.is_array() || lift.size() != 2)
            throw std::invalid_argument("module lift must be [start, end]");
        pos_t lo = lift[0].get<pos_t>(), hi = lift[1].get<pos_t>();
        StringModule given = from_interval(q, lo, hi);
        if (given != m) throw std::invalid_argument("module lift disagrees with (i,j;l)");
    }
    return m;
}

ordered_json diagram_to_json(const ArcDiagram& d) {
    ordered_json j;
    j["quiver"] = quiver_to_json(d.quiver);
    ordered_json mods = ordered_json::array();
    for (const auto& m : d.modules) mods.push_back(module_to_json(m));
    j["modules"] = mods;
    return j;
}

ArcDiagram diagram_from_json(const json& j) {
    if (!j.is_object() || !j.contains("quiver"))
        throw std::invalid_argument("diagram JSON needs a \"quiver\" field");
    Quiver q = quiver_from_json(j.at("quiver"));
    std::vector<StringModule> mods;
    if (j.contains("modules")) {
        for (const auto& mj : j.at("modules")) mods.push_back(module_from_json(q, mj));
    } else if (j.contains("arcs")) {
        for (const auto& aj : j.at("arcs")) {
            Arc a;
            a.i = aj.at("i").get<int>();
            a.j = aj.at("j").get<int>();
            a.lambda = aj.contains("lambda") ? aj.at("lambda").get<pos_t>() : 0;
            mods.push_back(module_of(q, a));
        }
    } else {
        throw std::invalid_argument("diagram JSON needs \"modules\" or \"arcs\"");
    }
    return make_diagram(q, std::move(mods));
}

ordered_json family_to_json(const Family& f) {
    ordered_json j;
    j["canonical"] = diagram_to_json(f.canonical);
    j["z"] = f.z;
    return j;
}

namespace {

// Tolerant parse for check/render: loop entries (i,i;0), which are arcs but
// not string modules, are collected instead of rejected.
struct ParsedDiagram {
    Quiver quiver;
    std::vector<StringModule> modules;
    std::vector<int> loops;  // vertices carrying a loop arc
};

ParsedDiagram diagram_from_json_tolerant(const json& j) {
    if (!j.is_object() || !j.contains("quiver"))
        throw std::invalid_argument("diagram JSON needs a \"quiver\" field");
    ParsedDiagram out;
    out.quiver = quiver_from_json(j.at("quiver"));
    const Quiver& q = out.quiver;
    auto push = [&](int i, int jj, pos_t lambda) {
        if (i == jj && lambda == 0) {
            if (i < 0 || i >= q.n) throw std::invalid_argument("arc endpoints must be vertices");
            out.loops.push_back(i);
            return;
        }
        Arc a;
        a.i = i;
        a.j = jj;
        a.lambda = lambda;
        a.kind = ArcKind::bridging_from_outer;
        out.modules.push_back(module_of(q, a));
    };
    if (j.contains("modules")) {
        for (const auto& mj : j.at("modules")) {
            int i = mj.at("i").get<int>(), jj = mj.at("j").get<int>();
            pos_t l = mj.contains("l") ? mj.at("l").get<pos_t>() : 0;
            if (i == jj && l == 0)
                push(i, jj, 0);
            else
                out.modules.push_back(module_from_json(q, mj));
        }
    } else if (j.contains("arcs")) {
        for (const auto& aj : j.at("arcs"))
            push(aj.at("i").get<int>(), aj.at("j").get<int>(),
                 aj.contains("lambda") ? aj.at("lambda").get<pos_t>() : 0);
    } else {
        throw std::invalid_argument("diagram JSON needs \"modules\" or \"arcs\"");
    }
    return out;
}

}  // namespace

namespace {

ordered_json report_header(const std::string& command) {
    ordered_json j;
    j["version"] = kReportVersion;
    j["command"] = command;
    return j;
}

ordered_json violations_to_json(const ArcDiagram& d, const std::vector<DiagramViolation>& vs) {
    ordered_json arr = ordered_json::array();
    for (const auto& v : vs) {
        ordered_json e;
        if (v.non_exceptional) {
            e["module"] = module_to_json(d.modules[v.first]);
            e["reason"] = "non-exceptional";
        } else if (v.first == v.second) {
            e["reason"] = "cycle";
        } else {
            e["first"] = module_to_json(d.modules[v.first]);
            e["second"] = module_to_json(d.modules[v.second]);
            e["relation"] = relation_name(v.relation);
            e["reason"] = "pair";
        }
        arr.push_back(e);
    }
    return arr;
}

RunResult ok(const ordered_json& j) { return {0, j.dump(2) + "\n", ""}; }

RunResult run_check(const json& req, bool order_only) {
    ParsedDiagram p = diagram_from_json_tolerant(req);
    ordered_json j = report_header(order_only ? "order" : "check");
    if (!p.loops.empty()) {
        if (!order_only) j["exceptional"] = false;
        ordered_json arr = ordered_json::array();
        for (int v : p.loops) {
            ordered_json e;
            e["vertex"] = v;
            e["reason"] = "loop";
            arr.push_back(e);
        }
        j["violations"] = arr;
        return {2, j.dump(2) + "\n", order_only ? "collection is not exceptional" : ""};
    }
    ArcDiagram d = make_diagram(p.quiver, p.modules);
    std::vector<DiagramViolation> vs = diagram_violations(d);
    bool exceptional = vs.empty();
    if (!order_only) j["exceptional"] = exceptional;
    if (exceptional) {
        auto seq = order_collection(d);
        ordered_json arr = ordered_json::array();
        for (const auto& m : *seq) arr.push_back(module_to_json(m));
        j["order"] = arr;
        return ok(j);
    }
    j["violations"] = violations_to_json(d, vs);
    return {2, j.dump(2) + "\n", order_only ? "collection is not exceptional" : ""};
}

RunResult run_dims(const json& req, bool ext) {
    Quiver q = quiver_from_json(req.at("quiver"));
    StringModule m = module_from_json(q, req.at("from"));
    StringModule n = module_from_json(q, req.at("to"));
    ordered_json j = report_header(ext ? "ext" : "hom");
    j["dim"] = ext ? dim_ext(m, n) : dim_hom(m, n);
    return ok(j);
}

RunResult run_tau(const json& req) {
    Quiver q = quiver_from_json(req.at("quiver"));
    StringModule m = module_from_json(q, req.at("module"));
    bool inverse = req.value("inverse", false);
    auto t = inverse ? tau_inv(m) : tau(m);
    ordered_json j = report_header("tau");
    j["inverse"] = inverse;
    j["module"] = t ? module_to_json(*t) : ordered_json(nullptr);
    return ok(j);
}

RunResult run_twist(const json& req) {
    ArcDiagram d = diagram_from_json(req);
    std::string dir = req.value("direction", "cw");
    if (dir != "cw" && dir != "ccw")
        throw std::invalid_argument("twist direction must be \"cw\" or \"ccw\"");
    ArcDiagram out = dehn_twist(d, dir == "cw" ? TwistDir::cw : TwistDir::ccw);
    ordered_json j = report_header("twist");
    j["direction"] = dir;
    j["diagram"] = diagram_to_json(out);
    return ok(j);
}

RunResult run_families(const json& req) {
    Quiver q = quiver_from_json(req.at("quiver"));
    auto smalls = enumerate_small_diagrams(q);
    std::vector<ArcDiagram> reps;
    std::vector<std::string> seen;
    for (const auto& d : smalls) {
        Family f = canonical_small(d);
        std::string key = diagram_to_json(f.canonical).dump();
        if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
            seen.push_back(key);
            reps.push_back(f.canonical);
        }
    }
    ordered_json j = report_header("families");
    j["quiver"] = quiver_to_json(q);
    j["families"] = reps.size();
    ordered_json arr = ordered_json::array();
    for (const auto& d : reps) arr.push_back(family_to_json({d, 0}));
    j["classes"] = arr;
    return ok(j);
}

RunResult run_enumerate(const json& req) {
    Quiver q = quiver_from_json(req.at("quiver"));
    pos_t lmax = req.value("lambda_max", 0);
    auto all = enumerate_collections(q, lmax);
    ordered_json j = report_header("enumerate");
    j["quiver"] = quiver_to_json(q);
    j["lambda_max"] = lmax;
    j["count"] = all.size();
    ordered_json arr = ordered_json::array();
    for (const auto& d : all) arr.push_back(diagram_to_json(d));
    j["diagrams"] = arr;
    j["families"] = count_families(q);
    return ok(j);
}

RunResult run_render(const json& req) {
    ParsedDiagram p = diagram_from_json_tolerant(req);
    RenderOptions opts;
    opts.size = req.value("size", opts.size);
    opts.labels = req.value("labels", opts.labels);
    ArcDiagram d{p.quiver, p.modules};  // render tolerates any arc count
    return {0, render_svg(d, opts), ""};
}

}  // namespace

RunResult run_request(const std::string& request_json) {
    try {
        json req = json::parse(request_json);
        std::string cmd = req.at("command").get<std::string>();
        if (cmd == "check") return run_check(req, false);
        if (cmd == "order") return run_check(req, true);
        if (cmd == "hom") return run_dims(req, false);
        if (cmd == "ext") return run_dims(req, true);
        if (cmd == "tau") return run_tau(req);
        if (cmd == "twist") return run_twist(req);
        if (cmd == "families") return run_families(req);
        if (cmd == "enumerate") return run_enumerate(req);
        if (cmd == "render") return run_render(req);
        return {1, "", "unknown command: " + cmd};
    } catch (const json::exception& e) {
        return {1, "", std::string("malformed request: ") + e.what()};
    } catch (const std::invalid_argument& e) {
        return {1, "", e.what()};
    } catch (const std::exception& e) {
        return {1, "", e.what()};
    }
}

}  // namespace excseq
