#include "sharpdeg/json_io.hpp"

#include <json.hpp>

namespace sharpdeg {

namespace {

using Json = nlohmann::ordered_json;

Json diagram_json(const NewtonDiagram& D) {
    Json j;
    j["n"] = D.n();
    j["d"] = D.d();
    Json pts = Json::array();
    for (const auto& [m, s] : D.signs()) {
        Json p;
        p["m"] = m.entries();
        p["sign"] = (s == Sign::P) ? "P" : "N";
        pts.push_back(std::move(p));
    }
    j["points"] = std::move(pts);
    return j;
}

Json support_json(const Support& K) {
    Json pts = Json::array();
    for (const MultiIndex& m : K.points) pts.push_back(m.entries());
    Json j;
    j["n"] = K.n;
    j["points"] = std::move(pts);
    return j;
}

} // namespace

std::string diagram_to_json(const NewtonDiagram& D) { return diagram_json(D).dump(); }

NewtonDiagram diagram_from_json(const std::string& text) {
    Json j = Json::parse(text, nullptr, true, true);
    NewtonDiagram D(j.at("n").get<int>(), j.at("d").get<int>());
    for (const auto& p : j.at("points")) {
        MultiIndex m(p.at("m").get<std::vector<int>>());
        std::string s = p.at("sign").get<std::string>();
        if (s != "P" && s != "N") throw PreconditionError("diagram sign must be P or N");
        D.set(m, s == "P" ? Sign::P : Sign::N);
    }
    return D;
}

std::string receipt_to_json(const TransformReceipt& r) {
    Json j;
    j["transform"] = r.transform;
    j["metric"] = r.metric == Metric::NodeCount ? "nodes" : "sc";
    if (r.support_metric) j["metric"] = "support_sc";
    j["delta_bound"] = rational_to_string(r.delta_bound);
    j["delta_actual"] = rational_to_string(r.delta_actual);
    j["before"] = diagram_json(r.before);
    j["after"] = diagram_json(r.after);
    return j.dump();
}

std::string certificate_to_json(const Certificate& c) {
    Json j;
    j["theorem"] = c.theorem;
    j["ok"] = c.ok;
    Json entries = Json::array();
    for (const SweepEntry& e : c.entries) {
        Json je;
        je["d"] = e.d;
        je["support_count"] = e.support_count;
        je["min_nodes"] = e.min_nodes;
        je["bound"] = e.bound;
        je["witness"] = support_json(e.witness);
        entries.push_back(std::move(je));
    }
    j["entries"] = std::move(entries);
    return j.dump();
}

std::string map_to_json(const MonomialMap& f) {
    Json j;
    j["source"] = {{"pos", f.source.pos}, {"neg", f.source.neg}};
    j["target"] = {{"pos", f.target.pos}, {"neg", f.target.neg}};
    Json comps = Json::array();
    for (const MapComponent& c : f.components) {
        Json jc;
        jc["coeff_sq"] = rational_to_string(c.coeff_sq);
        jc["exp"] = c.exponent.entries();
        jc["slot"] = c.negative_slot ? "-" : "+";
        comps.push_back(std::move(jc));
    }
    j["components"] = std::move(comps);
    return j.dump();
}

MonomialMap map_from_json(const std::string& text) {
    Json j = Json::parse(text, nullptr, true, true);
    MonomialMap f;
    f.source = {j.at("source").at("pos").get<int>(), j.at("source").at("neg").get<int>()};
    f.target = {j.at("target").at("pos").get<int>(), j.at("target").at("neg").get<int>()};
    for (const auto& jc : j.at("components")) {
        MapComponent c;
        c.coeff_sq = rational_from_string(jc.at("coeff_sq").get<std::string>());
        c.exponent = MultiIndex(jc.at("exp").get<std::vector<int>>());
        c.negative_slot = jc.at("slot").get<std::string>() == "-";
        f.components.push_back(std::move(c));
    }
    f.validate();
    return f;
}

std::string bound_report_to_json(const BoundReport& r) {
    Json j;
    j["n"] = r.n;
    j["N"] = r.N;
    j["actual_degree"] = rational_to_string(r.actual_degree);
    Json bounds = Json::array();
    for (const BoundEntry& e : r.bounds) {
        Json je;
        je["tag"] = e.tag;
        je["value"] = rational_to_string(e.value);
        je["satisfied"] = e.satisfied;
        je["sharp"] = e.sharp;
        je["conditional"] = e.conditional;
        if (!e.note.empty()) je["note"] = e.note;
        bounds.push_back(std::move(je));
    }
    j["bounds"] = std::move(bounds);
    return j.dump();
}

std::string class_report_to_json(const ClassReport& r) {
    Json j;
    j["in_I"] = r.in_I;
    j["in_H"] = r.in_H;
    j["degree"] = r.degree;
    j["p_degree"] = r.p_degree;
    j["monomial_count"] = r.monomial_count;
    j["decomposability_hint"] = r.support_connected ? "connected-support" : "disconnected-support";
    return j.dump();
}

} // namespace sharpdeg
