#pragma once

#include <string>
#include <utility>

#include <json.hpp>

#include "flatknot/gauss_code.hpp"
#include "flatknot/trace.hpp"

namespace flatknot {

// Wire form: {"initial": <gauss text>, "steps": [...], "final": <gauss text>}.
// A face-sited step is {"kind": "R1-|R2-|R3", "site": <face index>}; a kink
// insertion is {"kind": "R1+", "site": [<dart>, "L"|"R"]}.
//
// Sites on the wire address the curve as rebuilt from the embedded text,
// which can be a relabeling of the in-memory one, so the writer re-anchors
// every step onto the rebuilt replay; the reader then applies them verbatim.
// The claimed final is written as claimed, preserving unverifiable claims.
inline nlohmann::json trace_to_json(const Trace& t) {
    const std::string initial_text = write_gauss_text(t.initial);

    std::vector<std::pair<std::string, MoveKind>> hops;
    hops.reserve(t.steps.size());
    PlaneCurve orig = t.initial;
    for (const auto& m : t.steps) {
        orig = apply_move(orig, m);
        hops.emplace_back(canonical_key(orig, Equivalence::oriented), m.kind);
    }
    auto [steps, fin] = detail::follow_key_chain(read_gauss_text(initial_text), hops,
                                                 Equivalence::oriented);

    nlohmann::json jsteps = nlohmann::json::array();
    for (const auto& m : steps) {
        nlohmann::json site;
        if (m.kind == MoveKind::r1_plus)
            site = {m.edge_dart, m.left ? "L" : "R"};
        else
            site = m.face;
        jsteps.push_back({{"kind", kind_name(m.kind)}, {"site", std::move(site)}});
    }
    return {{"initial", initial_text},
            {"steps", std::move(jsteps)},
            {"final", write_gauss_text(t.claimed_final)}};
}

inline std::string write_trace_json(const Trace& t) { return trace_to_json(t).dump(2) + "\n"; }

inline Trace trace_from_json(const nlohmann::json& j) {
    try {
        Trace t;
        t.initial = read_gauss_text(j.at("initial").get<std::string>());
        t.claimed_final = read_gauss_text(j.at("final").get<std::string>());
        for (const auto& step : j.at("steps")) {
            const auto kind = kind_from_name(step.at("kind").get<std::string>());
            if (!kind) throw CurveError("unknown move kind in trace");
            Move m;
            m.kind = *kind;
            const auto& site = step.at("site");
            if (m.kind == MoveKind::r1_plus) {
                if (!site.is_array() || site.size() != 2)
                    throw CurveError("kink insertion site must be [dart, side]");
                m.edge_dart = site.at(0).get<Dart>();
                const auto side = site.at(1).get<std::string>();
                if (side != "L" && side != "R")
                    throw CurveError("kink insertion side must be L or R");
                m.left = side == "L";
            } else {
                if (!site.is_number_unsigned())
                    throw CurveError("face-sited move needs a face index");
                m.face = site.get<std::uint32_t>();
            }
            t.steps.push_back(m);
        }
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw CurveError(std::string("trace JSON is malformed: ") + e.what());
    }
}

inline Trace read_trace_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw CurveError(std::string("trace JSON is malformed: ") + e.what());
    }
    return trace_from_json(j);
}

}  // namespace flatknot
