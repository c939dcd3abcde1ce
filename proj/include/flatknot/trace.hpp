#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flatknot/canonical.hpp"
#include "flatknot/moves.hpp"
#include "flatknot/plane_curve.hpp"

namespace flatknot {

// A recorded deformation: replaying steps from initial must reach a curve
// equivalent to claimed_final, and every intermediate must validate. Sites
// address the deterministic face/edge ordering of the current intermediate.
struct Trace {
    PlaneCurve initial = PlaneCurve::trivial();
    std::vector<Move> steps;
    PlaneCurve claimed_final = PlaneCurve::trivial();
};

struct TraceReport {
    bool ok = false;
    std::size_t steps_replayed = 0;
    // Index of the step whose application failed; steps.size() means the
    // replay ran through but the final comparison diverged.
    std::optional<std::size_t> first_bad_step;
    std::string issue;
    std::uint32_t r2_minus_count = 0;
    bool final_matches = false;
};

inline std::uint32_t count_r2_minus(const std::vector<Move>& steps) {
    std::uint32_t n = 0;
    for (const auto& m : steps)
        if (m.kind == MoveKind::r2_minus) ++n;
    return n;
}

inline TraceReport verify_trace(const Trace& t,
                                Equivalence eq = Equivalence::mirror_inclusive) {
    TraceReport report;
    PlaneCurve cur = t.initial;
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        try {
            cur = apply_move(cur, t.steps[i]);
        } catch (const CurveError& e) {
            report.first_bad_step = i;
            report.issue = e.what();
            return report;
        }
        if (t.steps[i].kind == MoveKind::r2_minus) ++report.r2_minus_count;
        ++report.steps_replayed;
    }
    report.final_matches = canonical_key(cur, eq) == canonical_key(t.claimed_final, eq);
    if (!report.final_matches) {
        report.first_bad_step = t.steps.size();
        report.issue = "replayed final does not match the claimed final";
        return report;
    }
    report.ok = true;
    return report;
}

namespace detail {

// Re-anchors a class-level path onto a concrete curve: each hop names the
// canonical key the next intermediate must have and the move kind that gets
// there. Picks the first enumerated move realizing the hop, so the result is
// deterministic. Hop kinds pin the cost: the rebuilt steps have the same
// R2- count as the path they mirror.
inline std::pair<std::vector<Move>, PlaneCurve> follow_key_chain(
    const PlaneCurve& start,
    const std::vector<std::pair<std::string, MoveKind>>& hops, Equivalence eq) {
    std::vector<Move> steps;
    steps.reserve(hops.size());
    PlaneCurve cur = start;
    for (const auto& [next_key, kind] : hops) {
        bool advanced = false;
        for (const auto& m : enumerate_moves(cur, MovePolicy::full())) {
            if (m.kind != kind) continue;
            auto child = apply_move(cur, m);
            if (canonical_key(child, eq) == next_key) {
                steps.push_back(m);
                cur = std::move(child);
                advanced = true;
                break;
            }
        }
        if (!advanced)
            throw CurveError("no applicable move reaches the requested class");
    }
    return {std::move(steps), std::move(cur)};
}

}  // namespace detail

// Joins two traces whose endpoints agree up to equivalence. The second
// trace's sites address its own intermediates, which may be relabeled or
// mirrored relative to the replay of the first, so they are re-anchored by
// matching child classes step by step. Costs add: hop kinds are preserved.
inline Trace concat_traces(const Trace& a, const Trace& b,
                           Equivalence eq = Equivalence::mirror_inclusive) {
    if (canonical_key(a.claimed_final, eq) != canonical_key(b.initial, eq))
        throw CurveError("trace endpoints do not match");

    PlaneCurve cur = a.initial;
    for (const auto& m : a.steps) cur = apply_move(cur, m);
    if (canonical_key(cur, eq) != canonical_key(a.claimed_final, eq))
        throw CurveError("first trace does not replay to its claimed final");

    std::vector<std::pair<std::string, MoveKind>> hops;
    hops.reserve(b.steps.size());
    PlaneCurve bc = b.initial;
    for (const auto& m : b.steps) {
        bc = apply_move(bc, m);
        hops.emplace_back(canonical_key(bc, eq), m.kind);
    }

    auto [tail, fin] = detail::follow_key_chain(cur, hops, eq);
    Trace out;
    out.initial = a.initial;
    out.steps = a.steps;
    out.steps.insert(out.steps.end(), tail.begin(), tail.end());
    out.claimed_final = std::move(fin);
    return out;
}

}  // namespace flatknot
