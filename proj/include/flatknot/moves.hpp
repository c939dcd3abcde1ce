#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "flatknot/plane_curve.hpp"

namespace flatknot {

enum class MoveKind : std::uint8_t { r1_plus, r1_minus, r2_minus, r3 };

inline const char* kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::r1_plus: return "R1+";
        case MoveKind::r1_minus: return "R1-";
        case MoveKind::r2_minus: return "R2-";
        case MoveKind::r3: return "R3";
    }
    return "?";
}

inline std::optional<MoveKind> kind_from_name(std::string_view name) {
    if (name == "R1+") return MoveKind::r1_plus;
    if (name == "R1-") return MoveKind::r1_minus;
    if (name == "R2-") return MoveKind::r2_minus;
    if (name == "R3") return MoveKind::r3;
    return std::nullopt;
}

// One applicable rewrite. Face-sited kinds address the index in the curve's
// deterministic faces() ordering; a kink insertion addresses an edge by any
// of its darts plus the side of the directed run dart -> inv(dart) the new
// loop bulges into.
struct Move {
    MoveKind kind = MoveKind::r1_plus;
    std::uint32_t face = 0;  // r1_minus / r2_minus / r3
    Dart edge_dart = 0;      // r1_plus
    bool left = true;        // r1_plus

    bool operator==(const Move&) const = default;
};

struct MovePolicy {
    bool r1_plus = true;
    bool r1_minus = true;
    bool r2_minus = true;
    bool r3 = true;

    static constexpr MovePolicy full() { return {}; }
    // Type-1 and type-3 only: the relation whose classes the negative-2
    // count is measured across.
    static constexpr MovePolicy homotopy_13() { return {true, true, false, true}; }

    bool allows(MoveKind k) const {
        switch (k) {
            case MoveKind::r1_plus: return r1_plus;
            case MoveKind::r1_minus: return r1_minus;
            case MoveKind::r2_minus: return r2_minus;
            case MoveKind::r3: return r3;
        }
        return false;
    }
};

namespace detail {

inline bool distinct_vertices(const Face& f) {
    for (std::size_t i = 0; i < f.boundary.size(); ++i)
        for (std::size_t j = i + 1; j < f.boundary.size(); ++j)
            if (PlaneCurve::vertex_of(f.boundary[i]) == PlaneCurve::vertex_of(f.boundary[j]))
                return false;
    return true;
}

// Deletes the given vertices and splices every strand run through the
// deleted region into a single edge between its surviving end darts.
inline PlaneCurve remove_vertices(const PlaneCurve& curve, std::vector<Dart> vertices) {
    std::sort(vertices.begin(), vertices.end());
    const std::size_t old_v = curve.vertex_count();
    std::vector<bool> deleted(old_v, false);
    for (Dart v : vertices) deleted[v] = true;
    std::vector<Dart> new_id(old_v, 0);
    Dart next = 0;
    for (Dart v = 0; v < old_v; ++v)
        if (!deleted[v]) new_id[v] = next++;
    if (next == 0) return PlaneCurve::trivial();

    std::vector<Dart> inv(4 * next);
    auto relabel = [&](Dart d) {
        return PlaneCurve::dart_at(new_id[PlaneCurve::vertex_of(d)], PlaneCurve::pos_of(d));
    };
    for (Dart z = 0; z < curve.dart_count(); ++z) {
        if (deleted[PlaneCurve::vertex_of(z)]) continue;
        Dart w = curve.inv(z);
        std::size_t guard = 0;
        while (deleted[PlaneCurve::vertex_of(w)]) {
            w = curve.inv(PlaneCurve::through(w));
            if (++guard > curve.dart_count())
                throw CurveError("strand splice did not terminate");
        }
        inv[relabel(z)] = relabel(w);
    }
    return PlaneCurve::from_involution(std::move(inv));
}

}  // namespace detail

// Complete applicable-move list under the policy. Deterministic order:
// face-sited moves by ascending face index, then kink insertions by
// ascending edge dart, left before right.
inline std::vector<Move> enumerate_moves(const PlaneCurve& curve,
                                         MovePolicy policy = MovePolicy::full()) {
    std::vector<Move> out;
    if (curve.is_trivial()) {
        if (policy.r1_plus) {
            out.push_back({MoveKind::r1_plus, 0, 0, true});
            out.push_back({MoveKind::r1_plus, 0, 0, false});
        }
        return out;
    }
    const auto faces = curve.faces();
    for (std::uint32_t idx = 0; idx < faces.size(); ++idx) {
        const auto& f = faces[idx];
        if (f.degree() == 1 && policy.r1_minus)
            out.push_back({MoveKind::r1_minus, idx, 0, true});
        else if (f.degree() == 2 && policy.r2_minus && detail::distinct_vertices(f))
            out.push_back({MoveKind::r2_minus, idx, 0, true});
        else if (f.degree() == 3 && policy.r3 && detail::distinct_vertices(f))
            out.push_back({MoveKind::r3, idx, 0, true});
    }
    if (policy.r1_plus) {
        for (Dart g : curve.edge_min_darts()) {
            out.push_back({MoveKind::r1_plus, 0, g, true});
            out.push_back({MoveKind::r1_plus, 0, g, false});
        }
    }
    return out;
}

// Applies one move and returns the rewritten curve. Every result is
// re-validated; a failure here is an engine bug, not a caller error.
inline PlaneCurve apply_move(const PlaneCurve& curve, const Move& move) {
    PlaneCurve result = PlaneCurve::trivial();
    switch (move.kind) {
        case MoveKind::r1_plus: {
            if (curve.is_trivial()) {
                if (move.edge_dart != 0)
                    throw CurveError("kink insertion on the trivial curve addresses dart 0");
                result = move.left ? PlaneCurve::from_involution({1, 0, 3, 2})
                                   : PlaneCurve::from_involution({3, 2, 1, 0});
                break;
            }
            if (move.edge_dart >= curve.dart_count())
                throw CurveError("kink insertion dart out of range");
            const Dart g = move.edge_dart;
            const Dart h = curve.inv(g);
            std::vector<Dart> inv = curve.involution();
            const Dart n0 = static_cast<Dart>(inv.size());
            inv.resize(inv.size() + 4);
            auto pair = [&](Dart a, Dart b) { inv[a] = b, inv[b] = a; };
            pair(g, n0);
            if (move.left) {
                pair(n0 + 2, n0 + 1);
                pair(n0 + 3, h);
            } else {
                pair(n0 + 2, n0 + 3);
                pair(n0 + 1, h);
            }
            result = PlaneCurve::from_involution(std::move(inv));
            break;
        }
        case MoveKind::r1_minus: {
            const auto faces = curve.faces();
            if (move.face >= faces.size()) throw CurveError("face index out of range");
            const auto& f = faces[move.face];
            if (f.degree() != 1)
                throw CurveError("kink removal needs a monogon face");
            result = detail::remove_vertices(curve, {PlaneCurve::vertex_of(f.boundary[0])});
            break;
        }
        case MoveKind::r2_minus: {
            const auto faces = curve.faces();
            if (move.face >= faces.size()) throw CurveError("face index out of range");
            const auto& f = faces[move.face];
            if (f.degree() != 2)
                throw CurveError("bigon removal needs a degree-2 face");
            if (!detail::distinct_vertices(f))
                throw CurveError("bigon removal needs two distinct vertices");
            result = detail::remove_vertices(curve, {PlaneCurve::vertex_of(f.boundary[0]),
                                                     PlaneCurve::vertex_of(f.boundary[1])});
            break;
        }
        case MoveKind::r3: {
            const auto faces = curve.faces();
            if (move.face >= faces.size()) throw CurveError("face index out of range");
            const auto& f = faces[move.face];
            if (f.degree() != 3)
                throw CurveError("strand slide needs a trigon face");
            if (!detail::distinct_vertices(f))
                throw CurveError("strand slide needs three distinct vertices");
            // Corner frame at side dart d: the face arrives at rot_back(d),
            // the two non-face darts are rot(d) (incoming strand continuation)
            // and through(d) (outgoing strand continuation).
            const Dart* d = f.boundary.data();
            Dart o_in[3], o_out[3], nu_in[3], nu_out[3];
            for (int i = 0; i < 3; ++i) {
                o_in[i] = PlaneCurve::rot(d[i]);
                o_out[i] = PlaneCurve::through(d[i]);
                nu_in[i] = d[(i + 2) % 3];
                nu_out[i] = PlaneCurve::rot_back(d[(i + 1) % 3]);
            }
            std::vector<Dart> inv = curve.involution();
            auto pair = [&](Dart a, Dart b) { inv[a] = b, inv[b] = a; };
            // The triangle re-forms on the far side of each crossing.
            for (int i = 0; i < 3; ++i) pair(o_in[i], o_out[(i + 2) % 3]);
            // External strands re-anchor to the darts the slide vacated.
            std::unordered_map<Dart, Dart> leg_anchor;
            for (int i = 0; i < 3; ++i) {
                leg_anchor[o_in[i]] = nu_in[i];
                leg_anchor[o_out[i]] = nu_out[i];
            }
            for (const auto& [leg, anchor] : leg_anchor) {
                const Dart x = curve.inv(leg);
                auto far = leg_anchor.find(x);
                if (far != leg_anchor.end()) {
                    if (leg < x) pair(anchor, far->second);
                } else {
                    pair(anchor, x);
                }
            }
            result = PlaneCurve::from_involution(std::move(inv));
            break;
        }
    }
    result.check_valid();
    return result;
}

// Vertex-count change of a move kind.
inline int vertex_delta(MoveKind k) {
    switch (k) {
        case MoveKind::r1_plus: return 1;
        case MoveKind::r1_minus: return -1;
        case MoveKind::r2_minus: return -2;
        case MoveKind::r3: return 0;
    }
    return 0;
}

}  // namespace flatknot
