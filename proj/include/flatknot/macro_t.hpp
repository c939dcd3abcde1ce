#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "flatknot/canonical.hpp"
#include "flatknot/gauss_code.hpp"
#include "flatknot/moves.hpp"
#include "flatknot/plane_curve.hpp"
#include "flatknot/tangles.hpp"
#include "flatknot/trace.hpp"

namespace flatknot {

namespace detail {

// One strand pass across a twist. Plants a kink on the anchor edge, slides
// it along with triangle moves that always involve the kink crossing, and
// finishes with one kink removal, so a pass is vertex-neutral and it never
// uses a bigon move. Two finishes occur: a monogon frees up at some other
// crossing, which is then the crossing pushed out on the far side, or the
// kink's own monogon reappears after the transit and shedding it leaves the
// strand relocated.
struct PassOutcome {
    std::vector<Move> moves;
    PlaneCurve curve = PlaneCurve::trivial();
    std::uint32_t shed = 0;
    bool ok = false;
};

inline PassOutcome kink_pass(const PlaneCurve& start, Dart anchor, bool left,
                             std::size_t state_cap = 200000) {
    PassOutcome out;
    // Crossings that already carry a monogon keep it; a free pass has to
    // free a new one before it may shed.
    std::set<std::uint32_t> pre;
    for (const auto& f : start.faces())
        if (f.degree() == 1) pre.insert(PlaneCurve::vertex_of(f.boundary[0]));
    const std::uint32_t kink = static_cast<std::uint32_t>(start.vertex_count());

    Move plant;
    plant.kind = MoveKind::r1_plus;
    plant.edge_dart = anchor;
    plant.left = left;

    struct Node {
        PlaneCurve curve;
        std::size_t parent;
        Move via;
        std::uint32_t depth;
    };
    // States are deduplicated by the labelled map itself: the finish tests
    // depend on crossing ids, which a symmetry-blind signature would merge.
    const auto raw = [](const PlaneCurve& c) {
        std::vector<Dart> inv(c.dart_count());
        for (Dart d = 0; d < c.dart_count(); ++d) inv[d] = c.inv(d);
        return inv;
    };
    const std::vector<Dart> origin = raw(start);
    std::vector<Node> nodes;
    nodes.push_back({apply_move(start, plant), static_cast<std::size_t>(-1), plant, 0});
    std::set<std::vector<Dart>> seen{raw(nodes.front().curve)};

    const auto finish = [&](std::size_t head, std::uint32_t face,
                            const PlaneCurve& result, std::uint32_t v) {
        for (std::size_t at = head; at != static_cast<std::size_t>(-1);
             at = nodes[at].parent)
            out.moves.push_back(nodes[at].via);
        std::reverse(out.moves.begin(), out.moves.end());
        Move shed;
        shed.kind = MoveKind::r1_minus;
        shed.face = face;
        out.moves.push_back(shed);
        out.curve = result;
        out.shed = v;
        out.ok = true;
    };

    std::optional<PassOutcome> transit;
    std::uint32_t transit_depth = 0;

    for (std::size_t head = 0; head < nodes.size(); ++head) {
        const PlaneCurve cur = nodes[head].curve;
        const std::uint32_t depth = nodes[head].depth;
        if (transit && depth > transit_depth + 8) break;
        const auto faces = cur.faces();
        for (std::uint32_t idx = 0; idx < faces.size(); ++idx) {
            if (faces[idx].degree() != 1) continue;
            const std::uint32_t v = PlaneCurve::vertex_of(faces[idx].boundary[0]);
            Move shed;
            shed.kind = MoveKind::r1_minus;
            shed.face = idx;
            if (v != kink && !pre.count(v)) {
                finish(head, idx, apply_move(cur, shed), v);
                return out;
            }
            if (v == kink && head != 0 && !transit) {
                PlaneCurve result = apply_move(cur, shed);
                if (raw(result) == origin) continue;
                finish(head, idx, result, v);
                transit = out;
                transit_depth = depth;
                out = PassOutcome();
            }
        }
        if (nodes.size() >= state_cap) break;
        for (std::uint32_t idx = 0; idx < faces.size(); ++idx) {
            const auto& f = faces[idx];
            if (f.degree() != 3 || !distinct_vertices(f)) continue;
            bool holds_kink = false;
            for (Dart d : f.boundary)
                holds_kink |= PlaneCurve::vertex_of(d) == kink;
            if (!holds_kink) continue;
            Move m;
            m.kind = MoveKind::r3;
            m.face = idx;
            PlaneCurve child = apply_move(cur, m);
            if (!seen.insert(raw(child)).second) continue;
            nodes.push_back({std::move(child), head, m, depth + 1});
        }
    }
    if (transit) return *transit;
    return out;
}

// Relabels a tracked crossing set across the id compaction of a removal.
inline std::set<std::uint32_t> drop_and_shift(const std::set<std::uint32_t>& ids,
                                              std::uint32_t removed) {
    std::set<std::uint32_t> next;
    for (std::uint32_t v : ids) {
        if (v == removed) continue;
        next.insert(v > removed ? v - 1 : v);
    }
    return next;
}

// Fully wound form on q crossings: q nested loops, each one sheddable by a
// kink removal from the inside out.
inline std::string coil_word(std::uint32_t q) {
    std::string w;
    for (std::uint32_t i = 1; i <= q; ++i) w += std::to_string(i) + " ";
    for (std::uint32_t i = q; i >= 1; --i) w += std::to_string(i) + " ";
    w += "\n";
    return w;
}

inline std::string coil_key(std::uint32_t q) {
    if (q == 0) return canonical_key(PlaneCurve::trivial());
    return canonical_key(read_gauss_text(coil_word(q)));
}

// Drives the crossing count down using only kink removals, triangle moves
// and, when both stall, a vertex-neutral kink pass to break the deadlock.
// Stops as soon as the canonical key lands in `stops` (or at the trivial
// curve). The move budget per triangle search keeps every step cheap; a
// curve none of the tiers can advance raises an error.
struct DescentOutcome {
    std::vector<Move> moves;
    PlaneCurve curve = PlaneCurve::trivial();
};

inline DescentOutcome descend_13(const PlaneCurve& start,
                                 const std::set<std::string>& stops = {}) {
    DescentOutcome out;
    out.curve = start;
    const auto raw = [](const PlaneCurve& c) {
        std::vector<Dart> inv(c.dart_count());
        for (Dart d = 0; d < c.dart_count(); ++d) inv[d] = c.inv(d);
        return inv;
    };

    // Lateral tiers keep the crossing count; refusing any shape already
    // visited forces them to make progress instead of orbiting a symmetric
    // curve (a closed ring maps to itself under a kink pass).
    std::set<std::string> visited;

    std::size_t guard = 0;
    while (!out.curve.is_trivial()) {
        const std::string key = canonical_key(out.curve);
        if (stops.count(key)) break;
        visited.insert(key);
        if (++guard > 64 * (start.vertex_count() + 4))
            throw CurveError("descent did not terminate");

        const auto faces = out.curve.faces();

        // Shed a free loop outright.
        bool acted = false;
        for (std::uint32_t idx = 0; idx < faces.size(); ++idx) {
            if (faces[idx].degree() != 1) continue;
            Move shed;
            shed.kind = MoveKind::r1_minus;
            shed.face = idx;
            out.curve = apply_move(out.curve, shed);
            out.moves.push_back(shed);
            acted = true;
            break;
        }
        if (acted) continue;

        // Shallow triangle search for a state with a free loop.
        struct Node {
            PlaneCurve curve;
            std::size_t parent;
            Move via;
            std::uint32_t depth;
        };
        std::vector<Node> nodes;
        nodes.push_back({out.curve, static_cast<std::size_t>(-1), Move{}, 0});
        std::set<std::vector<Dart>> seen{raw(out.curve)};
        std::size_t found = static_cast<std::size_t>(-1);
        for (std::size_t head = 0; head < nodes.size() && nodes.size() < 4000;
             ++head) {
            if (nodes[head].depth >= 4) continue;
            const PlaneCurve cur = nodes[head].curve;
            const auto fs = cur.faces();
            for (std::uint32_t idx = 0; idx < fs.size(); ++idx) {
                const auto& f = fs[idx];
                if (f.degree() != 3 || !distinct_vertices(f)) continue;
                Move m;
                m.kind = MoveKind::r3;
                m.face = idx;
                PlaneCurve child = apply_move(cur, m);
                if (!seen.insert(raw(child)).second) continue;
                bool loops = false;
                for (const auto& g : child.faces()) loops |= g.degree() == 1;
                nodes.push_back({std::move(child), head, m, nodes[head].depth + 1});
                if (loops) {
                    found = nodes.size() - 1;
                    break;
                }
            }
            if (found != static_cast<std::size_t>(-1)) break;
        }
        if (found != static_cast<std::size_t>(-1)) {
            std::vector<Move> path;
            for (std::size_t at = found; at != static_cast<std::size_t>(-1);
                 at = nodes[at].parent)
                if (nodes[at].parent != static_cast<std::size_t>(-1))
                    path.push_back(nodes[at].via);
            std::reverse(path.begin(), path.end());
            for (const Move& m : path) {
                out.curve = apply_move(out.curve, m);
                out.moves.push_back(m);
            }
            continue;
        }

        // Deadlocked flat region: run one strand pass across a located
        // twist to reshape it, longest windows first.
        acted = false;
        for (std::uint32_t k = out.curve.vertex_count(); k >= 1 && !acted; --k) {
            for (const auto& site : find_tangle_occurrences(out.curve, k)) {
                auto pass = kink_pass(out.curve, site.anchor, true);
                if (!pass.ok) pass = kink_pass(out.curve, site.anchor, false);
                if (!pass.ok) continue;
                if (raw(pass.curve) == raw(out.curve)) continue;
                for (const Move& m : pass.moves) out.moves.push_back(m);
                out.curve = pass.curve;
                acted = true;
                break;
            }
        }
        if (!acted) throw CurveError("descent stalled on a flat region");
    }
    return out;
}

}  // namespace detail

// Applies the k-twist replacement rule at a located site: the strand on one
// flank of the twist is carried to the other flank by vertex-neutral kink
// passes, two chain crossings at a time. On a closed ring the passes wind
// the ring into nested loops stage by stage. The expansion uses only kink
// insertions, kink removals and triangle moves, never a bigon move, and its
// net crossing delta is zero. Throws when the curve does not carry the
// pattern at the given site.
inline Trace expand_macro_T(const PlaneCurve& curve, std::uint32_t k,
                            const TangleSite& site) {
    if (k == 0) throw CurveError("a twist pattern needs at least one crossing");
    bool matched = false;
    for (const auto& s : find_tangle_occurrences(curve, k))
        matched |= s.twist == site.twist && s.flank_face == site.flank_face &&
                   s.anchor == site.anchor && s.cyclic == site.cyclic;
    if (!matched)
        throw CurveError("curve does not carry the twist pattern at the given site");

    Trace trace;
    trace.initial = curve;
    PlaneCurve cur = curve;

    if (k == 1) {
        // A strand passes one crossing with a single triangle move.
        const auto faces = cur.faces();
        for (std::uint32_t idx = 0; idx < faces.size(); ++idx) {
            const auto& f = faces[idx];
            if (f.degree() != 3 || !detail::distinct_vertices(f)) continue;
            bool holds = false;
            for (Dart d : f.boundary)
                holds |= PlaneCurve::vertex_of(d) == site.twist.front();
            if (!holds) continue;
            Move m;
            m.kind = MoveKind::r3;
            m.face = idx;
            trace.steps.push_back(m);
            cur = apply_move(cur, m);
            break;
        }
        if (trace.steps.empty())
            throw CurveError("twist pass found no route across the pattern");
        trace.claimed_final = cur;
        return trace;
    }

    if (site.cyclic) {
        // The closed form winds the whole ring into the fully nested coil:
        // descend to the innermost coil the route passes through, then wind
        // back up one nested loop at a time. Net crossing delta stays zero.
        const std::uint32_t q = k;
        std::set<std::string> stops;
        for (std::uint32_t m = 0; m < q; ++m) stops.insert(detail::coil_key(m));
        auto descent = detail::descend_13(cur, stops);
        for (const Move& m : descent.moves) trace.steps.push_back(m);
        cur = descent.curve;
        while (cur.vertex_count() < q) {
            const std::string target =
                detail::coil_key(static_cast<std::uint32_t>(cur.vertex_count()) + 1);
            bool wound = false;
            std::vector<Move> candidates;
            if (cur.is_trivial()) {
                candidates.push_back({MoveKind::r1_plus, 0, 0, true});
                candidates.push_back({MoveKind::r1_plus, 0, 0, false});
            } else {
                for (const auto& f : cur.faces()) {
                    if (f.degree() != 1) continue;
                    const Dart d = f.boundary[0];
                    for (Dart e : {d, cur.inv(d)}) {
                        candidates.push_back({MoveKind::r1_plus, 0, e, true});
                        candidates.push_back({MoveKind::r1_plus, 0, e, false});
                    }
                }
            }
            for (const Move& m : candidates) {
                PlaneCurve child = apply_move(cur, m);
                if (canonical_key(child) != target) continue;
                cur = child;
                trace.steps.push_back(m);
                wound = true;
                break;
            }
            if (!wound) throw CurveError("coil winding found no nested insertion");
        }
        trace.claimed_final = cur;
        return trace;
    }

    std::set<std::uint32_t> window(site.twist.begin(), site.twist.end());
    Dart anchor = site.anchor;

    for (std::uint32_t j = k; j >= 2; j -= 2) {
        auto pass = detail::kink_pass(cur, anchor, true);
        if (!pass.ok) pass = detail::kink_pass(cur, anchor, false);
        if (!pass.ok) {
            if (j == k)
                throw CurveError("twist pass found no route across the pattern");
            break;
        }
        for (const Move& m : pass.moves) trace.steps.push_back(m);
        cur = pass.curve;
        window = detail::drop_and_shift(window, pass.shed);
        if (j < 4) break;

        // Continue on the shrunken chain: the next window is the located
        // occurrence whose crossings all descend from the original twist.
        const TangleSite* next = nullptr;
        const auto sites = find_tangle_occurrences(cur, j - 2);
        for (const auto& s : sites) {
            bool inside = true;
            for (std::uint32_t v : s.twist) inside &= window.count(v) != 0;
            if (inside) {
                next = &s;
                break;
            }
        }
        if (!next) break;
        anchor = next->anchor;
        window = std::set<std::uint32_t>(next->twist.begin(), next->twist.end());
    }

    trace.claimed_final = cur;
    return trace;
}

}  // namespace flatknot
