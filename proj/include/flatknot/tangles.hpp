#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include "flatknot/moves.hpp"
#include "flatknot/plane_curve.hpp"

namespace flatknot {

// A three-strand pattern in a disk: two strands crossing each other k times
// in a row (the twist) and one crossing-free strand that can run on either
// side of the twist. Six legs sit on the boundary at fixed wall heights,
// 1/4, 2/4, 3/4 on each wall; the two embeddings of the free strand (below
// or above the twist) are the two sides of the replacement rule.
//
// Darts 0..4k-1 follow the plane-curve layout at the k crossings; ids
// 4k..4k+5 are the legs, ordered left wall bottom-up then right wall
// bottom-up. A leg's pairing names the internal dart its strand attaches to.
struct Tangle {
    std::uint32_t crossings = 0;
    std::vector<Dart> pairing;
    std::array<Dart, 6> legs{};
    // Whether the crossing-free strand runs along the bottom wall arcs. The
    // involution alone cannot tell the two disk embeddings apart, so the
    // side is part of the pattern data.
    bool passer_low = true;

    std::uint32_t dart_span() const { return 4 * crossings + 6; }

    // Counts the internal faces of the disk embedding. A face walk leaving
    // through a leg continues along the boundary wall to the next leg
    // clockwise and re-enters there; the walk along the wall arc that hosts
    // the free strand is split by it according to passer_low.
    std::uint32_t face_count() const;

    // Checks the disk-map axioms: a fixed-point-free involution, legs wired
    // to internal darts, exactly three leg-to-leg strands covering every
    // crossing twice, and Euler characteristic one for the disk.
    bool valid() const;
};

namespace detail {

// Boundary order of the legs around the disk, counterclockwise from the
// bottom-left: left wall bottom-up, then right wall top-down.
inline std::array<int, 6> leg_ring() { return {0, 1, 2, 5, 4, 3}; }

}  // namespace detail

inline std::uint32_t Tangle::face_count() const {
    const std::uint32_t internal = 4 * crossings;
    const auto ring = detail::leg_ring();
    std::array<int, 6> slot{};
    for (int i = 0; i < 6; ++i) slot[legs[ring[i]] - internal] = i;

    // Face step: follow the edge, then turn around the corner. Exiting
    // through a leg walks the wall to the next leg in ring order, crossing
    // any boundary-to-boundary edges met on the way.
    const auto advance = [&](Dart d) {
        Dart p = pairing[d];
        while (p >= internal) {
            const Dart l = legs[ring[(slot[p - internal] + 1) % 6]];
            p = pairing[l];
        }
        return PlaneCurve::rot(p);
    };

    std::vector<char> seen(internal, 0);
    std::uint32_t faces = 0;
    for (Dart start = 0; start < internal; ++start) {
        if (seen[start]) continue;
        ++faces;
        Dart d = start;
        while (!seen[d]) {
            seen[d] = 1;
            d = advance(d);
        }
    }
    // An edge joining two legs pinches off a wall pocket that carries no
    // internal dart; the orbit walk cannot see it.
    std::uint32_t pockets = 0;
    for (Dart l : legs)
        if (pairing[l] >= internal && pairing[l] > l) ++pockets;
    return faces + pockets;
}

inline bool Tangle::valid() const {
    const std::uint32_t span = dart_span();
    if (pairing.size() != span) return false;
    for (Dart d = 0; d < span; ++d)
        if (pairing[d] >= span || pairing[d] == d || pairing[pairing[d]] != d)
            return false;
    // Legs live past the crossing darts; they attach to internal darts or,
    // for a crossing-free strand, directly to another leg.
    std::set<Dart> leg_set(legs.begin(), legs.end());
    if (leg_set.size() != 6) return false;
    for (Dart l : legs)
        if (l < 4 * crossings) return false;

    // Strands: run through the crossings from each leg; every run must end
    // at another leg and the three runs must use each crossing exactly twice.
    std::set<Dart> consumed;
    std::vector<std::uint32_t> visits(crossings, 0);
    std::uint32_t strands = 0;
    for (Dart l : legs) {
        if (consumed.count(l)) continue;
        ++strands;
        consumed.insert(l);
        Dart d = pairing[l];
        while (d < 4 * crossings) {
            ++visits[PlaneCurve::vertex_of(d)];
            d = pairing[PlaneCurve::through(d)];
        }
        consumed.insert(d);
    }
    if (strands != 3) return false;
    for (std::uint32_t v = 0; v < crossings; ++v)
        if (visits[v] != 2) return false;

    // Disk Euler characteristic: V - E + F = 1, with the boundary circle
    // free and the outer region not counted as a face.
    const std::int64_t v = crossings;
    const std::int64_t e = span / 2;
    const std::int64_t f = face_count();
    return v - e + f == 1;
}

// Builds the k-twist pattern. The twist runs horizontally between wall
// heights 2/4 and 3/4; crossing i's west darts face crossing i-1 and the
// first crossing's west darts are the upper-left legs. passer_low picks the
// side of the crossing-free strand, giving the two sides of the rule.
inline Tangle twist_tangle(std::uint32_t k, bool passer_low = true) {
    if (k == 0) throw CurveError("a twist pattern needs at least one crossing");
    Tangle t;
    t.crossings = k;
    t.passer_low = passer_low;
    const Dart base = 4 * k;
    t.legs = {base, base + 1, base + 2, base + 3, base + 4, base + 5};
    t.pairing.assign(t.dart_span(), 0);
    auto pair = [&](Dart a, Dart b) { t.pairing[a] = b, t.pairing[b] = a; };
    const auto at = [](std::uint32_t vertex, int pos) {
        return PlaneCurve::dart_at(vertex, pos);
    };
    // Eyes between neighbours: NE/SE of i meet NW/SW of i+1.
    for (std::uint32_t i = 0; i + 1 < k; ++i) {
        pair(at(i, 3), at(i + 1, 0));
        pair(at(i, 2), at(i + 1, 1));
    }
    // West side of the twist takes the two upper-left legs, east side the
    // two upper-right ones; the 1/4-height legs carry the free strand.
    pair(t.legs[2], at(0, 0));
    pair(t.legs[1], at(0, 1));
    pair(t.legs[5], at(k - 1, 3));
    pair(t.legs[4], at(k - 1, 2));
    pair(t.legs[0], t.legs[3]);
    return t;
}

// One located embedding of the k-twist pattern inside a curve: the run of
// crossing ids along a bigon chain, the face the free strand is to sweep,
// and the dart of the leading crossing on that face where the sweep starts.
struct TangleSite {
    std::vector<std::uint32_t> twist;
    std::uint32_t flank_face = 0;
    Dart anchor = 0;
    // The twist closes into a full ring through every crossing of the
    // curve; the free strand is the closure itself.
    bool cyclic = false;
};

namespace detail {

// Bigon faces on two distinct crossings are the eyes of twists; the chains
// of the eye graph are the maximal twist runs of the curve.
struct EyeChains {
    std::vector<std::vector<std::uint32_t>> paths;
    std::vector<std::vector<std::uint32_t>> cycles;
};

inline EyeChains eye_chains(const PlaneCurve& curve) {
    const auto faces = curve.faces();
    const std::size_t n = curve.vertex_count();
    std::vector<std::vector<std::uint32_t>> adj(n);
    for (const auto& f : faces) {
        if (f.degree() != 2) continue;
        const std::uint32_t a = PlaneCurve::vertex_of(f.boundary[0]);
        const std::uint32_t b = PlaneCurve::vertex_of(f.boundary[1]);
        if (a == b) continue;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& nb : adj) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }

    EyeChains out;
    std::vector<char> used(n, 0);
    // Paths start at crossings with fewer than two eye neighbours.
    for (std::uint32_t v = 0; v < n; ++v) {
        if (used[v] || adj[v].size() >= 2 || adj[v].empty()) continue;
        std::vector<std::uint32_t> run{v};
        used[v] = 1;
        std::uint32_t cur = v;
        while (true) {
            std::uint32_t next = n;
            for (std::uint32_t w : adj[cur])
                if (!used[w]) { next = w; break; }
            if (next == n) break;
            used[next] = 1;
            run.push_back(next);
            cur = next;
        }
        out.paths.push_back(std::move(run));
    }
    // What remains with two neighbours closes into cycles.
    for (std::uint32_t v = 0; v < n; ++v) {
        if (used[v] || adj[v].size() != 2) continue;
        std::vector<std::uint32_t> run{v};
        used[v] = 1;
        std::uint32_t cur = v;
        while (true) {
            std::uint32_t next = n;
            for (std::uint32_t w : adj[cur])
                if (!used[w]) { next = w; break; }
            if (next == n) break;
            used[next] = 1;
            run.push_back(next);
            cur = next;
        }
        out.cycles.push_back(std::move(run));
    }
    return out;
}

// A face flanks a run when it carries a dart of every run crossing plus a
// dart of some crossing outside the run: the strand that is to pass across
// the twist reaches the flank there, diving through the twist strands just
// beyond the window.
inline bool flank_has_free_strand(const PlaneCurve& curve, const Face& face,
                                  const std::vector<std::uint32_t>& run) {
    (void)curve;
    std::set<std::uint32_t> in(run.begin(), run.end());
    std::set<std::uint32_t> met;
    for (Dart d : face.boundary) met.insert(PlaneCurve::vertex_of(d));
    for (std::uint32_t v : run)
        if (!met.count(v)) return false;
    return met.size() > in.size();
}

inline Dart anchor_on(const Face& face, std::uint32_t vertex) {
    for (Dart d : face.boundary)
        if (PlaneCurve::vertex_of(d) == vertex) return d;
    return 0;
}

// The sweep starts on the leading edge of the twist itself: the flank dart
// at the first run crossing whose edge runs to the second. Starting on the
// strand that leaves the twist instead strands the sweep outside it.
inline bool leading_anchor(const PlaneCurve& curve, const Face& face,
                           const std::vector<std::uint32_t>& run, Dart& anchor) {
    if (run.size() == 1) {
        anchor = anchor_on(face, run.front());
        return true;
    }
    for (Dart d : face.boundary) {
        if (PlaneCurve::vertex_of(d) != run[0]) continue;
        if (PlaneCurve::vertex_of(curve.inv(d)) != run[1]) continue;
        anchor = d;
        return true;
    }
    return false;
}

}  // namespace detail

// Finds every embedding of the k-twist pattern: windows of k consecutive
// crossings along an eye chain together with a flank face that carries a
// free strand. Reversed windows and the two flanks are separate sites, one
// per symmetric variant of the pattern. A cycle through every crossing is
// additionally reported once per flank as the closed form, anchored at each
// rotation of the ring.
inline std::vector<TangleSite> find_tangle_occurrences(const PlaneCurve& curve,
                                                       std::uint32_t k) {
    if (k == 0) throw CurveError("a twist pattern needs at least one crossing");
    std::vector<TangleSite> sites;
    if (curve.is_trivial()) return sites;
    const auto faces = curve.faces();
    const auto chains = detail::eye_chains(curve);

    const auto emit_windows = [&](const std::vector<std::uint32_t>& chain, bool wrap) {
        const std::size_t len = chain.size();
        if (len < k) return;
        const std::size_t starts = wrap ? len : len - k + 1;
        for (std::size_t s = 0; s < starts; ++s) {
            std::vector<std::uint32_t> run(k);
            for (std::uint32_t i = 0; i < k; ++i) run[i] = chain[(s + i) % len];
            for (int dir = 0; dir < 2; ++dir) {
                if (dir) std::reverse(run.begin(), run.end());
                if (k == 1 && dir) break;
                for (std::uint32_t f = 0; f < faces.size(); ++f) {
                    if (faces[f].degree() <= 2) continue;
                    if (!detail::flank_has_free_strand(curve, faces[f], run)) continue;
                    TangleSite site;
                    site.twist = run;
                    site.flank_face = f;
                    if (!detail::leading_anchor(curve, faces[f], run, site.anchor)) continue;
                    sites.push_back(std::move(site));
                }
            }
        }
    };

    for (const auto& chain : chains.paths) emit_windows(chain, false);
    for (const auto& cycle : chains.cycles) {
        emit_windows(cycle, true);
        // The full ring: the closure strand passes across the whole twist.
        if (cycle.size() == k && k == curve.vertex_count()) {
            for (std::uint32_t f = 0; f < faces.size(); ++f) {
                std::set<std::uint32_t> met;
                for (Dart d : faces[f].boundary) met.insert(PlaneCurve::vertex_of(d));
                if (faces[f].degree() != k || met.size() != k) continue;
                TangleSite site;
                site.twist = cycle;
                site.flank_face = f;
                if (!detail::leading_anchor(curve, faces[f], cycle, site.anchor)) continue;
                site.cyclic = true;
                sites.push_back(std::move(site));
            }
        }
    }
    return sites;
}

}  // namespace flatknot
