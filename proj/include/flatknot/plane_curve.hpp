#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace flatknot {

using Dart = std::uint32_t;

// Raised on malformed curve data or an illegal operation on a curve.
struct CurveError : std::runtime_error {
    explicit CurveError(const std::string& what) : std::runtime_error(what) {}
};

// One face of the sphere complement, as the cyclic dart orbit along its boundary.
// The boundary starts at the smallest dart of the orbit, so face lists are
// reproducible across runs and usable as stable site indices.
struct Face {
    std::vector<Dart> boundary;

    std::size_t degree() const { return boundary.size(); }
};

// Outcome of semantic validation. Issues are ordered by validation stage;
// later stages are skipped when an earlier one fails.
struct ValidationReport {
    std::vector<std::string> issues;

    bool ok() const { return issues.empty(); }
};

// A generic closed curve on the sphere, stored as a combinatorial map on a
// 4-valent graph. Vertex v owns darts 4v..4v+3 in counterclockwise rotation
// order; opposite positions (p, p+2) are the two strand passages through v.
// The edge pairing `inv` is a fixed-point-free involution on darts.
// Instances are immutable; every mutation lives in a free function that
// returns a fresh curve.
class PlaneCurve {
public:
    // The crossingless round curve: no vertices, two faces.
    static PlaneCurve trivial() { return PlaneCurve{}; }

    // Builds a curve from an explicit edge involution. Structural shape
    // (length, range, involution, no fixed points) is enforced here; whether
    // the result is a single curve on the sphere is the job of validate().
    static PlaneCurve from_involution(std::vector<Dart> inv) {
        if (inv.size() % 4 != 0)
            throw CurveError("dart count must be a multiple of 4, got " +
                             std::to_string(inv.size()));
        const Dart n = static_cast<Dart>(inv.size());
        for (Dart d = 0; d < n; ++d) {
            if (inv[d] >= n)
                throw CurveError("dart " + std::to_string(d) + " pairs out of range");
            if (inv[d] == d)
                throw CurveError("dart " + std::to_string(d) + " pairs with itself");
            if (inv[inv[d]] != d)
                throw CurveError("edge pairing is not an involution at dart " +
                                 std::to_string(d));
        }
        return PlaneCurve{std::move(inv)};
    }

    bool is_trivial() const { return inv_.empty(); }
    std::size_t vertex_count() const { return inv_.size() / 4; }
    std::size_t edge_count() const { return inv_.size() / 2; }
    std::size_t dart_count() const { return inv_.size(); }

    Dart inv(Dart d) const { return inv_[d]; }
    const std::vector<Dart>& involution() const { return inv_; }

    static Dart vertex_of(Dart d) { return d >> 2; }
    static Dart pos_of(Dart d) { return d & 3u; }
    static Dart dart_at(Dart vertex, Dart pos) { return (vertex << 2) | (pos & 3u); }

    // Next dart counterclockwise around the same vertex.
    static Dart rot(Dart d) { return (d & ~3u) | ((d + 1) & 3u); }
    static Dart rot_back(Dart d) { return (d & ~3u) | ((d + 3) & 3u); }
    // The opposite strand end at the same vertex: the curve enters at d and
    // leaves at through(d).
    static Dart through(Dart d) { return d ^ 2u; }

    // Curve successor on leaving darts: travel the edge, pass through the
    // far vertex.
    Dart next_leaving(Dart d) const { return through(inv_[d]); }

    // Face successor: travel the edge, turn to the next corner.
    Dart face_next(Dart d) const { return rot(inv_[d]); }

    // All faces, ordered by their smallest boundary dart. The trivial curve
    // reports its two disk faces as empty boundaries.
    std::vector<Face> faces() const {
        if (is_trivial()) return {Face{}, Face{}};
        std::vector<Face> out;
        std::vector<bool> seen(inv_.size(), false);
        for (Dart d = 0; d < inv_.size(); ++d) {
            if (seen[d]) continue;
            Face f;
            Dart w = d;
            do {
                seen[w] = true;
                f.boundary.push_back(w);
                w = face_next(w);
            } while (w != d);
            out.push_back(std::move(f));
        }
        return out;
    }

    // Edge representatives (the smaller dart of each pair), ascending.
    // Deterministic edge ordering for move site indices.
    std::vector<Dart> edge_min_darts() const {
        std::vector<Dart> out;
        out.reserve(edge_count());
        for (Dart d = 0; d < inv_.size(); ++d)
            if (d < inv_[d]) out.push_back(d);
        return out;
    }

    // Semantic validation, staged: edge pairing shape, then single-circuit,
    // then sphericity via the Euler count. Structural breakage in earlier
    // stages suppresses later checks since their walks would not terminate
    // meaningfully.
    ValidationReport validate() const {
        ValidationReport rep;
        if (is_trivial()) return rep;

        const Dart n = static_cast<Dart>(inv_.size());
        for (Dart d = 0; d < n; ++d) {
            if (inv_[d] >= n || inv_[d] == d || inv_[inv_[d]] != d) {
                rep.issues.push_back("edge pairing is not a fixed-point-free involution");
                return rep;
            }
        }

        // One closed strand must use every edge exactly once. Walk the curve
        // from dart 0 and tick off edges by their smaller dart.
        std::vector<bool> edge_used(n, false);
        std::size_t steps = 0;
        Dart w = 0;
        do {
            Dart lo = std::min(w, inv_[w]);
            if (edge_used[lo]) {
                rep.issues.push_back("strand walk repeats an edge; pairing is inconsistent");
                return rep;
            }
            edge_used[lo] = true;
            w = next_leaving(w);
            ++steps;
        } while (w != 0 && steps <= n);
        if (steps != edge_count()) {
            rep.issues.push_back("not a single closed curve: strand walk closes after " +
                                 std::to_string(steps) + " of " +
                                 std::to_string(edge_count()) + " edges");
            return rep;
        }

        const std::size_t f = faces().size();
        if (f != vertex_count() + 2) {
            rep.issues.push_back("not spherical: V=" + std::to_string(vertex_count()) +
                                 " E=" + std::to_string(edge_count()) +
                                 " F=" + std::to_string(f));
        }
        return rep;
    }

    // Throwing wrapper around validate() for call sites that require a
    // well-formed curve.
    void check_valid() const {
        auto rep = validate();
        if (!rep.ok()) throw CurveError(rep.issues.front());
    }

    // The same curve with every vertex rotation reversed: the sphere's
    // orientation flip. pos 1 and 3 swap, 0 and 2 stay.
    PlaneCurve mirrored() const {
        std::vector<Dart> m(inv_.size());
        for (Dart d = 0; d < inv_.size(); ++d)
            m[mirror_dart(d)] = mirror_dart(inv_[d]);
        return PlaneCurve{std::move(m)};
    }

    static Dart mirror_dart(Dart d) { return (d & ~3u) | ((4 - (d & 3u)) & 3u); }

    bool operator==(const PlaneCurve&) const = default;

private:
    PlaneCurve() = default;
    explicit PlaneCurve(std::vector<Dart> inv) : inv_(std::move(inv)) {}

    std::vector<Dart> inv_;
};

}  // namespace flatknot
