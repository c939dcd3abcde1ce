#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "flatknot/gauss_code.hpp"
#include "flatknot/plane_curve.hpp"

namespace flatknot {

namespace detail {

// Corner names for a crossing drawn in the plane. The counterclockwise
// rotation order 0,1,2,3 walks NW, SW, SE, NE, so the strand passages
// through() connect NW-SE and SW-NE.
enum Corner : Dart { kNW = 0, kSW = 1, kSE = 2, kNE = 3 };

inline Dart corner(Dart vertex, Corner c) { return PlaneCurve::dart_at(vertex, c); }

// Incremental edge pairing for curves assembled crossing by crossing.
// Misuse (double weld, free end at close) is a constructor bug; a pairing
// that closes into several circuits is the caller's parameter problem.
class Assembly {
public:
    explicit Assembly(std::size_t vertices) : inv_(4 * vertices, kFree) {}

    void weld(Dart a, Dart b) {
        if (a >= inv_.size() || b >= inv_.size() || a == b || inv_[a] != kFree ||
            inv_[b] != kFree)
            throw std::logic_error("assembly weld misuse");
        inv_[a] = b;
        inv_[b] = a;
    }

    PlaneCurve close(const std::string& family) const {
        for (Dart d = 0; d < inv_.size(); ++d)
            if (inv_[d] == kFree) throw std::logic_error("assembly left a free end");
        PlaneCurve curve = PlaneCurve::from_involution(inv_);
        ValidationReport rep = curve.validate();
        if (rep.ok()) return curve;
        if (rep.issues.front().find("single closed curve") != std::string::npos)
            throw CurveError(family + " parameters close into more than one component");
        throw std::logic_error(family + " assembly is not planar: " + rep.issues.front());
    }

private:
    static constexpr Dart kFree = ~Dart{0};
    std::vector<Dart> inv_;
};

// Horizontal twist row: vertices first..first+count-1 left to right, both
// strands entering at NW/SW and leaving at NE/SE of each crossing.
inline void weld_row(Assembly& a, Dart first, std::uint32_t count) {
    for (std::uint32_t t = 0; t + 1 < count; ++t) {
        a.weld(corner(first + t, kNE), corner(first + t + 1, kNW));
        a.weld(corner(first + t, kSE), corner(first + t + 1, kSW));
    }
}

// Vertical twist column: vertices top to bottom, both strands entering at
// NW/NE and leaving at SW/SE.
inline void weld_column(Assembly& a, Dart first, std::uint32_t count) {
    for (std::uint32_t t = 0; t + 1 < count; ++t) {
        a.weld(corner(first + t, kSW), corner(first + t + 1, kNW));
        a.weld(corner(first + t, kSE), corner(first + t + 1, kNE));
    }
}

}  // namespace detail

// Braid closure of one 2-strand twist row with 2p+1 crossings: both row ends
// wrap around and rejoin the opposite ends of the same row.
inline PlaneCurve torus_2q(std::uint32_t p) {
    if (p < 1) throw CurveError("torus parameter must be at least 1");
    const std::uint32_t n = 2 * p + 1;
    detail::Assembly a(n);
    detail::weld_row(a, 0, n);
    a.weld(detail::corner(n - 1, detail::kNE), detail::corner(0, detail::kNW));
    a.weld(detail::corner(n - 1, detail::kSE), detail::corner(0, detail::kSW));
    return a.close("torus");
}

// A round circle carrying k consecutive curls; every crossing sits on its
// own monogon, so the chain erases by kink removals alone.
inline PlaneCurve kink_chain(std::uint32_t k) {
    if (k == 0) return PlaneCurve::trivial();
    detail::Assembly a(k);
    for (std::uint32_t v = 0; v < k; ++v) {
        a.weld(detail::corner(v, detail::kSE), detail::corner(v, detail::kNE));
        a.weld(detail::corner(v, detail::kSW), detail::corner((v + 1) % k, detail::kNW));
    }
    return a.close("kink chain");
}

// Vertical twist columns a_1..a_n side by side between two horizontal rails.
// With several columns the rails close over the top and under the bottom
// (the numerator closure of the summed twist tangles); a lone column's rails
// degenerate to its own braid closure, wrapping around its sides, which is
// the reading under which pretzel({q}) is the (2,q) twist cycle.
inline PlaneCurve pretzel(const std::vector<std::uint32_t>& a) {
    if (a.empty()) throw CurveError("pretzel needs at least one twist region");
    std::uint32_t total = 0;
    for (std::uint32_t len : a) {
        if (len < 1) throw CurveError("pretzel twist lengths must be at least 1");
        total += len;
    }
    detail::Assembly asmb(total);
    std::vector<Dart> tl, tr, bl, br;
    std::uint32_t first = 0;
    for (std::uint32_t len : a) {
        detail::weld_column(asmb, first, len);
        tl.push_back(detail::corner(first, detail::kNW));
        tr.push_back(detail::corner(first, detail::kNE));
        bl.push_back(detail::corner(first + len - 1, detail::kSW));
        br.push_back(detail::corner(first + len - 1, detail::kSE));
        first += len;
    }
    const std::size_t n = a.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        asmb.weld(tr[i], tl[i + 1]);
        asmb.weld(br[i], bl[i + 1]);
    }
    if (n == 1) {
        asmb.weld(tl[0], bl[0]);
        asmb.weld(tr[0], br[0]);
    } else {
        asmb.weld(tl[0], tr[n - 1]);
        asmb.weld(bl[0], br[n - 1]);
    }
    return asmb.close("pretzel");
}

// Alternating staircase of twist regions: a_1 horizontal, then each further
// region attached below (even stages) or to the right (odd stages) of the
// running tangle. The plat closes as the braid closure of the final region's
// axis: row ends rejoin for an odd-length list, column sides for an even
// one. Lists whose continued-fraction numerator is even close into two
// circuits and are rejected.
inline PlaneCurve two_bridge(const std::vector<std::uint32_t>& a) {
    if (a.empty()) throw CurveError("two-bridge needs at least one twist region");
    std::uint32_t total = 0;
    for (std::uint32_t len : a) {
        if (len < 1) throw CurveError("two-bridge twist lengths must be at least 1");
        total += len;
    }
    detail::Assembly asmb(total);
    detail::weld_row(asmb, 0, a[0]);
    Dart nw = detail::corner(0, detail::kNW);
    Dart sw = detail::corner(0, detail::kSW);
    Dart ne = detail::corner(a[0] - 1, detail::kNE);
    Dart se = detail::corner(a[0] - 1, detail::kSE);
    std::uint32_t first = a[0];
    for (std::size_t i = 1; i < a.size(); ++i) {
        const std::uint32_t len = a[i];
        if (i % 2 == 1) {
            detail::weld_column(asmb, first, len);
            asmb.weld(sw, detail::corner(first, detail::kNW));
            asmb.weld(se, detail::corner(first, detail::kNE));
            sw = detail::corner(first + len - 1, detail::kSW);
            se = detail::corner(first + len - 1, detail::kSE);
        } else {
            detail::weld_row(asmb, first, len);
            asmb.weld(ne, detail::corner(first, detail::kNW));
            asmb.weld(se, detail::corner(first, detail::kSW));
            ne = detail::corner(first + len - 1, detail::kNE);
            se = detail::corner(first + len - 1, detail::kSE);
        }
        first += len;
    }
    if (a.size() % 2 == 1) {
        asmb.weld(nw, ne);
        asmb.weld(sw, se);
    } else {
        asmb.weld(nw, sw);
        asmb.weld(ne, se);
    }
    return asmb.close("two-bridge");
}

// Cyclic chain of 2n boxes, each holding a 2m-crossing clasp: two hook
// strands anchored on opposite walls of the box twist around each other 2m
// times, and a third strand passes through untouched. Three arcs join
// adjacent boxes; boxes alternate mirror types so the through strand of one
// box continues into a hook of the next. One pass of the traversal walks a
// hook forward through box b+1's twist, the next walks box b's twist
// backward, so every clasp is visited twice and the chain closes into a
// single curve with 4mn crossings.
inline PlaneCurve p_family(std::uint32_t m, std::uint32_t n) {
    if (m < 1) throw CurveError("p_family needs m >= 1");
    if (n < 4) throw CurveError("p_family needs n >= 4");
    const std::uint32_t boxes = 2 * n;
    const std::uint32_t w = 2 * m;
    detail::Assembly a(static_cast<std::size_t>(boxes) * w);
    const auto vert = [w](std::uint32_t b, std::uint32_t t) { return b * w + t; };
    for (std::uint32_t b = 0; b < boxes; ++b) detail::weld_row(a, vert(b, 0), w);
    // Hook ports per box: ent/ret are the twist entry and the wrapped-around
    // return of each hook. Odd boxes are the vertical mirror of even ones.
    const auto ent1 = [&](std::uint32_t b) {
        return detail::corner(vert(b, 0), b % 2 == 0 ? detail::kSW : detail::kNW);
    };
    const auto ret1 = [&](std::uint32_t b) {
        return detail::corner(vert(b, w - 1), b % 2 == 0 ? detail::kSE : detail::kNE);
    };
    const auto ent2 = [&](std::uint32_t b) {
        return detail::corner(vert(b, w - 1), b % 2 == 0 ? detail::kNE : detail::kSE);
    };
    const auto ret2 = [&](std::uint32_t b) {
        return detail::corner(vert(b, 0), b % 2 == 0 ? detail::kNW : detail::kSW);
    };
    for (std::uint32_t b = 0; b < boxes; ++b) {
        a.weld(ent2(b), ret1((b + 1) % boxes));
        a.weld(ret2(b), ent1((b + 2) % boxes));
    }
    return a.close("p_family");
}

// The 16-crossing chain of eight interlocked clasps, stored as its explicit
// signed code so the fixture stands on its own rather than leaning on the
// family constructor it is meant to cross-check.
inline PlaneCurve hagge_yazinski() {
    static const GaussCode code = [] {
        GaussCode c;
        c.word = {0, 1, 2, 3, 4, 5, 1, 0, 6, 7, 5,  4,  8,  9,  7,  6,
                  10, 11, 9, 8, 12, 13, 11, 10, 14, 15, 13, 12, 3, 2, 15, 14};
        c.signs = {'-', '+', '+', '-', '+', '-', '-', '+',
                   '+', '-', '-', '+', '+', '-', '-', '+'};
        return c;
    }();
    return curve_from_signed_code(code);
}

}  // namespace flatknot
