#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "flatknot/gauss_code.hpp"
#include "flatknot/plane_curve.hpp"

namespace flatknot {

// Which sphere self-maps identify two curves. Oriented keeps mirror images
// apart; mirror_inclusive folds them together (the default everywhere, since
// every statement this library checks is mirror-symmetric).
enum class Equivalence { oriented, mirror_inclusive };

namespace detail {

// One canonicalization candidate: the code read from a fixed start dart.
// Ordered by word, then by sign vector ('+' sorts before '-').
struct CodeCandidate {
    std::vector<std::uint32_t> word;
    std::vector<char> signs;

    bool operator<(const CodeCandidate& other) const {
        if (word != other.word) return word < other.word;
        return signs < other.signs;
    }
};

// Reads the candidate starting at `start`, abandoning the walk as soon as the
// word provably exceeds `best`. Returns true when the result (written into
// `out`) is strictly less or equal-and-sign-smaller than best.
inline bool extract_candidate_pruned(const PlaneCurve& curve, Dart start,
                                     const CodeCandidate& best, CodeCandidate& out) {
    const std::size_t n = curve.vertex_count();
    out.word.clear();
    out.word.reserve(2 * n);
    out.signs.assign(n, '+');
    std::vector<Dart> first_arrival(n, 0);
    std::vector<std::uint32_t> label_of(n, UINT32_MAX);
    std::uint32_t next_label = 0;
    bool strictly_less = best.word.empty();

    Dart w = start;
    for (std::size_t t = 0; t < 2 * n; ++t) {
        const Dart a = curve.inv(w);
        const Dart v = PlaneCurve::vertex_of(a);
        std::uint32_t label = label_of[v];
        if (label == UINT32_MAX) {
            label = label_of[v] = next_label++;
            first_arrival[v] = a;
        } else {
            out.signs[label] = (a == PlaneCurve::rot(first_arrival[v])) ? '+' : '-';
        }
        if (!strictly_less) {
            if (label > best.word[t]) return false;
            if (label < best.word[t]) strictly_less = true;
        }
        out.word.push_back(label);
        w = PlaneCurve::through(a);
    }
    return strictly_less || out.signs <= best.signs;
}

inline CodeCandidate minimal_candidate(const PlaneCurve& curve, Equivalence eq) {
    CodeCandidate best, trial;
    auto scan = [&](const PlaneCurve& c) {
        for (Dart d = 0; d < c.dart_count(); ++d)
            if (extract_candidate_pruned(c, d, best, trial)) std::swap(best, trial);
    };
    scan(curve);
    if (eq == Equivalence::mirror_inclusive) scan(curve.mirrored());
    return best;
}

}  // namespace detail

// Total identifier of a curve up to relabeling, start point, direction, and
// (by default) mirror: "V|word|signs", e.g. "1|0 0|+", trivial "0||".
inline std::string canonical_key(const PlaneCurve& curve,
                                 Equivalence eq = Equivalence::mirror_inclusive) {
    if (curve.is_trivial()) return "0||";
    const auto best = detail::minimal_candidate(curve, eq);
    std::ostringstream out;
    out << curve.vertex_count() << '|';
    for (std::size_t t = 0; t < best.word.size(); ++t) {
        if (t) out << ' ';
        out << best.word[t];
    }
    out << '|';
    for (char s : best.signs) out << s;
    return out.str();
}

// Rebuilds a curve from a key. The result is one concrete representative of
// the class (bit-identical involution for identical keys).
inline PlaneCurve curve_from_key(const std::string& key) {
    auto bar1 = key.find('|');
    auto bar2 = key.rfind('|');
    if (bar1 == std::string::npos || bar2 == bar1)
        throw CurveError("malformed canonical key '" + key + "'");
    std::size_t n = 0;
    try {
        n = std::stoull(key.substr(0, bar1));
    } catch (const std::exception&) {
        throw CurveError("malformed canonical key '" + key + "'");
    }
    if (n == 0) return PlaneCurve::trivial();
    GaussCode code;
    std::istringstream words(key.substr(bar1 + 1, bar2 - bar1 - 1));
    std::uint32_t tok;
    while (words >> tok) code.word.push_back(tok);
    const std::string signs = key.substr(bar2 + 1);
    code.signs.assign(signs.begin(), signs.end());
    if (code.word.size() != 2 * n || code.signs.size() != n)
        throw CurveError("malformed canonical key '" + key + "'");
    return curve_from_signed_code(code);
}

inline bool is_equivalent(const PlaneCurve& a, const PlaneCurve& b,
                          Equivalence eq = Equivalence::mirror_inclusive) {
    return canonical_key(a, eq) == canonical_key(b, eq);
}

}  // namespace flatknot
