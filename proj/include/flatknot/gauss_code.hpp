#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "flatknot/plane_curve.hpp"

namespace flatknot {

// Double-occurrence word with per-crossing chirality. Labels are dense,
// 0-based, and ordered by first appearance along the curve.
struct GaussCode {
    std::vector<std::uint32_t> word;  // length 2n, each label appears twice
    std::vector<char> signs;          // length n, '+' or '-'

    std::size_t crossings() const { return signs.size(); }
};

namespace detail {

inline void check_word_shape(const std::vector<std::uint32_t>& word) {
    if (word.size() % 2 != 0)
        throw CurveError("Gauss word length must be even");
    const std::size_t n = word.size() / 2;
    std::vector<int> count(n, 0);
    for (auto label : word) {
        if (label >= n)
            throw CurveError("Gauss word labels must be dense 0.." + std::to_string(n - 1));
        ++count[label];
    }
    for (std::size_t l = 0; l < n; ++l)
        if (count[l] != 2)
            throw CurveError("label " + std::to_string(l) + " must occur exactly twice");
}

// Rotation-system construction without the sphericity check. First visit of
// a crossing enters at position 0; the second visit enters at position 1 for
// '+' and position 3 for '-'. Sign + means the second strand crosses the
// first from right to left in the fixed global handedness.
inline PlaneCurve build_rotation_system(const GaussCode& code) {
    check_word_shape(code.word);
    const std::size_t n = code.word.size() / 2;
    if (code.signs.size() != n)
        throw CurveError("sign count must equal crossing count");
    for (char s : code.signs)
        if (s != '+' && s != '-') throw CurveError("signs must be '+' or '-'");
    if (n == 0) return PlaneCurve::trivial();

    std::vector<Dart> entry(code.word.size());
    std::vector<bool> seen(n, false);
    for (std::size_t t = 0; t < code.word.size(); ++t) {
        const std::uint32_t label = code.word[t];
        if (!seen[label]) {
            entry[t] = PlaneCurve::dart_at(label, 0);
            seen[label] = true;
        } else {
            entry[t] = PlaneCurve::dart_at(label, code.signs[label] == '+' ? 1 : 3);
        }
    }
    std::vector<Dart> inv(4 * n);
    for (std::size_t t = 0; t < code.word.size(); ++t) {
        const Dart exit = PlaneCurve::through(entry[t]);
        const Dart next = entry[(t + 1) % code.word.size()];
        inv[exit] = next;
        inv[next] = exit;
    }
    return PlaneCurve::from_involution(std::move(inv));
}

}  // namespace detail

// Builds the curve of a signed code and checks it lives on the sphere.
inline PlaneCurve curve_from_signed_code(const GaussCode& code) {
    PlaneCurve c = detail::build_rotation_system(code);
    c.check_valid();
    return c;
}

// Reads the code off a valid curve starting at the given leaving dart.
// Labels are assigned in first-visit order; the sign of a crossing is '+'
// exactly when the second arrival is one rotation step past the first.
inline GaussCode extract_code(const PlaneCurve& curve, Dart start_leaving) {
    GaussCode code;
    if (curve.is_trivial()) return code;
    const std::size_t n = curve.vertex_count();
    code.word.reserve(2 * n);
    code.signs.assign(n, '?');
    std::vector<Dart> first_arrival(n, 0);
    std::vector<std::uint32_t> label_of(n, UINT32_MAX);
    std::uint32_t next_label = 0;

    Dart w = start_leaving;
    for (std::size_t t = 0; t < 2 * n; ++t) {
        const Dart a = curve.inv(w);
        const Dart v = PlaneCurve::vertex_of(a);
        if (label_of[v] == UINT32_MAX) {
            label_of[v] = next_label++;
            first_arrival[v] = a;
            code.word.push_back(label_of[v]);
        } else {
            code.word.push_back(label_of[v]);
            code.signs[label_of[v]] = (a == PlaneCurve::rot(first_arrival[v])) ? '+' : '-';
        }
        w = PlaneCurve::through(a);
    }
    return code;
}

// Default start: the edge arriving at dart 0. On a curve built from a
// normalized code the walk then replays the build order, so extraction
// undoes the builder exactly and reparsing written text is the identity.
inline GaussCode extract_code(const PlaneCurve& curve) {
    if (curve.is_trivial()) return {};
    return extract_code(curve, curve.inv(0));
}

// Spherical realization of an unsigned word: scans sign assignments in
// ascending mask order (clear bit = '+') and returns the first that embeds.
inline PlaneCurve curve_from_word(const std::vector<std::uint32_t>& word) {
    detail::check_word_shape(word);
    const std::size_t n = word.size() / 2;
    if (n == 0) return PlaneCurve::trivial();
    if (n >= 30) throw CurveError("unsigned import limited to fewer than 30 crossings");
    GaussCode code;
    code.word = word;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        code.signs.assign(n, '+');
        for (std::size_t l = 0; l < n; ++l)
            if (mask & (1ull << l)) code.signs[l] = '-';
        PlaneCurve c = detail::build_rotation_system(code);
        if (c.validate().ok()) return c;
    }
    throw CurveError("word is not realizable on sphere as a single curve");
}

// ---- text format ----------------------------------------------------------
// Line 1: space-separated positive integer labels, 2n tokens; an empty line
// is the trivial curve. Line 2 (optional): `label:+` / `label:-` tokens in
// ascending label order. `#` starts a comment.

inline std::string write_gauss_text(const PlaneCurve& curve) {
    if (curve.is_trivial()) return "\n";
    const GaussCode code = extract_code(curve);
    std::ostringstream out;
    for (std::size_t t = 0; t < code.word.size(); ++t) {
        if (t) out << ' ';
        out << code.word[t] + 1;
    }
    out << '\n';
    for (std::size_t l = 0; l < code.signs.size(); ++l) {
        if (l) out << ' ';
        out << l + 1 << ':' << code.signs[l];
    }
    out << '\n';
    return out.str();
}

inline PlaneCurve read_gauss_text(const std::string& text) {
    // Comment-only lines vanish; the first surviving line is the word line
    // even when empty (that spelling is the trivial curve).
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        if (auto hash = raw.find('#'); hash != std::string::npos) {
            bool only_comment = raw.find_first_not_of(" \t") == hash;
            raw.erase(hash);
            if (only_comment) continue;
        }
        lines.push_back(raw);
    }
    while (!lines.empty() && lines.size() > 1 &&
           lines.back().find_first_not_of(" \t\r") == std::string::npos)
        lines.pop_back();
    if (lines.empty()) lines.push_back("");

    std::istringstream word_line(lines[0]);
    std::vector<std::uint64_t> raw_labels;
    std::uint64_t tok;
    while (word_line >> tok) raw_labels.push_back(tok);
    if (!word_line.eof()) throw CurveError("word line has non-integer tokens");

    if (raw_labels.empty()) {
        if (lines.size() > 1 && lines[1].find_first_not_of(" \t\r") != std::string::npos)
            throw CurveError("trivial curve file must not carry a sign line");
        return PlaneCurve::trivial();
    }

    // Arbitrary distinct labels are accepted and densified by first appearance.
    std::map<std::uint64_t, std::uint32_t> dense;
    std::vector<std::uint32_t> word;
    word.reserve(raw_labels.size());
    for (auto l : raw_labels) {
        auto [it, _] = dense.try_emplace(l, static_cast<std::uint32_t>(dense.size()));
        word.push_back(it->second);
    }
    detail::check_word_shape(word);

    std::optional<std::vector<char>> signs;
    if (lines.size() > 1 && lines[1].find_first_not_of(" \t\r") != std::string::npos) {
        signs.emplace(dense.size(), '?');
        std::istringstream sign_line(lines[1]);
        std::string stok;
        std::size_t count = 0;
        while (sign_line >> stok) {
            auto colon = stok.find(':');
            if (colon == std::string::npos || colon + 2 != stok.size() ||
                (stok[colon + 1] != '+' && stok[colon + 1] != '-'))
                throw CurveError("bad sign token '" + stok + "'");
            std::uint64_t label = 0;
            try {
                label = std::stoull(stok.substr(0, colon));
            } catch (const std::exception&) {
                throw CurveError("bad sign token '" + stok + "'");
            }
            auto it = dense.find(label);
            if (it == dense.end())
                throw CurveError("sign for unknown label " + std::to_string(label));
            if ((*signs)[it->second] != '?')
                throw CurveError("duplicate sign for label " + std::to_string(label));
            (*signs)[it->second] = stok[colon + 1];
            ++count;
        }
        if (count != dense.size())
            throw CurveError("sign line must cover every label exactly once");
    }
    if (lines.size() > 2)
        throw CurveError("unexpected content after the sign line");

    if (signs) {
        GaussCode code;
        code.word = std::move(word);
        code.signs = std::move(*signs);
        return curve_from_signed_code(code);
    }
    return curve_from_word(word);
}

}  // namespace flatknot
