#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "flatknot/canonical.hpp"
#include "flatknot/gauss_code.hpp"
#include "flatknot/moves.hpp"
#include "flatknot/plane_curve.hpp"
#include "flatknot/trace.hpp"

namespace flatknot {

// Budgets making the unbounded minimum finitely checkable. Results are
// always relative to them: crossing_budget bounds every intermediate's
// vertex count (part of the question being asked), while state_cap and
// cost_cap merely truncate the search (hitting them forfeits exactness).
struct SearchConfig {
    std::uint32_t crossing_budget = 0;
    std::size_t state_cap = 1'000'000;
    std::uint32_t cost_cap = std::numeric_limits<std::uint32_t>::max();
    MovePolicy policy = MovePolicy::full();
    Equivalence equivalence = Equivalence::mirror_inclusive;
};

enum class SearchOutcome : std::uint8_t { found, exhausted_no_solution, caps_hit };

inline const char* outcome_name(SearchOutcome o) {
    switch (o) {
        case SearchOutcome::found: return "found";
        case SearchOutcome::exhausted_no_solution: return "exhausted_no_solution";
        case SearchOutcome::caps_hit: return "caps_hit";
    }
    return "?";
}

// found: value is the minimum R2- count over in-budget reduction sequences,
// witnessed by a replayable trace of that exact cost. It is an upper bound
// for the unbudgeted minimum, and exact relative to the budget only when no
// cap truncated the search first (exact_within_budget).
struct SearchResult {
    SearchOutcome outcome = SearchOutcome::caps_hit;
    std::uint32_t value = 0;
    Trace witness;
    std::size_t states_explored = 0;
    std::size_t states_settled = 0;
    std::size_t max_frontier = 0;
    bool caps_pruned = false;
    bool exact_within_budget = false;
};

namespace detail {

struct SearchNode {
    const std::string* parent = nullptr;
    MoveKind via = MoveKind::r1_plus;
    std::uint32_t cost = 0;
    bool settled = false;
};

inline void check_search_pre(const PlaneCurve& curve, const SearchConfig& config) {
    if (config.state_cap == 0) throw CurveError("state cap must be at least 1");
    if (curve.vertex_count() > config.crossing_budget)
        throw CurveError("curve exceeds the crossing budget");
}

// Walks parent links root -> key and returns the hops after the root.
inline std::vector<std::pair<std::string, MoveKind>> hops_from_root(
    const std::unordered_map<std::string, SearchNode>& nodes, const std::string* key) {
    std::vector<std::pair<std::string, MoveKind>> hops;
    while (key != nullptr) {
        const auto& node = nodes.at(*key);
        if (node.parent == nullptr) break;
        hops.emplace_back(*key, node.via);
        key = node.parent;
    }
    std::reverse(hops.begin(), hops.end());
    return hops;
}

}  // namespace detail

// Minimum R2- count to reach the trivial curve, with every intermediate
// kept within crossing_budget: 0-1 shortest path (kink and slide edges are
// free, bigon removals cost 1) over states deduplicated by canonical key.
// Single-threaded and deterministic.
inline SearchResult rii_bounded(const PlaneCurve& curve, const SearchConfig& config) {
    detail::check_search_pre(curve, config);
    const Equivalence eq = config.equivalence;
    const std::string goal = canonical_key(PlaneCurve::trivial(), eq);

    SearchResult result;
    std::unordered_map<std::string, detail::SearchNode> nodes;
    std::deque<std::pair<const std::string*, std::uint32_t>> frontier;

    const auto start_it = nodes.emplace(canonical_key(curve, eq), detail::SearchNode{}).first;
    result.states_explored = 1;
    frontier.emplace_back(&start_it->first, 0);

    while (!frontier.empty()) {
        result.max_frontier = std::max(result.max_frontier, frontier.size());
        const auto [key, cost] = frontier.front();
        frontier.pop_front();
        auto& node = nodes.at(*key);
        if (node.settled || node.cost != cost) continue;
        node.settled = true;
        ++result.states_settled;

        if (*key == goal) {
            result.outcome = SearchOutcome::found;
            result.value = cost;
            result.exact_within_budget = !result.caps_pruned;
            auto [steps, fin] = detail::follow_key_chain(
                curve, detail::hops_from_root(nodes, key), eq);
            result.witness = Trace{curve, std::move(steps), std::move(fin)};
            const auto report = verify_trace(result.witness, eq);
            if (!report.ok || report.r2_minus_count != result.value ||
                !result.witness.claimed_final.is_trivial())
                throw std::logic_error("search witness failed to replay at its cost");
            return result;
        }

        const PlaneCurve rep = curve_from_key(*key);
        for (const auto& m : enumerate_moves(rep, config.policy)) {
            const std::int64_t child_v = rep.vertex_count() + vertex_delta(m.kind);
            if (child_v > config.crossing_budget) continue;
            const std::uint32_t child_cost = cost + (m.kind == MoveKind::r2_minus ? 1 : 0);
            if (child_cost > config.cost_cap) {
                result.caps_pruned = true;
                continue;
            }
            auto child_key = canonical_key(apply_move(rep, m), eq);
            auto it = nodes.find(child_key);
            if (it == nodes.end()) {
                if (nodes.size() >= config.state_cap) {
                    result.caps_pruned = true;
                    continue;
                }
                it = nodes.emplace(std::move(child_key), detail::SearchNode{}).first;
                ++result.states_explored;
            } else if (it->second.settled || it->second.cost <= child_cost) {
                continue;
            }
            it->second.parent = key;
            it->second.via = m.kind;
            it->second.cost = child_cost;
            if (child_cost == cost)
                frontier.emplace_front(&it->first, child_cost);
            else
                frontier.emplace_back(&it->first, child_cost);
        }
    }

    result.outcome =
        result.caps_pruned ? SearchOutcome::caps_hit : SearchOutcome::exhausted_no_solution;
    result.exact_within_budget = !result.caps_pruned;
    return result;
}

enum class ReachOutcome : std::uint8_t { connected, not_connected_within_budget, caps_hit };

inline const char* outcome_name(ReachOutcome o) {
    switch (o) {
        case ReachOutcome::connected: return "connected";
        case ReachOutcome::not_connected_within_budget: return "not_connected_within_budget";
        case ReachOutcome::caps_hit: return "caps_hit";
    }
    return "?";
}

struct ReachResult {
    ReachOutcome outcome = ReachOutcome::caps_hit;
    Trace witness;  // meaningful when connected
    std::size_t states_explored = 0;
    std::size_t max_frontier = 0;
    bool caps_pruned = false;
};

namespace detail {

// Kink insertions and removals undo each other; slides undo themselves.
// This closure under inversion is what lets one half of a bidirectional
// search run from the target.
inline MoveKind inverse_kind(MoveKind k) {
    switch (k) {
        case MoveKind::r1_plus: return MoveKind::r1_minus;
        case MoveKind::r1_minus: return MoveKind::r1_plus;
        case MoveKind::r3: return MoveKind::r3;
        case MoveKind::r2_minus: break;
    }
    throw std::logic_error("bigon removal has no inverse in the move set");
}

}  // namespace detail

// Are a and b related by kink insertions/removals and slides alone, with
// every intermediate within crossing_budget? Bidirectional breadth-first
// search; the policy is fixed to those three kinds regardless of config.
inline ReachResult reachable_13(const PlaneCurve& a, const PlaneCurve& b,
                                const SearchConfig& config) {
    detail::check_search_pre(a, config);
    detail::check_search_pre(b, config);
    const Equivalence eq = config.equivalence;
    const MovePolicy policy = MovePolicy::homotopy_13();

    ReachResult result;
    std::unordered_map<std::string, detail::SearchNode> side[2];
    std::deque<const std::string*> queue[2];

    const std::string key_a = canonical_key(a, eq);
    const std::string key_b = canonical_key(b, eq);
    if (key_a == key_b) {
        result.outcome = ReachOutcome::connected;
        result.witness = Trace{a, {}, a};
        result.states_explored = 1;
        return result;
    }
    queue[0].push_back(&side[0].emplace(key_a, detail::SearchNode{}).first->first);
    queue[1].push_back(&side[1].emplace(key_b, detail::SearchNode{}).first->first);
    result.states_explored = 2;

    const auto build_witness = [&](const std::string& meet) {
        auto hops = detail::hops_from_root(side[0], &meet);
        std::vector<std::pair<std::string, MoveKind>> back;
        const std::string* key = &meet;
        while (true) {
            const auto& node = side[1].at(*key);
            if (node.parent == nullptr) break;
            back.emplace_back(*node.parent, detail::inverse_kind(node.via));
            key = node.parent;
        }
        hops.insert(hops.end(), back.begin(), back.end());
        auto [steps, fin] = detail::follow_key_chain(a, hops, eq);
        if (canonical_key(fin, eq) != key_b)
            throw std::logic_error("bidirectional witness missed its target");
        result.witness = Trace{a, std::move(steps), std::move(fin)};
        result.outcome = ReachOutcome::connected;
    };

    while (!queue[0].empty() || !queue[1].empty()) {
        result.max_frontier =
            std::max(result.max_frontier, queue[0].size() + queue[1].size());
        int s;
        if (queue[0].empty())
            s = 1;
        else if (queue[1].empty())
            s = 0;
        else
            s = queue[0].size() <= queue[1].size() ? 0 : 1;
        const std::string* key = queue[s].front();
        queue[s].pop_front();

        const PlaneCurve rep = curve_from_key(*key);
        for (const auto& m : enumerate_moves(rep, policy)) {
            const std::int64_t child_v = rep.vertex_count() + vertex_delta(m.kind);
            if (child_v > config.crossing_budget) continue;
            auto child_key = canonical_key(apply_move(rep, m), eq);
            if (side[s].count(child_key)) continue;
            if (side[s].size() + side[1 - s].size() >= config.state_cap) {
                result.caps_pruned = true;
                continue;
            }
            auto it = side[s].emplace(std::move(child_key), detail::SearchNode{}).first;
            ++result.states_explored;
            it->second.parent = key;
            it->second.via = m.kind;
            if (side[1 - s].count(it->first)) {
                build_witness(it->first);
                return result;
            }
            queue[s].push_back(&it->first);
        }
    }

    result.outcome = result.caps_pruned ? ReachOutcome::caps_hit
                                        : ReachOutcome::not_connected_within_budget;
    return result;
}

struct CensusEntry {
    std::string key;
    PlaneCurve curve;
};

namespace detail {

// Double-occurrence words in first-appearance order: at each position either
// introduce the next unused symbol or close one that is still open.
inline void census_words(std::uint32_t n, std::vector<std::uint32_t>& word,
                         std::vector<std::uint32_t>& open, std::uint32_t next,
                         const std::function<void(const std::vector<std::uint32_t>&)>& emit) {
    if (word.size() == 2 * static_cast<std::size_t>(n)) {
        emit(word);
        return;
    }
    if (next < n) {
        word.push_back(next);
        open.push_back(next);
        census_words(n, word, open, next + 1, emit);
        open.pop_back();
        word.pop_back();
    }
    for (std::size_t i = 0; i < open.size(); ++i) {
        const std::uint32_t sym = open[i];
        open.erase(open.begin() + static_cast<std::ptrdiff_t>(i));
        word.push_back(sym);
        census_words(n, word, open, next, emit);
        word.pop_back();
        open.insert(open.begin() + static_cast<std::ptrdiff_t>(i), sym);
    }
}

}  // namespace detail

// Every curve class with at most max_crossings vertices, one canonical
// representative each, ordered by vertex count then key. Enumerates
// double-occurrence words times sign assignments and keeps the spherically
// realizable ones; when classes fold mirrors the first crossing's sign is
// pinned, since flipping every sign mirrors the curve.
inline std::vector<CensusEntry> census(std::uint32_t max_crossings,
                                       Equivalence eq = Equivalence::mirror_inclusive) {
    if (max_crossings > 6) throw CurveError("census limit is 6 crossings");

    std::vector<CensusEntry> entries;
    std::unordered_map<std::string, bool> seen;
    const auto consider = [&](const GaussCode& code) {
        PlaneCurve curve = PlaneCurve::trivial();
        try {
            curve = curve_from_signed_code(code);
        } catch (const CurveError&) {
            return;
        }
        auto key = canonical_key(curve, eq);
        if (!seen.emplace(key, true).second) return;
        PlaneCurve rep = curve_from_key(key);
        entries.push_back({std::move(key), std::move(rep)});
    };

    entries.push_back({canonical_key(PlaneCurve::trivial(), eq), PlaneCurve::trivial()});
    seen.emplace(entries.front().key, true);

    for (std::uint32_t n = 1; n <= max_crossings; ++n) {
        std::vector<std::uint32_t> word, open;
        detail::census_words(n, word, open, 0, [&](const std::vector<std::uint32_t>& w) {
            GaussCode code;
            code.word = w;
            code.signs.assign(n, '+');
            const std::uint32_t free_bits =
                eq == Equivalence::mirror_inclusive ? n - 1 : n;
            for (std::uint32_t mask = 0; mask < (1u << free_bits); ++mask) {
                for (std::uint32_t t = 0; t < free_bits; ++t)
                    code.signs[n - 1 - t] = (mask >> t) & 1u ? '-' : '+';
                consider(code);
            }
        });
    }

    std::sort(entries.begin(), entries.end(), [](const CensusEntry& x, const CensusEntry& y) {
        if (x.curve.vertex_count() != y.curve.vertex_count())
            return x.curve.vertex_count() < y.curve.vertex_count();
        return x.key < y.key;
    });
    return entries;
}

}  // namespace flatknot
