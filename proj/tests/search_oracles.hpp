#pragma once

// Independent optimality oracles for cross-checking rii_bounded. Both avoid
// the production search's machinery (0-1 deque, cost relaxation, settlement):
// the raw oracle also avoids canonical folding entirely, at the price of an
// exploding state space, so it only fits tiny budgets.

#include <flatknot/canonical.hpp>
#include <flatknot/moves.hpp>
#include <flatknot/plane_curve.hpp>

#include <cstring>
#include <optional>
#include <queue>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace oracles {

// Uniform-cost search over raw edge-pairing states, no canonical folding.
inline std::string raw_state(const std::vector<flatknot::Dart>& inv) {
    std::string s(inv.size() * sizeof(flatknot::Dart), '\0');
    std::memcpy(s.data(), inv.data(), s.size());
    return s;
}

inline std::optional<std::uint32_t> raw_min_r2(const flatknot::PlaneCurve& start,
                                               std::uint32_t budget) {
    using namespace flatknot;
    using Entry = std::pair<std::uint32_t, std::vector<Dart>>;
    const auto worse = [](const Entry& a, const Entry& b) { return a.first > b.first; };
    std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> queue(worse);
    std::unordered_map<std::string, std::uint32_t> best;

    queue.push({0, start.involution()});
    best[raw_state(start.involution())] = 0;
    while (!queue.empty()) {
        const auto [cost, inv] = queue.top();
        queue.pop();
        if (inv.empty()) return cost;
        if (best.at(raw_state(inv)) < cost) continue;
        const auto c = PlaneCurve::from_involution(inv);
        for (const auto& m : enumerate_moves(c, MovePolicy::full())) {
            const auto child = apply_move(c, m);
            if (child.vertex_count() > budget) continue;
            const std::uint32_t child_cost = cost + (m.kind == MoveKind::r2_minus ? 1 : 0);
            const auto key = raw_state(child.involution());
            const auto it = best.find(key);
            if (it != best.end() && it->second <= child_cost) continue;
            best[key] = child_cost;
            queue.push({child_cost, child.involution()});
        }
    }
    return std::nullopt;
}

// Cost-layered closure enumeration over canonical classes: layer c is the
// set of classes reachable at cost at most c, built by closing layer seeds
// under free moves and then crossing one bigon removal into the next layer.
inline std::optional<std::uint32_t> layered_min_r2(const flatknot::PlaneCurve& start,
                                                   std::uint32_t budget) {
    using namespace flatknot;
    const std::string goal = canonical_key(PlaneCurve::trivial());
    std::unordered_set<std::string> seen;
    std::vector<std::string> seeds{canonical_key(start)};
    seen.insert(seeds.front());

    for (std::uint32_t cost = 0; !seeds.empty(); ++cost) {
        std::vector<std::string> layer = std::move(seeds);
        seeds.clear();
        std::vector<std::string> stack = layer;
        // Close this layer under kink insertions/removals and slides.
        while (!stack.empty()) {
            const std::string key = std::move(stack.back());
            stack.pop_back();
            const auto c = curve_from_key(key);
            for (const auto& m : enumerate_moves(c, MovePolicy::homotopy_13())) {
                const auto child = apply_move(c, m);
                if (child.vertex_count() > budget) continue;
                auto child_key = canonical_key(child);
                if (!seen.insert(child_key).second) continue;
                layer.push_back(child_key);
                stack.push_back(std::move(child_key));
            }
        }
        for (const auto& key : layer)
            if (key == goal) return cost;
        // Cross one bigon removal into the next layer.
        for (const auto& key : layer) {
            const auto c = curve_from_key(key);
            for (const auto& m : enumerate_moves(c, {false, false, true, false})) {
                auto child_key = canonical_key(apply_move(c, m));
                if (seen.insert(child_key).second) seeds.push_back(std::move(child_key));
            }
        }
    }
    return std::nullopt;
}

}  // namespace oracles
