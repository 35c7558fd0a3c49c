#include "segaldyn/tower.hpp"

#include <sstream>

namespace segaldyn::tower {

StateTower::StateTower(fincat::CategoryPtr base, std::vector<fincat::EndCategory> levels,
                       std::vector<std::string> seeds)
    : base_(std::move(base)), levels_(std::move(levels)), seeds_(std::move(seeds)) {
    if (levels_.empty()) throw_input("a state tower needs depth >= 1");
    if (seeds_.size() != levels_.size())
        throw_input("tower has " + std::to_string(levels_.size()) + " levels but " +
                    std::to_string(seeds_.size()) + " seeds");
    if (levels_.front().base().get() != base_.get())
        throw_input("level 1 is not an End-category of the tower base");
    for (std::size_t i = 1; i < levels_.size(); ++i)
        if (levels_[i].base().get() != levels_[i - 1].category().get())
            throw_input("level " + std::to_string(i + 1) + " is not an End-category of level " +
                        std::to_string(i));
    for (std::size_t i = 0; i < levels_.size(); ++i)
        if (!levels_[i].category()->has_object(seeds_[i]))
            throw_input("seed '" + seeds_[i] + "' is not an object of level " + std::to_string(i + 1));
}

const fincat::EndCategory& StateTower::level(std::size_t m) const {
    if (m < 1 || m > levels_.size())
        throw_input("tower has no level " + std::to_string(m));
    return levels_[m - 1];
}

const std::string& StateTower::seed(std::size_t m) const {
    if (m < 1 || m > seeds_.size())
        throw_input("tower has no level " + std::to_string(m));
    return seeds_[m - 1];
}

std::string StateTower::state(std::size_t n, std::size_t m) const {
    if (m < 1 || m > levels_.size())
        throw_input("tower has no level " + std::to_string(m));
    if (n == 0 || m == levels_.size()) return seeds_[m - 1];

    std::lock_guard<std::mutex> lock(mu_);
    // Unrolled recurrence with memoization; the recursion only ever walks up
    // the diagonal, so depth stays at most n * depth.
    std::vector<std::pair<std::size_t, std::size_t>> stack{{n, m}};
    while (!stack.empty()) {
        auto [cn, cm] = stack.back();
        if (cn == 0 || cm == levels_.size() || memo_.count({cn, cm})) {
            stack.pop_back();
            continue;
        }
        bool ready = true;
        for (auto need : {std::pair<std::size_t, std::size_t>{cn - 1, cm + 1},
                          std::pair<std::size_t, std::size_t>{cn - 1, cm}}) {
            if (need.first == 0 || need.second == levels_.size() || memo_.count(need)) continue;
            stack.push_back(need);
            ready = false;
        }
        if (!ready) continue;
        auto value = [&](std::size_t vn, std::size_t vm) -> const std::string& {
            if (vn == 0 || vm == levels_.size()) return seeds_[vm - 1];
            return memo_.at({vn, vm});
        };
        const std::string& driver = value(cn - 1, cm + 1);
        const std::string& lower = value(cn - 1, cm);
        const fincat::FinFunctor& df = levels_[cm].functor_of(driver);  // functor on level cm
        memo_[{cn, cm}] = df.object_map.at(lower);
        stack.pop_back();
    }
    return memo_.at({n, m});
}

std::string next_state(const StateTower& tower, std::size_t n, std::size_t m) {
    if (m == tower.depth())
        throw_input("depth exhausted: level " + std::to_string(m) +
                    " is the top of the tower, nothing drives its evolution");
    if (m < 1 || m > tower.depth())
        throw_input("tower has no level " + std::to_string(m));
    return tower.state(n + 1, m);
}

fincat::FinFunctor postcompose_driver(const fincat::EndCategory& level, const std::string& object_id) {
    const fincat::FinFunctor& g = level.functor_of(object_id);
    fincat::FinFunctor out{level.category(), level.category(), {}, {}};
    for (const auto& f : level.object_ids()) out.object_map[f] = level.compose_objects(f, object_id);
    for (const auto& m : level.category()->morphisms()) {
        const fincat::NatTrans& t = level.transformation_of(m.id);
        fincat::NatTrans whiskered{level.functor_of(out.object_map.at(m.dom)),
                                   level.functor_of(out.object_map.at(m.cod)),
                                   {}};
        for (const auto& [obj, comp] : t.components)
            whiskered.components[obj] = g.morphism_map.at(comp);
        auto found = level.find_morphism(whiskered);
        if (!found)
            throw_data("postcompose driver image of '" + m.id + "' is not a morphism of " +
                       level.category()->name());
        out.morphism_map[m.id] = *found;
    }
    return out;
}

fincat::FinFunctor precompose_driver(const fincat::EndCategory& level, const std::string& object_id) {
    const fincat::FinFunctor& g = level.functor_of(object_id);
    fincat::FinFunctor out{level.category(), level.category(), {}, {}};
    for (const auto& f : level.object_ids()) out.object_map[f] = level.compose_objects(object_id, f);
    for (const auto& m : level.category()->morphisms()) {
        const fincat::NatTrans& t = level.transformation_of(m.id);
        fincat::NatTrans whiskered{level.functor_of(out.object_map.at(m.dom)),
                                   level.functor_of(out.object_map.at(m.cod)),
                                   {}};
        for (const auto& [obj, img] : g.object_map) whiskered.components[obj] = t.components.at(img);
        auto found = level.find_morphism(whiskered);
        if (!found)
            throw_data("precompose driver image of '" + m.id + "' is not a morphism of " +
                       level.category()->name());
        out.morphism_map[m.id] = *found;
    }
    return out;
}

namespace {

// Minimal period of the infinite continuation of the recorded tuple cycle.
std::size_t minimal_period(const std::vector<std::string>& window) {
    const std::size_t len = window.size();
    for (std::size_t p = 1; p <= len; ++p) {
        if (len % p != 0) continue;
        bool ok = true;
        for (std::size_t t = 0; t + p < len && ok; ++t)
            if (window[t] != window[t + p]) ok = false;
        if (ok) return p;
    }
    return len;
}

}  // namespace

FlowResult discrete_flow(const StateTower& tower, const std::string& start, std::size_t max_steps) {
    if (!tower.base()->has_object(start))
        throw_input("flow start '" + start + "' is not an object of '" + tower.base()->name() + "'");
    if (max_steps < 1) throw_input("discrete_flow needs max_steps >= 1");

    FlowResult result;
    result.trajectory.push_back(start);

    // The pair (current object, diagonal of level states) evolves by a fixed
    // map, so a repeated tuple pins down the eventual behavior exactly.
    std::map<std::string, std::size_t> seen;
    const std::size_t depth = tower.depth();

    for (std::size_t k = 0;; ++k) {
        std::ostringstream key;
        key << result.trajectory[k];
        for (std::size_t m = 1; m <= depth; ++m) key << '\x1f' << tower.state(k, m);

        auto [it, fresh] = seen.emplace(key.str(), k);
        if (!fresh) {
            const std::size_t i = it->second;
            result.steps_used = k;
            std::vector<std::string> window(result.trajectory.begin() + static_cast<std::ptrdiff_t>(i),
                                            result.trajectory.begin() + static_cast<std::ptrdiff_t>(k));
            bool constant = true;
            for (const auto& x : window)
                if (x != window.front()) { constant = false; break; }
            if (constant) {
                result.verdict = {VerdictKind::Fixed, window.front(), 0, 0};
            } else {
                std::size_t p = minimal_period(window);
                std::size_t s = i;
                while (s > 0 && result.trajectory[s - 1] == result.trajectory[s - 1 + p]) --s;
                result.verdict = {VerdictKind::Cycle, "", s, p};
            }
            return result;
        }

        if (k == max_steps) {
            result.steps_used = k;
            result.verdict = {VerdictKind::Inconclusive, "", 0, 0};
            return result;
        }

        const fincat::FinFunctor& psi = tower.level(1).functor_of(tower.state(k, 1));
        result.trajectory.push_back(psi.object_map.at(result.trajectory[k]));
    }
}

FlowLimit flow_limit(const FlowResult& result) {
    switch (result.verdict.kind) {
        case VerdictKind::Fixed:
            return {true, result.verdict.fixed_object, 0, 0};
        case VerdictKind::Cycle:
            return {false, "", result.verdict.cycle_start, result.verdict.cycle_period};
        case VerdictKind::Inconclusive:
            break;
    }
    throw_input("flow verdict is inconclusive: no limit can be decided");
}

}  // namespace segaldyn::tower
