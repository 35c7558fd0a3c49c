#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "segaldyn/fincat.hpp"

namespace segaldyn::tower {

/// A finite tower of higher-state categories: level 1 is an End-category of
/// the base, level m+1 an End-category of level m. Each level holds one seed
/// object; the seed of level m+1, read as a functor on level m, drives the
/// evolution of level m. Levels above the depth are absent, so the top seed
/// stays constant.
class StateTower {
public:
    StateTower(fincat::CategoryPtr base, std::vector<fincat::EndCategory> levels,
               std::vector<std::string> seeds);

    std::size_t depth() const noexcept { return levels_.size(); }
    const fincat::CategoryPtr& base() const noexcept { return base_; }
    const fincat::EndCategory& level(std::size_t m) const;  // 1-based
    const std::string& seed(std::size_t m) const;

    /// The state at diagonal position (n, m): state(0, m) is the seed,
    /// state(n+1, m) = state(n, m+1) applied to state(n, m), and the top
    /// level is constant. Memoized; safe to call concurrently.
    std::string state(std::size_t n, std::size_t m) const;

private:
    fincat::CategoryPtr base_;
    std::vector<fincat::EndCategory> levels_;
    std::vector<std::string> seeds_;
    mutable std::map<std::pair<std::size_t, std::size_t>, std::string> memo_;
    mutable std::mutex mu_;
};

/// The evolved state at the next step, ψ at (n+1, m). The top level has no
/// level above to drive it, so asking for its next state is an error.
std::string next_state(const StateTower& tower, std::size_t n, std::size_t m);

/// Whiskering drivers: the endofunctor of the level category that composes
/// every object with the given one (left for postcompose, right for
/// precompose). These are the natural way to seed a level from an object of
/// the level below.
fincat::FinFunctor postcompose_driver(const fincat::EndCategory& level, const std::string& object_id);
fincat::FinFunctor precompose_driver(const fincat::EndCategory& level, const std::string& object_id);

enum class VerdictKind { Fixed, Cycle, Inconclusive };

struct Verdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    std::string fixed_object;       // Fixed only
    std::size_t cycle_start = 0;    // Cycle only
    std::size_t cycle_period = 0;   // Cycle only
};

struct FlowResult {
    std::vector<std::string> trajectory;  // objects of the base, from the start
    Verdict verdict;
    std::size_t steps_used = 0;
};

/// Iterates the base object under the tower-driven sequence of level-1
/// states, stopping at a provably constant tail, a detected cycle, or
/// max_steps (inconclusive, flagged in the verdict).
FlowResult discrete_flow(const StateTower& tower, const std::string& start, std::size_t max_steps);

struct FlowLimit {
    bool exists = false;
    std::string object;             // when exists
    std::size_t cycle_start = 0;    // when the trajectory is genuinely periodic
    std::size_t cycle_period = 0;
};

/// Fixed verdicts have the limit; cycles report its absence together with
/// the cycle data (the truncated tower has no object to stand for it).
/// An inconclusive verdict is an undecided error.
FlowLimit flow_limit(const FlowResult& result);

}  // namespace segaldyn::tower
