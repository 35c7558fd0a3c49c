#include <doctest.h>

#include <map>
#include <sstream>

#include "oracles.hpp"
#include "segaldyn/tower.hpp"
#include "support.hpp"

using namespace segaldyn;
using namespace segaldyn::fincat;
using namespace segaldyn::tower;

namespace {

// Plain recursion on the defining recurrence, no memo, no sharing.
std::string unrolled_state(const StateTower& t, std::size_t n, std::size_t m) {
    if (n == 0 || m == t.depth()) return t.seed(m);
    std::string driver = unrolled_state(t, n - 1, m + 1);
    std::string lower = unrolled_state(t, n - 1, m);
    return apply_functor(t.level(m + 1).functor_of(driver), lower);
}

StateTower swap_tower() {
    auto X = testsupport::discrete_category(2);
    FinFunctor swap = testsupport::object_map_functor(X, {{"x0", "x1"}, {"x1", "x0"}});
    EndCategory L1 = end_category(X, {{"swap", swap}});
    EndCategory L2 = end_category(L1.category(), {{"idL1", identity_functor(L1.category())}});
    return StateTower(X, {L1, L2}, {"swap", "idL1"});
}

}  // namespace

TEST_SUITE_BEGIN("tower");

TEST_CASE("identity driver keeps the level-1 state constant") {
    StateTower t = swap_tower();
    for (std::size_t n = 0; n < 6; ++n) CHECK(t.state(n, 1) == "swap");
}

TEST_CASE("the first evolved state is the driver applied to the seed") {
    auto X = testsupport::discrete_category(3);
    FinFunctor rot = testsupport::object_map_functor(X, {{"x0", "x1"}, {"x1", "x2"}, {"x2", "x0"}});
    EndCategory L1 = end_category(X, {{"rot", rot}});
    EndCategory L2 = end_category(L1.category(), {{"drv", postcompose_driver(L1, "rot")}});
    StateTower t(X, {L1, L2}, {"rot", "drv"});

    const std::string expected =
        apply_functor(t.level(2).functor_of(t.seed(2)), t.seed(1));
    CHECK(next_state(t, 0, 1) == expected);
    CHECK(t.state(1, 1) == expected);
    CHECK(t.state(1, 1) == L1.compose_objects("rot", "rot"));
}

TEST_CASE("a three-level tower matches the hand-unrolled recurrence") {
    auto X = testsupport::discrete_category(3);
    FinFunctor rot = testsupport::object_map_functor(X, {{"x0", "x1"}, {"x1", "x2"}, {"x2", "x0"}});
    FinFunctor drop = testsupport::object_map_functor(X, {{"x0", "x0"}, {"x1", "x0"}, {"x2", "x2"}});
    EndCategory L1 = end_category(X, {{"rot", rot}, {"drop", drop}});
    EndCategory L2 = end_category(L1.category(), {{"post_rot", postcompose_driver(L1, "rot")},
                                                  {"pre_drop", precompose_driver(L1, "drop")}});
    EndCategory L3 = end_category(L2.category(), {{"top", postcompose_driver(L2, "pre_drop")}});
    StateTower t(X, {L1, L2, L3}, {"rot", "post_rot", "top"});

    // The displayed first stages, spelled out.
    CHECK(t.state(1, 1) == apply_functor(t.level(2).functor_of(t.seed(2)), t.seed(1)));
    CHECK(t.state(1, 2) == apply_functor(t.level(3).functor_of(t.seed(3)), t.seed(2)));
    CHECK(t.state(2, 1) == apply_functor(t.level(2).functor_of(t.state(1, 2)), t.state(1, 1)));

    for (std::size_t m = 1; m <= 3; ++m)
        for (std::size_t n = 0; n <= 8; ++n) CHECK(t.state(n, m) == unrolled_state(t, n, m));
}

TEST_CASE("next_state refuses the top level") {
    StateTower t = swap_tower();
    CHECK_THROWS_AS((void)next_state(t, 0, 2), SegalError);
    CHECK_THROWS_AS((void)next_state(t, 3, 7), SegalError);
}

TEST_CASE("all-identity seeds give an immediate fixed verdict") {
    auto X = testsupport::discrete_category(2);
    using Gens = std::vector<std::pair<std::string, FinFunctor>>;
    EndCategory L1 = end_category(X, Gens{});
    EndCategory L2 = end_category(L1.category(), Gens{});
    StateTower t(X, {L1, L2}, {"id", "id"});

    for (const auto& start : X->objects()) {
        FlowResult r = discrete_flow(t, start, 64);
        CHECK(r.verdict.kind == VerdictKind::Fixed);
        CHECK(r.verdict.fixed_object == start);
        CHECK(r.steps_used == 1);
        CHECK(r.trajectory.front() == start);
        FlowLimit lim = flow_limit(r);
        CHECK(lim.exists);
        CHECK(lim.object == start);
    }
}

TEST_CASE("the swap functor cycles with period two") {
    StateTower t = swap_tower();
    FlowResult r = discrete_flow(t, "x0", 64);
    CHECK(r.verdict.kind == VerdictKind::Cycle);
    CHECK(r.verdict.cycle_start == 0);
    CHECK(r.verdict.cycle_period == 2);
    CHECK(r.trajectory[0] == "x0");
    CHECK(r.trajectory[1] == "x1");
    CHECK(r.trajectory[2] == "x0");

    FlowLimit lim = flow_limit(r);
    CHECK_FALSE(lim.exists);
    CHECK(lim.cycle_period == 2);
}

TEST_CASE("single-seed mode iterates one state") {
    auto X = testsupport::discrete_category(3);
    FinFunctor rot = testsupport::object_map_functor(X, {{"x0", "x1"}, {"x1", "x2"}, {"x2", "x0"}});
    EndCategory L1 = end_category(X, {{"rot", rot}});
    StateTower t(X, {L1}, {"rot"});

    FlowResult r = discrete_flow(t, "x0", 16);
    // x0 -> rot x0 -> rot^2 x0 -> ...
    std::string cur = "x0";
    for (std::size_t k = 0; k < r.trajectory.size(); ++k) {
        CHECK(r.trajectory[k] == cur);
        cur = apply_functor(rot, cur);
    }
    CHECK(r.verdict.kind == VerdictKind::Cycle);
    CHECK(r.verdict.cycle_start == 0);
    CHECK(r.verdict.cycle_period == 3);
}

TEST_CASE("flows on random functional graphs agree with the Floyd oracle") {
    auto gen = testsupport::rng(1712);
    for (int round = 0; round < 12; ++round) {
        std::uniform_int_distribution<std::size_t> sized(2, 12);
        const std::size_t n = sized(gen);
        auto X = testsupport::discrete_category(n);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        std::map<std::string, std::string> omap;
        for (const auto& o : X->objects()) omap[o] = X->objects()[pick(gen)];
        FinFunctor f = testsupport::object_map_functor(X, omap);
        EndCategory L1 = end_category(X, {{"f", f}}, EndOptions{200000});
        StateTower t(X, {L1}, {"f"});

        for (const auto& start : X->objects()) {
            FlowResult r = discrete_flow(t, start, 4 * n + 4);
            auto [mu, lam] = oracles::floyd(omap, start);
            if (lam == 1) {
                CHECK(r.verdict.kind == VerdictKind::Fixed);
                CHECK(r.verdict.fixed_object == r.trajectory[mu]);
            } else {
                CHECK(r.verdict.kind == VerdictKind::Cycle);
                CHECK(r.verdict.cycle_start == mu);
                CHECK(r.verdict.cycle_period == lam);
            }
        }
    }
}

TEST_CASE("cycle verdicts replay around the cycle") {
    StateTower t = swap_tower();
    FlowResult r = discrete_flow(t, "x1", 64);
    REQUIRE(r.verdict.kind == VerdictKind::Cycle);
    std::string cur = r.trajectory[r.verdict.cycle_start];
    for (std::size_t k = r.verdict.cycle_start; k < r.verdict.cycle_start + r.verdict.cycle_period; ++k)
        cur = apply_functor(t.level(1).functor_of(t.state(k, 1)), cur);
    CHECK(cur == r.trajectory[r.verdict.cycle_start]);
}

TEST_CASE("identical inputs give byte-identical flow results") {
    auto run = []() {
        StateTower t = swap_tower();
        FlowResult r = discrete_flow(t, "x0", 64);
        std::ostringstream os;
        for (const auto& x : r.trajectory) os << x << ';';
        os << static_cast<int>(r.verdict.kind) << ';' << r.verdict.fixed_object << ';'
           << r.verdict.cycle_start << ';' << r.verdict.cycle_period << ';' << r.steps_used;
        return os.str();
    };
    CHECK(run() == run());
}

TEST_CASE("inconclusive flows refuse a limit") {
    auto X = testsupport::discrete_category(3);
    FinFunctor rot = testsupport::object_map_functor(X, {{"x0", "x1"}, {"x1", "x2"}, {"x2", "x0"}});
    EndCategory L1 = end_category(X, {{"rot", rot}});
    StateTower t(X, {L1}, {"rot"});
    FlowResult r = discrete_flow(t, "x0", 1);  // too short to see the 3-cycle
    CHECK(r.verdict.kind == VerdictKind::Inconclusive);
    CHECK_THROWS_AS((void)flow_limit(r), SegalError);
}

TEST_SUITE_END();
