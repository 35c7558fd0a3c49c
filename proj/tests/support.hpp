#pragma once

// Shared fixture constructions for the test suites. Oracles (independent
// re-implementations used to check the library) live in oracles.hpp.

#include <map>
#include <random>
#include <string>
#include <vector>

#include "segaldyn/fincat.hpp"

namespace testsupport {

using segaldyn::fincat::CategoryPtr;
using segaldyn::fincat::FinCategoryBuilder;
using segaldyn::fincat::FinFunctor;

/// One object, its identity, nothing else.
inline CategoryPtr trivial_category() {
    FinCategoryBuilder b("triv");
    b.object("x");
    b.auto_identities();
    return b.build();
}

/// n objects, identities only.
inline CategoryPtr discrete_category(std::size_t n, const std::string& name = "disc") {
    FinCategoryBuilder b(name);
    for (std::size_t i = 0; i < n; ++i) b.object("x" + std::to_string(i));
    b.auto_identities();
    return b.build();
}

/// Two objects with one arrow between them (plus identities).
inline CategoryPtr arrow_category() {
    FinCategoryBuilder b("arrow");
    b.object("x").object("y");
    b.morphism("a", "x", "y");
    b.auto_identities();
    return b.build();
}

/// Exactly one morphism between every ordered pair of objects.
inline CategoryPtr indiscrete_category(std::size_t n, const std::string& name = "indisc") {
    FinCategoryBuilder b(name);
    std::vector<std::string> objs;
    for (std::size_t i = 0; i < n; ++i) {
        objs.push_back("x" + std::to_string(i));
        b.object(objs.back());
    }
    auto mor = [](std::size_t i, std::size_t j) {
        return "m" + std::to_string(i) + "_" + std::to_string(j);
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b.morphism(mor(i, j), objs[i], objs[j]);
    for (std::size_t i = 0; i < n; ++i) b.identity(objs[i], mor(i, i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) b.rule(mor(i, j), mor(j, k), mor(i, k));
    return b.build();
}

/// One-object category from a monoid multiplication table. Element 0 is the
/// unit. table[i][j] is "i then j".
inline CategoryPtr monoid_category(const std::vector<std::vector<std::size_t>>& table,
                                   const std::string& name = "monoid") {
    FinCategoryBuilder b(name);
    b.object("*");
    const std::size_t n = table.size();
    auto mor = [](std::size_t i) { return "e" + std::to_string(i); };
    for (std::size_t i = 0; i < n; ++i) b.morphism(mor(i), "*", "*");
    b.identity("*", mor(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b.rule(mor(i), mor(j), mor(table[i][j]));
    return b.build();
}

/// Unit plus a two-element left-zero semigroup: e1*x = e1, e2*x = e2. Small
/// but noncommutative, so transformation sets vary in size.
inline CategoryPtr left_zero_monoid() {
    return monoid_category({{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}, "lz3");
}

/// Two disjoint arrows x0->y0, x1->y1; swapping them is an automorphism.
inline CategoryPtr disjoint_arrows() {
    FinCategoryBuilder b("arrows2");
    b.object("x0").object("y0").object("x1").object("y1");
    b.morphism("a0", "x0", "y0").morphism("a1", "x1", "y1");
    b.auto_identities();
    return b.build();
}

/// Endofunctor of a discrete-ish category from an object permutation or map;
/// morphisms follow the identities.
inline FinFunctor object_map_functor(const CategoryPtr& cat,
                                     const std::map<std::string, std::string>& omap) {
    FinFunctor f{cat, cat, omap, {}};
    for (const auto& [obj, idm] : cat->identities()) f.morphism_map[idm] = cat->identity_of(omap.at(obj));
    return f;
}

/// A deterministic mt19937 so every test run sees the same randomness.
inline std::mt19937 rng(std::uint32_t seed) { return std::mt19937(seed); }

}  // namespace testsupport
