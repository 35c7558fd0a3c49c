#pragma once

#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "segaldyn/fincat.hpp"

namespace segaldyn::gencat {

/// One atom of a flavor tower. A through-atom records which slot (and
/// object) of the middle amalgam a composite passed through; a base atom is
/// the user-assigned flavor of an original cell.
struct ThroughAtom {
    std::size_t part;
    std::string object;

    bool operator==(const ThroughAtom& o) const { return part == o.part && object == o.object; }
    bool operator<(const ThroughAtom& o) const {
        return part != o.part ? part < o.part : object < o.object;
    }
};

struct BaseAtom {
    std::string label;

    bool operator==(const BaseAtom& o) const { return label == o.label; }
    bool operator<(const BaseAtom& o) const { return label < o.label; }
};

using FlavorAtom = std::variant<ThroughAtom, BaseAtom>;

/// A flavor tower, stored flattened. Composition writes the through-atom
/// first and then the two operand towers, so a composite tower is the
/// preorder walk of its composition tree: through-atoms have exactly two
/// subtrees, base atoms are leaves.
using FlavorTower = std::vector<FlavorAtom>;

/// Canonical form: decode the preorder walk and re-emit it in-order, which
/// lists base flavors and through-objects in path order. Re-associated
/// composites normalize to the same tower.
FlavorTower normalize_tower(const FlavorTower& tower);

std::string tower_str(const FlavorTower& tower);

struct AmalgamPart {
    fincat::CategoryPtr cat;  // may be null for token parts
    std::string object;
};

/// A tuple of objects treated as one generalized object.
struct Amalgam {
    std::vector<AmalgamPart> parts;

    std::size_t size() const noexcept { return parts.size(); }
};

Amalgam make_amalgam(const fincat::CategoryPtr& cat, std::vector<std::string> objects);
Amalgam token_amalgam(std::vector<std::string> tokens);
bool same_amalgam(const Amalgam& a, const Amalgam& b);

template <typename Payload>
struct GenCell {
    Payload payload;
    FlavorTower tower;
};

using EntryKey = std::pair<std::size_t, std::size_t>;

/// A generalized morphism: per (source slot, target slot) a quiver of
/// flavor-indexed cells. Entries are partial; present quivers are nonempty.
template <typename Payload>
struct GenMorphismT {
    Amalgam source;
    Amalgam target;
    std::map<EntryKey, std::vector<GenCell<Payload>>> entries;

    std::size_t cell_count() const {
        std::size_t n = 0;
        for (const auto& [key, quiver] : entries) n += quiver.size();
        return n;
    }
};

using GenMorphism = GenMorphismT<std::string>;  // payload: base morphism id

template <typename Payload>
struct SetMorphismT {
    Amalgam source;
    Amalgam target;
    std::map<EntryKey, std::set<Payload>> entries;
};

using SetMorphism = SetMorphismT<std::string>;

struct CellSpec {
    std::size_t row;
    std::size_t col;
    std::string flavor;
    std::string morphism;
};

/// Depth-0 assembly with shape validation: every cell must be a base
/// morphism c_i -> d_j in the shared part category, flavors distinct per
/// quiver.
GenMorphism make_gen_morphism(Amalgam source, Amalgam target, const std::vector<CellSpec>& cells);

/// Diagonal identity quivers, one cell per slot.
GenMorphism gen_identity(const Amalgam& c);

/// Quiver composition: entry (i,k) collects every composite of an (i,j)
/// cell with a (j,k) cell, flavor-indexed by the through tower.
GenMorphism gen_compose(const GenMorphism& f, const GenMorphism& g);

/// Applies a base functor to every part, cell and through-object.
GenMorphism gen_functor_apply(const fincat::FinFunctor& F, const GenMorphism& f);

using FlavorSelection = std::map<EntryKey, std::set<FlavorTower>>;

/// Keeps only the selected cells per entry. Entries without a selection are
/// kept whole; an empty or alien selection is an error.
template <typename Payload>
GenMorphismT<Payload> project_flavors(const GenMorphismT<Payload>& f, const FlavorSelection& selection);

/// Label-level convenience for depth-0 quivers.
FlavorSelection selection_by_labels(const std::map<EntryKey, std::set<std::string>>& labels);

/// Forgets ordering and flavor indexing; duplicate payloads collapse.
template <typename Payload>
SetMorphismT<Payload> deconstruct(const GenMorphismT<Payload>& f);

// ---------------------------------------------------------------------------
// template bodies

template <typename Payload>
GenMorphismT<Payload> project_flavors(const GenMorphismT<Payload>& f, const FlavorSelection& selection) {
    for (const auto& [key, towers] : selection) {
        if (towers.empty())
            throw_input("empty flavor selection at entry (" + std::to_string(key.first) + "," +
                        std::to_string(key.second) + ")");
        auto entry = f.entries.find(key);
        if (entry == f.entries.end())
            throw_input("flavor selection at absent entry (" + std::to_string(key.first) + "," +
                        std::to_string(key.second) + ")");
        for (const auto& tower : towers) {
            bool present = false;
            for (const auto& cell : entry->second)
                if (cell.tower == tower) { present = true; break; }
            if (!present)
                throw_input("flavor selection names an alien flavor '" + tower_str(tower) +
                            "' at entry (" + std::to_string(key.first) + "," +
                            std::to_string(key.second) + ")");
        }
    }

    GenMorphismT<Payload> out{f.source, f.target, {}};
    for (const auto& [key, quiver] : f.entries) {
        auto sel = selection.find(key);
        if (sel == selection.end()) {
            out.entries[key] = quiver;
            continue;
        }
        std::vector<GenCell<Payload>> kept;
        for (const auto& cell : quiver)
            if (sel->second.count(cell.tower)) kept.push_back(cell);
        out.entries[key] = std::move(kept);
    }
    return out;
}

template <typename Payload>
SetMorphismT<Payload> deconstruct(const GenMorphismT<Payload>& f) {
    SetMorphismT<Payload> out{f.source, f.target, {}};
    for (const auto& [key, quiver] : f.entries) {
        auto& bucket = out.entries[key];
        for (const auto& cell : quiver) bucket.insert(cell.payload);
    }
    return out;
}

}  // namespace segaldyn::gencat
