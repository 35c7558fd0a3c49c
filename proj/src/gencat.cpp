#include "segaldyn/gencat.hpp"

#include <algorithm>
#include <sstream>

namespace segaldyn::gencat {

namespace {

struct TowerNode {
    const FlavorAtom* atom;
    std::size_t left = 0, right = 0;  // indices into the node pool; 0 = none for leaves
    bool leaf = true;
};

// Preorder decode: a through-atom opens an internal node with exactly two
// subtrees, a base atom is a leaf.
std::size_t parse_tower(const FlavorTower& tower, std::size_t& pos, std::vector<TowerNode>& pool) {
    if (pos >= tower.size()) throw_data("malformed flavor tower: truncated");
    const FlavorAtom& atom = tower[pos++];
    pool.push_back({&atom, 0, 0, true});
    std::size_t self = pool.size() - 1;
    if (std::holds_alternative<ThroughAtom>(atom)) {
        pool[self].leaf = false;
        std::size_t l = parse_tower(tower, pos, pool);
        std::size_t r = parse_tower(tower, pos, pool);
        pool[self].left = l;
        pool[self].right = r;
    }
    return self;
}

void inorder(const std::vector<TowerNode>& pool, std::size_t node, FlavorTower& out) {
    if (pool[node].leaf) {
        out.push_back(*pool[node].atom);
        return;
    }
    inorder(pool, pool[node].left, out);
    out.push_back(*pool[node].atom);
    inorder(pool, pool[node].right, out);
}

std::string entry_str(const EntryKey& key) {
    return "(" + std::to_string(key.first) + "," + std::to_string(key.second) + ")";
}

}  // namespace

FlavorTower normalize_tower(const FlavorTower& tower) {
    if (tower.empty()) throw_data("malformed flavor tower: empty");
    std::vector<TowerNode> pool;
    std::size_t pos = 0;
    std::size_t root = parse_tower(tower, pos, pool);
    if (pos != tower.size()) throw_data("malformed flavor tower: trailing atoms");
    FlavorTower out;
    out.reserve(tower.size());
    inorder(pool, root, out);
    return out;
}

std::string tower_str(const FlavorTower& tower) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < tower.size(); ++i) {
        if (i) os << ",";
        if (const auto* t = std::get_if<ThroughAtom>(&tower[i]))
            os << "via " << t->part << ":" << t->object;
        else
            os << std::get<BaseAtom>(tower[i]).label;
    }
    os << ")";
    return os.str();
}

Amalgam make_amalgam(const fincat::CategoryPtr& cat, std::vector<std::string> objects) {
    if (objects.empty()) throw_input("an amalgam needs at least one part");
    Amalgam a;
    a.parts.reserve(objects.size());
    for (auto& o : objects) {
        if (!cat->has_object(o))
            throw_input("amalgam part '" + o + "' is not an object of '" + cat->name() + "'");
        a.parts.push_back({cat, std::move(o)});
    }
    return a;
}

Amalgam token_amalgam(std::vector<std::string> tokens) {
    if (tokens.empty()) throw_input("an amalgam needs at least one part");
    Amalgam a;
    for (auto& t : tokens) a.parts.push_back({nullptr, std::move(t)});
    return a;
}

bool same_amalgam(const Amalgam& a, const Amalgam& b) {
    if (a.parts.size() != b.parts.size()) return false;
    for (std::size_t i = 0; i < a.parts.size(); ++i) {
        const std::string an = a.parts[i].cat ? a.parts[i].cat->name() : std::string();
        const std::string bn = b.parts[i].cat ? b.parts[i].cat->name() : std::string();
        if (an != bn || a.parts[i].object != b.parts[i].object) return false;
    }
    return true;
}

GenMorphism make_gen_morphism(Amalgam source, Amalgam target, const std::vector<CellSpec>& cells) {
    GenMorphism out{std::move(source), std::move(target), {}};
    for (const auto& spec : cells) {
        if (spec.row >= out.source.size() || spec.col >= out.target.size())
            throw_input("cell at " + entry_str({spec.row, spec.col}) + " is outside the amalgams");
        const AmalgamPart& from = out.source.parts[spec.row];
        const AmalgamPart& to = out.target.parts[spec.col];
        if (!from.cat || !to.cat || from.cat->name() != to.cat->name())
            throw_input("cell at " + entry_str({spec.row, spec.col}) +
                        " connects parts of different base categories");
        const fincat::Morphism& m = from.cat->morphism(spec.morphism);
        if (m.dom != from.object || m.cod != to.object)
            throw_input("cell '" + spec.morphism + "' at " + entry_str({spec.row, spec.col}) +
                        " is not a morphism " + from.object + " -> " + to.object);
        auto& quiver = out.entries[{spec.row, spec.col}];
        FlavorTower tower{BaseAtom{spec.flavor}};
        for (const auto& cell : quiver)
            if (cell.tower == tower)
                throw_input("duplicate flavor '" + spec.flavor + "' at entry " +
                            entry_str({spec.row, spec.col}));
        quiver.push_back({spec.morphism, std::move(tower)});
    }
    return out;
}

GenMorphism gen_identity(const Amalgam& c) {
    GenMorphism out{c, c, {}};
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!c.parts[i].cat)
            throw_input("gen_identity needs category-backed amalgam parts");
        out.entries[{i, i}].push_back(
            {c.parts[i].cat->identity_of(c.parts[i].object), FlavorTower{BaseAtom{"id"}}});
    }
    return out;
}

GenMorphism gen_compose(const GenMorphism& f, const GenMorphism& g) {
    if (!same_amalgam(f.target, g.source))
        throw_input("generalized composition mismatch: target amalgam of the first is not the source "
                    "of the second");
    GenMorphism out{f.source, g.target, {}};
    const std::size_t mid = f.target.size();
    for (std::size_t i = 0; i < f.source.size(); ++i)
        for (std::size_t k = 0; k < g.target.size(); ++k) {
            std::vector<GenCell<std::string>> quiver;
            for (std::size_t j = 0; j < mid; ++j) {
                auto fe = f.entries.find({i, j});
                auto ge = g.entries.find({j, k});
                if (fe == f.entries.end() || ge == g.entries.end()) continue;
                const AmalgamPart& through = f.target.parts[j];
                for (const auto& fc : fe->second)
                    for (const auto& gc : ge->second) {
                        GenCell<std::string> cell;
                        cell.payload = through.cat->compose(fc.payload, gc.payload);
                        cell.tower.reserve(1 + fc.tower.size() + gc.tower.size());
                        cell.tower.push_back(ThroughAtom{j, through.object});
                        cell.tower.insert(cell.tower.end(), fc.tower.begin(), fc.tower.end());
                        cell.tower.insert(cell.tower.end(), gc.tower.begin(), gc.tower.end());
                        quiver.push_back(std::move(cell));
                    }
            }
            if (!quiver.empty()) out.entries[{i, k}] = std::move(quiver);
        }
    return out;
}

GenMorphism gen_functor_apply(const fincat::FinFunctor& F, const GenMorphism& f) {
    auto map_amalgam = [&](const Amalgam& a) {
        Amalgam out;
        out.parts.reserve(a.parts.size());
        for (const auto& p : a.parts) {
            if (!p.cat || p.cat.get() != F.source.get())
                throw_input("amalgam part '" + p.object + "' does not live in the functor's source");
            out.parts.push_back({F.target, F.object_map.at(p.object)});
        }
        return out;
    };
    GenMorphism out{map_amalgam(f.source), map_amalgam(f.target), {}};
    for (const auto& [key, quiver] : f.entries) {
        auto& bucket = out.entries[key];
        bucket.reserve(quiver.size());
        for (const auto& cell : quiver) {
            auto it = F.morphism_map.find(cell.payload);
            if (it == F.morphism_map.end())
                throw_input("functor lookup failed on cell morphism '" + cell.payload + "'");
            GenCell<std::string> mapped{it->second, cell.tower};
            for (auto& atom : mapped.tower)
                if (auto* t = std::get_if<ThroughAtom>(&atom)) t->object = F.object_map.at(t->object);
            bucket.push_back(std::move(mapped));
        }
    }
    return out;
}

FlavorSelection selection_by_labels(const std::map<EntryKey, std::set<std::string>>& labels) {
    FlavorSelection out;
    for (const auto& [key, names] : labels) {
        auto& towers = out[key];
        for (const auto& name : names) towers.insert(FlavorTower{BaseAtom{name}});
    }
    return out;
}

}  // namespace segaldyn::gencat
