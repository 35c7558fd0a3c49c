#include "segaldyn/fincat.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace segaldyn::fincat {

namespace {

std::string pair_str(const std::string& a, const std::string& b) {
    return "(" + a + "," + b + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// FinCategory

const Morphism& FinCategory::morphism(const std::string& id) const {
    auto it = mor_index_.find(id);
    if (it == mor_index_.end())
        throw_input("unknown morphism '" + id + "' in category '" + name_ + "'");
    return morphisms_[it->second];
}

std::size_t FinCategory::object_index(const std::string& id) const {
    auto it = obj_index_.find(id);
    if (it == obj_index_.end())
        throw_input("unknown object '" + id + "' in category '" + name_ + "'");
    return it->second;
}

std::size_t FinCategory::morphism_index(const std::string& id) const {
    auto it = mor_index_.find(id);
    if (it == mor_index_.end())
        throw_input("unknown morphism '" + id + "' in category '" + name_ + "'");
    return it->second;
}

const std::string& FinCategory::identity_of(const std::string& obj) const {
    auto it = identity_.find(obj);
    if (it == identity_.end())
        throw_input("no identity assigned to object '" + obj + "' in category '" + name_ + "'");
    return it->second;
}

bool FinCategory::compose_defined(const std::string& f, const std::string& g) const {
    return compose_.count({f, g}) > 0;
}

std::string FinCategory::compose(const std::string& f, const std::string& g) const {
    const Morphism& mf = morphism(f);
    const Morphism& mg = morphism(g);
    if (mf.cod != mg.dom)
        throw_input("non-composable pair " + pair_str(f, g) + ": cod(" + f + ")=" + mf.cod +
                    " but dom(" + g + ")=" + mg.dom);
    auto it = compose_.find({f, g});
    if (it == compose_.end())
        throw_data("composition table of '" + name_ + "' has no entry for composable pair " + pair_str(f, g));
    return it->second;
}

std::vector<std::string> FinCategory::hom(const std::string& a, const std::string& b) const {
    std::vector<std::string> out;
    for (const auto& m : morphisms_)
        if (m.dom == a && m.cod == b) out.push_back(m.id);
    return out;
}

// ---------------------------------------------------------------------------
// FinCategoryBuilder

FinCategoryBuilder::FinCategoryBuilder(std::string name) { cat_.name_ = std::move(name); }

FinCategoryBuilder& FinCategoryBuilder::object(const std::string& id) {
    if (cat_.obj_index_.count(id) || cat_.mor_index_.count(id))
        throw_input("duplicate identifier '" + id + "' in category '" + cat_.name_ + "'");
    cat_.obj_index_[id] = cat_.objects_.size();
    cat_.objects_.push_back(id);
    return *this;
}

FinCategoryBuilder& FinCategoryBuilder::morphism(const std::string& id, const std::string& dom,
                                                 const std::string& cod) {
    if (cat_.obj_index_.count(id) || cat_.mor_index_.count(id))
        throw_input("duplicate identifier '" + id + "' in category '" + cat_.name_ + "'");
    if (!cat_.obj_index_.count(dom))
        throw_input("morphism '" + id + "' refers to unknown domain object '" + dom + "'");
    if (!cat_.obj_index_.count(cod))
        throw_input("morphism '" + id + "' refers to unknown codomain object '" + cod + "'");
    cat_.mor_index_[id] = cat_.morphisms_.size();
    cat_.morphisms_.push_back({id, dom, cod});
    return *this;
}

FinCategoryBuilder& FinCategoryBuilder::identity(const std::string& obj, const std::string& morphism_id) {
    if (!cat_.obj_index_.count(obj))
        throw_input("identity assignment for unknown object '" + obj + "'");
    if (!cat_.mor_index_.count(morphism_id))
        throw_input("identity of '" + obj + "' refers to unknown morphism '" + morphism_id + "'");
    cat_.identity_[obj] = morphism_id;
    return *this;
}

FinCategoryBuilder& FinCategoryBuilder::rule(const std::string& f, const std::string& g, const std::string& to) {
    if (!cat_.mor_index_.count(f) || !cat_.mor_index_.count(g) || !cat_.mor_index_.count(to))
        throw_input("composition rule " + pair_str(f, g) + " -> " + to + " refers to an unknown morphism");
    cat_.compose_[{f, g}] = to;
    return *this;
}

FinCategoryBuilder& FinCategoryBuilder::auto_identities() {
    for (const auto& obj : cat_.objects_) {
        if (cat_.identity_.count(obj)) continue;
        std::string id = "id_" + obj;
        while (cat_.obj_index_.count(id) || cat_.mor_index_.count(id)) id += "_";
        morphism(id, obj, obj);
        cat_.identity_[obj] = id;
    }
    // Forced unit rules, plus id;id on every object.
    for (const auto& m : cat_.morphisms_) {
        cat_.compose_[{cat_.identity_.at(m.dom), m.id}] = m.id;
        cat_.compose_[{m.id, cat_.identity_.at(m.cod)}] = m.id;
    }
    return *this;
}

CategoryPtr FinCategoryBuilder::build() { return std::make_shared<FinCategory>(std::move(cat_)); }

// ---------------------------------------------------------------------------
// validate_category

ValidationReport validate_category(const FinCategory& cat) {
    ValidationReport report;

    for (const auto& obj : cat.objects()) {
        auto it = cat.identities().find(obj);
        if (it == cat.identities().end()) {
            report.add("identity-missing", obj, "object '" + obj + "' has no identity morphism");
            continue;
        }
        const Morphism& m = cat.morphism(it->second);
        if (m.dom != obj || m.cod != obj)
            report.add("identity-shape", obj,
                       "identity '" + it->second + "' of '" + obj + "' is not an endomorphism of it");
    }

    // Table keys must sit exactly on the composable pairs, with well-typed results.
    for (const auto& [key, to] : cat.table()) {
        const Morphism& f = cat.morphism(key.first);
        const Morphism& g = cat.morphism(key.second);
        if (f.cod != g.dom) {
            report.add("compose-domain", pair_str(key.first, key.second),
                       "table entry on a non-composable pair");
            continue;
        }
        const Morphism& h = cat.morphism(to);
        if (h.dom != f.dom || h.cod != g.cod)
            report.add("compose-shape", pair_str(key.first, key.second),
                       "composite '" + to + "' has wrong endpoints");
    }
    for (const auto& f : cat.morphisms())
        for (const auto& g : cat.morphisms()) {
            if (f.cod != g.dom) continue;
            if (!cat.compose_defined(f.id, g.id))
                report.add("compose-missing", pair_str(f.id, g.id),
                           "no table entry for composable pair");
        }

    // Unit laws, where the participating entries exist.
    for (const auto& f : cat.morphisms()) {
        auto dit = cat.identities().find(f.dom);
        if (dit != cat.identities().end() && cat.compose_defined(dit->second, f.id)) {
            if (cat.table().at({dit->second, f.id}) != f.id)
                report.add("identity-left", f.id,
                           "compose(" + dit->second + "," + f.id + ") != " + f.id);
        }
        auto cit = cat.identities().find(f.cod);
        if (cit != cat.identities().end() && cat.compose_defined(f.id, cit->second)) {
            if (cat.table().at({f.id, cit->second}) != f.id)
                report.add("identity-right", f.id,
                           "compose(" + f.id + "," + cit->second + ") != " + f.id);
        }
    }

    // Associativity on every composable triple with all entries present.
    for (const auto& f : cat.morphisms())
        for (const auto& g : cat.morphisms()) {
            if (f.cod != g.dom || !cat.compose_defined(f.id, g.id)) continue;
            const std::string fg = cat.table().at({f.id, g.id});
            for (const auto& h : cat.morphisms()) {
                if (g.cod != h.dom || !cat.compose_defined(g.id, h.id)) continue;
                const std::string gh = cat.table().at({g.id, h.id});
                if (!cat.has_morphism(fg) || !cat.has_morphism(gh)) continue;
                if (!cat.compose_defined(fg, h.id) || !cat.compose_defined(f.id, gh)) continue;
                if (cat.table().at({fg, h.id}) != cat.table().at({f.id, gh}))
                    report.add("assoc", "(" + f.id + "," + g.id + "," + h.id + ")",
                               "(f;g);h != f;(g;h)");
            }
        }

    return report;
}

// ---------------------------------------------------------------------------
// Functors

bool functor_equal(const FinFunctor& a, const FinFunctor& b) {
    return a.object_map == b.object_map && a.morphism_map == b.morphism_map;
}

std::string functor_key(const FinFunctor& f) {
    std::ostringstream os;
    for (const auto& [k, v] : f.object_map) os << k << ">" << v << ";";
    os << "|";
    for (const auto& [k, v] : f.morphism_map) os << k << ">" << v << ";";
    return os.str();
}

FinFunctor identity_functor(const CategoryPtr& cat) {
    FinFunctor f{cat, cat, {}, {}};
    for (const auto& o : cat->objects()) f.object_map[o] = o;
    for (const auto& m : cat->morphisms()) f.morphism_map[m.id] = m.id;
    return f;
}

FinFunctor constant_functor(const CategoryPtr& cat, const std::string& obj) {
    const std::string& id = cat->identity_of(obj);
    FinFunctor f{cat, cat, {}, {}};
    for (const auto& o : cat->objects()) f.object_map[o] = obj;
    for (const auto& m : cat->morphisms()) f.morphism_map[m.id] = id;
    return f;
}

FinFunctor compose_functors(const FinFunctor& first, const FinFunctor& then) {
    if (first.target.get() != then.source.get())
        throw_input("functor composition mismatch: target of the first is not the source of the second");
    FinFunctor out{first.source, then.target, {}, {}};
    for (const auto& [k, v] : first.object_map) out.object_map[k] = then.object_map.at(v);
    for (const auto& [k, v] : first.morphism_map) out.morphism_map[k] = then.morphism_map.at(v);
    return out;
}

ValidationReport check_functor(const FinFunctor& f) {
    if (!f.source || !f.target) throw_input("functor lacks a source or target category");
    const FinCategory& src = *f.source;
    const FinCategory& tgt = *f.target;

    for (const auto& o : src.objects())
        if (!f.object_map.count(o))
            throw_input("functor object map is not total: missing '" + o + "'");
    for (const auto& m : src.morphisms())
        if (!f.morphism_map.count(m.id))
            throw_input("functor morphism map is not total: missing '" + m.id + "'");

    ValidationReport report;
    for (const auto& m : src.morphisms()) {
        const std::string& im = f.morphism_map.at(m.id);
        if (!tgt.has_morphism(im)) {
            report.add("functor-range", m.id, "image '" + im + "' is not a morphism of the target");
            continue;
        }
        const Morphism& tm = tgt.morphism(im);
        if (tm.dom != f.object_map.at(m.dom) || tm.cod != f.object_map.at(m.cod))
            report.add("functor-shape", m.id,
                       "image of '" + m.id + "' does not go F(dom) -> F(cod)");
    }
    for (const auto& [obj, idm] : src.identities()) {
        if (!f.morphism_map.count(idm) || !f.object_map.count(obj)) continue;
        const std::string& im = f.morphism_map.at(idm);
        if (!tgt.identity_defined(f.object_map.at(obj)) ||
            tgt.identity_of(f.object_map.at(obj)) != im)
            report.add("functor-identity", obj, "F(id_" + obj + ") is not the identity of F(" + obj + ")");
    }
    for (const auto& [key, to] : src.table()) {
        const std::string& a = f.morphism_map.at(key.first);
        const std::string& b = f.morphism_map.at(key.second);
        if (!tgt.has_morphism(a) || !tgt.has_morphism(b)) continue;
        if (!tgt.compose_defined(a, b)) {
            report.add("functor-compose", pair_str(key.first, key.second),
                       "images are not composable in the target");
            continue;
        }
        if (tgt.table().at({a, b}) != f.morphism_map.at(to))
            report.add("functor-compose", pair_str(key.first, key.second),
                       "F(f;g) != F(f);F(g)");
    }
    return report;
}

std::string apply_functor(const FinFunctor& f, const std::string& id) {
    auto ot = f.object_map.find(id);
    if (ot != f.object_map.end()) return ot->second;
    auto mt = f.morphism_map.find(id);
    if (mt != f.morphism_map.end()) return mt->second;
    throw_input("functor lookup failed: '" + id + "' is neither an object nor a morphism of the source");
}

// ---------------------------------------------------------------------------
// Natural transformations

ValidationReport check_natural(const NatTrans& t) {
    if (t.source.source.get() != t.target.source.get() || t.source.target.get() != t.target.target.get())
        throw_input("natural transformation endpoints do not share base categories");
    const FinCategory& base = *t.source.source;
    const FinCategory& tgt = *t.source.target;

    for (const auto& obj : base.objects()) {
        auto it = t.components.find(obj);
        if (it == t.components.end())
            throw_input("natural transformation lacks a component at '" + obj + "'");
        if (!tgt.has_morphism(it->second))
            throw_input("component at '" + obj + "' is not a morphism of the target category");
        const Morphism& c = tgt.morphism(it->second);
        if (c.dom != t.source.object_map.at(obj) || c.cod != t.target.object_map.at(obj))
            throw_input("component at '" + obj + "' has wrong endpoints: expected " +
                        t.source.object_map.at(obj) + " -> " + t.target.object_map.at(obj));
    }

    ValidationReport report;
    for (const auto& m : base.morphisms()) {
        const std::string& cx = t.components.at(m.dom);
        const std::string& cy = t.components.at(m.cod);
        const std::string& sf = t.source.morphism_map.at(m.id);
        const std::string& tf = t.target.morphism_map.at(m.id);
        if (!tgt.compose_defined(cx, tf) || !tgt.compose_defined(sf, cy)) {
            report.add("naturality-undefined", m.id, "square legs not composable in the target");
            continue;
        }
        if (tgt.table().at({cx, tf}) != tgt.table().at({sf, cy}))
            report.add("naturality", m.id, "square at '" + m.id + "' does not commute");
    }
    return report;
}

NatTrans identity_transformation(const FinFunctor& f) {
    NatTrans t{f, f, {}};
    for (const auto& [obj, img] : f.object_map) t.components[obj] = f.target->identity_of(img);
    return t;
}

NatTrans vertical_compose(const NatTrans& s, const NatTrans& t) {
    if (!functor_equal(s.target, t.source))
        throw_input("vertical composition mismatch: target of the first is not the source of the second");
    NatTrans out{s.source, t.target, {}};
    const FinCategory& tgt = *s.source.target;
    for (const auto& [obj, c] : s.components) out.components[obj] = tgt.compose(c, t.components.at(obj));
    return out;
}

bool nat_equal(const NatTrans& a, const NatTrans& b) {
    return functor_equal(a.source, b.source) && functor_equal(a.target, b.target) &&
           a.components == b.components;
}

// ---------------------------------------------------------------------------
// End(X)

namespace {

// Enumerates every endofunctor of `base` in a fixed order: object maps in
// lexicographic order over target indices, then morphism maps by backtracking
// over the non-identity morphisms in declaration order.
std::vector<FinFunctor> enumerate_endofunctors(const CategoryPtr& base, std::size_t max_entities) {
    const FinCategory& cat = *base;
    const std::size_t k = cat.objects().size();
    std::vector<FinFunctor> out;

    std::vector<std::string> free_morphisms;  // non-identity morphisms
    std::set<std::string> identity_ids;
    for (const auto& [obj, idm] : cat.identities()) identity_ids.insert(idm);
    for (const auto& m : cat.morphisms())
        if (!identity_ids.count(m.id)) free_morphisms.push_back(m.id);

    std::vector<std::size_t> assign(k, 0);
    while (true) {
        FinFunctor f{base, base, {}, {}};
        for (std::size_t i = 0; i < k; ++i) f.object_map[cat.objects()[i]] = cat.objects()[assign[i]];
        for (const auto& [obj, idm] : cat.identities())
            f.morphism_map[idm] = cat.identity_of(f.object_map.at(obj));

        // Backtrack over images of the non-identity morphisms.
        std::vector<std::vector<std::string>> candidates(free_morphisms.size());
        bool feasible = true;
        for (std::size_t i = 0; i < free_morphisms.size(); ++i) {
            const Morphism& m = cat.morphism(free_morphisms[i]);
            candidates[i] = cat.hom(f.object_map.at(m.dom), f.object_map.at(m.cod));
            if (candidates[i].empty()) { feasible = false; break; }
        }
        if (feasible) {
            std::vector<std::size_t> pick(free_morphisms.size(), 0);
            std::size_t depth = 0;
            bool done = free_morphisms.empty();
            if (done) {
                out.push_back(f);
                if (out.size() > max_entities)
                    throw_capacity("end_category enumeration exceeds the configured bound of " +
                                       std::to_string(max_entities) + " entities",
                                   std::to_string(max_entities));
            }
            while (!done) {
                if (depth == free_morphisms.size()) {
                    FinFunctor cand = f;
                    for (std::size_t i = 0; i < free_morphisms.size(); ++i)
                        cand.morphism_map[free_morphisms[i]] = candidates[i][pick[i]];
                    // Keep only genuine functors.
                    bool lawful = true;
                    for (const auto& [key, to] : cat.table()) {
                        const std::string& a = cand.morphism_map.at(key.first);
                        const std::string& b = cand.morphism_map.at(key.second);
                        if (!cat.compose_defined(a, b) || cat.table().at({a, b}) != cand.morphism_map.at(to)) {
                            lawful = false;
                            break;
                        }
                    }
                    if (lawful) {
                        out.push_back(std::move(cand));
                        if (out.size() > max_entities)
                            throw_capacity("end_category enumeration exceeds the configured bound of " +
                                               std::to_string(max_entities) + " entities",
                                           std::to_string(max_entities));
                    }
                    // Advance.
                    while (depth > 0) {
                        --depth;
                        if (++pick[depth] < candidates[depth].size()) { ++depth; break; }
                        pick[depth] = 0;
                        if (depth == 0) { done = true; break; }
                    }
                    if (free_morphisms.empty()) done = true;
                } else {
                    ++depth;
                }
            }
        }

        // Next object assignment.
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (++assign[i] < k) break;
            assign[i] = 0;
            if (i == 0) return out;
        }
        if (k == 0) return out;
    }
}

// All natural transformations a => b by backtracking over components in
// object order, pruning on naturality squares whose endpoints are assigned.
std::vector<NatTrans> enumerate_nats(const FinFunctor& a, const FinFunctor& b) {
    const FinCategory& base = *a.source;
    const FinCategory& tgt = *a.target;
    const std::size_t k = base.objects().size();

    std::vector<std::vector<std::string>> candidates(k);
    for (std::size_t i = 0; i < k; ++i) {
        const std::string& obj = base.objects()[i];
        candidates[i] = tgt.hom(a.object_map.at(obj), b.object_map.at(obj));
        if (candidates[i].empty()) return {};
    }

    // Naturality squares grouped by the larger object index they touch.
    std::vector<std::vector<const Morphism*>> checks(k);
    for (const auto& m : base.morphisms()) {
        std::size_t ix = base.object_index(m.dom);
        std::size_t iy = base.object_index(m.cod);
        checks[std::max(ix, iy)].push_back(&m);
    }

    std::vector<NatTrans> out;
    std::vector<std::size_t> pick(k, 0);
    std::vector<std::string> comp(k);
    std::size_t depth = 0;
    while (true) {
        if (depth == k) {
            NatTrans t{a, b, {}};
            for (std::size_t i = 0; i < k; ++i) t.components[base.objects()[i]] = comp[i];
            out.push_back(std::move(t));
            if (k == 0) return out;
            --depth;
            ++pick[depth];
        } else {
            if (pick[depth] == candidates[depth].size()) {
                pick[depth] = 0;
                if (depth == 0) return out;
                --depth;
                ++pick[depth];
                continue;
            }
            comp[depth] = candidates[depth][pick[depth]];
            bool ok = true;
            for (const Morphism* m : checks[depth]) {
                const std::string& cx = comp[base.object_index(m->dom)];
                const std::string& cy = comp[base.object_index(m->cod)];
                const std::string& af = a.morphism_map.at(m->id);
                const std::string& bf = b.morphism_map.at(m->id);
                if (!tgt.compose_defined(cx, bf) || !tgt.compose_defined(af, cy) ||
                    tgt.table().at({cx, bf}) != tgt.table().at({af, cy})) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                ++depth;
            } else {
                ++pick[depth];
            }
        }
    }
}

std::string components_key(const NatTrans& t) {
    std::ostringstream os;
    for (const auto& [k, v] : t.components) os << k << ">" << v << ";";
    return os.str();
}

EndCategory assemble_end(const CategoryPtr& base, std::vector<std::pair<std::string, FinFunctor>> named,
                         const EndOptions& opts) {
    EndCategory end;
    end.base_ = base;

    FinCategoryBuilder cb("End(" + base->name() + ")");
    for (auto& [name, f] : named) {
        cb.object(name);
        end.object_ids_.push_back(name);
        end.functor_by_key_[functor_key(f)] = name;
        end.functors_.emplace(name, std::move(f));
    }

    const FinFunctor idf = identity_functor(base);
    end.identity_object_ = end.functor_by_key_.at(functor_key(idf));

    // Enumerate all transformations between every ordered pair of functors.
    struct MorRec {
        std::string id, dom, cod, key;
    };
    std::vector<MorRec> morphisms;
    std::map<std::pair<std::string, std::string>, std::map<std::string, std::string>> locate;
    std::size_t counter = 0;
    for (const auto& a : end.object_ids_)
        for (const auto& b : end.object_ids_) {
            auto nats = enumerate_nats(end.functors_.at(a), end.functors_.at(b));
            for (auto& t : nats) {
                if (end.object_ids_.size() + morphisms.size() + 1 > opts.max_entities)
                    throw_capacity("end_category enumeration exceeds the configured bound of " +
                                       std::to_string(opts.max_entities) + " entities",
                                   std::to_string(opts.max_entities));
                std::string id = "t" + std::to_string(counter++);
                std::string key = components_key(t);
                locate[{a, b}][key] = id;
                end.trans_by_key_[a + "|" + b + "|" + key] = id;
                morphisms.push_back({id, a, b, key});
                end.transformations_.emplace(id, std::move(t));
            }
        }

    for (const auto& m : morphisms) cb.morphism(m.id, m.dom, m.cod);
    for (const auto& f : end.object_ids_) {
        NatTrans idt = identity_transformation(end.functors_.at(f));
        cb.identity(f, locate.at({f, f}).at(components_key(idt)));
    }
    for (const auto& s : morphisms)
        for (const auto& t : morphisms) {
            if (s.cod != t.dom) continue;
            NatTrans comp = vertical_compose(end.transformations_.at(s.id), end.transformations_.at(t.id));
            cb.rule(s.id, t.id, locate.at({s.dom, t.cod}).at(components_key(comp)));
        }

    end.cat_ = cb.build();
    return end;
}

}  // namespace

const FinFunctor& EndCategory::functor_of(const std::string& object_id) const {
    auto it = functors_.find(object_id);
    if (it == functors_.end())
        throw_input("'" + object_id + "' is not an object of " + (cat_ ? cat_->name() : "End(?)"));
    return it->second;
}

const NatTrans& EndCategory::transformation_of(const std::string& morphism_id) const {
    auto it = transformations_.find(morphism_id);
    if (it == transformations_.end())
        throw_input("'" + morphism_id + "' is not a morphism of " + (cat_ ? cat_->name() : "End(?)"));
    return it->second;
}

std::optional<std::string> EndCategory::find_object(const FinFunctor& f) const {
    auto it = functor_by_key_.find(functor_key(f));
    if (it == functor_by_key_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::string> EndCategory::find_morphism(const NatTrans& t) const {
    auto dom = find_object(t.source);
    auto cod = find_object(t.target);
    if (!dom || !cod) return std::nullopt;
    std::ostringstream key;
    key << *dom << "|" << *cod << "|";
    for (const auto& [k, v] : t.components) key << k << ">" << v << ";";
    auto it = trans_by_key_.find(key.str());
    if (it == trans_by_key_.end()) return std::nullopt;
    return it->second;
}

std::string EndCategory::compose_objects(const std::string& first, const std::string& then) const {
    FinFunctor comp = compose_functors(functor_of(first), functor_of(then));
    auto found = find_object(comp);
    if (!found)
        throw_data("composite of '" + first + "' then '" + then + "' is not among the objects of " +
                   cat_->name());
    return *found;
}

std::vector<std::string> EndCategory::nat_ids(const std::string& a, const std::string& b) const {
    return cat_->hom(a, b);
}

EndCategory end_category(const CategoryPtr& base, const EndOptions& opts) {
    auto functors = enumerate_endofunctors(base, opts.max_entities);
    std::vector<std::pair<std::string, FinFunctor>> named;
    named.reserve(functors.size());
    for (std::size_t i = 0; i < functors.size(); ++i)
        named.emplace_back("F" + std::to_string(i), std::move(functors[i]));
    return assemble_end(base, std::move(named), opts);
}

EndCategory end_category(const CategoryPtr& base,
                         const std::vector<std::pair<std::string, FinFunctor>>& generators,
                         const EndOptions& opts) {
    std::vector<std::pair<std::string, FinFunctor>> named;
    std::map<std::string, std::size_t> by_key;
    std::set<std::string> names;

    auto add = [&](const std::string& want, const FinFunctor& f) -> bool {
        std::string key = functor_key(f);
        if (by_key.count(key)) return false;
        std::string name = want;
        while (names.count(name)) name += "_";
        names.insert(name);
        by_key[key] = named.size();
        named.emplace_back(name, f);
        if (named.size() > opts.max_entities)
            throw_capacity("end_category closure exceeds the configured bound of " +
                               std::to_string(opts.max_entities) + " entities",
                           std::to_string(opts.max_entities));
        return true;
    };

    for (const auto& [name, f] : generators) {
        if (f.source.get() != base.get() || f.target.get() != base.get())
            throw_input("generator '" + name + "' is not an endofunctor of '" + base->name() + "'");
        ValidationReport r = check_functor(f);
        if (!r.ok())
            throw_input("generator '" + name + "' is not a functor: " + r.violations.front().message);
        add(name, f);
    }
    add("id", identity_functor(base));

    // Close under composition.
    std::size_t fresh = 0;
    bool grew = true;
    while (grew) {
        grew = false;
        const std::size_t n = named.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                FinFunctor comp = compose_functors(named[i].second, named[j].second);
                if (add("F" + std::to_string(fresh), comp)) {
                    ++fresh;
                    grew = true;
                }
            }
    }

    return assemble_end(base, std::move(named), opts);
}

}  // namespace segaldyn::fincat
