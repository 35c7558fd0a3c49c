#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "segaldyn/errors.hpp"

namespace segaldyn::fincat {

struct Morphism {
    std::string id;
    std::string dom;
    std::string cod;
};

/// A finite category given by an explicit composition table.
///
/// Composition is diagrammatic throughout: compose(f, g) means "f then g"
/// and is defined exactly when cod(f) = dom(g). The table is arbitrary data;
/// whether it satisfies the category laws is the business of
/// validate_category, not of this container.
class FinCategory {
public:
    const std::string& name() const noexcept { return name_; }
    const std::vector<std::string>& objects() const noexcept { return objects_; }
    const std::vector<Morphism>& morphisms() const noexcept { return morphisms_; }

    bool has_object(const std::string& id) const { return obj_index_.count(id) > 0; }
    bool has_morphism(const std::string& id) const { return mor_index_.count(id) > 0; }

    const Morphism& morphism(const std::string& id) const;
    std::size_t object_index(const std::string& id) const;
    std::size_t morphism_index(const std::string& id) const;

    bool identity_defined(const std::string& obj) const { return identity_.count(obj) > 0; }
    const std::string& identity_of(const std::string& obj) const;
    const std::map<std::string, std::string>& identities() const noexcept { return identity_; }

    bool compose_defined(const std::string& f, const std::string& g) const;

    /// Table lookup; throws a composability error on a non-composable pair
    /// and a data error when a composable pair has no table entry.
    std::string compose(const std::string& f, const std::string& g) const;

    /// Morphisms a -> b in declaration order.
    std::vector<std::string> hom(const std::string& a, const std::string& b) const;

    const std::map<std::pair<std::string, std::string>, std::string>& table() const noexcept {
        return compose_;
    }

private:
    friend class FinCategoryBuilder;

    std::string name_;
    std::vector<std::string> objects_;
    std::vector<Morphism> morphisms_;
    std::map<std::string, std::string> identity_;
    std::map<std::pair<std::string, std::string>, std::string> compose_;
    std::map<std::string, std::size_t> obj_index_;
    std::map<std::string, std::size_t> mor_index_;
};

using CategoryPtr = std::shared_ptr<const FinCategory>;

/// Structural assembly (ids resolve, no duplicates). Law checking is left to
/// validate_category so that broken tables remain representable.
class FinCategoryBuilder {
public:
    explicit FinCategoryBuilder(std::string name = "C");

    FinCategoryBuilder& object(const std::string& id);
    FinCategoryBuilder& morphism(const std::string& id, const std::string& dom, const std::string& cod);
    FinCategoryBuilder& identity(const std::string& obj, const std::string& morphism_id);
    FinCategoryBuilder& rule(const std::string& f, const std::string& g, const std::string& to);

    /// Convenience: adds an identity morphism "id_<obj>" for every object
    /// lacking one, plus the forced unit rules for all declared morphisms.
    FinCategoryBuilder& auto_identities();

    CategoryPtr build();

private:
    FinCategory cat_;
};

/// Full law check: identity totality and shape, table composability and
/// shape, unit laws, associativity on all composable triples.
ValidationReport validate_category(const FinCategory& cat);

struct FinFunctor {
    CategoryPtr source;
    CategoryPtr target;
    std::map<std::string, std::string> object_map;
    std::map<std::string, std::string> morphism_map;
};

bool functor_equal(const FinFunctor& a, const FinFunctor& b);
std::string functor_key(const FinFunctor& f);

FinFunctor identity_functor(const CategoryPtr& cat);
FinFunctor constant_functor(const CategoryPtr& cat, const std::string& obj);

/// Diagrammatic composite: apply `first`, then `then`.
FinFunctor compose_functors(const FinFunctor& first, const FinFunctor& then);

/// Throws a totality error on partial maps; law violations (dom/cod shape,
/// identity and composition preservation) are returned as a report.
ValidationReport check_functor(const FinFunctor& f);

/// Table lookup on an object or morphism id; unknown ids are lookup errors.
std::string apply_functor(const FinFunctor& f, const std::string& id);

struct NatTrans {
    FinFunctor source;
    FinFunctor target;
    std::map<std::string, std::string> components;  // base object -> morphism of the target category
};

/// Empty report iff every naturality square commutes. Components with a
/// wrong dom/cod raise a shape error; missing components a totality error.
ValidationReport check_natural(const NatTrans& t);

NatTrans identity_transformation(const FinFunctor& f);

/// Vertical composite of s: F => G with t: G => H, componentwise.
NatTrans vertical_compose(const NatTrans& s, const NatTrans& t);

bool nat_equal(const NatTrans& a, const NatTrans& b);

struct EndOptions {
    std::size_t max_entities = 10000;  // functors + transformations enumerated
};

/// The truncated endofunctor category End(X): objects are endofunctors of
/// the base, morphisms are all natural transformations between them, with
/// pointwise vertical composition. Keeps the dictionaries mapping generated
/// ids back to functor/transformation values, plus the composition-monoid
/// view on objects that the tower and tangent layers lean on.
class EndCategory {
public:
    EndCategory() = default;

    const CategoryPtr& base() const noexcept { return base_; }
    const CategoryPtr& category() const noexcept { return cat_; }

    const std::vector<std::string>& object_ids() const noexcept { return object_ids_; }
    const FinFunctor& functor_of(const std::string& object_id) const;
    const NatTrans& transformation_of(const std::string& morphism_id) const;
    const std::string& identity_object() const noexcept { return identity_object_; }

    std::optional<std::string> find_object(const FinFunctor& f) const;
    std::optional<std::string> find_morphism(const NatTrans& t) const;

    /// Monoid view: the object naming the composite "first then then"
    /// (i.e. then ∘ first). Throws if the composite is not among the objects.
    std::string compose_objects(const std::string& first, const std::string& then) const;

    /// All natural transformations a => b, in enumeration order.
    std::vector<std::string> nat_ids(const std::string& a, const std::string& b) const;

private:
    friend EndCategory end_category(const CategoryPtr&, const std::vector<std::pair<std::string, FinFunctor>>*,
                                    const EndOptions&);

    CategoryPtr base_;
    CategoryPtr cat_;
    std::vector<std::string> object_ids_;
    std::map<std::string, FinFunctor> functors_;
    std::map<std::string, NatTrans> transformations_;
    std::map<std::string, std::string> functor_by_key_;  // functor_key -> object id
    std::map<std::string, std::string> trans_by_key_;    // dom|cod|components -> morphism id
    std::string identity_object_;
};

/// Enumerates all endofunctors of `base` and all natural transformations
/// between them. Capacity errors report the configured bound.
EndCategory end_category(const CategoryPtr& base, const EndOptions& opts = {});

/// Generator mode: closes the given functors (plus the identity) under
/// composition instead of enumerating everything. Generators must pass
/// check_functor. Names are kept for generators; composites get fresh ids.
EndCategory end_category(const CategoryPtr& base,
                         const std::vector<std::pair<std::string, FinFunctor>>& generators,
                         const EndOptions& opts = {});

}  // namespace segaldyn::fincat
