#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "segaldyn/fincat.hpp"
#include "segaldyn/gencat.hpp"

namespace segaldyn::tangent {

using BigCount = boost::multiprecision::cpp_int;

/// An endofunctor of the state category together with its chosen
/// transformations gamma(B): id => Psi(B), referenced as morphisms of the
/// state category. gamma is supplied data and may be partial; derivation
/// sets can only be formed where it is present.
struct PsiEndo {
    std::string id;
    fincat::FinFunctor functor;                  // on delta.category()
    std::map<std::string, std::string> gamma;    // object id B -> morphism id (id => Psi(B))
};

/// Functor laws, the monoid-morphism laws on object composition, and the
/// shape of every gamma assignment.
ValidationReport check_psi(const fincat::EndCategory& delta, const PsiEndo& psi);

/// All natural transformations A => B, as morphism ids of the state
/// category, in enumeration order.
std::vector<std::string> rspec_eval(const fincat::EndCategory& delta, const std::string& A,
                                    const std::string& B);

/// A commuting factorization square attached to one lambda: alpha: MA => id
/// and beta: B => Psi(B) with beta after lambda equal to gamma(B) after
/// alpha.
using SquarePair = std::pair<std::string, std::string>;

/// All squares over the given lambda. Missing gamma for B is a
/// configuration error.
std::vector<SquarePair> omega_squares(const fincat::EndCategory& delta, const PsiEndo& psi,
                                      const std::string& lambda_id, const std::string& B);

enum class FactorRoute { ThroughIdentity, ThroughTarget };

/// The square's diagonal MA => Psi(B), computed along the chosen route.
/// Both routes agree on commuting squares; the identity route is canonical.
std::string square_diagonal(const fincat::EndCategory& delta, const PsiEndo& psi,
                            const std::string& lambda_id, const std::string& B, const SquarePair& square,
                            FactorRoute route = FactorRoute::ThroughIdentity);

struct TangentOptions {
    BigCount max_collections = 10000;  // enumeration bound for full collections
};

/// A family choosing a nonempty square set for every lambda.
using FullCollection = std::vector<std::set<SquarePair>>;

struct DerivationSet {
    std::string A, M, B, MA;
    std::vector<std::string> lambdas;                // Nat(MA, B)
    std::vector<std::vector<SquarePair>> squares;    // per lambda
    BigCount full_count = 0;                         // product of (2^{s_i} - 1), exact
    std::vector<FullCollection> full_collections;    // enumerated, deterministic order
};

/// Populates the derivation data at (A, M, B). If the number of full
/// collections exceeds the bound, a capacity error carrying the exact count
/// is raised.
DerivationSet der_set(const fincat::EndCategory& delta, const PsiEndo& psi, const std::string& A,
                      const std::string& M, const std::string& B, const TangentOptions& opts = {});

/// As der_set, but stops after the squares: the count is computed from the
/// product formula and nothing is enumerated, so no capacity error can
/// occur.
DerivationSet der_counts(const fincat::EndCategory& delta, const PsiEndo& psi, const std::string& A,
                         const std::string& M, const std::string& B);

/// The maximal cube: one generalized-morphism slot per lambda carrying the
/// full quiver of its squares. Slots with no squares make the cube fail to
/// be a full generalized morphism; they are recorded, not erased.
struct CubicDerivation {
    std::string A, M, B, MA;
    std::vector<std::string> lambdas;
    gencat::GenMorphismT<SquarePair> cube;
    std::vector<std::size_t> empty_slots;

    bool full() const noexcept { return empty_slots.empty(); }
    std::size_t cell_count() const { return cube.cell_count(); }
};

CubicDerivation der_cubic(const fincat::EndCategory& delta, const PsiEndo& psi, const std::string& A,
                          const std::string& M, const std::string& B, const TangentOptions& opts = {});

/// The truncation round trip: project every full flavor-selection family
/// out of the cube, deconstruct, and collect the resulting set data. Equals
/// der_set(...).full_collections as a set.
std::vector<FullCollection> truncate_cubic(const CubicDerivation& cubic, const TangentOptions& opts = {});

/// The B-indexed derivation family at (A, M), over the gamma domain, plus
/// the distinguished value at the constant target B = A when present.
struct TangentRepr {
    std::string A, M;
    std::map<std::string, DerivationSet> family;
    std::optional<std::string> distinguished;  // = A when A is in the gamma domain
};

TangentRepr tangent_repr(const fincat::EndCategory& delta, const PsiEndo& psi, const std::string& A,
                         const std::string& M, const TangentOptions& opts = {});

/// Everything in the universe whose tangent representation at eps is
/// pointwise bijective with psi's: same gamma domain and, for every
/// direction M and every B in it, the same full-collection count. Always
/// contains psi. Sorted output.
std::vector<std::string> cusp(const fincat::EndCategory& delta, const PsiEndo& psi, const std::string& eps,
                              const std::vector<PsiEndo>& universe,
                              const std::vector<std::string>& directions);

}  // namespace segaldyn::tangent
