#include "segaldyn/tangent.hpp"

#include <algorithm>

namespace segaldyn::tangent {

using fincat::EndCategory;

ValidationReport check_psi(const EndCategory& delta, const PsiEndo& psi) {
    ValidationReport report;

    if (psi.functor.source.get() != delta.category().get() ||
        psi.functor.target.get() != delta.category().get())
        throw_input("state endofunctor '" + psi.id + "' does not live on '" + delta.category()->name() +
                    "'");

    ValidationReport functor_laws = fincat::check_functor(psi.functor);
    for (auto& v : functor_laws.violations) report.add(v.law, v.where, v.message);

    // Monoid-morphism laws on object composition.
    const std::string& unit = delta.identity_object();
    if (psi.functor.object_map.at(unit) != unit)
        report.add("monoid-unit", unit, "the identity object is not fixed");
    for (const auto& a : delta.object_ids())
        for (const auto& b : delta.object_ids()) {
            const std::string ab = delta.compose_objects(a, b);
            const std::string lhs = psi.functor.object_map.at(ab);
            const std::string rhs =
                delta.compose_objects(psi.functor.object_map.at(a), psi.functor.object_map.at(b));
            if (lhs != rhs)
                report.add("monoid-compose", "(" + a + "," + b + ")",
                           "image of the composite differs from the composite of the images");
        }

    // Each gamma(B) must be a morphism id => Psi(B).
    for (const auto& [B, gid] : psi.gamma) {
        if (!delta.category()->has_object(B)) {
            report.add("gamma-domain", B, "gamma assigned at an unknown object");
            continue;
        }
        if (!delta.category()->has_morphism(gid)) {
            report.add("gamma-shape", B, "gamma '" + gid + "' is not a morphism of the state category");
            continue;
        }
        const fincat::Morphism& m = delta.category()->morphism(gid);
        if (m.dom != unit || m.cod != psi.functor.object_map.at(B))
            report.add("gamma-shape", B,
                       "gamma '" + gid + "' is not of shape id => image of '" + B + "'");
    }

    return report;
}

std::vector<std::string> rspec_eval(const EndCategory& delta, const std::string& A,
                                    const std::string& B) {
    if (!delta.category()->has_object(A))
        throw_input("'" + A + "' is not an object of '" + delta.category()->name() + "'");
    if (!delta.category()->has_object(B))
        throw_input("'" + B + "' is not an object of '" + delta.category()->name() + "'");
    return delta.nat_ids(A, B);
}

std::vector<SquarePair> omega_squares(const EndCategory& delta, const PsiEndo& psi,
                                      const std::string& lambda_id, const std::string& B) {
    auto git = psi.gamma.find(B);
    if (git == psi.gamma.end())
        throw_input("state endofunctor '" + psi.id + "' has no gamma at '" + B + "'");
    const std::string& gamma = git->second;

    const fincat::FinCategory& cat = *delta.category();
    const fincat::Morphism& lambda = cat.morphism(lambda_id);
    if (lambda.cod != B)
        throw_input("'" + lambda_id + "' does not land in '" + B + "'");
    const std::string& MA = lambda.dom;
    const std::string& unit = delta.identity_object();
    const std::string psiB = psi.functor.object_map.at(B);

    std::vector<SquarePair> out;
    for (const auto& alpha : delta.nat_ids(MA, unit)) {
        const std::string via_gamma = cat.compose(alpha, gamma);
        for (const auto& beta : delta.nat_ids(B, psiB))
            if (cat.compose(lambda_id, beta) == via_gamma) out.emplace_back(alpha, beta);
    }
    return out;
}

std::string square_diagonal(const EndCategory& delta, const PsiEndo& psi, const std::string& lambda_id,
                            const std::string& B, const SquarePair& square, FactorRoute route) {
    const fincat::FinCategory& cat = *delta.category();
    if (route == FactorRoute::ThroughIdentity)
        return cat.compose(square.first, psi.gamma.at(B));
    return cat.compose(lambda_id, square.second);
}

namespace {

DerivationSet der_base(const EndCategory& delta, const PsiEndo& psi, const std::string& A,
                       const std::string& M, const std::string& B) {
    DerivationSet out;
    out.A = A;
    out.M = M;
    out.B = B;
    out.MA = delta.compose_objects(A, M);  // A, deformed in the direction of M
    out.lambdas = rspec_eval(delta, out.MA, B);
    out.squares.reserve(out.lambdas.size());
    out.full_count = 1;
    for (const auto& lambda : out.lambdas) {
        out.squares.push_back(omega_squares(delta, psi, lambda, B));
        BigCount choices = (BigCount(1) << out.squares.back().size()) - 1;
        out.full_count *= choices;
    }
    return out;
}

// Nonempty subsets of one square list, in ascending bitmask order.
std::vector<std::set<SquarePair>> nonempty_subsets(const std::vector<SquarePair>& squares) {
    std::vector<std::set<SquarePair>> out;
    const std::size_t n = squares.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::set<SquarePair> subset;
        for (std::size_t b = 0; b < n; ++b)
            if (mask & (std::size_t{1} << b)) subset.insert(squares[b]);
        out.push_back(std::move(subset));
    }
    return out;
}

}  // namespace

DerivationSet der_counts(const EndCategory& delta, const PsiEndo& psi, const std::string& A,
                         const std::string& M, const std::string& B) {
    return der_base(delta, psi, A, M, B);
}

DerivationSet der_set(const EndCategory& delta, const PsiEndo& psi, const std::string& A,
                      const std::string& M, const std::string& B, const TangentOptions& opts) {
    DerivationSet out = der_base(delta, psi, A, M, B);
    if (out.full_count > opts.max_collections)
        throw_capacity("derivation set at (" + A + "," + M + "," + B + ") has " +
                           out.full_count.str() + " full collections, above the bound of " +
                           opts.max_collections.str(),
                       out.full_count.str());
    if (out.full_count == 0) return out;

    std::vector<std::vector<std::set<SquarePair>>> choices;
    choices.reserve(out.squares.size());
    for (const auto& sq : out.squares) choices.push_back(nonempty_subsets(sq));

    // Odometer over the per-lambda nonempty subsets, last index fastest.
    std::vector<std::size_t> pick(choices.size(), 0);
    while (true) {
        FullCollection family;
        family.reserve(choices.size());
        for (std::size_t i = 0; i < choices.size(); ++i) family.push_back(choices[i][pick[i]]);
        out.full_collections.push_back(std::move(family));
        std::size_t i = choices.size();
        while (i > 0) {
            --i;
            if (++pick[i] < choices[i].size()) break;
            pick[i] = 0;
            if (i == 0) return out;
        }
        if (choices.empty()) return out;
    }
}

CubicDerivation der_cubic(const EndCategory& delta, const PsiEndo& psi, const std::string& A,
                          const std::string& M, const std::string& B, const TangentOptions&) {
    DerivationSet base = der_base(delta, psi, A, M, B);

    CubicDerivation out;
    out.A = base.A;
    out.M = base.M;
    out.B = base.B;
    out.MA = base.MA;
    out.lambdas = base.lambdas;

    // Source slots are the lambdas, the single target slot is gamma(B).
    std::vector<std::string> sources = base.lambdas;
    if (sources.empty()) sources.push_back("(no maps " + base.MA + " => " + B + ")");
    out.cube.source = gencat::token_amalgam(sources);
    out.cube.target = gencat::token_amalgam({"Gamma:" + B});

    for (std::size_t i = 0; i < base.lambdas.size(); ++i) {
        if (base.squares[i].empty()) {
            out.empty_slots.push_back(i);
            continue;
        }
        auto& quiver = out.cube.entries[{i, 0}];
        for (std::size_t k = 0; k < base.squares[i].size(); ++k)
            quiver.push_back({base.squares[i][k],
                              gencat::FlavorTower{gencat::BaseAtom{std::to_string(k)}}});
    }
    return out;
}

std::vector<FullCollection> truncate_cubic(const CubicDerivation& cubic, const TangentOptions& opts) {
    std::vector<FullCollection> out;
    if (!cubic.full() || cubic.lambdas.empty()) {
        if (!cubic.lambdas.empty()) return out;
        // No lambdas at all: the one vacuous family.
        out.push_back({});
        return out;
    }

    BigCount total = 1;
    std::vector<std::vector<gencat::FlavorTower>> flavors(cubic.lambdas.size());
    for (std::size_t i = 0; i < cubic.lambdas.size(); ++i) {
        const auto& quiver = cubic.cube.entries.at({i, 0});
        for (const auto& cell : quiver) flavors[i].push_back(cell.tower);
        total *= (BigCount(1) << flavors[i].size()) - 1;
    }
    if (total > opts.max_collections)
        throw_capacity("cube truncation at (" + cubic.A + "," + cubic.M + "," + cubic.B + ") has " +
                           total.str() + " full collections, above the bound of " +
                           opts.max_collections.str(),
                       total.str());

    // Every full selection family: a nonempty flavor subset per slot.
    std::vector<std::size_t> mask(cubic.lambdas.size(), 1);
    auto limit = [&](std::size_t i) { return std::size_t{1} << flavors[i].size(); };
    while (true) {
        gencat::FlavorSelection selection;
        for (std::size_t i = 0; i < flavors.size(); ++i) {
            auto& towers = selection[{i, 0}];
            for (std::size_t b = 0; b < flavors[i].size(); ++b)
                if (mask[i] & (std::size_t{1} << b)) towers.insert(flavors[i][b]);
        }
        auto projected = gencat::project_flavors(cubic.cube, selection);
        auto sets = gencat::deconstruct(projected);
        FullCollection family;
        family.reserve(flavors.size());
        for (std::size_t i = 0; i < flavors.size(); ++i) family.push_back(sets.entries.at({i, 0}));
        out.push_back(std::move(family));

        std::size_t i = mask.size();
        while (i > 0) {
            --i;
            if (++mask[i] < limit(i)) break;
            mask[i] = 1;
            if (i == 0) {
                std::sort(out.begin(), out.end());
                out.erase(std::unique(out.begin(), out.end()), out.end());
                return out;
            }
        }
    }
}

TangentRepr tangent_repr(const EndCategory& delta, const PsiEndo& psi, const std::string& A,
                         const std::string& M, const TangentOptions& opts) {
    TangentRepr out;
    out.A = A;
    out.M = M;
    for (const auto& [B, gamma] : psi.gamma) {
        (void)gamma;
        out.family.emplace(B, der_set(delta, psi, A, M, B, opts));
    }
    if (psi.gamma.count(A)) out.distinguished = A;
    return out;
}

namespace {

// The count signature a cusp compares: (M, B) -> full-collection count over
// the gamma domain.
std::map<std::pair<std::string, std::string>, BigCount> tangent_signature(
    const EndCategory& delta, const PsiEndo& psi, const std::string& eps,
    const std::vector<std::string>& directions) {
    std::map<std::pair<std::string, std::string>, BigCount> sig;
    for (const auto& M : directions)
        for (const auto& [B, gamma] : psi.gamma) {
            (void)gamma;
            sig[{M, B}] = der_counts(delta, psi, eps, M, B).full_count;
        }
    return sig;
}

}  // namespace

std::vector<std::string> cusp(const EndCategory& delta, const PsiEndo& psi, const std::string& eps,
                              const std::vector<PsiEndo>& universe,
                              const std::vector<std::string>& directions) {
    if (universe.empty()) throw_input("cusp needs a nonempty universe of candidates");
    if (!delta.category()->has_object(eps))
        throw_input("'" + eps + "' is not an object of '" + delta.category()->name() + "'");
    for (const auto& M : directions)
        if (!delta.category()->has_object(M))
            throw_input("direction '" + M + "' is not an object of '" + delta.category()->name() + "'");

    ValidationReport own = check_psi(delta, psi);
    if (!own.ok())
        throw_input("state endofunctor '" + psi.id + "' fails its laws: " + own.violations.front().message);
    for (const auto& cand : universe) {
        ValidationReport r = check_psi(delta, cand);
        if (!r.ok())
            throw_input("cusp candidate '" + cand.id + "' fails its laws: " +
                        r.violations.front().message);
    }

    const auto base_sig = tangent_signature(delta, psi, eps, directions);
    std::vector<std::string> out{psi.id};
    for (const auto& cand : universe) {
        if (cand.id == psi.id) continue;
        if (tangent_signature(delta, cand, eps, directions) == base_sig) out.push_back(cand.id);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace segaldyn::tangent
