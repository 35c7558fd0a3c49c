#include "segaldyn/braket.hpp"

#include <set>

namespace segaldyn::braket {

namespace {

void check_index(const StateBasis& basis, std::size_t p) {
    if (p >= basis.labels.size())
        throw_input("state index " + std::to_string(p) + " out of range: basis has " +
                    std::to_string(basis.labels.size()) + " states");
}

}  // namespace

void validate_basis(const StateBasis& basis) {
    if (basis.labels.empty()) throw_input("state basis must hold at least one state");
    std::set<std::string> seen;
    for (const auto& l : basis.labels)
        if (!seen.insert(l).second) throw_input("duplicate state label '" + l + "'");
}

bool same_basis(const StateBasis& a, const StateBasis& b) { return a.labels == b.labels; }

void validate_operator(const OperatorTable& table) {
    validate_basis(table.basis);
    if (table.eigen.size() != table.basis.labels.size())
        throw_input("operator eigen-table is not total on the basis");
}

ValidationReport validate_mutation(const MutationTable& table) {
    validate_basis(table.basis);
    if (table.components.size() != table.basis.labels.size())
        throw_input("mutation table is not total on the basis");
    ValidationReport report;
    for (std::size_t n = 0; n < table.components.size(); ++n) {
        ValidationReport r = fincat::check_natural(table.components[n]);
        for (auto& v : r.violations)
            report.add(v.law, "|" + std::to_string(n) + ">:" + v.where, v.message);
    }
    return report;
}

void validate_state_map(const StateMap& map) {
    validate_basis(map.basis);
    if (map.table.size() != map.basis.labels.size())
        throw_input("state map is not total on the basis");
    for (std::size_t v : map.table)
        if (v >= map.basis.labels.size())
            throw_input("state map value " + std::to_string(v) + " out of range");
}

int inner(const StateBasis& basis, std::size_t p, std::size_t q) {
    check_index(basis, p);
    check_index(basis, q);
    return p == q ? 1 : 0;
}

std::pair<std::string, std::size_t> eval_operator(const OperatorTable& table, std::size_t p) {
    check_index(table.basis, p);
    return {table.eigen.at(p), p};
}

const std::string& project(std::size_t p, const OperatorTable& table) {
    check_index(table.basis, p);
    return table.eigen.at(p);
}

std::map<std::string, std::string> lift_state_map(const StateMap& upsi, const OperatorTable& table) {
    if (!same_basis(upsi.basis, table.basis))
        throw_input("state map and operator table live over different bases");
    std::map<std::string, std::string> out;
    for (std::size_t p = 0; p < table.eigen.size(); ++p) {
        const std::string& from = table.eigen.at(p);
        const std::string& to = table.eigen.at(upsi.table.at(p));
        auto [it, fresh] = out.emplace(from, to);
        if (!fresh && it->second != to)
            throw_data("eigen-table conflict: '" + from + "' would map to both '" + it->second +
                       "' and '" + to + "'");
    }
    return out;
}

const fincat::NatTrans& project_mutation(const MutationTable& table, std::size_t p) {
    check_index(table.basis, p);
    return table.components.at(p);
}

StateMap compose_state_maps(const StateMap& first, const StateMap& then) {
    if (!same_basis(first.basis, then.basis))
        throw_input("state maps live over different bases");
    StateMap out{first.basis, {}};
    out.table.reserve(first.table.size());
    for (std::size_t v : first.table) out.table.push_back(then.table.at(v));
    return out;
}

}  // namespace segaldyn::braket
