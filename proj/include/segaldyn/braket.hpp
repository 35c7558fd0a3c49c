#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "segaldyn/fincat.hpp"

namespace segaldyn::braket {

/// The finite physical-state basis |0> ... |N-1>. Formal sums over it are
/// never materialized; the tables below ARE the sums.
struct StateBasis {
    std::vector<std::string> labels;
};

void validate_basis(const StateBasis& basis);  // distinct labels, N >= 1
bool same_basis(const StateBasis& a, const StateBasis& b);

/// A diagonal operator: eigen[n] names the object of the system the operator
/// takes on state n. Read as a formal sum, this is the state-like
/// representation of the operator.
struct OperatorTable {
    StateBasis basis;
    std::vector<std::string> eigen;
};

/// A mutation: a componentwise change of the underlying operator, one
/// natural transformation per state index.
struct MutationTable {
    StateBasis basis;
    std::vector<fincat::NatTrans> components;
};

/// An endomap of the state basis, by index.
struct StateMap {
    StateBasis basis;
    std::vector<std::size_t> table;
};

void validate_operator(const OperatorTable& table);
ValidationReport validate_mutation(const MutationTable& table);
void validate_state_map(const StateMap& map);

/// Kronecker delta on state indices.
int inner(const StateBasis& basis, std::size_t p, std::size_t q);

/// Diagonal action: the operator applied to |p> is its eigen-object on the
/// unchanged index p.
std::pair<std::string, std::size_t> eval_operator(const OperatorTable& table, std::size_t p);

/// Expectation against |p>: the eigen-object, via the product after
/// evaluation.
const std::string& project(std::size_t p, const OperatorTable& table);

/// The relative state derived from a basis endomap: the map sending each
/// eigen-object F_p to F_{psi(p)}. Only defined on the eigen-image;
/// conflicting duplicate eigen values are a data error.
std::map<std::string, std::string> lift_state_map(const StateMap& upsi, const OperatorTable& table);

/// The component at index p; natural whenever the table's components are.
const fincat::NatTrans& project_mutation(const MutationTable& table, std::size_t p);

StateMap compose_state_maps(const StateMap& first, const StateMap& then);

}  // namespace segaldyn::braket
