#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "segaldyn/errors.hpp"

namespace segaldyn::cw {

/// One skeleton level: attaching-class labels with multiplicities. The
/// labels are opaque input data; only equality within a level is ever used.
using Skeleton = std::map<std::string, std::int64_t>;

struct CWComplex {
    std::vector<Skeleton> skeleta;
};

enum class DeltaMode {
    Multiset,  // symmetric difference with multiplicities (default)
    Set,       // presence-only difference
};

/// Number of differing attaching classes between two skeleton levels.
std::int64_t delta_skeleton(const Skeleton& a, const Skeleton& b, DeltaMode mode = DeltaMode::Multiset);

/// Sum of the per-level differences; missing levels read as empty.
std::int64_t d_cw(const CWComplex& a, const CWComplex& b, DeltaMode mode = DeltaMode::Multiset);

/// simplicial-set id -> its realization.
using RealizationTable = std::map<std::string, CWComplex>;

/// Distance between simplicial sets through their realizations.
std::int64_t d_sset(const std::string& x, const std::string& y, const RealizationTable& table,
                    DeltaMode mode = DeltaMode::Multiset);

/// The value library: stack id -> (law id -> simplicial-set id).
struct StackLibrary {
    std::map<std::string, std::map<std::string, std::string>> values;

    const std::string& value(const std::string& stack, const std::string& law) const;
};

/// A state of the stack universe, acting on stacks by id.
struct StackEndo {
    std::string id;
    std::map<std::string, std::string> map;

    const std::string& apply(const std::string& stack) const;
};

struct DifferentialMatrix {
    std::vector<std::string> rows;  // stack ids, sorted
    std::vector<std::string> cols;  // law ids, sorted
    std::vector<std::vector<std::int64_t>> entries;

    bool nontrivial() const;  // some entry > 0
    std::int64_t at(std::size_t r, std::size_t c) const { return entries.at(r).at(c); }
};

/// Entry (F, A) measures how far the state moves the value of F at A.
DifferentialMatrix differential_matrix(const StackEndo& psi, const StackLibrary& lib,
                                       const std::vector<std::string>& stacks,
                                       const std::vector<std::string>& laws,
                                       const RealizationTable& realizations,
                                       DeltaMode mode = DeltaMode::Multiset);

/// Entrywise <= with a strict inequality somewhere.
bool dominates(const DifferentialMatrix& a, const DifferentialMatrix& b);

/// The nontrivial candidates whose matrices are minimal: trivial (all-zero)
/// candidates are excluded outright and do not knock others out. Output is
/// sorted by candidate id.
std::vector<std::string> quantum_scan(const std::vector<StackEndo>& candidates, const StackLibrary& lib,
                                      const std::vector<std::string>& stacks,
                                      const std::vector<std::string>& laws,
                                      const RealizationTable& realizations,
                                      DeltaMode mode = DeltaMode::Multiset);

}  // namespace segaldyn::cw
