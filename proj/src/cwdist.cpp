#include "segaldyn/cwdist.hpp"

#include <algorithm>
#include <cstdlib>

namespace segaldyn::cw {

std::int64_t delta_skeleton(const Skeleton& a, const Skeleton& b, DeltaMode mode) {
    std::int64_t total = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    auto count = [&](std::int64_t ca, std::int64_t cb) {
        if (mode == DeltaMode::Multiset) return std::llabs(ca - cb);
        return static_cast<std::int64_t>((ca > 0) != (cb > 0) ? 1 : 0);
    };
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            total += count(ia->second, 0);
            ++ia;
        } else if (ia == a.end() || ib->first < ia->first) {
            total += count(0, ib->second);
            ++ib;
        } else {
            total += count(ia->second, ib->second);
            ++ia;
            ++ib;
        }
    }
    return total;
}

std::int64_t d_cw(const CWComplex& a, const CWComplex& b, DeltaMode mode) {
    static const Skeleton empty;
    const std::size_t levels = std::max(a.skeleta.size(), b.skeleta.size());
    std::int64_t total = 0;
    for (std::size_t n = 0; n < levels; ++n)
        total += delta_skeleton(n < a.skeleta.size() ? a.skeleta[n] : empty,
                                n < b.skeleta.size() ? b.skeleta[n] : empty, mode);
    return total;
}

std::int64_t d_sset(const std::string& x, const std::string& y, const RealizationTable& table,
                    DeltaMode mode) {
    auto ix = table.find(x);
    if (ix == table.end()) throw_input("no realization for simplicial set '" + x + "'");
    auto iy = table.find(y);
    if (iy == table.end()) throw_input("no realization for simplicial set '" + y + "'");
    return d_cw(ix->second, iy->second, mode);
}

const std::string& StackLibrary::value(const std::string& stack, const std::string& law) const {
    auto is = values.find(stack);
    if (is == values.end()) throw_input("unknown stack '" + stack + "'");
    auto il = is->second.find(law);
    if (il == is->second.end())
        throw_input("stack '" + stack + "' has no value at law '" + law + "'");
    return il->second;
}

const std::string& StackEndo::apply(const std::string& stack) const {
    auto it = map.find(stack);
    if (it == map.end())
        throw_input("state '" + id + "' is not defined on stack '" + stack + "'");
    return it->second;
}

bool DifferentialMatrix::nontrivial() const {
    for (const auto& row : entries)
        for (std::int64_t v : row)
            if (v > 0) return true;
    return false;
}

DifferentialMatrix differential_matrix(const StackEndo& psi, const StackLibrary& lib,
                                       const std::vector<std::string>& stacks,
                                       const std::vector<std::string>& laws,
                                       const RealizationTable& realizations, DeltaMode mode) {
    DifferentialMatrix out;
    out.rows = stacks;
    out.cols = laws;
    std::sort(out.rows.begin(), out.rows.end());
    std::sort(out.cols.begin(), out.cols.end());
    out.entries.resize(out.rows.size());
    for (std::size_t r = 0; r < out.rows.size(); ++r) {
        const std::string& shifted = psi.apply(out.rows[r]);
        out.entries[r].reserve(out.cols.size());
        for (const auto& law : out.cols)
            out.entries[r].push_back(
                d_sset(lib.value(shifted, law), lib.value(out.rows[r], law), realizations, mode));
    }
    return out;
}

bool dominates(const DifferentialMatrix& a, const DifferentialMatrix& b) {
    bool strict = false;
    for (std::size_t r = 0; r < a.entries.size(); ++r)
        for (std::size_t c = 0; c < a.entries[r].size(); ++c) {
            if (a.entries[r][c] > b.entries[r][c]) return false;
            if (a.entries[r][c] < b.entries[r][c]) strict = true;
        }
    return strict;
}

std::vector<std::string> quantum_scan(const std::vector<StackEndo>& candidates, const StackLibrary& lib,
                                      const std::vector<std::string>& stacks,
                                      const std::vector<std::string>& laws,
                                      const RealizationTable& realizations, DeltaMode mode) {
    if (candidates.empty()) throw_input("quantum_scan needs a nonempty candidate set");

    std::vector<std::pair<std::string, DifferentialMatrix>> live;
    for (const auto& c : candidates) {
        DifferentialMatrix m = differential_matrix(c, lib, stacks, laws, realizations, mode);
        if (m.nontrivial()) live.emplace_back(c.id, std::move(m));
    }

    std::vector<std::string> out;
    for (std::size_t i = 0; i < live.size(); ++i) {
        bool beaten = false;
        for (std::size_t j = 0; j < live.size() && !beaten; ++j)
            if (j != i && dominates(live[j].second, live[i].second)) beaten = true;
        if (!beaten) out.push_back(live[i].first);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace segaldyn::cw
