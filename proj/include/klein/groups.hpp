#pragma once

#include <string>
#include <vector>

#include "klein/psl2.hpp"

namespace klein {

/// A finite group as a multiplication table over element ids 0..n-1 with
/// identity 0. Big enough for PSL(2,p) at desk scale and the small cyclic and
/// dihedral groups used by the condition checkers.
struct GroupTable {
    std::string name;
    int n = 0;
    std::vector<std::vector<int>> mul; // mul[g][h] = g*h
    std::vector<int> inv;

    int order(int g) const;
    std::vector<int> powers(int g) const; // the cyclic subgroup <g>, sorted

    /// Subgroup generated by `generators` (sorted element ids).
    std::vector<int> closure(std::vector<int> generators) const;

    static GroupTable cyclic(int m);
    static GroupTable dihedral(int m); // order 2m, m >= 1
};

/// PSL(2,p) as a GroupTable (identity reindexed to id 0) together with the
/// id <-> matrix correspondence.
struct IndexedGroup {
    GroupTable table;
    std::vector<GroupElement> byId;

    int idOf(const GroupElement& g) const;
};

IndexedGroup index_group(const std::vector<GroupElement>& enumeration);

} // namespace klein
