#include "klein/groups.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace klein {

int GroupTable::order(int g) const
{
    int acc = g, ord = 1;
    while (acc != 0) {
        acc = mul[acc][g];
        ++ord;
    }
    return ord;
}

std::vector<int> GroupTable::powers(int g) const
{
    std::vector<int> out{0};
    int acc = g;
    while (acc != 0) {
        out.push_back(acc);
        acc = mul[acc][g];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> GroupTable::closure(std::vector<int> generators) const
{
    std::vector<bool> in(static_cast<size_t>(n), false);
    std::deque<int> queue;
    auto push = [&](int g) {
        if (!in[g]) {
            in[g] = true;
            queue.push_back(g);
        }
    };
    push(0);
    for (int g : generators)
        push(g);
    while (!queue.empty()) {
        const int g = queue.front();
        queue.pop_front();
        for (int h : generators)
            push(mul[g][h]);
    }
    std::vector<int> out;
    for (int g = 0; g < n; ++g)
        if (in[g])
            out.push_back(g);
    return out;
}

GroupTable GroupTable::cyclic(int m)
{
    GroupTable t;
    t.name = "Z/" + std::to_string(m);
    t.n = m;
    t.mul.assign(m, std::vector<int>(m));
    t.inv.assign(m, 0);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j)
            t.mul[i][j] = (i + j) % m;
        t.inv[i] = (m - i) % m;
    }
    return t;
}

GroupTable GroupTable::dihedral(int m)
{
    // elements r^i s^e encoded as i + m e, with s r s = r^{-1}
    GroupTable t;
    t.name = "D_" + std::to_string(m);
    t.n = 2 * m;
    t.mul.assign(t.n, std::vector<int>(t.n));
    t.inv.assign(t.n, 0);
    auto enc = [m](int i, int e) { return ((i % m + m) % m) + m * e; };
    for (int i = 0; i < m; ++i)
        for (int e = 0; e < 2; ++e)
            for (int j = 0; j < m; ++j)
                for (int f = 0; f < 2; ++f) {
                    // (r^i s^e)(r^j s^f) = r^{i + j or i - j} s^{e xor f}
                    const int k = e == 0 ? i + j : i - j;
                    t.mul[enc(i, e)][enc(j, f)] = enc(k, e ^ f);
                }
    for (int g = 0; g < t.n; ++g)
        for (int h = 0; h < t.n; ++h)
            if (t.mul[g][h] == 0)
                t.inv[g] = h;
    return t;
}

int IndexedGroup::idOf(const GroupElement& g) const
{
    for (int i = 0; i < static_cast<int>(byId.size()); ++i)
        if (byId[i] == g)
            return i;
    throw std::logic_error("element missing from indexed group");
}

IndexedGroup index_group(const std::vector<GroupElement>& enumeration)
{
    if (enumeration.empty())
        throw std::invalid_argument("empty element list");

    IndexedGroup ig;
    const GroupElement id = GroupElement::identity(enumeration[0].p);
    ig.byId.push_back(id);
    for (const auto& g : enumeration)
        if (!(g == id))
            ig.byId.push_back(g);

    const int n = static_cast<int>(ig.byId.size());
    // sorted lookup: (key, id)
    std::vector<std::pair<std::array<std::int64_t, 4>, int>> lookup(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        lookup[i] = {ig.byId[i].key(), i};
    std::sort(lookup.begin(), lookup.end());
    auto indexOf = [&lookup](const GroupElement& g) {
        const auto key = g.key();
        auto it = std::lower_bound(lookup.begin(), lookup.end(), key,
                                   [](const auto& l, const auto& k) { return l.first < k; });
        if (it == lookup.end() || it->first != key)
            throw std::logic_error("element missing from enumeration");
        return it->second;
    };

    GroupTable& t = ig.table;
    t.name = "PSL(2," + std::to_string(enumeration[0].p) + ")";
    t.n = n;
    t.mul.assign(n, std::vector<int>(n));
    t.inv.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            t.mul[i][j] = indexOf(mul(ig.byId[i], ig.byId[j]));
        t.inv[i] = indexOf(inverse(ig.byId[i]));
    }
    return ig;
}

} // namespace klein
