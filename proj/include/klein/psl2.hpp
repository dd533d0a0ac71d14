#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "klein/arith.hpp"
#include "klein/errors.hpp"

namespace klein {

/// An element of PSL(2, Z/pZ): a 2x2 matrix with det = 1 mod p, stored in
/// canonical sign (the first nonzero entry in scan order a,b,c,d lies in
/// 1..(p-1)/2), so exactly one of +M/-M is representable.
struct GroupElement {
    std::int64_t p = 0;
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    static GroupElement make(std::int64_t p, std::int64_t a, std::int64_t b, std::int64_t c,
                             std::int64_t d);
    static GroupElement identity(std::int64_t p);
    static GroupElement genA(std::int64_t p); // image of (0 -1; 1 0), order 2
    static GroupElement genB(std::int64_t p); // image of (0 1; -1 1), order 3
    static GroupElement genC(std::int64_t p); // image of (1 1; 0 1), order p

    bool isIdentity() const { return a == 1 && b == 0 && c == 0 && d == 1; }

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    auto key() const { return std::array<std::int64_t, 4>{a, b, c, d}; }
    std::string str() const;
};

GroupElement mul(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);
std::int64_t order(const GroupElement& g);
GroupElement pow(const GroupElement& g, std::int64_t e);

/// All p(p^2-1)/2 elements, ordered lexicographically on canonical entries.
std::vector<GroupElement> enumerate_group(const PrimeContext& ctx);

/// Deterministic pseudo-random picks from an enumerated group.
std::vector<GroupElement> sample_elements(const std::vector<GroupElement>& group, int count,
                                          std::uint64_t seed);

/// Canonical representative of +-(x,y) in V_podd. Slot 0 denotes the column
/// of [1:0] (the "infinity" ratio); slot 1+s the column of [s:1]. The level
/// q in 0..(p-3)/2 locates the vertex inside its column: the canonical pair
/// equals +-([s r^q : r^q]) resp. +-([r^q : 0]).
struct ProjVertex {
    std::int64_t p = 0;
    std::int64_t x = 0, y = 0; // canonical pair
    int slot = 0;              // 0 = infinity, 1+s = ratio s
    int level = 0;

    friend bool operator==(const ProjVertex&, const ProjVertex&) = default;
    std::string str() const; // "[x:y]"
};

ProjVertex canonicalize(const PrimeContext& ctx, std::int64_t x, std::int64_t y);
ProjVertex act(const PrimeContext& ctx, const GroupElement& g, const ProjVertex& v);

/// Deterministic vertex indexing: slot-major, level ascending.
int vertex_index(const PrimeContext& ctx, const ProjVertex& v);
ProjVertex vertex_at(const PrimeContext& ctx, int index);
int vertex_count(const PrimeContext& ctx); // (p^2-1)/2

/// Level-zero representative of a slot: [1:0] or [s:1].
ProjVertex slot_representative(const PrimeContext& ctx, int slot);

} // namespace klein
