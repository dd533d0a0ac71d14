#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "klein/arith.hpp"

namespace klein {

/// Permutation of the p+1 slots {inf, 0, ..., p-1} together with one phase
/// exponent mod (p-1)/2 per slot: eta_s maps to omega^{phase[s]} eta_{perm[s]}.
/// This is the exact form of the representation rho; all composition and
/// fixed-space computations below are integer arithmetic.
struct MonomialMatrix {
    std::int64_t p = 0;
    std::vector<int> perm;  // size p+1
    std::vector<int> phase; // size p+1, exponents in [0, (p-1)/2)

    static MonomialMatrix identity(std::int64_t p);

    int slots() const { return static_cast<int>(perm.size()); }
    friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;
};

/// Matrix product: (g*h) eta_s = g(h eta_s).
MonomialMatrix mul(const MonomialMatrix& g, const MonomialMatrix& h);
MonomialMatrix inverse(const MonomialMatrix& g);

/// Exact trace data: counts[e] = number of fixed slots carrying phase e.
std::vector<std::int64_t> trace_counts(const MonomialMatrix& m);
cplx trace(const PrimeContext& ctx, const MonomialMatrix& m);

/// dim_C Fix = number of permutation cycles whose phase sum is 0 mod (p-1)/2.
int fix_dim_complex(const MonomialMatrix& m);
int cycle_count(const MonomialMatrix& m);

/// Exact eigenvalues e^{2 pi i num/den} with multiplicity, one entry per
/// (cycle, root) pair; fractions reduced with 0 <= num < den.
std::vector<std::pair<std::int64_t, std::int64_t>> eigenvalue_exponents(const MonomialMatrix& m);

} // namespace klein
