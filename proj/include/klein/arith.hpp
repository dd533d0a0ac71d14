#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "klein/errors.hpp"

namespace klein {

using cplx = std::complex<double>;

bool is_prime(std::int64_t n);
std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t m);

/// Arithmetic tables for one odd prime p: the smallest primitive root r,
/// inverses s*, discrete logarithms k_s with r^{k_s} = s, and the phase
/// modulus (p-1)/2 used by the monomial representation (the phase unit
/// omega = e^{4 pi i/(p-1)} has multiplicative order (p-1)/2).
///
/// Immutable after build(); shareable across threads.
class PrimeContext {
public:
    PrimeContext() = default; // inert until build()
    static PrimeContext build(std::int64_t p);

    std::int64_t p() const { return p_; }
    std::int64_t primitiveRoot() const { return r_; }
    std::int64_t halfOrder() const { return halfOrder_; } // (p-1)/2

    /// s* with s s* = 1 (mod p), 1 <= s* <= p-1.
    std::int64_t inv(std::int64_t s) const { return inv_[normalize(s)]; }

    /// k_s with r^{k_s} = s (mod p), 1 <= k_s <= p-1 (so k_1 = p-1).
    std::int64_t dlog(std::int64_t s) const { return dlog_[normalize(s)]; }

    std::int64_t reduce(std::int64_t v) const { return ((v % p_) + p_) % p_; }

    /// Exponent of omega: q reduced into [0, (p-1)/2).
    std::int64_t phasePow(std::int64_t q) const {
        return ((q % halfOrder_) + halfOrder_) % halfOrder_;
    }

    /// omega^e = e^{4 pi i e/(p-1)} = e^{2 pi i e/halfOrder}.
    cplx phaseValue(std::int64_t e) const;

    /// epsilon^e with epsilon = e^{2 pi i/p}.
    cplx epsilonValue(std::int64_t e) const;

private:
    explicit PrimeContext(std::int64_t p);
    std::int64_t normalize(std::int64_t s) const;

    std::int64_t p_ = 0;
    std::int64_t r_ = 0;
    std::int64_t halfOrder_ = 0;
    std::vector<std::int64_t> inv_;  // index 1..p-1
    std::vector<std::int64_t> dlog_; // index 1..p-1
};

} // namespace klein
