#include "klein/arith.hpp"

#include <cmath>
#include <numbers>

namespace klein {

bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t m)
{
    std::int64_t result = 1 % m;
    base = ((base % m) + m) % m;
    while (exp > 0) {
        if (exp & 1)
            result = result * base % m;
        base = base * base % m;
        exp >>= 1;
    }
    return result;
}

namespace {

std::vector<std::int64_t> prime_factors(std::int64_t n)
{
    std::vector<std::int64_t> fs;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        fs.push_back(n);
    return fs;
}

std::int64_t smallest_primitive_root(std::int64_t p)
{
    const auto factors = prime_factors(p - 1);
    for (std::int64_t g = 2; g < p; ++g) {
        bool primitive = true;
        for (std::int64_t q : factors) {
            if (mod_pow(g, (p - 1) / q, p) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive)
            return g;
    }
    return 0; // unreachable for prime p >= 3
}

} // namespace

PrimeContext::PrimeContext(std::int64_t p) : p_(p), halfOrder_((p - 1) / 2) {}

PrimeContext PrimeContext::build(std::int64_t p)
{
    if (!is_prime(p))
        throw not_prime_error(std::to_string(p) + " is not prime");
    if (p < 5)
        throw too_small_error("p must be at least 5, got " + std::to_string(p));

    PrimeContext ctx(p);
    ctx.r_ = smallest_primitive_root(p);
    ctx.inv_.assign(p, 0);
    ctx.dlog_.assign(p, 0);
    for (std::int64_t s = 1; s < p; ++s)
        ctx.inv_[s] = mod_pow(s, p - 2, p);
    std::int64_t power = 1;
    for (std::int64_t k = 1; k <= p - 1; ++k) {
        power = power * ctx.r_ % p;
        ctx.dlog_[power] = k; // k_1 = p-1 is written on the last step
    }
    return ctx;
}

std::int64_t PrimeContext::normalize(std::int64_t s) const
{
    s = reduce(s);
    if (s == 0)
        throw std::invalid_argument("0 has no inverse/discrete log mod p");
    return s;
}

cplx PrimeContext::phaseValue(std::int64_t e) const
{
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(phasePow(e)) /
                         static_cast<double>(halfOrder_);
    return {std::cos(angle), std::sin(angle)};
}

cplx PrimeContext::epsilonValue(std::int64_t e) const
{
    const double angle =
        2.0 * std::numbers::pi * static_cast<double>(reduce(e)) / static_cast<double>(p_);
    return {std::cos(angle), std::sin(angle)};
}

} // namespace klein
