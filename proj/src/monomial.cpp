#include "klein/monomial.hpp"

#include <numeric>
#include <stdexcept>

namespace klein {

MonomialMatrix MonomialMatrix::identity(std::int64_t p)
{
    MonomialMatrix m;
    m.p = p;
    m.perm.resize(static_cast<size_t>(p + 1));
    m.phase.assign(static_cast<size_t>(p + 1), 0);
    std::iota(m.perm.begin(), m.perm.end(), 0);
    return m;
}

MonomialMatrix mul(const MonomialMatrix& g, const MonomialMatrix& h)
{
    if (g.p != h.p)
        throw std::invalid_argument("monomial matrices over different p");
    const int n = g.slots();
    const std::int64_t half = (g.p - 1) / 2;
    MonomialMatrix out;
    out.p = g.p;
    out.perm.resize(n);
    out.phase.resize(n);
    for (int s = 0; s < n; ++s) {
        const int mid = h.perm[s];
        out.perm[s] = g.perm[mid];
        out.phase[s] = static_cast<int>((h.phase[s] + g.phase[mid]) % half);
    }
    return out;
}

MonomialMatrix inverse(const MonomialMatrix& g)
{
    const int n = g.slots();
    const std::int64_t half = (g.p - 1) / 2;
    MonomialMatrix out;
    out.p = g.p;
    out.perm.resize(n);
    out.phase.resize(n);
    for (int s = 0; s < n; ++s) {
        out.perm[g.perm[s]] = s;
        out.phase[g.perm[s]] = static_cast<int>((half - g.phase[s]) % half);
    }
    return out;
}

std::vector<std::int64_t> trace_counts(const MonomialMatrix& m)
{
    const std::int64_t half = (m.p - 1) / 2;
    std::vector<std::int64_t> counts(static_cast<size_t>(half), 0);
    for (int s = 0; s < m.slots(); ++s)
        if (m.perm[s] == s)
            ++counts[m.phase[s]];
    return counts;
}

cplx trace(const PrimeContext& ctx, const MonomialMatrix& m)
{
    cplx t = 0;
    const auto counts = trace_counts(m);
    for (std::int64_t e = 0; e < static_cast<std::int64_t>(counts.size()); ++e)
        if (counts[e] != 0)
            t += static_cast<double>(counts[e]) * ctx.phaseValue(e);
    return t;
}

namespace {

template <typename CycleFn> void for_each_cycle(const MonomialMatrix& m, CycleFn fn)
{
    const int n = m.slots();
    std::vector<bool> seen(n, false);
    for (int s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        std::int64_t length = 0;
        std::int64_t phaseSum = 0;
        int cur = s;
        do {
            seen[cur] = true;
            phaseSum += m.phase[cur];
            cur = m.perm[cur];
            ++length;
        } while (cur != s);
        fn(length, phaseSum % ((m.p - 1) / 2));
    }
}

} // namespace

int fix_dim_complex(const MonomialMatrix& m)
{
    int dim = 0;
    for_each_cycle(m, [&](std::int64_t, std::int64_t phaseSum) {
        if (phaseSum == 0)
            ++dim;
    });
    return dim;
}

int cycle_count(const MonomialMatrix& m)
{
    int cycles = 0;
    for_each_cycle(m, [&](std::int64_t, std::int64_t) { ++cycles; });
    return cycles;
}

std::vector<std::pair<std::int64_t, std::int64_t>> eigenvalue_exponents(const MonomialMatrix& m)
{
    const std::int64_t half = (m.p - 1) / 2;
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for_each_cycle(m, [&](std::int64_t length, std::int64_t phaseSum) {
        // the cycle's restriction has eigenvalues e^{2 pi i (phaseSum + k half)/(half length)}
        for (std::int64_t k = 0; k < length; ++k) {
            std::int64_t num = phaseSum + k * half;
            std::int64_t den = half * length;
            num %= den;
            const std::int64_t g = std::gcd(num == 0 ? den : num, den);
            out.emplace_back(num / g, den / g);
        }
    });
    return out;
}

} // namespace klein
