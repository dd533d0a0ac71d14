#include "klein/reps.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace klein {

DenseRealRep::DenseRealRep(std::vector<RMat> mats, double svThreshold, double eigTol)
    : mats_(std::move(mats)), svThreshold_(svThreshold), eigTol_(eigTol)
{
    if (mats_.empty())
        throw std::invalid_argument("empty representation");
}

int DenseRealRep::fixDim(const std::vector<int>& subgroupElements) const
{
    RMat avg = RMat::Zero(mats_[0].rows(), mats_[0].cols());
    for (int g : subgroupElements)
        avg += mats_[static_cast<size_t>(g)];
    avg /= static_cast<double>(subgroupElements.size());
    // the average is a projector exactly when the list is a whole subgroup
    if (max_abs(RMat(avg * avg - avg)) > 1e-8)
        throw std::invalid_argument("fixDim expects the full element list of a subgroup");
    return numeric_rank(avg, svThreshold_);
}

int DenseRealRep::eigenvalueMultiplicity(int g, std::int64_t num, std::int64_t den) const
{
    const double target = std::cos(2.0 * std::numbers::pi * static_cast<double>(num) /
                                   static_cast<double>(den));
    const RMat& m = mats_[static_cast<size_t>(g)];
    const RMat sym = 0.5 * (m + m.transpose());
    int count = 0;
    for (double ev : symmetric_eigenvalues(sym))
        if (std::abs(ev - target) <= eigTol_)
            ++count;
    // +-1 appear directly; a conjugate pair contributes two equal cosines
    const std::int64_t r = ((num % den) + den) % den;
    const bool realTarget = r == 0 || 2 * r == den;
    return realTarget ? count : count / 2;
}

PermutationRep::PermutationRep(std::vector<std::vector<int>> perms) : perms_(std::move(perms))
{
    if (perms_.empty())
        throw std::invalid_argument("empty representation");
}

int PermutationRep::fixDim(const std::vector<int>& subgroupElements) const
{
    const int n = dim();
    std::vector<int> root(n);
    std::iota(root.begin(), root.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (root[v] != v) {
            root[v] = root[root[v]];
            v = root[v];
        }
        return v;
    };
    for (int g : subgroupElements)
        for (int v = 0; v < n; ++v) {
            const int a = find(v), b = find(perms_[static_cast<size_t>(g)][v]);
            if (a != b)
                root[a] = b;
        }
    int orbits = 0;
    for (int v = 0; v < n; ++v)
        if (find(v) == v)
            ++orbits;
    return orbits;
}

int PermutationRep::eigenvalueMultiplicity(int g, std::int64_t num, std::int64_t den) const
{
    const auto& perm = perms_[static_cast<size_t>(g)];
    const int n = dim();
    std::vector<bool> seen(n, false);
    int mult = 0;
    for (int v = 0; v < n; ++v) {
        if (seen[v])
            continue;
        std::int64_t len = 0;
        int cur = v;
        do {
            seen[cur] = true;
            cur = perm[cur];
            ++len;
        } while (cur != v);
        // a cycle of length l carries every l-th root of unity once
        if ((len * num) % den == 0)
            ++mult;
    }
    return mult;
}

MonomialRealRep::MonomialRealRep(const PrimeContext& ctx, std::vector<MonomialMatrix> mats)
    : ctx_(&ctx), mats_(std::move(mats))
{
    if (mats_.empty())
        throw std::invalid_argument("empty representation");
}

int MonomialRealRep::complexFixDim(const std::vector<int>& subgroupElements) const
{
    std::vector<std::int64_t> counts(static_cast<size_t>(ctx_->halfOrder()), 0);
    for (int g : subgroupElements) {
        const auto local = trace_counts(mats_[static_cast<size_t>(g)]);
        for (size_t e = 0; e < counts.size(); ++e)
            counts[e] += local[e];
    }
    cplx sum = 0;
    for (std::int64_t e = 0; e < static_cast<std::int64_t>(counts.size()); ++e)
        if (counts[e] != 0)
            sum += static_cast<double>(counts[e]) * ctx_->phaseValue(e);
    const double avg = sum.real() / static_cast<double>(subgroupElements.size());
    const double rounded = std::round(avg);
    if (std::abs(avg - rounded) > 1e-6 || std::abs(sum.imag()) > 1e-6 * subgroupElements.size())
        throw std::logic_error("character average is not an integer");
    return static_cast<int>(rounded);
}

int MonomialRealRep::fixDim(const std::vector<int>& subgroupElements) const
{
    return 2 * complexFixDim(subgroupElements);
}

namespace {

// reduce num/den mod 1 to canonical (num', den') with 0 <= num' < den'
std::pair<std::int64_t, std::int64_t> reduced_fraction(std::int64_t num, std::int64_t den)
{
    num = ((num % den) + den) % den;
    const std::int64_t g = std::gcd(num == 0 ? den : num, den);
    return {num / g, den / g};
}

} // namespace

int MonomialRealRep::eigenvalueMultiplicity(int g, std::int64_t num, std::int64_t den) const
{
    const auto target = reduced_fraction(num, den);
    int mult = 0;
    for (const auto& [n2, d2] : eigenvalue_exponents(mats_[static_cast<size_t>(g)])) {
        if (std::make_pair(n2, d2) == target)
            ++mult; // the eigenvalue itself
        if (reduced_fraction(-n2, d2) == target)
            ++mult; // realification adds the conjugate of every eigenvalue
    }
    return mult;
}

} // namespace klein
