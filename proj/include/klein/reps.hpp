#pragma once

#include <cstdint>
#include <vector>

#include "klein/groups.hpp"
#include "klein/linalg.hpp"
#include "klein/monomial.hpp"

namespace klein {

/// An orthogonal representation indexed by GroupTable element ids, exposing
/// exactly what the embeddability conditions consume: fixed-space dimensions
/// of subgroups and eigenvalue membership e^{2 pi i num/den} with
/// multiplicity.
class Rep {
public:
    virtual ~Rep() = default;
    virtual int dim() const = 0;
    virtual int fixDim(const std::vector<int>& subgroupElements) const = 0;
    virtual int eigenvalueMultiplicity(int g, std::int64_t num, std::int64_t den) const = 0;

    bool hasEigenvalue(int g, std::int64_t num, std::int64_t den, int minMult = 1) const
    {
        return eigenvalueMultiplicity(g, num, den) >= minMult;
    }
};

/// Dense real orthogonal matrices; fixed spaces by numeric rank of the
/// subgroup-averaging projector, spectra through the symmetrized matrix
/// (valid for orthogonal matrices, whose eigenvalues are unimodular).
class DenseRealRep : public Rep {
public:
    DenseRealRep(std::vector<RMat> mats, double svThreshold = 1e-7, double eigTol = 1e-7);

    int dim() const override { return static_cast<int>(mats_[0].rows()); }
    int fixDim(const std::vector<int>& subgroupElements) const override;
    int eigenvalueMultiplicity(int g, std::int64_t num, std::int64_t den) const override;

    const RMat& matrix(int g) const { return mats_[static_cast<size_t>(g)]; }

private:
    std::vector<RMat> mats_;
    double svThreshold_;
    double eigTol_;
};

/// Permutation matrices; fixed spaces by orbit counting, spectra from cycle
/// lengths. Everything exact.
class PermutationRep : public Rep {
public:
    explicit PermutationRep(std::vector<std::vector<int>> perms);

    int dim() const override { return static_cast<int>(perms_[0].size()); }
    int fixDim(const std::vector<int>& subgroupElements) const override; // orbit count
    int eigenvalueMultiplicity(int g, std::int64_t num, std::int64_t den) const override;

    const std::vector<int>& permutation(int g) const { return perms_[static_cast<size_t>(g)]; }

private:
    std::vector<std::vector<int>> perms_;
};

/// The monomial representation regarded as real orthogonal matrices on
/// R^{2p+2}; fixed spaces by exact character averaging, spectra from exact
/// cycle/phase data together with their conjugates.
class MonomialRealRep : public Rep {
public:
    MonomialRealRep(const PrimeContext& ctx, std::vector<MonomialMatrix> mats);

    int dim() const override { return 2 * (static_cast<int>(ctx_->p()) + 1); }
    int fixDim(const std::vector<int>& subgroupElements) const override;
    int eigenvalueMultiplicity(int g, std::int64_t num, std::int64_t den) const override;

    const MonomialMatrix& matrix(int g) const { return mats_[static_cast<size_t>(g)]; }

    /// dim_C Fix over a subgroup, by averaging exact traces.
    int complexFixDim(const std::vector<int>& subgroupElements) const;

private:
    const PrimeContext* ctx_;
    std::vector<MonomialMatrix> mats_;
};

} // namespace klein
