#pragma once

// Seeded generators shared by unit and acceptance tests.

#include <cstddef>
#include <vector>

#include "qvlab/algebra.hpp"
#include "qvlab/cuts.hpp"
#include "qvlab/linalg.hpp"
#include "qvlab/sampling.hpp"

namespace qvlab::fuzz {

inline GroupElement group_element(SplitMix64& rng, std::size_t rank, long limit)
{
    std::vector<Integer> c;
    for (std::size_t i = 0; i < rank; ++i)
        c.emplace_back(rng.uniform(-limit, limit));
    return GroupElement(std::move(c));
}

/// Mostly AtMost descriptors, with BOT and TOP about one time in ten each.
inline Cut cut(SplitMix64& rng, std::size_t rank, long limit)
{
    auto roll = rng.uniform(0, 9);
    if (roll == 0)
        return Cut::bottom(rank);
    if (roll == 1)
        return Cut::top(rank);
    auto level = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(rank) - 1));
    return Cut::at_most(level, group_element(rng, rank - level, limit));
}

/// Random invertible change of basis applied to `basis`: rows of a unit
/// lower-triangular times unit upper-triangular matrix with small rational
/// entries, so the result is always a basis.
template <ExactField F>
std::vector<Vec<F>> random_basis(SplitMix64& rng, std::vector<Vec<F>> const& basis, SampleSpec const& spec,
                                 BaseDomain<F> const& S)
{
    std::size_t n = basis.size();
    auto entry = [&] { return rng.coin(50) ? F::zero() : Sampler<F>::field(rng, S, spec); };
    std::vector<Vec<F>> L(n, Vec<F>(n, F::zero())), U(n, Vec<F>(n, F::zero()));
    for (std::size_t i = 0; i < n; ++i) {
        do
            L[i][i] = Sampler<F>::field(rng, S, spec);
        while (L[i][i].is_zero());
        U[i][i] = F::one();
        for (std::size_t j = 0; j < i; ++j)
            L[i][j] = entry();
        for (std::size_t j = i + 1; j < n; ++j)
            U[i][j] = entry();
    }
    std::vector<Vec<F>> out;
    for (std::size_t i = 0; i < n; ++i) {
        Vec<F> row(basis.front().size(), F::zero());
        for (std::size_t k = 0; k < n; ++k) {
            F m = F::zero();
            for (std::size_t j = 0; j < n; ++j)
                m += L[i][j] * U[j][k];
            if (!m.is_zero())
                row = add(row, scale(m, basis[k]));
        }
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace qvlab::fuzz
