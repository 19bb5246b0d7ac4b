#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qvlab/errors.hpp"
#include "qvlab/field.hpp"

namespace qvlab {

// Row reduction to reduced echelon form in place, first nonzero entry as
// pivot. Returns the pivot column of each pivot row.
template <ExactField F>
std::vector<std::size_t> reduce_rows(std::vector<Vec<F>>& rows, std::size_t ncols)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero())
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[p], rows[r]);
        F inv = F::one() / rows[r][c];
        for (auto& x : rows[r])
            x = x * inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero())
                continue;
            F f = rows[i][c];
            for (std::size_t k = 0; k < rows[r].size(); ++k)
                if (!rows[r][k].is_zero())
                    rows[i][k] -= f * rows[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <ExactField F>
std::size_t rank_of(std::span<const Vec<F>> vectors)
{
    if (vectors.empty())
        return 0;
    std::vector<Vec<F>> rows(vectors.begin(), vectors.end());
    return reduce_rows(rows, rows.front().size()).size();
}

template <ExactField F>
bool independent(std::span<const Vec<F>> vectors)
{
    return rank_of(vectors) == vectors.size();
}

/// A basis of F^n with its inverse change-of-basis matrix, so coordinates
/// of any vector cost one matrix-vector product.
template <ExactField F>
class BasisFrame {
public:
    explicit BasisFrame(std::vector<Vec<F>> basis) : basis_(std::move(basis))
    {
        std::size_t n = basis_.size();
        if (n == 0)
            throw structural_error("empty basis");
        for (auto const& b : basis_)
            if (b.size() != n)
                throw structural_error("basis does not have dimension-many coordinates");
        // Reduce [B | I] (rows b_i): the right block becomes B^{-1}.
        std::vector<Vec<F>> rows(n, Vec<F>(2 * n, F::zero()));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                rows[i][j] = basis_[i][j];
            rows[i][n + i] = F::one();
        }
        auto piv = reduce_rows(rows, n);
        if (piv.size() != n)
            throw structural_error("basis is linearly dependent");
        inverse_.assign(n, Vec<F>(n, F::zero()));
        // sum_i c_i b_i = x means c = (B^{-1})^T x.
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                inverse_[k][i] = rows[k][n + i];
    }

    std::size_t size() const { return basis_.size(); }
    std::vector<Vec<F>> const& basis() const { return basis_; }
    Vec<F> const& operator[](std::size_t i) const { return basis_[i]; }

    Vec<F> coords(Vec<F> const& x) const
    {
        if (x.size() != size())
            throw structural_error("vector has the wrong dimension");
        Vec<F> out(size(), F::zero());
        for (std::size_t k = 0; k < size(); ++k) {
            if (x[k].is_zero())
                continue;
            for (std::size_t i = 0; i < size(); ++i)
                if (!inverse_[k][i].is_zero())
                    out[i] += inverse_[k][i] * x[k];
        }
        return out;
    }

    Vec<F> expand(Vec<F> const& c) const
    {
        Vec<F> out(size(), F::zero());
        for (std::size_t i = 0; i < size(); ++i)
            if (!c[i].is_zero())
                for (std::size_t k = 0; k < size(); ++k)
                    out[k] += c[i] * basis_[i][k];
        return out;
    }

private:
    std::vector<Vec<F>> basis_;
    // inverse_[k][i]: contribution of ambient coordinate k to basis coordinate i.
    std::vector<Vec<F>> inverse_;
};

} // namespace qvlab
